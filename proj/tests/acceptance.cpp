// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   emptygon_acceptance [--only N] [--quick]
//
// --quick skips horton(32) in criterion 4.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emptygon/cli.hpp"
#include "emptygon/convexity.hpp"
#include "emptygon/generators.hpp"
#include "emptygon/holes.hpp"
#include "emptygon/oracle.hpp"
#include "emptygon/pentagon.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace emptygon;
namespace gen = emptygon::generators;
namespace fs = std::filesystem;
using Outcome = ExtractionResult::Outcome;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool quick = false;

int sign_of(const Point& a, const Point& b, const Point& c) { return orient(a, b, c); }

std::string points_text(const PointSet& p) { return cli::format_points(p); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "emptygon-acceptance";
  fs::create_directories(dir);
  return dir / name;
}

struct CliRun {
  int code;
  nlohmann::json doc;
};

CliRun cli_extract(const PointSet& p, std::vector<std::string> flags) {
  const auto path = scratch("input.txt");
  std::ofstream(path) << points_text(p);
  std::vector<std::string> args{"emptygon", "extract", path.string()};
  args.insert(args.end(), flags.begin(), flags.end());
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  CliRun r{code, {}};
  if (!out.str().empty()) r.doc = nlohmann::json::parse(out.str());
  return r;
}

std::vector<Point> json_points(const nlohmann::json& arr) {
  std::vector<Point> pts;
  for (const auto& q : arr) pts.push_back({q[0].get<Coord>(), q[1].get<Coord>()});
  return pts;
}

// 1. q(k, l) is exact on both sides.
Verdict criterion_1() {
  Verdict v;
  oracle::OracleBudget budget;
  budget.convex_subsets = 20;
  std::size_t sets = 0;
  for (int ell = 3; ell <= 6; ++ell)
    for (int k = 3; k <= 9; ++k) {
      const long long q = q_formula(k, ell);
      PointSet low;
      if (k == 3) {
        std::vector<Point> line;
        for (int i = 0; i < ell - 1; ++i) line.push_back({i, 0});
        low = PointSet(line);
      } else if (k == 4) {
        low = gen::collinear_plus_one(ell);
      } else {
        low = gen::every_second_side(k, ell);
      }
      const std::string tag = "(k=" + std::to_string(k) + ", l=" + std::to_string(ell) + ")";
      if (static_cast<long long>(low.size()) != q - 1) v.fail(tag + " extremal size " + std::to_string(low.size()));
      if (!is_convex_position(low.points())) v.fail(tag + " extremal set not in convex position");
      if (oracle::oracle_max_collinear(low) >= static_cast<std::size_t>(ell)) v.fail(tag + " too many collinear");
      if (oracle::oracle_max_convex_subset(low, true, budget) >= static_cast<std::size_t>(k))
        v.fail(tag + " extremal set has k strictly convex points");

      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto p = gen::random_convex_position(static_cast<std::size_t>(q), ell, seed);
        ++sets;
        const auto s = strictly_convex_subset_in_convex_position(p.points(), k, ell);
        const bool inside = std::all_of(s.begin(), s.end(), [&](const Point& x) { return p.contains(x); });
        if (s.size() != static_cast<std::size_t>(k) || !inside || !is_strictly_convex_position(s))
          v.fail(tag + " seed " + std::to_string(seed) + ": bad strictly convex subset");
      }
    }
  if (v.pass) v.detail = "28 extremal sets, " + std::to_string(sets) + " convex-position sets";
  return v;
}

// 2. Ten points in general position always have a 5-hole.
Verdict criterion_2() {
  Verdict v;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = gen::random_general_position(10, seed);
    const auto h = find_k_hole(p, 5);
    if (!h || !hole_violation(p, h->vertices()).empty()) v.fail("find_k_hole missed seed " + std::to_string(seed));
    const auto r = cli_extract(p, {"--ell", "3"});
    if (r.code != 0 || r.doc["kind"] != "hole" ||
        !hole_violation(p, json_points(r.doc["points"])).empty())
      v.fail("extract missed seed " + std::to_string(seed));
  }
  if (v.pass) v.detail = "200/200 sets";
  return v;
}

// 3. Small grids have no 5-hole.
Verdict criterion_3() {
  Verdict v;
  for (int m = 3; m <= 5; ++m)
    if (oracle::oracle_k_hole(gen::grid(m), 5)) v.fail("grid " + std::to_string(m) + " has a 5-hole");
  if (v.pass) v.detail = "m = 3, 4, 5";
  return v;
}

// 4. Horton sets have no 7-hole.
Verdict criterion_4() {
  Verdict v;
  oracle::OracleBudget budget;
  budget.holes_6_7 = 20;
  const auto h16 = gen::horton(16);
  if (!in_general_position(h16.points())) v.fail("horton(16) not in general position");
  if (oracle::oracle_k_hole(h16, 7, budget)) v.fail("horton(16) has a 7-hole");
  std::string detail = "n = 16 by subset enumeration";
  if (!quick) {
    // slow: complete radial search, too many points for subset enumeration
    const auto t0 = std::chrono::steady_clock::now();
    const auto h32 = gen::horton(32);
    if (!in_general_position(h32.points())) v.fail("horton(32) not in general position");
    if (find_k_hole(h32, 7)) v.fail("horton(32) has a 7-hole");
    if (!find_k_hole(h32, 6)) v.fail("horton(32) has no 6-hole either");
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "; n = 32 by complete search in %.1fs", s);
    detail += buf;
  } else {
    detail += "; n = 32 skipped (--quick)";
  }
  if (v.pass) v.detail = detail;
  return v;
}

// 5. max{7, l+2} points with fewer than l on a line contain a 4-hole.
Verdict criterion_5() {
  Verdict v;
  for (int ell = 3; ell <= 5; ++ell) {
    const std::size_t n = static_cast<std::size_t>(std::max(7, ell + 2));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      // A small box makes collinear triples and quadruples common.
      const auto p = gen::random_bounded_collinear(n, ell, seed, Coord{8});
      if (oracle::oracle_max_collinear(p) >= static_cast<std::size_t>(ell)) v.fail("generator broke the line bound");
      const bool fast = find_k_hole(p, 4).has_value();
      const bool slow = oracle::oracle_k_hole(p, 4).has_value();
      if (!fast || !slow)
        v.fail("no 4-hole for l=" + std::to_string(ell) + " seed " + std::to_string(seed));
    }
  }
  if (v.pass) v.detail = "600/600 sets";
  return v;
}

// 6. no 4-hole <=> crossing-free visibility graph <=> one of the families.
Verdict criterion_6() {
  Verdict v;
  std::vector<PointSet> sets;
  for (int count = 3; count <= 8; ++count) {
    sets.push_back(gen::eppstein_family_a_b(count, false));
    sets.push_back(gen::eppstein_family_a_b(count, true));
  }
  for (int count = 2; count <= 7; ++count) {
    sets.push_back(gen::eppstein_family_c_d(count, -1));
    for (int c = 0; c < count; ++c) sets.push_back(gen::eppstein_family_c_d(count, c));
  }
  sets.push_back(gen::eppstein_family_e());
  const std::size_t family_sets = sets.size();
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 3 + rng() % 8;
    const Coord side = 3 + static_cast<Coord>(rng() % 5);
    sets.push_back(gen::random_in_box(std::min<std::size_t>(n, static_cast<std::size_t>(side * side)), side, rng()));
  }
  std::size_t discrepancies = 0, no_four = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& p = sets[i];
    const bool hole_free = !oracle::oracle_k_hole(p, 4).has_value();
    const bool crossing_free = VisibilityGraph(p).crossing_free();
    bool family = false;
    try {
      const auto c = classify_no_four_hole(p);
      family = c.matches_family;
      if ((c.tag == NoFourHoleTag::has_four_hole) == hole_free) ++discrepancies;
    } catch (const std::logic_error&) {
      ++discrepancies;
    }
    if (i < family_sets && !hole_free) v.fail("family set " + std::to_string(i) + " has a 4-hole");
    if (hole_free != crossing_free || hole_free != family) ++discrepancies;
    no_four += hole_free;
  }
  if (discrepancies) v.fail(std::to_string(discrepancies) + " discrepancies");
  if (v.pass)
    v.detail = std::to_string(sets.size()) + " sets (" + std::to_string(no_four) + " without a 4-hole), 0 discrepancies";
  return v;
}

// 7. Corners of a minimum-area 5-hole see each other.
Verdict criterion_7() {
  Verdict v;
  std::size_t inputs = 0;
  for (std::uint64_t seed = 0; inputs < 100 && seed < 10000; ++seed) {
    const auto p = gen::random_bounded_collinear(9 + seed % 8, 4, seed, Coord{9});
    const auto h = find_k_hole(p, 5);
    if (!h) continue;
    ++inputs;
    const auto m = min_area_five_hole(p, *h);
    const auto& c = m.vertices();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        for (const Point& r : p)
          if (r != c[i] && r != c[j] && on_closed_segment(r, c[i], c[j]))
            v.fail("blocked corner pair at seed " + std::to_string(seed));
    if (!VisibilityGraph(p).is_clique(c)) v.fail("not a clique at seed " + std::to_string(seed));
  }
  if (inputs < 100) v.fail("only " + std::to_string(inputs) + " inputs with a 5-hole");
  if (v.pass) v.detail = "100/100 inputs";
  return v;
}

struct ExtractorStats {
  std::size_t runs = 0;
  std::size_t layer_checks = 0;
  std::size_t layer_violations = 0;
};

// 8. Extractor certificates verify and exist exactly when the oracle says so.
Verdict criterion_8(ExtractorStats& stats) {
  Verdict v;
  std::size_t holes = 0, lines = 0, none = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int ell = 3 + static_cast<int>(seed % 3);
    const std::size_t n = 6 + static_cast<std::size_t>(seed % 20);
    PointSet p;
    switch (seed % 4) {
      case 0: p = gen::random_in_box(n, 6, seed); break;
      case 1:
        p = ell == 3 ? gen::random_general_position(n, seed + 7919)
                     : gen::random_bounded_collinear(n, ell, seed, Coord{16});
        break;
      case 2: p = gen::random_general_position(n, seed); break;
      default: p = gen::random_in_box(std::min<std::size_t>(n, 16), 4, seed); break;
    }
    ExtractionParams params;
    params.ell = ell;
    params.minimize_outer_layer = seed % 5 != 0;
    const auto r = extract(p, params);
    ++stats.runs;
    const std::string at = "seed " + std::to_string(seed);
    if (r.hole && !hole_violation(p, r.hole->vertices()).empty()) v.fail(at + ": hole certificate invalid");
    if (r.collinear && !collinear_violation(p, r.collinear->points()).empty())
      v.fail(at + ": collinear certificate invalid");
    if (r.hole && r.hole->k() != 5) v.fail(at + ": hole is not a pentagon");
    const bool expected = oracle::oracle_max_collinear(p) >= static_cast<std::size_t>(ell) ||
                          oracle::oracle_k_hole(p, 5).has_value();
    const bool got = r.outcome == Outcome::hole || r.outcome == Outcome::collinear;
    if (expected != got) v.fail(at + ": certificate existence disagrees with the oracle");
    holes += r.outcome == Outcome::hole;
    lines += r.outcome == Outcome::collinear;
    none += !got;
    if (r.consecutive_layers) {
      ++stats.layer_checks;
      if (!*r.consecutive_layers) ++stats.layer_violations;
    }
  }

  struct PathCase {
    const char* path;
    PointSet points;
    std::vector<std::string> flags;
  };
  std::vector<PathCase> cases{
      {"quadrilateral", fixtures::unaligned_follower(), {"--ell", "3"}},
      {"nonempty-follower", fixtures::nonempty_follower(), {"--ell", "3"}},
      {"unaligned-follower", fixtures::unaligned_follower(), {"--ell", "3"}},
      {"terminal", fixtures::terminal(), {"--ell", "4", "--no-minimize"}},
      {"restart", fixtures::restart(), {"--ell", "3", "--k", "7", "--no-minimize"}},
  };
  // Window harvests are common on small general-position inputs.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto p = gen::random_general_position(10, seed);
    if (extract(p, {3}).fired("window")) {
      cases.push_back({"window", p, {"--ell", "3"}});
      break;
    }
  }
  std::string fired;
  for (auto& c : cases) {
    auto flags = c.flags;
    flags.push_back("--trace");
    const auto r = cli_extract(c.points, flags);
    bool seen = false;
    for (const auto& step : r.doc["trace"]) seen = seen || step["step"] == c.path;
    if (r.code != 0 || !seen) v.fail(std::string("path ") + c.path + " not seen in the trace");
    else fired += std::string(fired.empty() ? "" : ", ") + c.path;
  }
  if (std::none_of(cases.begin(), cases.end(), [](const PathCase& c) { return std::string(c.path) == "window"; }))
    v.fail("no window harvest among 100 inputs");
  if (v.pass)
    v.detail = "1000 runs (" + std::to_string(holes) + " holes, " + std::to_string(lines) + " collinear, " +
               std::to_string(none) + " none); paths: " + fired;
  return v;
}

// 9. Bound arithmetic.
Verdict criterion_9() {
  Verdict v;
  if (es_bound(5) != 11) v.fail("es_bound(5)");
  if (es_bound(6) != 36) v.fail("es_bound(6)");
  if (threshold_k(2) != 4) v.fail("threshold_k(2)");
  if (threshold_k(3) != 31) v.fail("threshold_k(3)");
  if (threshold_k(4) != 400) v.fail("threshold_k(4)");
  // For l <= 5 the convex-to-strict route is at least as strong.
  for (long long k = 7; k <= 21; k += 2) {
    const auto b = es_kl_bound(k, 3);
    if (b.convex_to_strict > b.general_position || b.winner != "convex-to-strict")
      v.fail("winner for k=" + std::to_string(k) + ", l=3");
  }
  const auto b96 = es_kl_bound(9, 6);
  if (!(b96.general_position < b96.convex_to_strict) || b96.winner != "general-position")
    v.fail("winner for (9, 6)");
  if (v.pass) v.detail = "es_bound 11, 36; threshold_k 4, 31, 400; winners as expected";
  return v;
}

// 10. Perturbation keeps nonzero orientations and convex subsets pull back.
Verdict criterion_10() {
  Verdict v;
  std::size_t subsets = 0;
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 6 + rng() % 10;
    const Coord side = 3 + static_cast<Coord>(rng() % 3);
    const auto p = gen::random_in_box(std::min<std::size_t>(n, static_cast<std::size_t>(side * side)), side, rng());
    const auto q = perturb_general_position(p);
    const std::size_t m = p.size();
    if (q.size() != m) {
      v.fail("size changed");
      continue;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          const int s = sign_of(p[i], p[j], p[k]), s2 = sign_of(q[i], q[j], q[k]);
          if (s2 == 0) v.fail("output not in general position");
          if (s != 0 && s != s2) v.fail("orientation flipped");
        }
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<Point> image, preimage;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) {
          image.push_back(q[i]);
          preimage.push_back(p[i]);
        }
      if (!is_convex_position(image)) continue;
      ++subsets;
      if (!is_convex_position(preimage)) v.fail("preimage of a convex subset is not in convex position");
    }
  }
  if (v.pass) v.detail = "200 sets, " + std::to_string(subsets) + " convex subsets pulled back";
  return v;
}

// 11. Consecutive layer sizes on the runs of criterion 8.
Verdict criterion_11(const ExtractorStats& stats) {
  Verdict v;
  if (stats.runs == 0) v.fail("criterion 8 did not run");
  if (stats.layer_violations) v.fail(std::to_string(stats.layer_violations) + " violations");
  if (stats.layer_checks == 0) v.fail("no run reached a full decomposition");
  if (v.pass) v.detail = std::to_string(stats.layer_checks) + " decompositions checked, 0 violations";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--only N] [--quick]\n", argv[0]);
      return 2;
    }
  }
  ExtractorStats stats;
  const std::vector<std::function<Verdict()>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
      [&] { return criterion_8(stats); }, criterion_9, criterion_10,
      [&] {
        if (only == 11) criterion_8(stats);
        return criterion_11(stats);
      },
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only && number != only) continue;
    Verdict verdict;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      verdict = criteria[i]();
    } catch (const std::exception& e) {
      verdict.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s (%.1fs)\n", number, verdict.pass ? "PASS" : "FAIL", verdict.detail.c_str(), s);
    std::fflush(stdout);
    all = all && verdict.pass;
  }
  return all ? 0 : 1;
}
