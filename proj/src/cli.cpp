#include "emptygon/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "emptygon/convexity.hpp"
#include "emptygon/generators.hpp"
#include "emptygon/holes.hpp"
#include "emptygon/pentagon.hpp"

namespace emptygon::cli {

namespace {

using Json = nlohmann::ordered_json;

// Above these sizes analyze reports lower bounds instead of exact values.
constexpr std::size_t kExactConvexLimit = 150;
constexpr std::size_t kHoleSearchLimit = 150;

Json points_json(std::span<const Point> pts) {
  Json arr = Json::array();
  for (const Point& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

std::string join(const std::vector<Point>& pts) {
  std::string s;
  for (const Point& p : pts) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("cannot write " + path);
}

// Writes to --out when given, else to the stream.
void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
  }
}

// One top-level field per line, one trace step per line.
std::string render(const Json& doc) {
  std::string s = "{\n";
  std::size_t i = 0;
  for (const auto& item : doc.items()) {
    s += "  " + Json(item.key()).dump() + ": ";
    if (item.key() == "trace") {
      s += "[";
      for (std::size_t t = 0; t < item.value().size(); ++t) {
        s += (t == 0 ? "\n    " : ",\n    ") + item.value()[t].dump();
      }
      s += item.value().empty() ? "]" : "\n  ]";
    } else {
      s += item.value().dump();
    }
    s += ++i < doc.size() ? ",\n" : "\n";
  }
  return s + "}\n";
}

Json trace_json(const std::vector<TraceStep>& trace) {
  Json arr = Json::array();
  for (const TraceStep& s : trace) {
    arr.push_back({{"step", s.step}, {"detail", s.detail}, {"points", points_json(s.points)}});
  }
  return arr;
}

const std::map<std::string, std::vector<long long>>& default_parameters() {
  static const std::map<std::string, std::vector<long long>> table{
      {"every_second_side", {9, 6}},
      {"every_second_side_odd", {9, 6}},
      {"every_second_side_even", {8, 6}},
      {"grid", {4}},
      {"horton", {16}},
      {"collinear_plus_one", {5}},
      {"eppstein_family_a_b", {5, 1}},
      {"eppstein_family_c_d", {4, 1}},
      {"eppstein_family_e", {}},
      {"random_general_position", {10}},
      {"random_bounded_collinear", {12, 4}},
      {"random_convex_position", {12, 4}},
      {"random_in_box", {12, 8}},
  };
  return table;
}

int cmd_analyze(const std::string& path, std::ostream& out) {
  const PointSet P = read_point_file(path);
  out << "points: " << P.size() << "\n";
  if (P.empty()) return kOk;
  out << "max_collinear: " << max_collinear(P).count << "\n";

  if (P.size() <= kExactConvexLimit) {
    out << "max_convex_subset: " << max_convex_position_subset(P.points()).size() << "\n";
    out << "max_strictly_convex_subset: " << max_strictly_convex_subset(P.points()).size() << "\n";
  } else {
    const HullBoundary hull = convex_hull(P);
    out << "max_convex_subset: >= " << hull.boundary.size() << " (lower bound, input too large)\n";
    out << "max_strictly_convex_subset: >= " << hull.corners.size()
        << " (lower bound, input too large)\n";
  }

  if (P.size() <= kHoleSearchLimit) {
    const std::size_t largest = P.size() >= 3 ? largest_hole_size(P, 7) : 0;
    out << "largest_hole: " << largest << " (searched k <= 7)\n";
    const auto five = P.size() >= 5 ? find_k_hole(P, 5) : std::nullopt;
    out << "five_hole: " << (five ? join(five->vertices()) : std::string("none")) << "\n";
  } else {
    out << "largest_hole: skipped (input too large)\n";
    out << "five_hole: skipped (input too large)\n";
  }

  std::string profile;
  for (const auto& layer : onion_layers(P.points())) {
    profile += (profile.empty() ? "" : " ") + std::to_string(layer.size());
  }
  out << "convex_layers: " << profile << "\n";
  return kOk;
}

int cmd_extract(const std::string& path, int ell, std::optional<std::size_t> k, bool no_fallback,
                bool no_minimize, bool trace, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const PointSet P = read_point_file(path);
  if (ell < 2) throw InputError("--ell must be at least 2");
  if (P.size() < 3) throw InputError(path + ": need at least 3 points");
  ExtractionParams params;
  params.ell = ell;
  params.k = k;
  params.oracle_fallback = !no_fallback;
  params.minimize_outer_layer = !no_minimize;
  const ExtractionResult r = extract(P, params);

  Json doc;
  if (r.hole || r.collinear) {
    const std::vector<Point>& pts = r.hole ? r.hole->vertices() : r.collinear->points();
    const std::string why = r.hole ? hole_violation(P, pts) : collinear_violation(P, pts);
    doc["kind"] = r.hole ? "hole" : "collinear";
    doc["parameter"] = r.hole ? pts.size() : static_cast<std::size_t>(ell);
    doc["points"] = points_json(pts);
    doc["verified"] = why.empty();
  } else {
    doc["outcome"] = to_string(r.outcome);
    doc["parameter"] = ell;
  }
  if (trace) doc["trace"] = trace_json(r.trace);
  doc["tool_version"] = kToolVersion;
  emit(out_path, render(doc), out);

  if (r.hole || r.collinear) return kOk;
  err << "no certificate: "
      << (r.outcome == ExtractionResult::Outcome::absent
              ? "complete search found neither " + std::to_string(ell) +
                    " collinear points nor a 5-hole"
              : std::string("walk ended without a certificate and the fallback is off"))
      << "\n";
  return kNoCertificate;
}

int cmd_generate(const std::string& family_name, std::vector<long long> params, std::uint64_t seed,
                 bool seed_given, const std::string& out_path, std::ostream& out) {
  const auto family = generators::family_from_string(family_name);
  if (!family) {
    std::string names;
    for (const auto& n : generators::family_names()) names += " " + n;
    throw InputError("unknown family '" + family_name + "'; known:" + names);
  }
  if (params.empty()) params = default_parameters().at(family_name);
  generators::GeneratorSpec spec{*family, params, seed};
  const generators::Generated g = generators::generate(spec);

  std::ostringstream header;
  header << "# " << family_name;
  for (long long v : params) header << " " << v;
  if (seed_given) header << " seed " << seed;
  header << "\n";
  for (const auto& v : g.verified) header << "# verified: " << v << "\n";
  emit(out_path, header.str() + format_points(g.points), out);
  if (!out_path.empty()) {
    out << "wrote " << g.points.size() << " points to " << out_path << "\n";
    for (const auto& v : g.verified) out << "verified: " << v << "\n";
  }
  return kOk;
}

std::vector<Point> parse_certificate_points(const Json& arr) {
  if (!arr.is_array()) throw InputError("certificate: points must be an array");
  std::vector<Point> pts;
  for (const Json& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw InputError("certificate: each point must be [x, y] with integer coordinates");
    }
    pts.push_back({p[0].get<Coord>(), p[1].get<Coord>()});
  }
  return pts;
}

int cmd_verify(const std::string& points_path, const std::string& cert_path, std::ostream& out,
               std::ostream& err) {
  const PointSet P = read_point_file(points_path);
  std::ifstream f(cert_path, std::ios::binary);
  if (!f) throw InputError("cannot open " + cert_path);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(cert_path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw InputError(cert_path + ": certificate must be a JSON object");
  static const std::vector<std::string> allowed{"kind",     "parameter", "points",
                                                "verified", "trace",     "tool_version"};
  for (const auto& item : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw InputError(cert_path + ": unknown field '" + item.key() + "'");
    }
  }
  for (const char* key : {"kind", "parameter", "points", "verified", "tool_version"}) {
    if (!doc.contains(key)) throw InputError(cert_path + ": missing field '" + key + "'");
  }
  if (!doc["kind"].is_string() || !doc["parameter"].is_number_integer() ||
      !doc["verified"].is_boolean() || !doc["tool_version"].is_string()) {
    throw InputError(cert_path + ": field has the wrong type");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind != "hole" && kind != "collinear") {
    throw InputError(cert_path + ": kind must be \"hole\" or \"collinear\"");
  }
  const std::vector<Point> pts = parse_certificate_points(doc["points"]);
  const long long parameter = doc["parameter"].get<long long>();

  std::string why;
  if (parameter != static_cast<long long>(pts.size())) {
    why = "parameter does not match the number of points";
  } else if (kind == "hole") {
    why = hole_violation(P, pts);
  } else {
    why = pts.size() < 2 ? "fewer than 2 points" : collinear_violation(P, pts);
  }
  if (!why.empty()) {
    err << "invalid certificate: " << why << "\n";
    return kInvalid;
  }
  out << "valid: " << (kind == "hole" ? std::to_string(pts.size()) + "-hole"
                                      : std::to_string(pts.size()) + " collinear points")
      << "\n";
  return kOk;
}

int cmd_bounds(long long k, long long ell, std::ostream& out) {
  if (k < 3 || ell < 3) throw InputError("bounds needs k >= 3 and ell >= 3");
  const EsKlBound b = es_kl_bound(k, ell);
  out << "k: " << k << "\n";
  out << "ell: " << ell << "\n";
  out << "es_bound: " << es_bound(k).str() << "\n";
  out << "es_kl_bound: " << b.value.str() << "\n";
  out << "  convex_to_strict: " << b.convex_to_strict.str() << "\n";
  out << "  general_position: " << b.general_position.str() << "\n";
  out << "  winner: " << b.winner << "\n";
  out << "q: " << q_formula(k, ell) << "\n";
  out << "threshold_k: " << threshold_k(ell).str() << "\n";
  out << "quadrilateral_threshold: " << std::max<long long>(7, ell + 2) << "\n";
  return kOk;
}

}  // namespace

PointSet parse_points(std::istream& in, const std::string& name) {
  std::vector<Point> pts;
  std::map<Point, std::size_t> first_line;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::string where = name + ":" + std::to_string(number) + ": ";
    std::istringstream fields(line);
    std::string xs, ys, extra;
    if (!(fields >> xs >> ys) || (fields >> extra)) {
      throw InputError(where + "expected two integers \"x y\"");
    }
    Point p;
    for (auto [text, dest] : {std::pair{&xs, &p.x}, std::pair{&ys, &p.y}}) {
      const char* first = text->data();
      const char* last = first + text->size();
      if (*first == '+' && last - first > 1 && first[1] != '-') ++first;
      const auto [end, ec] = std::from_chars(first, last, *dest);
      const bool digits = ec != std::errc::invalid_argument && end == last;
      if (!digits) throw InputError(where + "not an integer: " + *text);
      if (ec == std::errc::result_out_of_range || *dest > kMaxCoordinate || *dest < -kMaxCoordinate) {
        throw InputError(where + "coordinate out of range: " + *text);
      }
    }
    const auto [it, fresh] = first_line.emplace(p, number);
    if (!fresh) {
      throw InputError(where + "duplicate point " + to_string(p) + " (first on line " +
                       std::to_string(it->second) + ")");
    }
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

PointSet read_point_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  return parse_points(f, path);
}

std::string format_points(const PointSet& points) {
  std::string s;
  for (const Point& p : points) s += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Empty convex polygons and collinear points in planar point sets", "emptygon"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string file, cert_file, out_path, family;
  int ell = 0;
  long long k_arg = 0, bound_k = 0, bound_ell = 0;
  std::optional<std::size_t> k_opt;
  bool no_fallback = false, no_minimize = false, trace = false;
  std::vector<long long> params;
  std::uint64_t seed = 0;

  auto* analyze = app.add_subcommand("analyze", "Report collinearity, convexity and hole statistics");
  analyze->add_option("file", file, "Point file")->required();

  auto* ext = app.add_subcommand("extract", "Find ell collinear points or a 5-hole");
  ext->add_option("file", file, "Point file")->required();
  ext->add_option("--ell", ell, "Collinearity bound ell")->required();
  auto* k_flag = ext->add_option("--k", k_arg, "Outer convex set size (default: threshold_k(ell))");
  ext->add_flag("--no-fallback", no_fallback, "Do not finish with a complete 5-hole search");
  ext->add_flag("--no-minimize", no_minimize, "Peel from a maximum convex subset as found");
  ext->add_flag("--trace", trace, "Embed the step-by-step trace");
  ext->add_option("--out", out_path, "Write the document here instead of stdout");

  auto* gen = app.add_subcommand("generate", "Write a point set from a named family");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Integer parameters (defaults per family)");
  auto* seed_flag = gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("--out", out_path, "Write the point file here instead of stdout");

  auto* ver = app.add_subcommand("verify", "Check a certificate against a point file");
  ver->add_option("points", file, "Point file")->required();
  ver->add_option("certificate", cert_file, "Certificate JSON")->required();

  auto* bounds = app.add_subcommand("bounds", "Print the bound formulas for k and ell");
  bounds->add_option("k", bound_k, "Target size k")->required();
  bounds->add_option("ell", bound_ell, "Collinearity bound ell")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(file, out);
    if (*ext) {
      if (*k_flag) {
        if (k_arg < 3) throw InputError("--k must be at least 3");
        k_opt = static_cast<std::size_t>(k_arg);
      }
      return cmd_extract(file, ell, k_opt, no_fallback, no_minimize, trace, out_path, out, err);
    }
    if (*gen) return cmd_generate(family, params, seed, static_cast<bool>(*seed_flag), out_path, out);
    if (*ver) return cmd_verify(file, cert_file, out, err);
    if (*bounds) return cmd_bounds(bound_k, bound_ell, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace emptygon::cli
