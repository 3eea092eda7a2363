#include "emptygon/pentagon.hpp"

#include <algorithm>
#include <stdexcept>

namespace emptygon {

namespace {

std::string describe(const std::vector<std::size_t>& sizes) {
  std::string s;
  for (std::size_t v : sizes) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

Wide distance_key(const Point& p, const Point& q, const Point& r) {
  const Wide c = cross(p, q, r);
  return c < 0 ? -c : c;
}

// Candidate nearest to line pq, ties to the canonically least.
std::optional<Point> closest_to_line(const Point& p, const Point& q,
                                     const std::vector<Point>& candidates) {
  std::optional<Point> best;
  Wide best_key = 0;
  for (const Point& r : candidates) {
    const Wide key = distance_key(p, q, r);
    if (!best || key < best_key || (key == best_key && r < *best)) {
      best = r;
      best_key = key;
    }
  }
  return best;
}

class Run {
 public:
  Run(const PointSet& points, const ExtractionParams& params) : P_(points), params_(params) {}

  ExtractionResult go();

 private:
  void note(std::string step, std::string detail, std::vector<Point> pts = {}) {
    out_.trace.push_back({std::move(step), std::move(detail), std::move(pts)});
  }

  // Verifies and records a 5-hole; false (with a trace entry) if it fails.
  bool accept_hole(const std::string& path, const std::vector<Point>& vertices) {
    const std::string why = hole_violation(P_, vertices);
    if (!why.empty()) {
      note(path + "-rejected", why, vertices);
      return false;
    }
    out_.hole = HoleCertificate::make(P_, vertices);
    out_.outcome = ExtractionResult::Outcome::hole;
    out_.paths.insert(path);
    note(path, "5-hole", out_.hole->vertices());
    return true;
  }

  bool accept_collinear(const std::string& path, const std::vector<Point>& pts) {
    const std::string why = collinear_violation(P_, pts);
    if (!why.empty() || pts.size() < static_cast<std::size_t>(params_.ell)) {
      note(path + "-rejected", why.empty() ? "too few points" : why, pts);
      return false;
    }
    out_.collinear = CollinearCertificate::make(P_, pts);
    out_.outcome = ExtractionResult::Outcome::collinear;
    out_.paths.insert(path);
    note(path, std::to_string(pts.size()) + " collinear points", out_.collinear->points());
    return true;
  }

  bool windows(const LayerDecomposition& L, bool& all_covered);
  bool walk(const LayerDecomposition& L, const Arc& first);
  bool finish_chain(const std::vector<Arc>& chain, const Point& z);
  static bool walkable(const LayerDecomposition& L);

  const PointSet& P_;
  const ExtractionParams& params_;
  ExtractionResult out_;
};

bool Run::walkable(const LayerDecomposition& L) {
  for (int i = 1; i < L.ell; ++i)
    if (L.layer(i).size() < 3) return false;
  return !L.layer(L.ell).empty();
}

// A run of 2l-1 consecutive points of A_{i-1} whose hull holds no point of
// A_i bounds a region containing only boundary points, so any 5-hole found
// among P inside it is a 5-hole of P.
bool Run::windows(const LayerDecomposition& L, bool& all_covered) {
  all_covered = true;
  const std::size_t width = 2 * static_cast<std::size_t>(params_.ell) - 1;
  for (int i = 2; i <= L.ell; ++i) {
    const std::vector<Point>& outer = L.layer(i - 1);
    const std::vector<Point>& inner = L.layer(i);
    const std::size_t m = outer.size();
    if (m < 3) break;
    const std::size_t w = std::min(width, m);
    const std::size_t starts = m <= width ? 1 : m;
    for (std::size_t s = 0; s < starts; ++s) {
      std::vector<Point> window;
      for (std::size_t t = 0; t < w; ++t) window.push_back(outer[(s + t) % m]);
      const ConvexRegion region(window);
      if (std::any_of(inner.begin(), inner.end(), [&](const Point& p) { return region.contains(p); })) {
        continue;
      }
      all_covered = false;
      note("window", "layer " + std::to_string(i - 1) + " window misses layer " + std::to_string(i),
           window);
      const PointSet local(points_in_hull(P_.points(), window));
      if (const auto h = find_k_hole(local, 5)) {
        if (accept_hole("window", h->vertices())) return true;
      } else {
        note("window-empty", "no 5-hole inside the window hull", window);
      }
    }
  }
  return false;
}

bool Run::walk(const LayerDecomposition& L, const Arc& first) {
  const Point z = *L.apex;
  std::vector<Arc> chain{first};
  note("arc", "empty arc of layer 1", {first.from, first.to});
  for (int i = 1; i <= L.ell - 2; ++i) {
    const Arc& xy = chain.back();
    const Arc pq = follower(xy, L);
    const Point x = xy.from, y = xy.to, p = pq.from, q = pq.to;
    note("follower", "layer " + std::to_string(i + 1) + " " + to_string(*pq.alignment), {x, y, p, q});

    const std::vector<Point> quad{x, y, p, q};
    const std::string why = hole_violation(P_, quad);
    if (!why.empty()) {
      note("quadrilateral-failed", why, quad);
      return false;
    }
    out_.paths.insert("quadrilateral");
    note("quadrilateral", "verified", quad);

    if (!pq.empty) {
      std::vector<Point> hits;
      for (const Point& r : L.layer(i + 2))
        if (in_open_triangle(r, p, q, z)) hits.push_back(r);
      const Point r = *closest_to_line(p, q, hits);
      return accept_hole("nonempty-follower", {x, y, p, q, r});
    }

    if (*pq.alignment == Alignment::none) {
      if (orient(p, q, z) == 0) {
        note("unaligned-degenerate", "apex on line pq; D taken as empty", {p, q, z});
        return false;
      }
      std::vector<Point> d;
      for (const Point& r : P_)
        if (r != p && r != q && in_closed_triangle(r, p, q, z)) d.push_back(r);
      const Point r = *closest_to_line(p, q, d);
      return accept_hole("unaligned-follower", {x, y, p, q, r});
    }
    chain.push_back(pq);
  }
  return finish_chain(chain, z);
}

// chain[t] is the arc x_{t+1} y_{t+1}; alignments start at the second arc.
bool Run::finish_chain(const std::vector<Arc>& chain, const Point& z) {
  const int ell = params_.ell;
  const auto align = [&](int i) { return *chain[static_cast<std::size_t>(i - 1)].alignment; };
  const auto xs = [&](int i) { return chain[static_cast<std::size_t>(i - 1)].from; };
  const auto ys = [&](int i) { return chain[static_cast<std::size_t>(i - 1)].to; };
  const auto side_line = [&](bool left) {
    std::vector<Point> pts;
    for (int t = 1; t <= ell - 1; ++t) pts.push_back(left ? xs(t) : ys(t));
    pts.push_back(z);
    return pts;
  };

  int first_off = 0;
  for (int i = 2; i <= ell - 2 && first_off == 0; ++i)
    if (align(i) != Alignment::double_aligned) first_off = i;

  if (first_off == 0) {
    const Alignment last = align(ell - 1);
    note("chain", "double-aligned through layer " + std::to_string(ell - 2));
    if (last != Alignment::right && accept_collinear("chain-collinear", side_line(true))) return true;
    if (last != Alignment::left && accept_collinear("chain-collinear", side_line(false))) return true;
    return false;
  }

  const Alignment side = align(first_off);
  int j = 0;
  for (int t = first_off + 1; t <= ell - 1 && j == 0; ++t)
    if (align(t) != side) j = t;
  const bool left = side == Alignment::left;
  if (j == 0) {
    note("chain", std::string(left ? "left" : "right") + "-aligned to the last layer");
    return accept_collinear("chain-collinear", side_line(left));
  }
  note("chain", "alignment changes at layer " + std::to_string(j));
  if (left) return accept_hole("terminal", {xs(j - 2), ys(j - 2), ys(j - 1), ys(j), xs(j - 1)});
  return accept_hole("terminal", {ys(j - 2), xs(j - 2), xs(j - 1), xs(j), ys(j - 1)});
}

ExtractionResult Run::go() {
  const int ell = params_.ell;
  const CollinearWitness line = max_collinear(P_);
  note("collinear-check", "max collinear " + std::to_string(line.count), line.points);
  if (line.count >= static_cast<std::size_t>(ell)) {
    const std::vector<Point> pts(line.points.begin(), line.points.begin() + ell);
    if (accept_collinear("collinear", pts)) return std::move(out_);
  }

  const BigInt threshold = threshold_k(ell);
  std::size_t k = params_.k.value_or(
      threshold > P_.size() ? P_.size() + 1 : static_cast<std::size_t>(threshold));
  const std::vector<Point> largest = max_convex_position_subset(P_.points());
  std::optional<std::vector<Point>> outer;
  if (largest.size() < k) {
    if (largest.size() >= 5) {
      const std::string wanted = params_.k ? std::to_string(*params_.k) : threshold.str();
      note("k-reduced", "k " + wanted + " -> " + std::to_string(largest.size()));
      out_.paths.insert("k-reduced");
      k = largest.size();
    } else {
      note("no-outer-set", "fewer than 5 points in convex position");
      k = 0;
    }
  }
  out_.k = k;

  if (k > 0) {
    outer = params_.minimize_outer_layer ? k_minimal_convex_subset(P_, k)
                                         : hull_closure(P_.points(), largest);
  }
  while (outer) {
    const LayerDecomposition L = layers_from_outer(P_, *outer, ell);
    outer.reset();
    out_.layers = L;
    note("layers", describe(L.sizes()), L.layer(1));

    bool covered = true;
    if (windows(L, covered)) return std::move(out_);
    if (!walkable(L)) {
      note("layers-short", "a layer is too small to continue");
      break;
    }
    if (covered) {
      bool holds = true;
      for (int i = 2; i <= ell; ++i) {
        holds = holds && L.layer(i - 1).size() < (2 * static_cast<std::size_t>(ell) - 1) *
                                                     (L.layer(i).size() + 1);
      }
      out_.consecutive_layers = holds;
    } else {
      note("window-unharvested", "an uncovered window gave no 5-hole");
    }

    const Point z = *L.apex;
    note("apex", "z", {z});
    std::vector<Arc> empty_arcs;
    for (const Arc& a : arcs_of_layer(L, 1))
      if (a.empty) empty_arcs.push_back(a);

    if (empty_arcs.empty()) {
      if (out_.restarts >= P_.size() || L.layer(2).size() < k) {
        note("restart-refused", "no empty arc on layer 1");
        break;
      }
      ++out_.restarts;
      out_.paths.insert("restart");
      note("restart", "no empty arc on layer 1; shrinking to a k-minimal set inside layer 2",
           L.layer(2));
      outer = k_minimal_convex_subset(P_, k, L.layer(2));
      continue;
    }
    for (const Arc& a : empty_arcs)
      if (walk(L, a)) return std::move(out_);
  }

  if (!params_.oracle_fallback) {
    note("inconclusive", "walk ended without a certificate");
    out_.outcome = ExtractionResult::Outcome::inconclusive;
    return std::move(out_);
  }
  if (const auto h = find_k_hole(P_, 5)) {
    if (accept_hole("fallback", h->vertices())) return std::move(out_);
  }
  note("absent", "complete search: no 5-hole and fewer than ell collinear points");
  out_.outcome = ExtractionResult::Outcome::absent;
  return std::move(out_);
}

}  // namespace

BigInt threshold_k(long long ell) {
  if (ell < 2) throw DomainError("threshold_k needs ell >= 2");
  const BigInt base = 2 * ell - 1;
  const BigInt numerator = boost::multiprecision::pow(base, static_cast<unsigned>(ell)) - 1;
  const BigInt denominator = 2 * ell - 2;
  if (numerator % denominator != 0) throw std::logic_error("threshold_k: not an integer");
  return numerator / denominator;
}

std::string to_string(Alignment a) {
  switch (a) {
    case Alignment::double_aligned: return "double";
    case Alignment::left: return "left";
    case Alignment::right: return "right";
    case Alignment::none: return "none";
  }
  return "?";
}

std::string to_string(ExtractionResult::Outcome o) {
  switch (o) {
    case ExtractionResult::Outcome::collinear: return "collinear";
    case ExtractionResult::Outcome::hole: return "hole";
    case ExtractionResult::Outcome::absent: return "absent";
    case ExtractionResult::Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Arc> arcs_of_layer(const LayerDecomposition& L, int i) {
  if (i < 1 || i >= L.ell) throw DomainError("arcs exist on layers 1 .. ell-1");
  if (!L.apex) throw DomainError("decomposition has no apex");
  const std::vector<Point>& layer = L.layer(i);
  if (layer.size() < 3) throw DomainError("layer has fewer than 3 points");
  const std::vector<Point>& next = L.layer(i + 1);
  const Point z = *L.apex;
  std::vector<Arc> arcs;
  for (std::size_t t = 0; t < layer.size(); ++t) {
    Arc a{layer[t], layer[(t + 1) % layer.size()], i, true, std::nullopt};
    for (const Point& p : next)
      if (in_open_triangle(p, a.from, a.to, z)) a.empty = false;
    arcs.push_back(a);
  }
  return arcs;
}

Alignment classify_alignment(const Arc& xy, const Arc& pq, const Point& z) {
  const bool p_on = on_closed_segment(pq.from, xy.from, z);
  const bool q_on = on_closed_segment(pq.to, xy.to, z);
  if (p_on && q_on) return Alignment::double_aligned;
  if (p_on) return Alignment::left;
  if (q_on) return Alignment::right;
  return Alignment::none;
}

Arc follower(const Arc& arc, const LayerDecomposition& L) {
  const int i = arc.layer;
  if (i < 1 || i > L.ell - 2) throw DomainError("followers exist for arcs of layers 1 .. ell-2");
  if (!L.apex) throw DomainError("decomposition has no apex");
  const Point z = *L.apex;
  const std::vector<Point>& next = L.layer(i + 1);
  for (const Point& p : next)
    if (in_open_triangle(p, arc.from, arc.to, z)) throw DomainError("arc is not empty");
  std::optional<Arc> found;
  for (const Arc& cand : arcs_of_layer(L, i + 1)) {
    if (!segment_meets_open_triangle(cand.from, cand.to, arc.from, arc.to, z)) continue;
    if (found) throw std::logic_error("two arcs cross the triangle of an empty arc");
    found = cand;
  }
  if (!found) throw std::logic_error("no arc crosses the triangle of an empty arc");
  found->alignment = classify_alignment(arc, *found, z);
  return *found;
}

ExtractionResult extract(const PointSet& points, const ExtractionParams& params) {
  if (params.ell < 2) throw DomainError("ell must be at least 2");
  if (params.k && *params.k < 3) throw DomainError("k must be at least 3");
  if (points.size() < 3) throw DomainError("extraction needs at least 3 points");
  return Run(points, params).go();
}

}  // namespace emptygon
