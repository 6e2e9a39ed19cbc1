#include "ejq/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace ejq::poly {

namespace {

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (cross(a, b, p) != 0) return false;
  const Rat dx = b.x - a.x, dy = b.y - a.y;
  const Rat dot = (p.x - a.x) * dx + (p.y - a.y) * dy;
  return dot >= 0 && dot <= dx * dx + dy * dy;
}

void check_inside(const PolygonSpace& space, const Point& p) {
  if (!contains(space, p)) throw std::invalid_argument("point outside polygon");
}

struct LinearSolution {
  bool consistent = false;
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> kernel;  // basis vectors
};

// Exact Gauss-Jordan on an m x k system.
LinearSolution solve_exact(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const size_t m = a.size();
  const size_t k = m == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col_of_row(m, -1);
  std::vector<int> pivot_row_of_col(k, -1);
  size_t rank = 0;
  for (size_t col = 0; col < k && rank < m; ++col) {
    size_t pr = rank;
    while (pr < m && a[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(a[pr], a[rank]);
    std::swap(b[pr], b[rank]);
    const Rat inv = a[rank][col];
    for (size_t j = 0; j < k; ++j) a[rank][j] /= inv;
    b[rank] /= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (size_t j = 0; j < k; ++j) a[r][j] -= f * a[rank][j];
      b[r] -= f * b[rank];
    }
    pivot_col_of_row[rank] = static_cast<int>(col);
    pivot_row_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  LinearSolution out;
  for (size_t r = rank; r < m; ++r)
    if (b[r] != 0) return out;  // inconsistent
  out.consistent = true;
  out.particular.assign(k, Rat(0));
  for (size_t r = 0; r < rank; ++r) out.particular[pivot_col_of_row[r]] = b[r];
  for (size_t col = 0; col < k; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    std::vector<Rat> v(k, Rat(0));
    v[col] = 1;
    for (size_t r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -a[r][col];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::string decomposition_key(const OrthoDecomposition& d) {
  std::string key;
  for (const auto& [idx, w] : d.parts) {
    key += std::to_string(idx);
    key += ':';
    key += rational_string(w);
    key += ';';
  }
  return key;
}

OrthoDecomposition to_decomposition(const std::vector<int>& clique, const std::vector<Rat>& weights) {
  OrthoDecomposition d;
  for (size_t i = 0; i < clique.size(); ++i)
    if (weights[i] > 0) d.parts.emplace_back(clique[i], weights[i]);
  std::sort(d.parts.begin(), d.parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return d;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(boost::multiprecision::cpp_int(text));
    }
    const boost::multiprecision::cpp_int num(text.substr(0, slash));
    const boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + text);
  }
}

std::string rational_string(const Rat& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

PolygonSpace make_polygon(std::vector<Point> vertices) {
  const size_t n = vertices.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    const Point& c = vertices[(i + 2) % n];
    if (cross(a, b, c) <= 0)
      throw std::invalid_argument("vertices must be strictly convex counterclockwise");
  }
  return PolygonSpace{std::move(vertices)};
}

PolygonSpace unit_square() {
  return make_polygon({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
}

PolygonSpace triangle() {
  return make_polygon({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

bool contains(const PolygonSpace& space, const Point& p) {
  const size_t n = space.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    if (cross(space.vertices[i], space.vertices[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

std::optional<AffineTest> find_test(const PolygonSpace& space, const Point& s1, const Point& s0) {
  check_inside(space, s1);
  check_inside(space, s0);
  if (s1 == s0) return std::nullopt;

  // phi(s1) = 1, phi(s0) = 0 pins (a,b,c) up to the kernel direction
  // r1 x r0 of the two constraint rows.
  AffineTest dir;
  dir.a = s1.y - s0.y;
  dir.b = s0.x - s1.x;
  dir.c = s1.x * s0.y - s0.x * s1.y;

  AffineTest base;
  const Rat det_ab = s1.x * s0.y - s0.x * s1.y;
  const Rat det_ac = s1.x - s0.x;
  const Rat det_bc = s1.y - s0.y;
  if (det_ab != 0) {
    base = AffineTest{s0.y / det_ab, -s0.x / det_ab, Rat(0)};
  } else if (det_ac != 0) {
    base = AffineTest{Rat(1) / det_ac, Rat(0), -s0.x / det_ac};
  } else {
    base = AffineTest{Rat(0), Rat(1) / det_bc, -s0.y / det_bc};
  }

  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  auto tighten_lo = [&](const Rat& v) {
    if (!has_lo || v > lo) { lo = v; has_lo = true; }
  };
  auto tighten_hi = [&](const Rat& v) {
    if (!has_hi || v < hi) { hi = v; has_hi = true; }
  };
  for (const Point& v : space.vertices) {
    const Rat val = base.eval(v);
    const Rat dv = dir.eval(v);
    if (dv == 0) {
      if (val < 0 || val > 1) return std::nullopt;
      continue;
    }
    if (dv > 0) {
      tighten_lo(-val / dv);
      tighten_hi((Rat(1) - val) / dv);
    } else {
      tighten_hi(-val / dv);
      tighten_lo((Rat(1) - val) / dv);
    }
  }
  Rat t(0);
  if (has_lo && has_hi) {
    if (lo > hi) return std::nullopt;
    t = (lo + hi) / 2;
  } else if (has_lo) {
    t = lo;
  } else if (has_hi) {
    t = hi;
  }
  return AffineTest{base.a + t * dir.a, base.b + t * dir.b, base.c + t * dir.c};
}

Face smallest_face(const PolygonSpace& space, const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("smallest_face needs points");
  for (const Point& p : points) check_inside(space, p);
  const size_t n = space.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    if (space.vertices[i] == points[0]) {
      bool all = true;
      for (const Point& p : points) all = all && p == points[0];
      if (all) return Face{Face::Kind::Vertex, static_cast<int>(i)};
      break;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    const Point& a = space.vertices[i];
    const Point& b = space.vertices[(i + 1) % n];
    bool all = true;
    for (const Point& p : points) all = all && on_segment(a, b, p);
    if (all) return Face{Face::Kind::Edge, static_cast<int>(i)};
  }
  return Face{Face::Kind::Whole, -1};
}

bool orthogonal(const PolygonSpace& space, const Point& s1, const Point& s2) {
  check_inside(space, s1);
  check_inside(space, s2);
  if (s1 == s2) return false;
  const Face face = smallest_face(space, {s1, s2});
  if (face.kind == Face::Kind::Vertex) return false;
  if (face.kind == Face::Kind::Edge) {
    const Point& a = space.vertices[face.index];
    const Point& b = space.vertices[(face.index + 1) % space.vertices.size()];
    const Rat dx = b.x - a.x, dy = b.y - a.y;
    const Rat len2 = dx * dx + dy * dy;
    const Rat t1 = ((s1.x - a.x) * dx + (s1.y - a.y) * dy) / len2;
    const Rat t2 = ((s2.x - a.x) * dx + (s2.y - a.y) * dy) / len2;
    // psi affine on the edge with psi(t1) = 1, psi(t2) = 0, checked at the
    // edge ends; the reverse direction is 1 - psi.
    const Rat denom = t1 - t2;
    const Rat psi0 = (Rat(0) - t2) / denom;
    const Rat psi1 = (Rat(1) - t2) / denom;
    return psi0 >= 0 && psi0 <= 1 && psi1 >= 0 && psi1 <= 1;
  }
  return find_test(space, s1, s2).has_value() && find_test(space, s2, s1).has_value();
}

std::vector<Rat> OrthoDecomposition::spectrum() const {
  std::vector<Rat> s;
  for (const auto& [idx, w] : parts) s.push_back(w);
  std::sort(s.begin(), s.end(), std::greater<Rat>());
  return s;
}

double OrthoDecomposition::entropy() const {
  double h = 0.0;
  for (const auto& [idx, w] : parts) {
    const double x = w.convert_to<double>();
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

namespace {

// Basic feasible solutions of {particular + kernel t : lambda >= 0}.
std::vector<std::vector<Rat>> polytope_vertices(const std::vector<Rat>& particular,
                                                const std::vector<std::vector<Rat>>& kernel) {
  const size_t k = particular.size();
  const size_t kd = kernel.size();
  std::vector<std::vector<Rat>> out;
  auto push_if_feasible = [&](const std::vector<Rat>& lambda) {
    for (const Rat& w : lambda)
      if (w < 0) return;
    for (const auto& existing : out)
      if (existing == lambda) return;
    out.push_back(lambda);
  };
  if (kd == 0) {
    push_if_feasible(particular);
    return out;
  }
  // zero out every subset of kd coordinates and keep the feasible solutions
  std::vector<size_t> idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == kd) {
      std::vector<std::vector<Rat>> a(kd, std::vector<Rat>(kd));
      std::vector<Rat> b(kd);
      for (size_t r = 0; r < kd; ++r) {
        for (size_t c = 0; c < kd; ++c) a[r][c] = kernel[c][idx[r]];
        b[r] = -particular[idx[r]];
      }
      LinearSolution sol = solve_exact(std::move(a), std::move(b));
      if (sol.consistent && sol.kernel.empty()) {
        std::vector<Rat> lambda = particular;
        for (size_t c = 0; c < kd; ++c)
          for (size_t i = 0; i < k; ++i) lambda[i] += sol.particular[c] * kernel[c][i];
        push_if_feasible(lambda);
      }
      return;
    }
    for (size_t i = start; i < k; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> orthogonality_cliques(const PolygonSpace& space, int max_terms) {
  const int n = static_cast<int>(space.vertices.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      adj[i][j] = adj[j][i] = orthogonal(space, space.vertices[i], space.vertices[j]);
  std::vector<std::vector<int>> cliques;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (!cur.empty()) cliques.push_back(cur);
    if (static_cast<int>(cur.size()) == max_terms) return;
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur) ok = ok && adj[u][v];
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return cliques;
}

}  // namespace

std::vector<DecompositionFamily> orthogonal_decompositions(const PolygonSpace& space,
                                                           const Point& p, int max_terms) {
  check_inside(space, p);
  std::vector<DecompositionFamily> out;
  for (const auto& clique : orthogonality_cliques(space, max_terms)) {
    const size_t k = clique.size();
    std::vector<std::vector<Rat>> a(3, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i) {
      a[0][i] = space.vertices[clique[i]].x;
      a[1][i] = space.vertices[clique[i]].y;
      a[2][i] = 1;
    }
    LinearSolution sol = solve_exact(std::move(a), {p.x, p.y, Rat(1)});
    if (!sol.consistent) continue;
    auto vertices = polytope_vertices(sol.particular, sol.kernel);
    if (vertices.empty()) continue;
    DecompositionFamily fam;
    fam.clique = clique;
    if (vertices.size() == 1) {
      bool strict = true;
      for (const Rat& w : vertices[0]) strict = strict && w > 0;
      if (!strict) continue;  // a sub-clique already covers it
      fam.is_family = false;
      fam.extremes.push_back(to_decomposition(clique, vertices[0]));
    } else {
      fam.is_family = true;
      for (const auto& v : vertices) fam.extremes.push_back(to_decomposition(clique, v));
      std::vector<Rat> mean(k, Rat(0));
      for (const auto& v : vertices)
        for (size_t i = 0; i < k; ++i) mean[i] += v[i];
      for (size_t i = 0; i < k; ++i) mean[i] /= static_cast<int>(vertices.size());
      fam.representative = to_decomposition(clique, mean);
    }
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<OrthoDecomposition> all_decompositions(const PolygonSpace& space, const Point& p,
                                                   int max_terms) {
  std::vector<OrthoDecomposition> out;
  std::set<std::string> seen;
  auto push = [&](const OrthoDecomposition& d) {
    if (d.parts.empty()) return;
    if (seen.insert(decomposition_key(d)).second) out.push_back(d);
  };
  for (const auto& fam : orthogonal_decompositions(space, p, max_terms)) {
    for (const auto& d : fam.extremes) push(d);
    if (fam.representative) push(*fam.representative);
  }
  return out;
}

EntropyResult polygon_entropy(const PolygonSpace& space, const Point& p, int max_terms) {
  const auto decs = all_decompositions(space, p, max_terms);
  if (decs.empty()) throw std::logic_error("no orthogonal decomposition found");
  EntropyResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& d : decs) {
    const double h = d.entropy();
    if (h < best.value) {
      best.value = h;
      best.witness = d;
    }
  }
  return best;
}

ProbeReport spectrality_probe(const PolygonSpace& space, const std::vector<Point>& samples,
                              int max_terms) {
  ProbeReport report;
  double best_gap = -1.0;
  for (const Point& p : samples) {
    ProbePointReport pr;
    pr.point = p;
    const auto decs = all_decompositions(space, p, max_terms);
    pr.entropy_min = std::numeric_limits<double>::infinity();
    pr.entropy_max = -std::numeric_limits<double>::infinity();
    std::set<std::string> spectra_seen;
    for (const auto& d : decs) {
      if (static_cast<int>(d.parts.size()) <= 3) pr.caratheodory_ok = true;
      const double h = d.entropy();
      pr.entropy_min = std::min(pr.entropy_min, h);
      pr.entropy_max = std::max(pr.entropy_max, h);
      const auto spec = d.spectrum();
      std::string key;
      for (const Rat& w : spec) key += rational_string(w) + ",";
      if (spectra_seen.insert(key).second) pr.spectra.push_back(spec);
    }
    pr.spectral = pr.spectra.size() <= 1;
    report.space_spectral = report.space_spectral && pr.spectral;
    report.caratheodory_all = report.caratheodory_all && pr.caratheodory_ok;
    if (!pr.spectral) {
      const double gap = pr.entropy_max - pr.entropy_min;
      if (gap > best_gap) {
        best_gap = gap;
        report.witness = static_cast<int>(report.points.size());
      }
    }
    report.points.push_back(std::move(pr));
  }
  return report;
}

std::vector<Point> grid_samples(const PolygonSpace& space, int n) {
  if (n < 1) throw std::invalid_argument("grid resolution must be >= 1");
  Rat xmin = space.vertices[0].x, xmax = xmin, ymin = space.vertices[0].y, ymax = ymin;
  for (const Point& v : space.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  std::vector<Point> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Point p{xmin + (xmax - xmin) * i / n, ymin + (ymax - ymin) * j / n};
      if (contains(space, p)) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<std::vector<Rat>> maximal_spectra(const PolygonSpace& space, const Point& p,
                                              int max_terms) {
  const auto decs = all_decompositions(space, p, max_terms);
  std::vector<std::vector<Rat>> spectra;
  std::set<std::string> seen;
  for (const auto& d : decs) {
    auto s = d.spectrum();
    std::string key;
    for (const Rat& w : s) key += rational_string(w) + ",";
    if (seen.insert(key).second) spectra.push_back(std::move(s));
  }
  auto majorizes = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat pa(0), pb(0);
    const size_t n = std::max(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
      pa += k < a.size() ? a[k] : Rat(0);
      pb += k < b.size() ? b[k] : Rat(0);
      if (pa < pb) return false;
    }
    return true;
  };
  std::vector<std::vector<Rat>> maximal;
  for (size_t i = 0; i < spectra.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < spectra.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = majorizes(spectra[j], spectra[i]) && !majorizes(spectra[i], spectra[j]);
    }
    if (!dominated) maximal.push_back(spectra[i]);
  }
  return maximal;
}

}  // namespace ejq::poly
