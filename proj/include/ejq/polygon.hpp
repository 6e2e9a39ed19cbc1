#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace ejq::poly {

using Rat = boost::multiprecision::cpp_rational;

Rat parse_rational(const std::string& text);  // "p/q" or "p"
std::string rational_string(const Rat& r);

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Strictly convex polygon, vertices counterclockwise, exact rational
// coordinates. Pure states are exactly the vertices.
struct PolygonSpace {
  std::vector<Point> vertices;
};

PolygonSpace make_polygon(std::vector<Point> vertices);
PolygonSpace unit_square();
PolygonSpace triangle();

bool contains(const PolygonSpace& space, const Point& p);

// phi(x,y) = a x + b y + c with 0 <= phi <= 1 on the polygon.
struct AffineTest {
  Rat a, b, c;
  Rat eval(const Point& p) const { return a * p.x + b * p.y + c; }
};

// Exact feasibility for phi(s1) = 1, phi(s0) = 0 with vertex bounds.
std::optional<AffineTest> find_test(const PolygonSpace& space, const Point& s1, const Point& s0);

struct Face {
  enum class Kind { Vertex, Edge, Whole } kind = Kind::Whole;
  int index = -1;  // vertex index or edge start index
};

Face smallest_face(const PolygonSpace& space, const std::vector<Point>& points);

// Perfect two-sided distinguishability inside the smallest common face.
bool orthogonal(const PolygonSpace& space, const Point& s1, const Point& s2);

struct OrthoDecomposition {
  std::vector<std::pair<int, Rat>> parts;  // (vertex index, weight > 0)
  std::vector<Rat> spectrum() const;       // weights, descending
  double entropy() const;
};

// Solutions over one orthogonality clique: either an isolated decomposition
// or a weight polytope reported by its extreme points plus a strictly
// interior representative.
struct DecompositionFamily {
  std::vector<int> clique;
  bool is_family = false;
  std::vector<OrthoDecomposition> extremes;          // isolated: exactly one
  std::optional<OrthoDecomposition> representative;  // interior member of a family
};

std::vector<DecompositionFamily> orthogonal_decompositions(const PolygonSpace& space,
                                                           const Point& p, int max_terms = 4);

// All distinct decompositions enumerated for a point: isolated solutions,
// family extremes and family representatives.
std::vector<OrthoDecomposition> all_decompositions(const PolygonSpace& space, const Point& p,
                                                   int max_terms = 4);

struct EntropyResult {
  double value = 0.0;
  OrthoDecomposition witness;
};

// Minimum of -sum w ln w over the enumerated orthogonal decompositions;
// along a weight family the entropy is concave, so extremes suffice.
EntropyResult polygon_entropy(const PolygonSpace& space, const Point& p, int max_terms = 4);

struct ProbePointReport {
  Point point;
  bool caratheodory_ok = false;  // some decomposition with <= 3 terms
  bool spectral = true;
  std::vector<std::vector<Rat>> spectra;  // distinct spectra, zero-stripped
  double entropy_min = 0.0;
  double entropy_max = 0.0;
};

struct ProbeReport {
  bool space_spectral = true;
  bool caratheodory_all = true;
  int witness = -1;  // index into points: non-spectral point of largest entropy gap
  std::vector<ProbePointReport> points;
};

ProbeReport spectrality_probe(const PolygonSpace& space, const std::vector<Point>& samples,
                              int max_terms = 4);

// Rational grid (i/n, j/n) clipped to the polygon.
std::vector<Point> grid_samples(const PolygonSpace& space, int n);

// Majorization-maximal spectra among the enumerated decompositions of p.
std::vector<std::vector<Rat>> maximal_spectra(const PolygonSpace& space, const Point& p,
                                              int max_terms = 4);

}  // namespace ejq::poly
