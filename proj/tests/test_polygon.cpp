#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ejq/polygon.hpp"

using namespace ejq::poly;

namespace {

Point pt(const std::string& x, const std::string& y) {
  return Point{parse_rational(x), parse_rational(y)};
}

bool has_spectrum(const std::vector<std::vector<Rat>>& spectra, const std::vector<Rat>& wanted) {
  for (const auto& s : spectra)
    if (s == wanted) return true;
  return false;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("1/2") == Rat(1, 2));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational("5") == Rat(5));
  CHECK(rational_string(Rat(1, 2)) == "1/2");
  CHECK(rational_string(Rat(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(make_polygon({pt("0", "0"), pt("1", "0")}), std::invalid_argument);
  // clockwise is rejected
  CHECK_THROWS_AS(make_polygon({pt("0", "0"), pt("0", "1"), pt("1", "0")}), std::invalid_argument);
  // collinear triple is rejected
  CHECK_THROWS_AS(
      make_polygon({pt("0", "0"), pt("1", "0"), pt("2", "0"), pt("1", "1")}),
      std::invalid_argument);
  CHECK(contains(unit_square(), pt("1/2", "1/4")));
  CHECK(contains(unit_square(), pt("0", "0")));
  CHECK_FALSE(contains(unit_square(), pt("3/2", "1/4")));
}

TEST_CASE("find_test on the square") {
  const PolygonSpace sq = unit_square();
  // (1,0) vs (0,1): feasible, bounds hold at every vertex exactly
  const auto t1 = find_test(sq, pt("1", "0"), pt("0", "1"));
  REQUIRE(t1.has_value());
  CHECK(t1->eval(pt("1", "0")) == Rat(1));
  CHECK(t1->eval(pt("0", "1")) == Rat(0));
  for (const auto& v : sq.vertices) {
    CHECK(t1->eval(v) >= Rat(0));
    CHECK(t1->eval(v) <= Rat(1));
  }
  // (1,1) vs (1,0): the coordinate test y works
  const auto t2 = find_test(sq, pt("1", "1"), pt("1", "0"));
  REQUIRE(t2.has_value());
  CHECK(t2->eval(pt("1", "1")) == Rat(1));
  CHECK(t2->eval(pt("1", "0")) == Rat(0));
  // identical points are unseparable
  CHECK_FALSE(find_test(sq, pt("1/2", "1/2"), pt("1/2", "1/2")).has_value());
  CHECK_THROWS_AS(find_test(sq, pt("2", "0"), pt("0", "0")), std::invalid_argument);
}

TEST_CASE("smallest face") {
  const PolygonSpace sq = unit_square();
  CHECK(smallest_face(sq, {pt("1/3", "1/2"), pt("1/2", "1/2")}).kind == Face::Kind::Whole);
  const Face bottom = smallest_face(sq, {pt("0", "0"), pt("1", "0")});
  CHECK(bottom.kind == Face::Kind::Edge);
  CHECK(bottom.index == 0);
  const Face v = smallest_face(sq, {pt("1", "1")});
  CHECK(v.kind == Face::Kind::Vertex);
  CHECK(v.index == 2);
}

TEST_CASE("orthogonality in the square") {
  const PolygonSpace sq = unit_square();
  CHECK(orthogonal(sq, pt("0", "0"), pt("1", "1")));
  CHECK(orthogonal(sq, pt("1", "0"), pt("0", "1")));
  CHECK(orthogonal(sq, pt("0", "0"), pt("1", "0")));  // adjacent, via the edge
  CHECK_FALSE(orthogonal(sq, pt("0", "0"), pt("1/2", "0")));
  CHECK_FALSE(orthogonal(sq, pt("1/4", "1/4"), pt("1/4", "1/4")));
  // opposite edge midpoints are perfectly distinguishable by the test 1 - y
  CHECK(orthogonal(sq, pt("1/2", "0"), pt("1/2", "1")));
}

TEST_CASE("decompositions of the paper square point (1/2, 1/4)") {
  const PolygonSpace sq = unit_square();
  const auto decs = all_decompositions(sq, pt("1/2", "1/4"));
  const std::vector<Rat> target = {Rat(1, 2), Rat(1, 4), Rat(1, 4)};
  bool found_target_set = false;
  for (const auto& d : decs) {
    if (d.spectrum() == target && d.parts.size() == 3) {
      // vertex set {(1,0),(0,1),(0,0)} with weights 1/2,1/4,1/4 appears
      bool has10 = false, has01 = false, has00 = false;
      for (const auto& [idx, w] : d.parts) {
        if (sq.vertices[idx] == pt("1", "0") && w == Rat(1, 2)) has10 = true;
        if (sq.vertices[idx] == pt("0", "1") && w == Rat(1, 4)) has01 = true;
        if (sq.vertices[idx] == pt("0", "0") && w == Rat(1, 4)) has00 = true;
      }
      found_target_set = found_target_set || (has10 && has01 && has00);
    }
  }
  CHECK(found_target_set);
  // every enumerated spectrum is majorized by (1/2, 1/4, 1/4)
  const auto maxima = maximal_spectra(sq, pt("1/2", "1/4"));
  REQUIRE(maxima.size() == 1);
  CHECK(maxima[0] == target);
}

TEST_CASE("decompositions of the square center") {
  const PolygonSpace sq = unit_square();
  const auto fams = orthogonal_decompositions(sq, pt("1/2", "1/2"));
  int two_term = 0, family4 = 0;
  for (const auto& f : fams) {
    if (!f.is_family && f.extremes[0].parts.size() == 2) {
      ++two_term;
      CHECK(f.extremes[0].spectrum() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    }
    if (f.is_family && f.clique.size() == 4) {
      ++family4;
      REQUIRE(f.representative.has_value());
      CHECK(f.representative->spectrum() ==
            std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
      for (const auto& e : f.extremes)
        CHECK(e.spectrum() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    }
  }
  CHECK(two_term == 2);  // both diagonals
  CHECK(family4 == 1);
  // rank four: the 4-clique family exists while every point also has a
  // <= 3 term decomposition
  const auto decs = all_decompositions(sq, pt("1/2", "1/2"));
  bool has_le3 = false;
  for (const auto& d : decs) has_le3 = has_le3 || d.parts.size() <= 3;
  CHECK(has_le3);
}

TEST_CASE("triangle barycenter has a unique decomposition") {
  const PolygonSpace tri = triangle();
  const auto decs = all_decompositions(tri, pt("1/3", "1/3"));
  REQUIRE(decs.size() == 1);
  CHECK(decs[0].spectrum() == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
}

TEST_CASE("exact reconstruction") {
  const PolygonSpace sq = unit_square();
  const Point p = pt("3/7", "2/5");
  for (const auto& d : all_decompositions(sq, p)) {
    Rat x(0), y(0), total(0);
    for (const auto& [idx, w] : d.parts) {
      x += w * sq.vertices[idx].x;
      y += w * sq.vertices[idx].y;
      total += w;
      CHECK(w > 0);
    }
    CHECK(x == p.x);
    CHECK(y == p.y);
    CHECK(total == Rat(1));
  }
}

TEST_CASE("polygon entropy") {
  const PolygonSpace sq = unit_square();
  CHECK(polygon_entropy(sq, pt("0", "0")).value == doctest::Approx(0.0));
  const auto center = polygon_entropy(sq, pt("1/2", "1/2"));
  CHECK(center.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(center.witness.spectrum() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  const auto quarter = polygon_entropy(sq, pt("1/2", "1/4"));
  CHECK(quarter.value == doctest::Approx(1.5 * std::log(2.0)).epsilon(1e-12));
  // concavity violation: H(center) < mean of the two symmetric points
  const auto other = polygon_entropy(sq, pt("1/2", "3/4"));
  CHECK(center.value < 0.5 * (quarter.value + other.value) - 0.1);
}

TEST_CASE("spectrality probe: triangle is spectral, square is not") {
  const PolygonSpace tri = triangle();
  const auto rep_tri = spectrality_probe(tri, grid_samples(tri, 12));
  CHECK(rep_tri.space_spectral);
  CHECK(rep_tri.caratheodory_all);

  const PolygonSpace sq = unit_square();
  const auto rep = spectrality_probe(sq, grid_samples(sq, 10));
  CHECK_FALSE(rep.space_spectral);
  CHECK(rep.caratheodory_all);
  REQUIRE(rep.witness >= 0);
  const auto& w = rep.points[rep.witness];
  CHECK(w.point == pt("1/2", "1/2"));
  CHECK(has_spectrum(w.spectra, {Rat(1, 2), Rat(1, 2)}));
  CHECK(has_spectrum(w.spectra, {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)}));
}

TEST_CASE("grid sampling stays inside the polygon") {
  const PolygonSpace tri = triangle();
  const auto pts = grid_samples(tri, 8);
  CHECK(pts.size() == 45);  // triangular numbers: (n+1)(n+2)/2 for n=8
  for (const auto& p : pts) CHECK(contains(tri, p));
}
