#include <stdexcept>

#include "doctest.h"
#include "ejq/harness.hpp"
#include "ejq/io.hpp"
#include "ejq/rotations.hpp"

using namespace ejq;

TEST_CASE("format_real: 12 significant digits") {
  CHECK(io::format_real(0.0) == "0.000000000000");
  CHECK(io::format_real(std::log(2.0)) == "0.693147180560");
  CHECK(io::format_real(std::log(3.0)) == "1.09861228867");
  CHECK(io::format_real(-1.5) == "-1.50000000000");
  CHECK(io::format_real(123456.0) == "123456.000000");
  CHECK(io::format_real(1e-9) == "1.00000000000e-09");
  CHECK(io::format_value(DivergenceValue::inf()) == "inf");
  CHECK(io::format_value(DivergenceValue::finite(0.5)) == "0.500000000000");
}

TEST_CASE("element json round trips") {
  std::mt19937_64 rng(601);
  const AlgebraDescriptor algs[] = {
      AlgebraDescriptor::spin(4),          AlgebraDescriptor::herm(Ring::R, 2),
      AlgebraDescriptor::herm(Ring::C, 3), AlgebraDescriptor::herm(Ring::H, 2),
      AlgebraDescriptor::albert(),
  };
  for (const auto& alg : algs) {
    const Element e = random_hermitian(alg, rng);
    const Element back = io::element_from_json_text(io::element_to_json_text(e));
    CHECK(back.algebra() == alg);
    CHECK(dist(back, e) < 1e-15);
  }
}

TEST_CASE("spin document from the wire format") {
  const Element e = io::element_from_json_text(
      R"({"algebra":{"kind":"spin","d":3},"data":{"s":0.5,"v":[0.5,0,0]}})");
  CHECK(e.algebra().spin_d == 3);
  CHECK(e.spin_s() == doctest::Approx(0.5));
  CHECK(e.spin_v()[0] == doctest::Approx(0.5));
}

TEST_CASE("herm identity document") {
  const Element e = io::element_from_json_text(
      R"({"algebra":{"kind":"herm","base":"C","n":2},
          "data":[[[1,0],[0,0]],[[0,0],[1,0]]]})");
  CHECK(dist(e, Element::unit(AlgebraDescriptor::herm(Ring::C, 2))) < 1e-15);
}

TEST_CASE("parse errors name the missing field") {
  CHECK_THROWS_WITH_AS(io::element_from_json_text(R"({"algebra":{"kind":"spin","d":3}})"),
                       doctest::Contains("data"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(io::element_from_json_text(R"({"data":{"s":1,"v":[]}})"),
                       doctest::Contains("algebra"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      io::element_from_json_text(R"({"algebra":{"kind":"spin","d":2},"data":{"s":1}})"),
      doctest::Contains("v"), std::invalid_argument);
  CHECK_THROWS_AS(io::element_from_json_text("not json"), std::invalid_argument);
  // symmetry violation passes the schema but fails validation
  CHECK_THROWS_AS(io::element_from_json_text(
                      R"({"algebra":{"kind":"herm","base":"C","n":2},
                          "data":[[[1,0],[0,1]],[[0,1],[1,0]]]})"),
                  std::invalid_argument);
}

TEST_CASE("state list and polygon files") {
  const io::StateList list = io::states_from_json_text(
      R"({"algebra":{"kind":"spin","d":3},
          "states":[{"s":0.5,"v":[0.5,0,0]},{"s":0.5,"v":[-0.5,0,0]}]})");
  CHECK(list.states.size() == 2);
  CHECK(trace(list.states[0].element()) == doctest::Approx(1.0));

  const poly::PolygonSpace sq = io::polygon_from_json_text(
      R"({"vertices":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.vertices[2].x == poly::Rat(1));
  CHECK_THROWS_AS(io::polygon_from_json_text(R"({"vertices":[["0","0"]]})"), std::invalid_argument);
}

TEST_CASE("report rendering") {
  io::Report rep;
  rep.title = "demo";
  rep.metadata = {{"key", "value"}};
  rep.columns = {"a", "b"};
  rep.rows = {{"1", "x,y"}, {"22", "z"}};
  const std::string table = rep.render(io::ReportFormat::Table);
  CHECK(table.find("demo\n") == 0);
  CHECK(table.find("key: value") != std::string::npos);
  const std::string csv = rep.render(io::ReportFormat::Csv);
  CHECK(csv.find("\r\n") != std::string::npos);
  CHECK(csv.find("\"x,y\"") != std::string::npos);  // RFC 4180 quoting
  const std::string json = rep.render(io::ReportFormat::Json);
  CHECK(json.find("\"rows\"") != std::string::npos);
}

TEST_CASE("algebra names round trip") {
  for (const auto& alg : harness::standard_algebras())
    CHECK(harness::algebra_from_name(alg.name()) == alg);
  CHECK_THROWS_AS(harness::algebra_from_name("octonion soup"), std::invalid_argument);
}
