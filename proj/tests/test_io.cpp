#include "doctest.h"
#include "fixtures.hpp"
#include "knotred/canonical.hpp"
#include "knotred/diagram_io.hpp"
#include "knotred/gadgets.hpp"

using namespace knotred;

TEST_SUITE("io") {
  TEST_CASE("json round trip keeps the diagram and geometry") {
    const Diagram d = hopf_row(2, band_height(2)).diagram;
    const std::string text = export_json(d);
    const Diagram back = import_json(text);
    CHECK(export_json(back) == text);
    CHECK(canonicalize(back) == canonicalize(d));
    REQUIRE(back.geometry.size() == d.geometry.size());
    CHECK(back.geometry[1].points == d.geometry[1].points);
    CHECK(back.geometry[1].levels == d.geometry[1].levels);
    CHECK(back.components[2].label == d.components[2].label);
  }

  TEST_CASE("json without geometry") {
    const Diagram d = fixtures::trefoil(-1);
    const Diagram back = import_json(export_json(d));
    CHECK(back.geometry.empty());
    CHECK(canonicalize(back) == canonicalize(d));
    CHECK(back.crossings[0].sign == -1);
  }

  TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(import_json("{"), DiagramError);
    CHECK_THROWS_AS(import_json("{\"format\": \"something-else\"}"), DiagramError);
    auto j = diagram_to_json(fixtures::hopf());
    j["crossings"][0]["slots"][0]["arc"] = 99;
    CHECK_THROWS_AS(diagram_from_json(j), DiagramError);
    auto k = diagram_to_json(fixtures::hopf());
    k["crossings"][1]["sign"] = 0;
    CHECK_THROWS_AS(diagram_from_json(k), DiagramError);
  }

  TEST_CASE("planar diagram code") {
    const std::string pd = export_pd(fixtures::hopf());
    CHECK(std::count(pd.begin(), pd.end(), 'X') == 2);
    CHECK(pd.find("X(") == 0);
    CHECK(export_pd(fixtures::circles(2)) == "Loop(1)\nLoop(2)\n");
  }

  TEST_CASE("gauss code") {
    const std::string g = export_gauss(fixtures::trefoil());
    CHECK(std::count(g.begin(), g.end(), '\n') == 1);
    CHECK(g.find("O1+") != std::string::npos);
    CHECK(g.find("U1+") != std::string::npos);
    const std::string neg = export_gauss(fixtures::hopf(-1));
    CHECK(std::count(neg.begin(), neg.end(), '\n') == 2);
    CHECK(neg.find('-') != std::string::npos);
  }
}
