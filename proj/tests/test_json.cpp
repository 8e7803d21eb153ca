#include <doctest.h>

#include "tetsym/json_io.hpp"

using namespace tetsym;

TEST_CASE("each input schema parses") {
    ParsedInput v = parse_input(json::parse(
        R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]})"));
    REQUIRE(v.vertices.has_value());
    CHECK((*v.vertices)[3].z == 1.0);

    ParsedInput e = parse_input(json::parse(
        R"({"edges": {"e01":1,"e02":1,"e03":1,"e12":1,"e13":1,"e23":1}})"));
    REQUIRE(e.edges.has_value());
    CHECK(e.edges->e23 == 1.0);

    ParsedInput r = parse_input(json::parse(R"({"reversible": {"a":3,"b":4,"c":4,"d":3}})"));
    REQUIRE(r.reversible.has_value());
    CHECK(r.reversible->d == 3.0);

    Tetrahedron t({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    json fj = facet_data_to_json(facet_data(t));
    ParsedInput f = parse_input(fj);
    REQUIRE(f.facets.has_value());
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_input(json::parse("[]")), Error);
    CHECK_THROWS_AS(parse_input(json::parse("{}")), Error);
    CHECK_THROWS_AS(parse_input(json::parse(R"({"vertices": [[0,0,0]]})")), Error);
    CHECK_THROWS_AS(parse_input(json::parse(R"({"edges": {"e01":1}})")), Error);
    CHECK_THROWS_AS(
        parse_input(json::parse(
            R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]], "edges": {}})")),
        Error);
    CHECK_THROWS_AS(parse_input(json::parse(R"({"reversible": {"a":-1,"b":1,"c":1,"d":1}})")),
                    Error);
}

TEST_CASE("emitted vertices re-parse to the same double values") {
    Tetrahedron t({0.1, 0.2, 0.3}, {1.07, -2.5, 0.875}, {-0.31, 4.25, 1e-3},
                  {2.0 / 3.0, 1.0 / 7.0, -9.99});
    json out = vertices_to_json(t);
    ParsedInput back = parse_input(json::parse(out.dump()));
    REQUIRE(back.vertices.has_value());
    for (int i = 0; i < 4; ++i) {
        CHECK((*back.vertices)[i].x == t.v(i).x);
        CHECK((*back.vertices)[i].y == t.v(i).y);
        CHECK((*back.vertices)[i].z == t.v(i).z);
    }
}

TEST_CASE("facet data round-trips losslessly") {
    Tetrahedron t({0, 0, 0}, {2.5, 0.1, 0}, {0.3, 1.9, 0.2}, {0.1, 0.4, 3.3});
    FacetData d = facet_data(t);
    ParsedInput back = parse_input(json::parse(facet_data_to_json(d).dump()));
    REQUIRE(back.facets.has_value());
    for (int i = 0; i < 4; ++i) {
        CHECK((*back.facets)[i].area == d[i].area);
        CHECK((*back.facets)[i].normal.x == d[i].normal.x);
    }
}

TEST_CASE("classification serializes with verdict and pairings") {
    Tetrahedron t({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    json j = classification_to_json(classify(t));
    CHECK(j["verdict"] == "generic");
    CHECK(j["pairings"].size() == 3);
}
