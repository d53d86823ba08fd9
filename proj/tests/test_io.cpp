#include "doctest.h"

#include <nlohmann/json.hpp>

#include "dgeo/geometry.hpp"
#include "dgeo/io.hpp"

using namespace dgeo;
using nlohmann::json;

TEST_CASE("graph json round trip") {
    auto g = icosahedron();
    auto j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);
    // canonical: serializing twice is byte-identical
    CHECK(graph_to_json(graph_from_json(j)).dump() == j.dump());
}

TEST_CASE("graph json rejects bad input") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")), input_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,5]]})")), input_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")), input_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0]]})")), input_error);
}

TEST_CASE("rational parsing") {
    CHECK(rational_from_json(json(5)) == Rational(5));
    CHECK(rational_from_json(json("2/3")) == Rational(2, 3));
    CHECK(rational_from_json(json("-7")) == Rational(-7));
    CHECK(Rational(1, 6).str() == "1/6");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_THROWS_AS(rational_from_json(json("x/y")), input_error);
    CHECK_THROWS_AS(rational_from_json(json(1.5)), input_error);
}

TEST_CASE("function files") {
    auto j = json::parse(R"({"0": 3, "1": "1/2", "2": -1})");
    auto f = function_from_json(j, 3);
    CHECK(f(1) == Rational(1, 2));
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"0": 1})"), 2), input_error);
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"0": 1, "1": 1})"), 2), input_error);
    CHECK_THROWS_AS(function_from_json(json::parse(R"({"0": 1, "5": 2})"), 2), input_error);
}

TEST_CASE("dot export") {
    auto dot = graph_to_dot(cyclic_graph(3));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}

TEST_CASE("hypersurface export marks centers square") {
    auto k4 = complete_graph(4);
    SignPartition p;
    p.sign = {1, 1, -1, -1};
    auto b = complete_hypersurface(hypersurface_graph(k4, p));
    auto j = hypersurface_to_json(b);
    CHECK(j["provenance"].size() == 5);
    CHECK(j["provenance"].back()["type"] == "center");
    auto dot = hypersurface_to_dot(b);
    CHECK(dot.find("shape=square") != std::string::npos);
    CHECK(dot.find("shape=circle") != std::string::npos);
}
