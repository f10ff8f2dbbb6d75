#include <doctest.h>

#include "helpers.hpp"
#include "latdim/serialize.hpp"

using namespace latdim;

TEST_CASE("json round trip") {
    auto l = helpers::pentagon();
    auto j = to_json(l);
    auto l2 = lattice_from_json(j);
    CHECK(l2.labels() == l.labels());
    CHECK(l2.hasse() == l.hasse());
    CHECK(l2.name() == l.name());
    CHECK(dump_json(to_json(l2)) == dump_json(j));
}

TEST_CASE("json rejects malformed input") {
    CHECK_THROWS_AS(lattice_from_string("[]"), NotALattice);
    CHECK_THROWS_AS(lattice_from_string(R"({"elements": ["a"], "covers": [["a"]]})"), NotALattice);
    CHECK_THROWS_AS(lattice_from_string(R"({"elements": [1], "covers": []})"), NotALattice);
    CHECK_THROWS_AS(lattice_from_string(R"({"elements": ["a", "b"], "covers": []})"), NotBounded);
}

TEST_CASE("cover order in files is normalized") {
    auto a = build_lattice({"0", "x", "1"}, {{"x", "1"}, {"0", "x"}}, "t");
    auto b = build_lattice({"0", "x", "1"}, {{"0", "x"}, {"x", "1"}}, "t");
    CHECK(dump_json(to_json(a)) == dump_json(to_json(b)));
}

TEST_CASE("dot output") {
    auto l = helpers::diamond();
    auto dot = to_dot(l);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    // one node line per element, one edge line per cover
    std::size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find("label=", pos)) != std::string::npos) { ++nodes; pos += 6; }
    pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) { ++edges; pos += 4; }
    CHECK(nodes == static_cast<std::size_t>(l.n()));
    CHECK(edges == l.hasse().size());
}
