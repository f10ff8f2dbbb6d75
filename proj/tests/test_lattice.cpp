#include <doctest.h>

#include "helpers.hpp"
#include "latdim/lattice.hpp"

using namespace latdim;

TEST_CASE("diamond basics") {
    auto l = helpers::diamond();
    CHECK(l.n() == 4);
    CHECK(l.label(l.bottom()) == "0");
    CHECK(l.label(l.top()) == "1");
    int x1 = l.index("x1"), x2 = l.index("x2");
    CHECK(l.meet(x1, x2) == l.bottom());
    CHECK(l.join(x1, x2) == l.top());
    CHECK(l.leq(l.bottom(), x1));
    CHECK_FALSE(l.leq(x1, x2));
    // complement pair: each is the other's pseudostar, and truly meets at 0
    CHECK(l.pseudostar(x1) == x2);
    CHECK(l.is_true_pseudocomplement(x1));
    CHECK(l.pseudostar(l.bottom()) == l.top());
    CHECK(l.pseudostar(l.top()) == l.bottom());
}

TEST_CASE("pentagon pseudostars") {
    auto l = helpers::pentagon();
    int a = l.index("a"), b = l.index("b"), c = l.index("c");
    CHECK(l.pseudostar(a) == b);
    CHECK(l.pseudostar(c) == b);
    // b's zero-meet set is {0, a, c}; its join is c, which does not meet b at 0
    CHECK(l.pseudostar(b) == c);
    CHECK(l.is_true_pseudocomplement(a));
    CHECK(l.is_true_pseudocomplement(b));
}

TEST_CASE("pseudostar that is not a pseudocomplement") {
    auto l = helpers::m3();
    int a = l.index("a");
    // zero-meet partners of a are 0, b, c; their join is 1, which meets a at a
    CHECK(l.pseudostar(a) == l.top());
    CHECK_FALSE(l.is_true_pseudocomplement(a));
}

TEST_CASE("one-element lattice") {
    auto l = build_lattice({"x"}, {}, "point");
    CHECK(l.n() == 1);
    CHECK(l.bottom() == l.top());
    CHECK(l.pseudostar(0) == 0);
    CHECK(l.is_true_pseudocomplement(0));
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(build_lattice({"a", "a"}, {}), DuplicateLabel);
    CHECK_THROWS_AS(build_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(build_lattice({"a", "b"}, {{"a", "a"}}), NotALattice);
    CHECK_THROWS_AS(build_lattice({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}), NotBounded);
    CHECK_THROWS_AS(build_lattice({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}), NotBounded);
    CHECK_THROWS_AS(build_lattice({"a", "b"}, {{"a", "b"}, {"a", "b"}}), NotALattice);
    CHECK_THROWS_AS(build_lattice({"a", "b"}, {{"a", "x"}}), NotALattice);
    // redundant pair: a < b < c plus the implied a < c
    CHECK_THROWS_AS(build_lattice({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), NotALattice);
    // hexagon poset where two elements have two maximal common lower bounds
    CHECK_THROWS_AS(build_lattice({"0", "a", "b", "x", "y", "1"},
                                  {{"0", "a"}, {"0", "b"}, {"a", "x"}, {"b", "x"},
                                   {"a", "y"}, {"b", "y"}, {"x", "1"}, {"y", "1"}}),
                    NotALattice);
}

TEST_CASE("meet and join tables agree with the order") {
    auto l = helpers::pentagon();
    for (int i = 0; i < l.n(); ++i) {
        for (int j = 0; j < l.n(); ++j) {
            int m = l.meet(i, j), u = l.join(i, j);
            CHECK(l.leq(m, i));
            CHECK(l.leq(m, j));
            CHECK(l.leq(i, u));
            CHECK(l.leq(j, u));
            for (int z = 0; z < l.n(); ++z) {
                if (l.leq(z, i) && l.leq(z, j)) CHECK(l.leq(z, m));
                if (l.leq(i, z) && l.leq(j, z)) CHECK(l.leq(u, z));
            }
        }
    }
}

TEST_CASE("principal filter keeps structure and maps back") {
    auto l = helpers::pentagon();
    auto pf = principal_filter(l, l.index("a"));
    CHECK(pf.lattice.n() == 3);
    CHECK(pf.base_in_parent == l.index("a"));
    CHECK(pf.lattice.label(pf.lattice.bottom()) == "a");
    CHECK(pf.lattice.label(pf.lattice.top()) == "1");
    for (int i = 0; i < pf.lattice.n(); ++i)
        CHECK(l.label(pf.to_parent[i]) == pf.lattice.label(i));
    auto whole = principal_filter(l, l.bottom());
    CHECK(whole.lattice.n() == l.n());
}

TEST_CASE("down sets") {
    auto l = helpers::pentagon();
    CHECK(is_down_set(l, ElementSet::of_labels(l, {"0", "a", "b"})));
    CHECK(is_down_set(l, ElementSet::of_labels(l, {})));
    CHECK_FALSE(is_down_set(l, ElementSet::of_labels(l, {"a", "b"})));
    auto other = helpers::diamond();
    CHECK_THROWS_AS(is_down_set(other, ElementSet::of_labels(l, {"0"})), InvalidSubset);
}

TEST_CASE("isomorphism search") {
    auto d1 = helpers::diamond();
    auto d2 = build_lattice({"bot", "r", "l", "top"},
                            {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}}, "d2");
    auto m = is_isomorphic(d1, d2);
    REQUIRE(m.has_value());
    // order preserved both ways under the returned map
    for (int i = 0; i < d1.n(); ++i)
        for (int j = 0; j < d1.n(); ++j) CHECK(d1.leq(i, j) == d2.leq((*m)[i], (*m)[j]));
    CHECK_FALSE(is_isomorphic(d1, helpers::chain(4)).has_value());
    CHECK_FALSE(is_isomorphic(helpers::pentagon(), helpers::m3()).has_value());
    CHECK(is_isomorphic(helpers::pentagon(), helpers::pentagon()).has_value());
    CHECK_THROWS_AS(is_isomorphic(helpers::chain(13), helpers::chain(13)), SizeLimit);
    CHECK(is_isomorphic(helpers::chain(13), helpers::chain(13), 13).has_value());
}

TEST_CASE("hasse equals reduction of closure") {
    // rebuilding from the derived order's reduction reproduces the cover list
    auto l = helpers::kite();
    std::vector<std::pair<int, int>> red;
    for (int a = 0; a < l.n(); ++a)
        for (int b = 0; b < l.n(); ++b) {
            if (a == b || !l.leq(a, b)) continue;
            Bits between = l.up_set(a) & l.down_set(b);
            if (between.count() == 2) red.emplace_back(a, b);
        }
    std::sort(red.begin(), red.end());
    CHECK(red == l.hasse());
}
