#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "latdim/constructions.hpp"
#include "latdim/covers.hpp"
#include "latdim/dimensions.hpp"
#include "latdim/serialize.hpp"

using namespace latdim;

namespace {

std::vector<std::vector<std::string>> cover_labels(const Lattice& l) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : minimal_covers(l)) out.push_back(c.labels());
    for (auto& v : out) std::sort(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("linear sum") {
    auto point = build_lattice({"0"}, {}, "pt");
    auto s = linear_sum(point, helpers::diamond());
    CHECK(s.n() == 5);
    CHECK(s.name() == "pt(+)diamond");
    CHECK(s.label(s.bottom()) == "L:0");
    CHECK(s.label(s.top()) == "R:1");
    auto expected = build_lattice({"b", "0", "x1", "x2", "1"},
                                  {{"b", "0"}, {"0", "x1"}, {"0", "x2"}, {"x1", "1"}, {"x2", "1"}});
    CHECK(is_isomorphic(s, expected).has_value());

    // stacking the 2-chain under the diamond raises the value, the other
    // order does not
    CHECK(ind_large(linear_sum(helpers::diamond(), helpers::chain(2))) == 0);
    CHECK(ind_large(linear_sum(helpers::chain(2), helpers::diamond())) == 1);
}

TEST_CASE("cartesian product") {
    auto point = build_lattice({"0"}, {}, "pt");
    for (const auto& l : {helpers::diamond(), helpers::pentagon(), helpers::chain(4)}) {
        auto p = cartesian_product(l, point);
        CHECK(p.n() == l.n());
        CHECK(is_isomorphic(p, l).has_value());
    }
    auto p = cartesian_product(helpers::diamond(), helpers::chain(2));
    CHECK(p.n() == 8);
    CHECK(p.name() == "diamond(x)chain2");
    CHECK(p.label(p.bottom()) == "(0,c0)");
    CHECK(p.label(p.top()) == "(1,c1)");
    CHECK(p.meet(p.index("(x1,c1)"), p.index("(x2,c1)")) == p.index("(0,c1)"));
    CHECK(p.join(p.index("(x1,c0)"), p.index("(x2,c1)")) == p.index("(1,c1)"));

    CHECK(ind_large(cartesian_product(helpers::kite(), helpers::chain(2))) == 1);
    CHECK(ind_large(cartesian_product(helpers::chain(2), helpers::diamond())) == 0);
}

TEST_CASE("lex product") {
    auto l = lex_product(helpers::chain(2), helpers::diamond());
    CHECK(l.n() == 8);
    CHECK(l.name() == "chain2(lex)diamond");
    CHECK(l.label(l.bottom()) == "(c0,0)");
    CHECK(l.label(l.top()) == "(c1,1)");
    // everything in the lower slice sits below everything in the upper slice
    CHECK(l.leq(l.index("(c0,1)"), l.index("(c1,0)")));
    // incomparable first coordinates meet through the second factor's top
    auto m = lex_product(helpers::diamond(), helpers::chain(2));
    CHECK(m.meet(m.index("(x1,c0)"), m.index("(x2,c1)")) == m.index("(0,c1)"));
    CHECK(m.join(m.index("(x1,c0)"), m.index("(x2,c1)")) == m.index("(1,c0)"));

    CHECK(ind_large(lex_product(helpers::chain(2), helpers::diamond())) == 1);
    CHECK(ind_large(lex_product(helpers::diamond(), helpers::chain(2))) == 0);
    auto k = lex_product(helpers::kite(), helpers::chain(2));
    CHECK(k.n() == 10);
    CHECK(ind_large(k) == 0);
}

TEST_CASE("rect product") {
    auto r = rect_product(helpers::chain(3), helpers::chain(3));
    CHECK(r.n() == 5);
    CHECK(r.name() == "chain3(box)chain3");
    CHECK(is_isomorphic(r, helpers::kite()).has_value());
    CHECK(ind_large(r) == 1);
    // nonzero meets that collapse land on the single bottom
    CHECK(r.meet(r.index("(c1,c2)"), r.index("(c2,c1)")) == r.index("(c1,c1)"));
    CHECK(r.label(r.bottom()) == "(c0,c0)");

    auto f = rect_product(helpers::kite(), helpers::diamond());
    CHECK(f.n() == 13);
    CHECK(ind_large(f) == 0);

    CHECK(is_isomorphic(rect_product(helpers::chain(2), helpers::diamond()), helpers::diamond()).has_value());
    CHECK(is_isomorphic(rect_product(helpers::kite(), helpers::chain(2)), helpers::kite()).has_value());
}

TEST_CASE("add top") {
    auto point = build_lattice({"0"}, {}, "pt");
    auto two = add_top(point);
    CHECK(two.n() == 2);
    CHECK(two.label(two.top()) == "#top");
    CHECK(ind_large(two) == 0);
    CHECK(two.name() == "pt(+top)");

    auto k = add_top(helpers::kite());
    CHECK(ind_large(k) == 0);
    CHECK(height(k) == height(helpers::kite()) + 1);

    for (const auto& l : {helpers::diamond(), helpers::pentagon(), helpers::m3(), helpers::chain(4)})
        CHECK(ind_large(add_top(l)) == 0);

    auto clash = build_lattice({"0", "#top"}, {{"0", "#top"}});
    auto c = add_top(clash);
    CHECK(c.label(c.top()) == "#top1");
}

TEST_CASE("stage family") {
    CHECK_THROWS_AS((void)ind_k_family(0), InvalidK);
    CHECK_THROWS_AS((void)ind_k_family(-3), InvalidK);

    auto f1 = ind_k_family(1);
    CHECK(f1.n() == 5);
    CHECK(f1.labels() == std::vector<std::string>{"0", "y1", "y2", "y3", "1"});
    CHECK(is_isomorphic(f1, helpers::kite()).has_value());

    for (int k = 1; k <= 3; ++k) {
        auto f = ind_k_family(k);
        CAPTURE(k);
        CHECK(f.n() == 3 * k + 2);
        CHECK(ind_large(f) == k);
        CHECK(ind_small(f) == k);
        for (int x = 0; x < f.n(); ++x)
            if (x != f.bottom()) CHECK(f.pseudostar(x) == f.bottom());
    }

    auto f2 = ind_k_family(2);
    CHECK(f2.label(f2.bottom()) == "#02");
    CHECK(f2.label(f2.top()) == "1");
    // the coatom touches the old lattice only through the top
    int y = f2.index("#y2");
    for (int x = 0; x < f2.n(); ++x) {
        bool inside = f2.label(x)[0] == '#';
        if (!inside && x != f2.top()) {
            CHECK_FALSE(f2.leq(x, y));
            CHECK_FALSE(f2.leq(y, x));
        }
    }
}

TEST_CASE("graft host") {
    auto b = graft_base();
    CHECK(b.n() == 12);
    CHECK(ind_small(b) == 0);
    CHECK(ind_large(b) == 1);
    CHECK(cover_labels(b) == std::vector<std::vector<std::string>>{
                                 {"x2", "x3", "x7"}, {"x2", "x8"}, {"x3", "x8"}, {"x7", "x8"}});
}

TEST_CASE("graft") {
    CHECK_THROWS_AS((void)graft_m(1), InvalidK);
    CHECK_THROWS_AS((void)graft_m(0), InvalidK);

    auto g2 = graft_m(2);
    CHECK(g2.n() == 15);
    CHECK(g2.name() == "graftm(2)");
    CHECK(ind_small(g2) == 1);
    CHECK(ind_large(g2) == 2);
    // the host's minimal covers survive and the stage contributes one more
    CHECK(cover_labels(g2) == std::vector<std::vector<std::string>>{{"N:y2", "N:y3"},
                                                                    {"x2", "x3", "x7"},
                                                                    {"x2", "x8"},
                                                                    {"x3", "x8"},
                                                                    {"x7", "x8"}});

    auto g3 = graft_m(3);
    CHECK(g3.n() == 18);
    CHECK(ind_small(g3) == 2);
    CHECK(ind_large(g3) == 3);
}

TEST_CASE("constructed lattices round trip through json") {
    for (const auto& l : {linear_sum(helpers::diamond(), helpers::chain(2)),
                          cartesian_product(helpers::diamond(), helpers::chain(2)),
                          lex_product(helpers::chain(2), helpers::diamond()),
                          rect_product(helpers::chain(3), helpers::chain(3)), add_top(helpers::kite()),
                          ind_k_family(2), graft_m(2)}) {
        auto back = lattice_from_json(to_json(l));
        CHECK(back.n() == l.n());
        CHECK(back.labels() == l.labels());
        CHECK(back.hasse() == l.hasse());
        CHECK(back.name() == l.name());
    }
}
