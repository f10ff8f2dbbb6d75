#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latdim/bits.hpp"
#include "latdim/dimensions.hpp"
#include "latdim/errors.hpp"
#include "latdim/lattice.hpp"

namespace latdim {

namespace detail {

// Every construction assembles the full order relation, derives the covers
// here, and goes through build_lattice so the result is revalidated from
// scratch. up[x] holds every y with x <= y, including x itself.
inline Lattice lattice_from_order(const std::vector<std::string>& labels, const std::vector<Bits>& up,
                                  const std::string& name) {
    const std::size_t n = labels.size();
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t x = 0; x < n; ++x) {
        for (auto y : up[x].indices()) {
            if (y == x) continue;
            bool direct = true;
            for (auto z : up[x].indices()) {
                if (z == x || z == y || !up[z].test(y)) continue;
                direct = false;
                break;
            }
            if (direct) covers.emplace_back(labels[x], labels[y]);
        }
    }
    return build_lattice(labels, covers, name);
}

inline std::string pair_label(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

} // namespace detail

// disjoint stack: every left element below every right element
inline Lattice linear_sum(const Lattice& a, const Lattice& b) {
    const int na = a.n(), nb = b.n();
    const std::size_t n = static_cast<std::size_t>(na + nb);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < na; ++i) labels.push_back("L:" + a.label(i));
    for (int j = 0; j < nb; ++j) labels.push_back("R:" + b.label(j));
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j)
            if (a.leq(i, j)) up[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
        for (int j = 0; j < nb; ++j) up[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(na + j));
    }
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            if (b.leq(i, j)) up[static_cast<std::size_t>(na + i)].set(static_cast<std::size_t>(na + j));
    return detail::lattice_from_order(labels, up, a.name() + "(+)" + b.name());
}

inline Lattice cartesian_product(const Lattice& a, const Lattice& b) {
    const int na = a.n(), nb = b.n();
    const std::size_t n = static_cast<std::size_t>(na) * static_cast<std::size_t>(nb);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) labels.push_back(detail::pair_label(a.label(i), b.label(j)));
    std::vector<Bits> up(n, Bits(n));
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1) {
            auto& row = up[static_cast<std::size_t>(i1 * nb + j1)];
            for (int i2 = 0; i2 < na; ++i2) {
                if (!a.leq(i1, i2)) continue;
                for (int j2 = 0; j2 < nb; ++j2)
                    if (b.leq(j1, j2)) row.set(static_cast<std::size_t>(i2 * nb + j2));
            }
        }
    return detail::lattice_from_order(labels, up, a.name() + "(x)" + b.name());
}

// first coordinate decides, ties fall through to the second
inline Lattice lex_product(const Lattice& a, const Lattice& b) {
    const int na = a.n(), nb = b.n();
    const std::size_t n = static_cast<std::size_t>(na) * static_cast<std::size_t>(nb);
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) labels.push_back(detail::pair_label(a.label(i), b.label(j)));
    std::vector<Bits> up(n, Bits(n));
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1) {
            auto& row = up[static_cast<std::size_t>(i1 * nb + j1)];
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2) {
                    bool le = (i1 != i2 && a.leq(i1, i2)) || (i1 == i2 && b.leq(j1, j2));
                    if (le) row.set(static_cast<std::size_t>(i2 * nb + j2));
                }
        }
    auto l = detail::lattice_from_order(labels, up, a.name() + "(lex)" + b.name());
    // the order-derived meet and join must agree with the case formulas;
    // a mismatch would mean the order itself is wrong, so surface it
    auto at = [&](int i, int j) { return i * nb + j; };
    for (int p = 0; p < static_cast<int>(n); ++p)
        for (int q = 0; q < static_cast<int>(n); ++q) {
            int i1 = p / nb, j1 = p % nb, i2 = q / nb, j2 = q % nb;
            int em, ej;
            if (i1 != i2 && a.leq(i1, i2)) {
                em = p;
                ej = q;
            } else if (i1 != i2 && a.leq(i2, i1)) {
                em = q;
                ej = p;
            } else if (i1 == i2) {
                em = at(i1, b.meet(j1, j2));
                ej = at(i1, b.join(j1, j2));
            } else {
                em = at(a.meet(i1, i2), b.top());
                ej = at(a.join(i1, i2), b.bottom());
            }
            if (l.meet(p, q) != em || l.join(p, q) != ej)
                throw NotALattice("lex product: order-derived meet/join disagrees with the case formulas at " +
                                  labels[static_cast<std::size_t>(p)] + ", " + labels[static_cast<std::size_t>(q)]);
        }
    return l;
}

// nonzero pairs plus a single bottom; joins stay componentwise, meets
// collapse to the bottom when either coordinate meet hits zero
inline Lattice rect_product(const Lattice& a, const Lattice& b) {
    const int na = a.n(), nb = b.n();
    std::vector<int> ca, cb;        // component indices per carrier element
    std::vector<std::vector<int>> cid(static_cast<std::size_t>(na), std::vector<int>(static_cast<std::size_t>(nb), -1));
    std::vector<std::string> labels;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            bool keep = (i != a.bottom() && j != b.bottom()) || (i == a.bottom() && j == b.bottom());
            if (!keep) continue;
            cid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(labels.size());
            ca.push_back(i);
            cb.push_back(j);
            labels.push_back(detail::pair_label(a.label(i), b.label(j)));
        }
    const std::size_t n = labels.size();
    const int bot = cid[static_cast<std::size_t>(a.bottom())][static_cast<std::size_t>(b.bottom())];
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            bool le;
            if (static_cast<int>(p) == bot)
                le = true;
            else if (static_cast<int>(q) == bot)
                le = p == q;
            else
                le = a.leq(ca[p], ca[q]) && b.leq(cb[p], cb[q]);
            if (le) up[p].set(q);
        }
    auto l = detail::lattice_from_order(labels, up, a.name() + "(box)" + b.name());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (static_cast<int>(p) == bot || static_cast<int>(q) == bot) continue;
            int ma = a.meet(ca[p], ca[q]), mb = b.meet(cb[p], cb[q]);
            int em = (ma == a.bottom() || mb == b.bottom()) ? bot : cid[static_cast<std::size_t>(ma)][static_cast<std::size_t>(mb)];
            int ej = cid[static_cast<std::size_t>(a.join(ca[p], ca[q]))][static_cast<std::size_t>(b.join(cb[p], cb[q]))];
            if (l.meet(static_cast<int>(p), static_cast<int>(q)) != em ||
                l.join(static_cast<int>(p), static_cast<int>(q)) != ej)
                throw std::logic_error("rect product: meet/join disagrees with the componentwise formulas");
        }
    // pseudostars of nonzero pairs split into four cases by which component
    // pseudostars vanish; check every element against that table
    for (std::size_t p = 0; p < n; ++p) {
        if (static_cast<int>(p) == bot) continue;
        int sa = a.pseudostar(ca[p]), sb = b.pseudostar(cb[p]);
        int expected;
        if (sa == a.bottom() && sb == b.bottom())
            expected = bot;
        else if (sa != a.bottom() && sb != b.bottom())
            expected = cid[static_cast<std::size_t>(a.top())][static_cast<std::size_t>(b.top())];
        else if (sa == a.bottom())
            expected = cid[static_cast<std::size_t>(a.top())][static_cast<std::size_t>(sb)];
        else
            expected = cid[static_cast<std::size_t>(sa)][static_cast<std::size_t>(b.top())];
        if (l.pseudostar(static_cast<int>(p)) != expected)
            throw std::logic_error("rect product: pseudostar disagrees with the four-case table");
    }
    return l;
}

// the ambient order restricted to the members; goes through build_lattice,
// so a member set that fails to be a bounded lattice under that order throws
inline Lattice induced_sublattice(const Lattice& l, const ElementSet& s, const std::string& name = "") {
    s.require_owner(l, "induced_sublattice");
    auto idx = s.members().indices();
    const std::size_t n = idx.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto i : idx) labels.push_back(l.label(static_cast<int>(i)));
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (l.leq(static_cast<int>(idx[p]), static_cast<int>(idx[q]))) up[p].set(q);
    return detail::lattice_from_order(labels, up, name.empty() ? l.name() + "[sub]" : name);
}

inline Lattice add_top(const Lattice& l) {
    std::string fresh = "#top";
    auto taken = [&](const std::string& t) {
        for (int i = 0; i < l.n(); ++i)
            if (l.label(i) == t) return true;
        return false;
    };
    for (int s = 1; taken(fresh); ++s) fresh = "#top" + std::to_string(s);
    std::vector<std::string> labels = l.labels();
    labels.push_back(fresh);
    const std::size_t n = labels.size();
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < l.n(); ++i) {
        for (int j = 0; j < l.n(); ++j)
            if (l.leq(i, j)) up[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
        up[static_cast<std::size_t>(i)].set(n - 1);
    }
    up[n - 1].set(n - 1);
    return detail::lattice_from_order(labels, up, l.name() + "(+top)");
}

// Stage 1 is the kite; each later stage wraps the previous lattice with a
// fresh bottom, a hub z below every nonzero element, and a coatom y that
// only a top-join connects back. Every nonzero element of the result sits
// above z, which keeps all nonzero pseudostars at the bottom.
inline Lattice ind_k_family(int k) {
    if (k < 1) throw InvalidK("ind_k_family requires k >= 1");
    std::vector<std::string> labels = {"0", "y1", "y2", "y3", "1"};
    std::vector<std::vector<char>> leq(5, std::vector<char>(5, 0));
    auto setle = [&](int i, int j) { leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1; };
    for (int i = 0; i < 5; ++i) setle(i, i);
    for (int i = 1; i < 5; ++i) setle(0, i);
    setle(1, 2);
    setle(1, 3);
    for (int i = 1; i < 4; ++i) setle(i, 4);
    const int top = 4;
    for (int s = 2; s <= k; ++s) {
        const int n0 = static_cast<int>(labels.size());
        labels.push_back("#0" + std::to_string(s));
        labels.push_back("#z" + std::to_string(s));
        labels.push_back("#y" + std::to_string(s));
        const int nb = n0, z = n0 + 1, y = n0 + 2;
        for (auto& row : leq) row.resize(static_cast<std::size_t>(n0) + 3, 0);
        leq.resize(static_cast<std::size_t>(n0) + 3,
                   std::vector<char>(static_cast<std::size_t>(n0) + 3, 0));
        for (int j = 0; j < n0 + 3; ++j) setle(nb, j);
        for (int j = 0; j < n0; ++j) setle(z, j);
        setle(z, z);
        setle(z, y);
        setle(y, y);
        setle(y, top);
    }
    const std::size_t n = labels.size();
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq[i][j]) up[i].set(j);
    auto l = detail::lattice_from_order(labels, up, "indk(" + std::to_string(k) + ")");
    for (int x = 0; x < l.n(); ++x)
        if (x != l.bottom() && l.pseudostar(x) != l.bottom())
            throw std::logic_error("ind_k_family: a nonzero element has a nonzero pseudostar");
    if (ind_large(l) != k) throw std::logic_error("ind_k_family: construction missed the target value");
    return l;
}

namespace detail {

// the 12-element host lattice the grafting construction modifies
inline const std::vector<std::string>& graft_base_labels() {
    static const std::vector<std::string> v = {"0", "x1", "x2", "x3", "x4", "x5",
                                               "x6", "x7", "x8", "x9", "x10", "1"};
    return v;
}

inline const std::vector<std::pair<std::string, std::string>>& graft_base_edges() {
    static const std::vector<std::pair<std::string, std::string>> v = {
        {"0", "x1"},  {"0", "x2"},  {"0", "x3"},  {"x1", "x4"}, {"x1", "x5"},
        {"x1", "x7"}, {"x1", "x8"}, {"x2", "x4"}, {"x3", "x5"}, {"x4", "x6"},
        {"x4", "x9"}, {"x5", "x6"}, {"x5", "x10"}, {"x7", "x9"}, {"x7", "x10"},
        {"x6", "1"},  {"x8", "1"},  {"x9", "1"},  {"x10", "1"}};
    return v;
}

} // namespace detail

inline Lattice graft_base() {
    return build_lattice(detail::graft_base_labels(), detail::graft_base_edges(), "graftbase");
}

// Replace the host's x6-to-top edge with a full stage lattice: its bottom
// lands on x6, its top on the host top, and its interior hangs strictly
// between them, comparable outside only to elements below x6 and to the top.
inline Lattice graft_m(int k) {
    if (k < 2) throw InvalidK("graft_m requires k >= 2");
    Lattice base = graft_base();
    Lattice stage = ind_k_family(k - 1);
    const int nb = base.n();
    const int ix6 = base.index("x6");
    std::vector<int> comb(static_cast<std::size_t>(stage.n()), -1);
    comb[static_cast<std::size_t>(stage.bottom())] = ix6;
    comb[static_cast<std::size_t>(stage.top())] = base.top();
    std::vector<std::string> labels = base.labels();
    std::vector<int> interior;
    for (int m = 0; m < stage.n(); ++m) {
        if (m == stage.bottom() || m == stage.top()) continue;
        comb[static_cast<std::size_t>(m)] = static_cast<int>(labels.size());
        labels.push_back("N:" + stage.label(m));
        interior.push_back(m);
    }
    const std::size_t n = labels.size();
    std::vector<Bits> up(n, Bits(n));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            if (base.leq(i, j)) up[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    for (int m : interior) {
        const std::size_t cm = static_cast<std::size_t>(comb[static_cast<std::size_t>(m)]);
        for (int i = 0; i < nb; ++i)
            if (base.leq(i, ix6)) up[static_cast<std::size_t>(i)].set(cm);
        up[cm].set(cm);
        up[cm].set(static_cast<std::size_t>(base.top()));
        for (int m2 : interior)
            if (stage.leq(m, m2)) up[cm].set(static_cast<std::size_t>(comb[static_cast<std::size_t>(m2)]));
    }
    return detail::lattice_from_order(labels, up, "graftm(" + std::to_string(k) + ")");
}

} // namespace latdim
