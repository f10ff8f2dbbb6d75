#pragma once

#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latdim/covers.hpp"
#include "latdim/errors.hpp"
#include "latdim/lattice.hpp"

namespace latdim {

namespace detail {

// For the filter rooted at base: the (a, u) family where u is minimal among
// {y : a v y = top}, with the recursion target (u-pseudostar within the
// filter) v u. Element order keeps the family deterministic.
struct IndTriple {
    int a, u, target;
};

inline std::vector<IndTriple> ind_triples(const Lattice& l, int base) {
    std::vector<IndTriple> out;
    auto mem = l.up_set(base).indices();
    std::vector<int> target(static_cast<std::size_t>(l.n()), -1);
    for (auto u : mem) {
        int s = base;
        for (auto y : mem)
            if (l.meet(static_cast<int>(u), static_cast<int>(y)) == base)
                s = l.join(s, static_cast<int>(y));
        target[u] = l.join(s, static_cast<int>(u));
    }
    std::vector<int> ys;
    for (auto a : mem) {
        ys.clear();
        for (auto y : mem)
            if (l.join(static_cast<int>(a), static_cast<int>(y)) == l.top())
                ys.push_back(static_cast<int>(y));
        for (int u : ys) {
            bool minimal = true;
            for (int y2 : ys)
                if (y2 != u && l.leq(y2, u)) {
                    minimal = false;
                    break;
                }
            if (minimal) out.push_back({static_cast<int>(a), u, target[u]});
        }
    }
    return out;
}

} // namespace detail

// Ind of every principal filter, indexed by the filter's generator. The
// recursion for the filter at x only ever descends into filters at elements
// strictly above x, which makes one memo table over root elements enough.
inline std::vector<int> filter_ind_table(const Lattice& l) {
    const int n = l.n();
    std::vector<int> memo(static_cast<std::size_t>(n), INT_MIN);
    auto compute = [&](auto&& self, int base) -> int {
        int& slot = memo[static_cast<std::size_t>(base)];
        if (slot != INT_MIN) return slot;
        if (l.up_set(base).count() == 1) return slot = -1;
        auto triples = detail::ind_triples(l, base);
        if (triples.empty())
            throw std::logic_error("filter_ind_table: empty (a, u) family on a filter with >= 2 elements");
        int best = INT_MIN;
        for (const auto& t : triples) best = std::max(best, self(self, t.target));
        return slot = 1 + best;
    };
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = compute(compute, x);
    return out;
}

inline int ind_large(const Lattice& l) { return filter_ind_table(l)[static_cast<std::size_t>(l.bottom())]; }

namespace detail {

inline int ind_small_impl(const Lattice& l, int limit) {
    const int n = l.n();
    std::vector<int> memo(static_cast<std::size_t>(n), INT_MIN);
    auto compute = [&](auto&& self, int base) -> int {
        int& slot = memo[static_cast<std::size_t>(base)];
        if (slot != INT_MIN) return slot;
        if (l.up_set(base).count() == 1) return slot = -1;
        auto pf = principal_filter(l, base);
        auto mcs = minimal_covers(pf.lattice, limit);
        if (mcs.empty())
            throw std::logic_error("ind_small: no minimal cover on a filter with >= 2 elements");
        int best = INT_MIN;
        for (const auto& cov : mcs) {
            for (auto vi : cov.members().indices()) {
                int v = static_cast<int>(vi);
                int t = pf.lattice.join(pf.lattice.pseudostar(v), v);
                best = std::max(best, self(self, pf.to_parent[static_cast<std::size_t>(t)]));
            }
        }
        return slot = 1 + best;
    };
    return compute(compute, l.bottom());
}

} // namespace detail

// every member of every minimal cover drives the recursion one filter up
inline int ind_small(const Lattice& l, int limit = kDefaultEnumLimit) {
    if (l.n() == 1) return -1;
    return detail::ind_small_impl(l, limit);
}

namespace detail {

inline int dim_with_witness(const Lattice& l, int limit, std::optional<std::vector<std::string>>* witness) {
    if (witness) witness->reset();
    if (l.n() == 1) return -1; // no covers at all; kept parallel to ind's base case
    auto mcs = minimal_covers(l, limit);
    if (mcs.empty()) throw std::logic_error("dim_covering: no minimal cover on a lattice with >= 2 elements");
    int best = -1;
    const ElementSet* attaining = nullptr;
    for (const auto& cov : mcs) {
        int o = ord(l, cov);
        if (o > best) {
            best = o;
            attaining = &cov;
        }
    }
    if (witness && attaining) *witness = attaining->labels();
    return best;
}

inline std::optional<int> kdim_with_witness(const Lattice& l, int limit,
                                            std::optional<std::vector<std::vector<std::string>>>* witness) {
    if (witness) witness->reset();
    if (l.n() == 1) return std::nullopt;
    auto pfs = prime_filters(l, limit);
    if (pfs.empty()) return std::nullopt;
    const int m = static_cast<int>(pfs.size());
    // chain length in the strict-inclusion order, counted in steps
    std::vector<int> len(static_cast<std::size_t>(m), -1), prev(static_cast<std::size_t>(m), -1);
    auto strictly_inside = [&](int i, int j) {
        const Bits& a = pfs[static_cast<std::size_t>(i)].members.members();
        const Bits& b = pfs[static_cast<std::size_t>(j)].members.members();
        return a.subset_of(b) && !(a == b);
    };
    auto compute = [&](auto&& self, int i) -> int {
        int& slot = len[static_cast<std::size_t>(i)];
        if (slot >= 0) return slot;
        slot = 0;
        for (int j = 0; j < m; ++j)
            if (strictly_inside(j, i) && self(self, j) + 1 > slot) {
                slot = self(self, j) + 1;
                prev[static_cast<std::size_t>(i)] = j;
            }
        return slot;
    };
    int best = 0, at = 0;
    for (int i = 0; i < m; ++i)
        if (compute(compute, i) > best) {
            best = len[static_cast<std::size_t>(i)];
            at = i;
        }
    if (witness) {
        std::vector<std::vector<std::string>> chain;
        for (int i = at; i >= 0; i = prev[static_cast<std::size_t>(i)])
            chain.push_back(pfs[static_cast<std::size_t>(i)].members.labels());
        std::reverse(chain.begin(), chain.end());
        *witness = std::move(chain);
    }
    return best;
}

inline int height_with_witness(const Lattice& l, std::vector<std::string>* witness) {
    const int n = l.n();
    std::vector<int> hd(static_cast<std::size_t>(n), INT_MIN), prev(static_cast<std::size_t>(n), -1);
    hd[static_cast<std::size_t>(l.bottom())] = 0;
    for (int v : l.topo_order()) {
        if (hd[static_cast<std::size_t>(v)] == INT_MIN) continue;
        for (auto [a, b] : l.hasse())
            if (a == v && hd[static_cast<std::size_t>(v)] + 1 > hd[static_cast<std::size_t>(b)]) {
                hd[static_cast<std::size_t>(b)] = hd[static_cast<std::size_t>(v)] + 1;
                prev[static_cast<std::size_t>(b)] = v;
            }
    }
    if (witness) {
        std::vector<std::string> chain;
        for (int v = l.top();; v = prev[static_cast<std::size_t>(v)]) {
            chain.push_back(l.label(v));
            if (v == l.bottom()) break;
        }
        std::reverse(chain.begin(), chain.end());
        *witness = std::move(chain);
    }
    return hd[static_cast<std::size_t>(l.top())];
}

} // namespace detail

inline int dim_covering(const Lattice& l, int limit = kDefaultEnumLimit) {
    return detail::dim_with_witness(l, limit, nullptr);
}

// longest strict chain of prime filters; absent when there is none at all
inline std::optional<int> kdim(const Lattice& l, int limit = kDefaultEnumLimit) {
    return detail::kdim_with_witness(l, limit, nullptr);
}

// longest chain from bottom to top, counted in covers
inline int height(const Lattice& l) { return detail::height_with_witness(l, nullptr); }

// Ind(up x) <= Ind(L) for every element x
inline bool sp_property(const Lattice& l) {
    auto table = filter_ind_table(l);
    int root = table[static_cast<std::size_t>(l.bottom())];
    for (int v : table)
        if (v > root) return false;
    return true;
}

// the same bound inside every principal filter: the Ind table never grows
// when moving up, checked on all comparable pairs
inline bool all_filters_sp(const Lattice& l) {
    auto table = filter_ind_table(l);
    const int n = l.n();
    for (int x = 0; x < n; ++x)
        for (auto yi : l.up_set(x).indices())
            if (table[yi] > table[static_cast<std::size_t>(x)]) return false;
    return true;
}

struct DimensionReport {
    std::string name;
    int ind_large = 0;
    int ind_small = 0;
    int dim_covering = 0;
    std::optional<int> kdim;
    int height = 0;
    // the (a, u) pair attaining ind_large at the root; absent for one element
    std::optional<std::pair<std::string, std::string>> ind_witness;
    std::optional<std::vector<std::string>> dim_witness;
    std::optional<std::vector<std::vector<std::string>>> kdim_witness;
    std::vector<std::string> height_witness;
};

inline DimensionReport full_report(const Lattice& l, int limit = kDefaultEnumLimit) {
    DimensionReport r;
    r.name = l.name();
    auto table = filter_ind_table(l);
    r.ind_large = table[static_cast<std::size_t>(l.bottom())];
    r.ind_small = ind_small(l, limit);
    r.dim_covering = detail::dim_with_witness(l, limit, &r.dim_witness);
    r.kdim = detail::kdim_with_witness(l, limit, &r.kdim_witness);
    r.height = detail::height_with_witness(l, &r.height_witness);
    if (l.n() > 1) {
        for (const auto& t : detail::ind_triples(l, l.bottom())) {
            if (1 + table[static_cast<std::size_t>(t.target)] == r.ind_large) {
                r.ind_witness = {l.label(t.a), l.label(t.u)};
                break;
            }
        }
    }
    return r;
}

} // namespace latdim
