#pragma once

#include <string>
#include <vector>

#include "latdim/bits.hpp"
#include "latdim/errors.hpp"
#include "latdim/lattice.hpp"

namespace latdim {

inline constexpr int kDefaultEnumLimit = 20;

// V covers L when it avoids the bottom and joins to the top. The empty set
// never covers: its join is the bottom by convention (even when bottom = top).
inline bool is_cover(const Lattice& l, const ElementSet& v) {
    v.require_owner(l, "is_cover");
    if (v.members().none()) return false;
    if (v.contains(l.bottom())) return false;
    return l.join_of(v.members()) == l.top();
}

inline bool refines(const Lattice& l, const ElementSet& u, const ElementSet& v) {
    u.require_owner(l, "refines");
    v.require_owner(l, "refines");
    if (!is_cover(l, u)) throw NotACover("refines: first argument is not a cover");
    if (!is_cover(l, v)) throw NotACover("refines: second argument is not a cover");
    for (auto i : u.members().indices())
        if (!l.up_set(static_cast<int>(i)).intersects(v.members())) return false;
    return true;
}

namespace detail {

inline void require_size(const Lattice& l, int limit, const char* op) {
    if (l.n() > limit)
        throw SizeLimit(std::string(op) + ": " + std::to_string(l.n()) +
                        " elements exceeds the limit of " + std::to_string(limit));
}

// suffix_join[i] = join of all non-bottom elements with index >= i
inline std::vector<int> suffix_joins(const Lattice& l) {
    std::vector<int> sj(static_cast<std::size_t>(l.n()) + 1, l.bottom());
    for (int i = l.n() - 1; i >= 0; --i) {
        sj[i] = sj[i + 1];
        if (i != l.bottom()) sj[i] = l.join(sj[i], i);
    }
    return sj;
}

} // namespace detail

// Every cover, in lexicographic order of member index sequences.
inline std::vector<ElementSet> all_covers(const Lattice& l, int limit = kDefaultEnumLimit) {
    detail::require_size(l, limit, "all_covers");
    std::vector<ElementSet> out;
    if (l.n() == 1) return out;
    auto sj = detail::suffix_joins(l);
    Bits chosen(static_cast<std::size_t>(l.n()));
    auto rec = [&](auto&& self, int i, int joined) -> void {
        if (joined == l.top()) out.emplace_back(l, chosen);
        if (i == l.n()) return;
        // even with every remaining element this branch cannot reach the top
        if (l.join(joined, sj[i]) != l.top() && joined != l.top()) return;
        for (int v = i; v < l.n(); ++v) {
            if (v == l.bottom()) continue;
            chosen.set(static_cast<std::size_t>(v));
            self(self, v + 1, l.join(joined, v));
            chosen.reset(static_cast<std::size_t>(v));
        }
    };
    rec(rec, 0, l.bottom());
    return out;
}

// Minimal covers: the covers contained in every refining cover. Equivalent
// test, provable straight from the definitions: with D the union of the
// members' principal ideals, V is minimal iff for every v0 in V the join of
// D minus {v0, bottom} stays below the top. (Dropping v0 from D gives the
// largest refinement candidate avoiding v0.) It follows that minimal covers
// are antichains and irredundant, which drives the search below.
inline std::vector<ElementSet> minimal_covers(const Lattice& l, int limit = kDefaultEnumLimit) {
    detail::require_size(l, limit, "minimal_covers");
    std::vector<ElementSet> out;
    const int n = l.n();
    if (n == 1) return out;
    auto sj = detail::suffix_joins(l);

    std::vector<int> members;
    auto emit_if_minimal = [&]() {
        Bits dflat(static_cast<std::size_t>(n));
        for (int v : members) dflat |= l.down_set(v);
        dflat.reset(static_cast<std::size_t>(l.bottom()));
        for (int v0 : members) {
            Bits d = dflat;
            d.reset(static_cast<std::size_t>(v0));
            if (l.join_of(d) == l.top()) return;
        }
        Bits b(static_cast<std::size_t>(n));
        for (int v : members) b.set(static_cast<std::size_t>(v));
        out.emplace_back(l, std::move(b));
    };
    auto rec = [&](auto&& self, int i, int joined) -> void {
        if (joined == l.top()) {
            // any extension keeps the join at the top and fails minimality
            emit_if_minimal();
            return;
        }
        if (i == n) return;
        if (l.join(joined, sj[i]) != l.top()) return;
        for (int v = i; v < n; ++v) {
            if (v == l.bottom()) continue;
            bool antichain = true;
            for (int u : members)
                if (l.leq(u, v) || l.leq(v, u)) {
                    antichain = false;
                    break;
                }
            if (!antichain) continue;
            members.push_back(v);
            self(self, v + 1, l.join(joined, v));
            members.pop_back();
        }
    };
    rec(rec, 0, l.bottom());
    return out;
}

// ord(C): one less than the largest subset of C with nonzero infimum. The
// largest such subset is always of the form {c in C : z <= c} for the nonzero
// z equal to its own infimum, so a scan over z suffices.
inline int ord(const Lattice& l, const ElementSet& c) {
    c.require_owner(l, "ord");
    if (c.members().none()) throw InvalidSubset("ord: the set must be nonempty");
    if (c.contains(l.bottom())) throw InvalidSubset("ord: the set must not contain the bottom");
    int best = 1; // singletons are nonzero
    for (int z = 0; z < l.n(); ++z) {
        if (z == l.bottom()) continue;
        int cnt = static_cast<int>((c.members() & l.up_set(z)).count());
        if (cnt > best) best = cnt;
    }
    return best - 1;
}

struct Filter {
    ElementSet members;
    bool prime = false;
};

// Proper filters of a finite lattice: a nonempty meet-closed up-closed subset
// contains the meet of all its members, so it is the principal up-set of that
// meet; properness excludes the bottom as generator.
inline std::vector<Filter> filters(const Lattice& l, int limit = kDefaultEnumLimit) {
    detail::require_size(l, limit, "filters");
    std::vector<Filter> out;
    const int n = l.n();
    if (n == 1) return out;
    for (int m = 0; m < n; ++m) {
        if (m == l.bottom()) continue;
        Filter f{ElementSet(l, l.up_set(m)), true};
        for (int x = 0; x < n && f.prime; ++x)
            for (int y = x; y < n; ++y) {
                if (!l.leq(m, l.join(x, y))) continue;
                if (!l.leq(m, x) && !l.leq(m, y)) {
                    f.prime = false;
                    break;
                }
            }
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<Filter> prime_filters(const Lattice& l, int limit = kDefaultEnumLimit) {
    auto all = filters(l, limit);
    std::vector<Filter> out;
    for (auto& f : all)
        if (f.prime) out.push_back(std::move(f));
    return out;
}

// nonzero x such that x <= a v b always forces x <= a or x <= b
inline ElementSet join_primes(const Lattice& l) {
    Bits b(static_cast<std::size_t>(l.n()));
    for (int x = 0; x < l.n(); ++x) {
        if (x == l.bottom()) continue;
        bool prime = true;
        for (int a = 0; a < l.n() && prime; ++a)
            for (int c = a; c < l.n(); ++c) {
                if (!l.leq(x, l.join(a, c))) continue;
                if (!l.leq(x, a) && !l.leq(x, c)) {
                    prime = false;
                    break;
                }
            }
        if (prime) b.set(static_cast<std::size_t>(x));
    }
    return ElementSet(l, std::move(b));
}

} // namespace latdim
