#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latdim/bits.hpp"
#include "latdim/errors.hpp"

namespace latdim {

class Lattice;

namespace detail {

struct LatticeCore {
    std::string name;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    int n = 0;
    int bottom = 0;
    int top = 0;
    // cover pairs (lower, upper), sorted by (lower, upper); equals the
    // transitive reduction of leq by construction
    std::vector<std::pair<int, int>> hasse;
    std::vector<Bits> up;    // up[i] = {j : i <= j}, reflexive
    std::vector<Bits> down;  // down[i] = {j : j <= i}, reflexive
    std::vector<int> topo;   // a linear extension, bottom first
    std::vector<int> topo_pos;
    std::vector<int32_t> meet_t, join_t; // n*n lookup tables
    std::vector<int> star;               // star[i] = join of {y : y meet i = bottom}
    std::vector<char> star_is_pc;        // star[i] meet i == bottom
};

} // namespace detail

// Value handle over an immutable validated lattice. Copies share the core;
// pointer identity of the core doubles as the owner id for element sets.
class Lattice {
public:
    Lattice() = default;

    int n() const { return core_->n; }
    const std::string& name() const { return core_->name; }
    const std::string& label(int i) const { return core_->labels[i]; }
    const std::vector<std::string>& labels() const { return core_->labels; }

    int index(const std::string& label) const {
        auto it = core_->index.find(label);
        if (it == core_->index.end())
            throw InvalidSubset("unknown element label '" + label + "' in lattice '" + core_->name + "'");
        return it->second;
    }

    int bottom() const { return core_->bottom; }
    int top() const { return core_->top; }

    bool leq(int x, int y) const { return core_->up[x].test(static_cast<std::size_t>(y)); }
    int meet(int x, int y) const { return core_->meet_t[static_cast<std::size_t>(x) * core_->n + y]; }
    int join(int x, int y) const { return core_->join_t[static_cast<std::size_t>(x) * core_->n + y]; }

    // largest element whose meet with x is bottom; always defined
    int pseudostar(int x) const { return core_->star[x]; }
    // whether the pseudostar actually meets x at bottom
    bool is_true_pseudocomplement(int x) const { return core_->star_is_pc[x] != 0; }

    const std::vector<std::pair<int, int>>& hasse() const { return core_->hasse; }
    const Bits& up_set(int x) const { return core_->up[x]; }
    const Bits& down_set(int x) const { return core_->down[x]; }
    const std::vector<int>& topo_order() const { return core_->topo; }

    const void* id() const { return core_.get(); }
    bool same_as(const Lattice& o) const { return core_ == o.core_; }
    explicit operator bool() const { return core_ != nullptr; }

    int join_of(const Bits& members) const {
        int j = core_->bottom;
        for (std::size_t i = members.first(); i < members.size(); i = members.next(i))
            j = join(j, static_cast<int>(i));
        return j;
    }

    int meet_of(const Bits& members) const {
        int m = core_->top;
        for (std::size_t i = members.first(); i < members.size(); i = members.next(i))
            m = meet(m, static_cast<int>(i));
        return m;
    }

private:
    friend Lattice build_lattice(const std::vector<std::string>&,
                                 const std::vector<std::pair<std::string, std::string>>&,
                                 const std::string&);
    explicit Lattice(std::shared_ptr<const detail::LatticeCore> core) : core_(std::move(core)) {}
    std::shared_ptr<const detail::LatticeCore> core_;
};

// A subset of a particular lattice's elements. Operations reject sets whose
// owner is not the lattice they are applied to.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(const Lattice& owner, Bits members) : owner_(owner), members_(std::move(members)) {}

    static ElementSet of_indices(const Lattice& owner, const std::vector<int>& idx) {
        Bits b(static_cast<std::size_t>(owner.n()));
        for (int i : idx) {
            if (i < 0 || i >= owner.n())
                throw InvalidSubset("element index out of range");
            b.set(static_cast<std::size_t>(i));
        }
        return ElementSet(owner, std::move(b));
    }

    static ElementSet of_labels(const Lattice& owner, const std::vector<std::string>& labels) {
        Bits b(static_cast<std::size_t>(owner.n()));
        for (const auto& s : labels) b.set(static_cast<std::size_t>(owner.index(s)));
        return ElementSet(owner, std::move(b));
    }

    const Lattice& owner() const { return owner_; }
    const Bits& members() const { return members_; }
    std::size_t size() const { return members_.count(); }
    bool contains(int i) const { return members_.test(static_cast<std::size_t>(i)); }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (auto i : members_.indices()) out.push_back(owner_.label(static_cast<int>(i)));
        return out;
    }

    void require_owner(const Lattice& l, const char* op) const {
        if (!owner_.same_as(l))
            throw InvalidSubset(std::string(op) + ": element set belongs to a different lattice");
    }

private:
    Lattice owner_;
    Bits members_;
};

// A principal filter materialized as a lattice of its own, with the map back
// into the parent.
struct PrincipalFilter {
    Lattice lattice;
    std::vector<int> to_parent; // filter element index -> parent element index
    int base_in_parent = 0;     // the generator, i.e. the filter's bottom
};

inline Lattice build_lattice(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& cover_pairs,
                             const std::string& name = "") {
    auto core = std::make_shared<detail::LatticeCore>();
    core->name = name;
    core->labels = labels;
    const int n = static_cast<int>(labels.size());
    core->n = n;
    if (n == 0) throw NotALattice("a lattice needs at least one element");

    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = core->index.emplace(labels[i], i);
        (void)it;
        if (!fresh) throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
    }

    std::vector<std::pair<int, int>> hasse;
    hasse.reserve(cover_pairs.size());
    for (const auto& [lo, hi] : cover_pairs) {
        auto a = core->index.find(lo);
        auto b = core->index.find(hi);
        if (a == core->index.end() || b == core->index.end())
            throw NotALattice("cover pair (" + lo + ", " + hi + ") references an unknown element");
        if (a->second == b->second)
            throw NotALattice("cover pair must relate two distinct elements: (" + lo + ", " + hi + ")");
        hasse.emplace_back(a->second, b->second);
    }
    std::sort(hasse.begin(), hasse.end());
    if (std::adjacent_find(hasse.begin(), hasse.end()) != hasse.end()) {
        auto dup = *std::adjacent_find(hasse.begin(), hasse.end());
        throw NotALattice("duplicate cover pair (" + labels[dup.first] + ", " + labels[dup.second] + ")");
    }

    // reflexive-transitive closure of the cover relation
    std::vector<std::vector<int>> succ(n);
    for (auto [a, b] : hasse) succ[a].push_back(b);
    core->up.assign(n, Bits(static_cast<std::size_t>(n)));
    core->down.assign(n, Bits(static_cast<std::size_t>(n)));
    {
        // iterative DFS per element; memoized via state marks over a reverse
        // topological pass would be nicer, but n is small and this is run once
        std::vector<int> state(n, 0); // 0 unseen, 1 on stack, 2 done
        std::vector<int> order;       // reverse finish order
        order.reserve(n);
        for (int s = 0; s < n; ++s) {
            if (state[s] == 2) continue;
            std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
            state[s] = 1;
            while (!stack.empty()) {
                auto& [v, k] = stack.back();
                if (k < succ[v].size()) {
                    int w = succ[v][k++];
                    if (state[w] == 1) {
                        throw CycleError("cover relation contains a cycle through '" + labels[w] + "'");
                    }
                    if (state[w] == 0) {
                        state[w] = 1;
                        stack.emplace_back(w, 0);
                    }
                } else {
                    state[v] = 2;
                    order.push_back(v);
                    stack.pop_back();
                }
            }
        }
        // order holds vertices with all successors finished first
        for (int v : order) {
            core->up[v].set(static_cast<std::size_t>(v));
            for (int w : succ[v]) core->up[v] |= core->up[w];
        }
    }
    for (int i = 0; i < n; ++i)
        for (std::size_t j = core->up[i].first(); j < core->up[i].size(); j = core->up[i].next(j))
            core->down[j].set(static_cast<std::size_t>(i));

    // bounds: a finite order with a unique minimal element has a minimum
    {
        std::vector<int> mins, maxs;
        for (int i = 0; i < n; ++i) {
            if (core->down[i].count() == 1) mins.push_back(i);
            if (core->up[i].count() == 1) maxs.push_back(i);
        }
        if (mins.size() != 1) {
            std::string msg = "no unique bottom; minimal elements:";
            for (int i : mins) msg += " " + labels[i];
            throw NotBounded(msg);
        }
        if (maxs.size() != 1) {
            std::string msg = "no unique top; maximal elements:";
            for (int i : maxs) msg += " " + labels[i];
            throw NotBounded(msg);
        }
        core->bottom = mins[0];
        core->top = maxs[0];
    }

    // the stored covers must be the transitive reduction of the order
    for (auto [a, b] : hasse) {
        Bits between = core->up[a] & core->down[b];
        if (between.count() > 2)
            throw NotALattice("cover pair (" + labels[a] + ", " + labels[b] +
                                  ") is implied by transitivity and is not a cover",
                              labels[a], labels[b]);
    }
    core->hasse = std::move(hasse);

    // linear extension: repeatedly emit an element all of whose predecessors
    // are emitted, lowest index first for determinism
    {
        std::vector<int> indeg(n, 0);
        for (auto [a, b] : core->hasse) ++indeg[b];
        std::vector<int> ready;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.push_back(i);
        core->topo_pos.assign(n, -1);
        while (!ready.empty()) {
            std::sort(ready.begin(), ready.end(), std::greater<>());
            int v = ready.back();
            ready.pop_back();
            core->topo_pos[v] = static_cast<int>(core->topo.size());
            core->topo.push_back(v);
            for (auto [a, b] : core->hasse)
                if (a == v && --indeg[b] == 0) ready.push_back(b);
        }
    }

    // meets and joins: the topologically last common lower bound must
    // dominate all of them, and dually
    core->meet_t.assign(static_cast<std::size_t>(n) * n, 0);
    core->join_t.assign(static_cast<std::size_t>(n) * n, 0);
    auto topo_last = [&](const Bits& s) {
        int best = -1;
        for (auto i : s.indices())
            if (best < 0 || core->topo_pos[static_cast<int>(i)] > core->topo_pos[best]) best = static_cast<int>(i);
        return best;
    };
    auto topo_first = [&](const Bits& s) {
        int best = -1;
        for (auto i : s.indices())
            if (best < 0 || core->topo_pos[static_cast<int>(i)] < core->topo_pos[best]) best = static_cast<int>(i);
        return best;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Bits lowers = core->down[i] & core->down[j];
            int m = topo_last(lowers);
            if (!lowers.subset_of(core->down[m]))
                throw NotALattice("elements '" + labels[i] + "' and '" + labels[j] +
                                      "' have no unique greatest common lower bound",
                                  labels[i], labels[j]);
            Bits uppers = core->up[i] & core->up[j];
            int u = topo_first(uppers);
            if (!uppers.subset_of(core->up[u]))
                throw NotALattice("elements '" + labels[i] + "' and '" + labels[j] +
                                      "' have no unique least common upper bound",
                                  labels[i], labels[j]);
            core->meet_t[static_cast<std::size_t>(i) * n + j] = m;
            core->meet_t[static_cast<std::size_t>(j) * n + i] = m;
            core->join_t[static_cast<std::size_t>(i) * n + j] = u;
            core->join_t[static_cast<std::size_t>(j) * n + i] = u;
        }
    }

    core->star.assign(n, core->bottom);
    core->star_is_pc.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int s = core->bottom;
        for (int y = 0; y < n; ++y)
            if (core->meet_t[static_cast<std::size_t>(i) * n + y] == core->bottom)
                s = core->join_t[static_cast<std::size_t>(s) * n + y];
        core->star[i] = s;
        core->star_is_pc[i] = (core->meet_t[static_cast<std::size_t>(i) * n + s] == core->bottom) ? 1 : 0;
    }

    return Lattice(std::move(core));
}

inline Lattice build_lattice_indexed(const std::vector<std::string>& labels,
                                     const std::vector<std::pair<int, int>>& cover_pairs,
                                     const std::string& name = "") {
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(cover_pairs.size());
    for (auto [a, b] : cover_pairs) named.emplace_back(labels.at(a), labels.at(b));
    return build_lattice(labels, named, name);
}

inline bool is_down_set(const Lattice& l, const ElementSet& s) {
    s.require_owner(l, "is_down_set");
    for (auto i : s.members().indices())
        if (!l.down_set(static_cast<int>(i)).subset_of(s.members())) return false;
    return true;
}

inline PrincipalFilter principal_filter(const Lattice& l, int x) {
    if (x < 0 || x >= l.n()) throw InvalidSubset("principal_filter: element index out of range");
    PrincipalFilter pf;
    pf.base_in_parent = x;
    const Bits& mem = l.up_set(x);
    std::vector<int> back(static_cast<std::size_t>(l.n()), -1);
    for (auto i : mem.indices()) {
        back[i] = static_cast<int>(pf.to_parent.size());
        pf.to_parent.push_back(static_cast<int>(i));
    }
    std::vector<std::string> labels;
    labels.reserve(pf.to_parent.size());
    for (int p : pf.to_parent) labels.push_back(l.label(p));
    // an interval keeps its covers: anything strictly between two members is
    // itself above x
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : l.hasse())
        if (mem.test(static_cast<std::size_t>(a)) && mem.test(static_cast<std::size_t>(b)))
            covers.emplace_back(back[a], back[b]);
    pf.lattice = build_lattice_indexed(labels, covers, l.name() + "/up:" + l.label(x));
    return pf;
}

// backtracking order-isomorphism search; cheap per-element signatures prune
// most candidates
inline std::optional<std::vector<int>> is_isomorphic(const Lattice& a, const Lattice& b,
                                                     int size_limit = 12) {
    if (a.n() != b.n()) return std::nullopt;
    const int n = a.n();
    if (n > size_limit)
        throw SizeLimit("is_isomorphic: " + std::to_string(n) + " elements exceeds the limit of " +
                        std::to_string(size_limit));

    auto signature = [](const Lattice& l, int i) {
        int cov_up = 0, cov_dn = 0;
        for (auto [x, y] : l.hasse()) {
            if (x == i) ++cov_up;
            if (y == i) ++cov_dn;
        }
        return std::array<std::size_t, 4>{l.up_set(i).count(), l.down_set(i).count(),
                                          static_cast<std::size_t>(cov_up),
                                          static_cast<std::size_t>(cov_dn)};
    };
    std::vector<std::array<std::size_t, 4>> siga(n), sigb(n);
    for (int i = 0; i < n; ++i) siga[i] = signature(a, i);
    for (int i = 0; i < n; ++i) sigb[i] = signature(b, i);

    // map elements in topological order so order constraints bind early
    const auto& order = a.topo_order();
    std::vector<int> map(n, -1), used(n, 0);
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        int x = order[k];
        for (int y = 0; y < n; ++y) {
            if (used[y] || siga[x] != sigb[y]) continue;
            bool ok = true;
            for (std::size_t t = 0; t < k && ok; ++t) {
                int px = order[t];
                if (a.leq(px, x) != b.leq(map[px], y)) ok = false;
                if (a.leq(x, px) != b.leq(y, map[px])) ok = false;
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = 1;
            if (self(self, k + 1)) return true;
            map[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return map;
}

} // namespace latdim
