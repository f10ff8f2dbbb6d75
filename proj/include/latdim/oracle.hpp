#pragma once

// Reference implementations that follow the defining quantifications with no
// theorem shortcuts, plus the small-lattice generator. Everything here trades
// speed for being easy to audit; the optimized modules are tested against it.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdim/bits.hpp"
#include "latdim/errors.hpp"
#include "latdim/lattice.hpp"

namespace latdim::oracle {

namespace detail {

// filter-local pseudostar-join targets: for u strictly above base,
// target(u) = (pseudostar of u within the filter at base) joined with u
inline std::vector<int> filter_targets(const Lattice& l, int base) {
    std::vector<int> t(static_cast<std::size_t>(l.n()), -1);
    auto mem = l.up_set(base).indices();
    for (auto u : mem) {
        int s = base;
        for (auto y : mem)
            if (l.meet(static_cast<int>(u), static_cast<int>(y)) == base)
                s = l.join(s, static_cast<int>(y));
        t[u] = l.join(s, static_cast<int>(u));
    }
    return t;
}

struct MaskTables {
    int n = 0;
    int bottom = 0, top = 0;
    std::vector<uint32_t> up, down; // reflexive closures as masks
    const Lattice* l = nullptr;

    explicit MaskTables(const Lattice& lat) : n(lat.n()), bottom(lat.bottom()), top(lat.top()), l(&lat) {
        up.assign(static_cast<std::size_t>(n), 0);
        down.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (lat.leq(i, j)) {
                    up[i] |= uint32_t{1} << j;
                    down[j] |= uint32_t{1} << i;
                }
    }

    int join_mask(uint32_t m, int start) const {
        int j = start;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            j = l->join(j, b);
        }
        return j;
    }

    uint32_t down_closure(uint32_t m) const {
        uint32_t d = 0;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            d |= down[b];
        }
        return d;
    }
};

} // namespace detail

// smallest k admitted by the point/complement quantification: for every a and
// every v with a v v = 1 there is u <= v with a v u = 1 whose
// pseudostar-join filter stays within k-1
inline int ind_large_def(const Lattice& l) {
    const int n = l.n();
    if (n == 1) return -1;
    std::vector<std::vector<int>> targets(static_cast<std::size_t>(n));
    // memo over (filter base, k), k in [-1, n]
    std::vector<int8_t> memo(static_cast<std::size_t>(n) * (n + 2), -1);
    auto check = [&](auto&& self, int base, int k) -> bool {
        if (l.up_set(base).count() == 1) return true;
        if (k < 0) return false;
        auto& m = memo[static_cast<std::size_t>(base) * (n + 2) + (k + 1)];
        if (m >= 0) return m == 1;
        if (targets[base].empty()) targets[base] = detail::filter_targets(l, base);
        auto mem = l.up_set(base).indices();
        bool ok = true;
        for (auto a : mem) {
            if (!ok) break;
            for (auto v : mem) {
                if (l.join(static_cast<int>(a), static_cast<int>(v)) != l.top()) continue;
                bool found = false;
                for (auto u : mem) {
                    if (!l.leq(static_cast<int>(u), static_cast<int>(v))) continue;
                    if (l.join(static_cast<int>(a), static_cast<int>(u)) != l.top()) continue;
                    if (self(self, targets[base][u], k - 1)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    ok = false;
                    break;
                }
            }
        }
        m = ok ? 1 : 0;
        return ok;
    };
    for (int k = 0; k <= n; ++k)
        if (check(check, l.bottom(), k)) return k;
    throw std::logic_error("ind_large_def: search exceeded the height bound");
}

// smallest k admitted by the cover/refinement quantification: every cover has
// a refining cover all of whose members have pseudostar-join filters within
// k-1
inline int ind_small_def(const Lattice& l, int limit = 12) {
    const int n = l.n();
    if (n > limit)
        throw SizeLimit("ind_small_def: " + std::to_string(n) + " elements exceeds the limit of " +
                        std::to_string(limit));
    if (n == 1) return -1;
    detail::MaskTables mt(l);
    std::vector<std::vector<int>> targets(static_cast<std::size_t>(n));
    std::vector<int8_t> memo(static_cast<std::size_t>(n) * (n + 2), -1);
    auto check = [&](auto&& self, int base, int k) -> bool {
        if (l.up_set(base).count() == 1) return true;
        if (k < 0) return false;
        auto& m = memo[static_cast<std::size_t>(base) * (n + 2) + (k + 1)];
        if (m >= 0) return m == 1;
        if (targets[base].empty()) targets[base] = detail::filter_targets(l, base);
        const uint32_t S = mt.up[base] & ~(uint32_t{1} << base); // candidate cover members
        bool ok = true;
        // every nonempty V below S, cover or not, gets examined; non-covers skip
        for (uint32_t V = S;; V = (V - 1) & S) {
            if (V && mt.join_mask(V, base) == mt.top) {
                const uint32_t D = mt.down_closure(V) & mt.up[base] & ~(uint32_t{1} << base);
                bool found = false;
                for (uint32_t U = D;; U = (U - 1) & D) {
                    if (U && mt.join_mask(U, base) == mt.top) {
                        bool all = true;
                        for (uint32_t w = U; w; w &= w - 1) {
                            int u = std::countr_zero(w);
                            if (!self(self, targets[base][u], k - 1)) {
                                all = false;
                                break;
                            }
                        }
                        if (all) {
                            found = true;
                            break;
                        }
                    }
                    if (U == 0) break;
                }
                if (!found) {
                    ok = false;
                    break;
                }
            }
            if (V == 0) break;
        }
        m = ok ? 1 : 0;
        return ok;
    };
    for (int k = 0; k <= n; ++k)
        if (check(check, l.bottom(), k)) return k;
    throw std::logic_error("ind_small_def: search exceeded the height bound");
}

namespace detail {

// largest subset of the mask with nonzero meet, as a size; equals the best
// over nonzero z of how many members sit above z
inline int largest_nonzero_meet_subset(const MaskTables& mt, uint32_t members) {
    int best = 0;
    for (int z = 0; z < mt.n; ++z) {
        if (z == mt.bottom) continue;
        int c = std::popcount(members & mt.up[z]);
        if (c > best) best = c;
    }
    return best;
}

} // namespace detail

// covering dimension by the quantified definition: smallest k such that every
// cover admits a refining cover R whose every (k+2)-subset meets at 0
inline int dim_def(const Lattice& l, int limit = 12) {
    const int n = l.n();
    if (n > limit)
        throw SizeLimit("dim_def: " + std::to_string(n) + " elements exceeds the limit of " +
                        std::to_string(limit));
    if (n == 1) return -1;
    detail::MaskTables mt(l);
    const uint32_t S = ((n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1)) & ~(uint32_t{1} << mt.bottom);
    int dim = 0;
    for (uint32_t C = S;; C = (C - 1) & S) {
        if (C && mt.join_mask(C, mt.bottom) == mt.top) {
            const uint32_t D = mt.down_closure(C) & ~(uint32_t{1} << mt.bottom);
            int best = n + 1;
            for (uint32_t R = D;; R = (R - 1) & D) {
                if (R && mt.join_mask(R, mt.bottom) == mt.top) {
                    int o = detail::largest_nonzero_meet_subset(mt, R) - 1;
                    if (o < best) best = o;
                    if (best == 0) break;
                }
                if (R == 0) break;
            }
            if (best > dim) dim = best;
        }
        if (C == 0) break;
    }
    return dim;
}

// all covers V such that every refining cover contains V, by the unpruned
// double enumeration
inline std::vector<ElementSet> minimal_covers_def(const Lattice& l, int limit = 12) {
    const int n = l.n();
    if (n > limit)
        throw SizeLimit("minimal_covers_def: " + std::to_string(n) + " elements exceeds the limit of " +
                        std::to_string(limit));
    std::vector<ElementSet> out;
    if (n == 1) return out;
    detail::MaskTables mt(l);
    const uint32_t S = ((n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1)) & ~(uint32_t{1} << mt.bottom);
    std::vector<uint32_t> found;
    for (uint32_t V = S;; V = (V - 1) & S) {
        if (V && mt.join_mask(V, mt.bottom) == mt.top) {
            const uint32_t D = mt.down_closure(V) & ~(uint32_t{1} << mt.bottom);
            bool minimal = true;
            for (uint32_t C = S;; C = (C - 1) & S) {
                if (C && mt.join_mask(C, mt.bottom) == mt.top) {
                    bool refines = (C & ~D) == 0;
                    if (refines && (V & ~C) != 0) {
                        minimal = false;
                        break;
                    }
                }
                if (C == 0) break;
            }
            if (minimal) found.push_back(V);
        }
        if (V == 0) break;
    }
    // deterministic order: lexicographic by member index sequences
    std::sort(found.begin(), found.end(), [&](uint32_t a, uint32_t b) {
        while (a && b) {
            int ia = std::countr_zero(a), ib = std::countr_zero(b);
            if (ia != ib) return ia < ib;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0;
    });
    for (uint32_t m : found) {
        Bits b(static_cast<std::size_t>(n));
        for (uint32_t w = m; w; w &= w - 1) b.set(static_cast<std::size_t>(std::countr_zero(w)));
        out.emplace_back(l, std::move(b));
    }
    return out;
}

struct GeneratorConfig {
    enum class Mode { exhaustive, random };
    Mode mode = Mode::exhaustive;
    int max_n = 7;
    uint64_t seed = 0;
    int sample_count = 0;
};

struct GeneratorStats {
    long attempts = 0;
    long accepted = 0;
};

namespace detail {

// natural labelings: element j's strict down-set lives in {0..j-1}, element 0
// is the bottom, element n-1 the top
struct EnumState {
    int n;
    std::vector<uint32_t> dn; // dn[j] = strict down-set of j, plus j itself
    std::vector<Lattice>* out;
    std::set<std::string>* seen;
};

inline bool meets_ok_with_last(EnumState& st, int j) {
    for (int i = 1; i < j; ++i) {
        uint32_t common = st.dn[i] & st.dn[j];
        // greatest common lower bound must exist; the highest index in the
        // intersection is order-maximal in it
        int m = 31 - std::countl_zero(common);
        if ((common & ~st.dn[m]) != 0) return false;
    }
    return true;
}

inline bool joins_ok(EnumState& st) {
    const int n = st.n;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (st.dn[j] & (uint32_t{1} << i)) continue;
            uint32_t uppers = 0;
            for (int k = 0; k < n; ++k)
                if ((st.dn[k] & (uint32_t{1} << i)) && (st.dn[k] & (uint32_t{1} << j)))
                    uppers |= uint32_t{1} << k;
            int m = std::countr_zero(uppers); // lowest index is order-minimal
            for (uint32_t w = uppers; w; w &= w - 1)
                if (!(st.dn[std::countr_zero(w)] & (uint32_t{1} << m))) return false;
        }
    }
    return true;
}

inline std::string canonical_key(const EnumState& st) {
    const int n = st.n;
    std::vector<int> mid;
    for (int i = 1; i + 1 < n; ++i) mid.push_back(i);
    std::string best;
    std::vector<int> map(static_cast<std::size_t>(n));
    do {
        map[0] = 0;
        map[static_cast<std::size_t>(n) - 1] = n - 1;
        for (std::size_t t = 0; t < mid.size(); ++t) map[t + 1] = mid[t];
        // key bit (i, j) = whether map[i] <= map[j]
        std::string key(static_cast<std::size_t>(n) * n, '0');
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (st.dn[map[j]] & (uint32_t{1} << map[i])) key[static_cast<std::size_t>(i) * n + j] = '1';
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(mid.begin(), mid.end()));
    return best;
}

inline Lattice lattice_from_downsets(const std::vector<uint32_t>& dn, const std::string& name) {
    const int n = static_cast<int>(dn.size());
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::pair<int, int>> covers;
    for (int j = 0; j < n; ++j) {
        uint32_t strict = dn[j] & ~(uint32_t{1} << j);
        for (uint32_t w = strict; w; w &= w - 1) {
            int i = std::countr_zero(w);
            bool direct = true;
            for (uint32_t v = strict & ~(uint32_t{1} << i); v && direct; v &= v - 1) {
                int c = std::countr_zero(v);
                if (dn[c] & (uint32_t{1} << i)) direct = false;
            }
            if (direct) covers.emplace_back(i, j);
        }
    }
    return build_lattice_indexed(labels, covers, name);
}

inline void enumerate_exact(int n, std::vector<Lattice>& out) {
    if (n == 1) {
        out.push_back(build_lattice({"e0"}, {}, "enum1-0"));
        return;
    }
    EnumState st;
    st.n = n;
    st.dn.assign(static_cast<std::size_t>(n), 0);
    st.dn[0] = 1;
    std::set<std::string> seen;
    long serial = 0;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n - 1) {
            uint32_t all = (uint32_t{1} << (n - 1)) - 1;
            st.dn[j] = all | (uint32_t{1} << j);
            if (meets_ok_with_last(st, j) && joins_ok(st)) {
                auto key = canonical_key(st);
                if (seen.insert(key).second)
                    out.push_back(lattice_from_downsets(
                        st.dn, "enum" + std::to_string(n) + "-" + std::to_string(serial++)));
            }
            return;
        }
        // choose the strict down-set of j: any downward-closed subset of the
        // earlier elements containing the bottom
        uint32_t pool = (uint32_t{1} << j) - 1;
        for (uint32_t D = pool;; D = (D - 1) & pool) {
            if (D & 1) {
                bool closed = true;
                for (uint32_t w = D; w && closed; w &= w - 1) {
                    int i = std::countr_zero(w);
                    if ((st.dn[i] & ~(uint32_t{1} << i)) & ~D) closed = false;
                }
                if (closed) {
                    st.dn[j] = D | (uint32_t{1} << j);
                    if (meets_ok_with_last(st, j)) self(self, j + 1);
                }
            }
            if (D == 0) break;
        }
        st.dn[j] = 0;
    };
    rec(rec, 1);
}

inline bool lattice_axiom_holds(const std::vector<uint32_t>& dn) {
    const int n = static_cast<int>(dn.size());
    std::vector<uint32_t> up(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        for (uint32_t w = dn[j]; w; w &= w - 1) up[std::countr_zero(w)] |= uint32_t{1} << j;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            uint32_t common = dn[i] & dn[j];
            if (!common) return false;
            int m = 31 - std::countl_zero(common);
            if (common & ~dn[m]) return false;
            uint32_t uppers = up[i] & up[j];
            if (!uppers) return false;
            int u = std::countr_zero(uppers);
            if (uppers & ~up[u]) return false;
        }
    }
    return true;
}

} // namespace detail

// exhaustive mode: every bounded lattice up to isomorphism, sizes 1..max_n;
// random mode: seeded rejection sampling over closure-of-random-DAG posets
inline std::vector<Lattice> enumerate_lattices(const GeneratorConfig& cfg,
                                               GeneratorStats* stats = nullptr) {
    std::vector<Lattice> out;
    if (cfg.mode == GeneratorConfig::Mode::exhaustive) {
        if (cfg.max_n > 7)
            throw SizeLimit("enumerate_lattices: exhaustive mode is capped at 7 elements");
        if (cfg.max_n < 1) throw InvalidK("enumerate_lattices: max_n must be at least 1");
        for (int n = 1; n <= cfg.max_n; ++n) detail::enumerate_exact(n, out);
        if (stats) {
            stats->attempts += static_cast<long>(out.size());
            stats->accepted += static_cast<long>(out.size());
        }
        return out;
    }
    if (cfg.max_n < 2) throw InvalidK("enumerate_lattices: random mode needs max_n >= 2");
    std::mt19937_64 rng(cfg.seed);
    // raw modulo keeps the draw sequence identical across standard libraries
    auto draw = [&](uint64_t bound) { return bound ? rng() % bound : 0; };
    for (int s = 0; s < cfg.sample_count; ++s) {
        const int n = 2 + static_cast<int>(draw(static_cast<uint64_t>(cfg.max_n - 1)));
        while (true) {
            if (stats) ++stats->attempts;
            std::vector<uint32_t> dn(static_cast<std::size_t>(n), 0);
            std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
            for (int j = 1; j < n; ++j) preds[j].push_back(0);
            for (int j = 2; j + 1 < n; ++j)
                preds[j].push_back(static_cast<int>(draw(static_cast<uint64_t>(j))));
            if (n >= 2)
                for (int j = 0; j + 1 < n; ++j) preds[n - 1].push_back(j);
            if (n >= 5) {
                const int extras = static_cast<int>(draw(static_cast<uint64_t>(2 * n)));
                for (int e = 0; e < extras; ++e) {
                    int j = 2 + static_cast<int>(draw(static_cast<uint64_t>(n - 4 + 1)));
                    int i = 1 + static_cast<int>(draw(static_cast<uint64_t>(j - 1)));
                    preds[j].push_back(i);
                }
            }
            for (int j = 0; j < n; ++j) {
                dn[j] = uint32_t{1} << j;
                for (int p : preds[j]) dn[j] |= dn[p];
            }
            if (!detail::lattice_axiom_holds(dn)) continue;
            if (stats) ++stats->accepted;
            out.push_back(detail::lattice_from_downsets(
                dn, "rnd-" + std::to_string(cfg.seed) + "-" + std::to_string(s)));
            break;
        }
    }
    return out;
}

} // namespace latdim::oracle
