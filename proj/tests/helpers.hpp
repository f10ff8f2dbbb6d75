#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latdim/lattice.hpp"

namespace helpers {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline latdim::Lattice chain(int len, const std::string& name = "") {
    // len elements: c0 < c1 < ... ; len >= 1
    std::vector<std::string> labels;
    Pairs covers;
    for (int i = 0; i < len; ++i) labels.push_back("c" + std::to_string(i));
    for (int i = 0; i + 1 < len; ++i) covers.emplace_back(labels[i], labels[i + 1]);
    return latdim::build_lattice(labels, covers, name.empty() ? "chain" + std::to_string(len) : name);
}

inline latdim::Lattice diamond() {
    return latdim::build_lattice({"0", "x1", "x2", "1"},
                                 {{"0", "x1"}, {"0", "x2"}, {"x1", "1"}, {"x2", "1"}}, "diamond");
}

inline latdim::Lattice pentagon() {
    // 0 < a < c < 1 and 0 < b < 1
    return latdim::build_lattice({"0", "a", "b", "c", "1"},
                                 {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"c", "1"}, {"b", "1"}},
                                 "pentagon");
}

inline latdim::Lattice m3() {
    return latdim::build_lattice({"0", "a", "b", "c", "1"},
                                 {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
                                 "m3");
}

// diamond with a doubled top edge: 0 < y1 < {y2, y3} < 1
inline latdim::Lattice kite() {
    return latdim::build_lattice({"0", "y1", "y2", "y3", "1"},
                                 {{"0", "y1"}, {"y1", "y2"}, {"y1", "y3"}, {"y2", "1"}, {"y3", "1"}},
                                 "kite");
}

} // namespace helpers
