#pragma once

#include <initializer_list>
#include <vector>

#include "altiset/element_set.hpp"
#include "altiset/relation.hpp"

namespace testing {

using Pairs = std::vector<altiset::IndexPair>;
using Indices = std::vector<std::size_t>;

inline altiset::FiniteRelation rel(std::size_t n, std::initializer_list<altiset::IndexPair> pairs) {
    return altiset::FiniteRelation::from_pairs(n, pairs);
}

inline Indices all(std::size_t n) {
    Indices v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

inline std::vector<bool> mask(const altiset::ElementSet& s) {
    std::vector<bool> m(s.universe_size());
    s.for_each([&](std::size_t i) { m[i] = true; });
    return m;
}

} // namespace testing
