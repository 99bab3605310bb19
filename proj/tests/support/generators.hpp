#pragma once

// Seeded random instances shared by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "altiset/geoalt.hpp"
#include "altiset/induced_orders.hpp"
#include "altiset/relation.hpp"
#include "oracles.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline altiset::FiniteRelation relation(Rng& rng, std::size_t n, double density) {
    std::vector<altiset::IndexPair> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (coin(rng, density)) pairs.emplace_back(a, b);
    return altiset::FiniteRelation::from_pairs(altiset::Universe(n), pairs);
}

// A relation with the AA-property: asymmetric arcs only go up a random
// permutation; symmetric pairs and loops are sprinkled anywhere.
inline altiset::FiniteRelation aa_relation(Rng& rng, std::size_t n, double density) {
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    std::shuffle(rank.begin(), rank.end(), rng);
    std::vector<altiset::IndexPair> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) {
                if (coin(rng, 0.2)) pairs.emplace_back(a, a);
            } else if (rank[a] < rank[b] && coin(rng, density)) {
                pairs.emplace_back(a, b);
                if (coin(rng, 0.1)) pairs.emplace_back(b, a);
            }
        }
    return altiset::FiniteRelation::from_pairs(altiset::Universe(n), pairs);
}

inline oracle::RawSystem raw_system(Rng& rng, std::size_t n, std::size_t orders, std::int64_t key_range) {
    oracle::RawSystem s;
    s.size = n;
    for (std::size_t i = 0; i < orders; ++i) {
        std::vector<std::int64_t> k(n);
        for (auto& v : k) v = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(key_range)));
        s.keys.push_back(std::move(k));
        s.price.push_back(coin(rng, 0.5));
    }
    return s;
}

inline altiset::OrderSystem to_system(const oracle::RawSystem& s) {
    std::vector<altiset::KeyedOrder> orders;
    for (std::size_t i = 0; i < s.keys.size(); ++i) {
        altiset::KeyedOrder o;
        for (auto k : s.keys[i]) o.keys.emplace_back(k);
        o.direction = s.price[i] ? altiset::Direction::price : altiset::Direction::gain;
        orders.push_back(std::move(o));
    }
    return altiset::OrderSystem(altiset::Universe(s.size), std::move(orders));
}

// Random partition of {0..n-1} into nonempty blocks.
inline std::vector<std::vector<std::size_t>> partition(Rng& rng, std::size_t n) {
    const auto k = uniform(rng, 1, std::max<std::size_t>(n, 1));
    std::vector<std::vector<std::size_t>> blocks(k);
    for (std::size_t x = 0; x < n; ++x) blocks[uniform(rng, 0, k - 1)].push_back(x);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); }), blocks.end());
    return blocks;
}

// Distinct points with small integer coordinates, so coordinate ties are common.
inline std::vector<altiset::Point2> distinct_points(Rng& rng, std::size_t n, int range) {
    std::set<std::pair<int, int>> seen;
    std::vector<altiset::Point2> pts;
    while (pts.size() < n) {
        const int x = static_cast<int>(uniform(rng, 0, static_cast<std::size_t>(range)));
        const int y = static_cast<int>(uniform(rng, 0, static_cast<std::size_t>(range)));
        if (seen.insert({x, y}).second) pts.push_back({double(x), double(y)});
    }
    return pts;
}

// Integer summits; small ranges force equal distances and equal altitudes.
inline altiset::SummitField planar_field(Rng& rng, std::size_t n, int coord_range, int height_range) {
    std::vector<altiset::Point2> pts(n);
    std::vector<double> h(n);
    const auto c = static_cast<std::size_t>(2 * coord_range);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i] = {double(uniform(rng, 0, c)) - coord_range, double(uniform(rng, 0, c)) - coord_range};
        h[i] = double(uniform(rng, 0, static_cast<std::size_t>(height_range)));
    }
    // Mirror some summits through the reference to engineer exact distance ties.
    for (std::size_t i = 1; i < n; i += 5) pts[i] = {-pts[i - 1].y, pts[i - 1].x};
    return altiset::SummitField(altiset::MetricKind::euclidean_2d, std::move(pts), std::move(h), {0.0, 0.0});
}

} // namespace gen
