#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "altiset/element_set.hpp"
#include "altiset/relation.hpp"

namespace altiset {

/// A finite ground set X with a gain valuation h: X -> R.
class ValuedGroundSet {
public:
    ValuedGroundSet() = default;
    /// Throws DimensionError when labels and values differ in length,
    /// ArgumentError on duplicate labels or non-finite values.
    ValuedGroundSet(std::vector<std::string> labels, std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<double>& values() const noexcept { return values_; }
    /// Distinct values of h, descending.
    const std::vector<double>& thresholds() const noexcept { return thresholds_; }
    /// Position of h(x) in thresholds().
    std::size_t threshold_of(std::size_t x) const { return level_[x]; }

    bool operator==(const ValuedGroundSet& o) const { return labels_ == o.labels_ && values_ == o.values_; }

private:
    std::vector<std::string> labels_;
    std::vector<double> values_;
    std::vector<double> thresholds_;
    std::vector<std::size_t> level_;
};

using Subset = std::vector<std::size_t>;

/// A list of subsets of the ground set; repeated members are kept.
struct SubsetFamily {
    ValuedGroundSet ground;
    std::vector<Subset> members;

    bool operator==(const SubsetFamily&) const = default;
};

/// profile[i] = |{ x in M : h(x) >= thresholds[i] }|. Repeated indices count
/// once; indices outside X throw MembershipError.
std::vector<std::size_t> threshold_profile(std::span<const std::size_t> m, const ValuedGroundSet& ground);

/// (M, N) in R_h: some threshold count of M is strictly below that of N.
bool rh_dominates(std::span<const std::size_t> m, std::span<const std::size_t> n, const ValuedGroundSet& ground);

/// The relation R_h on member indices of the family.
FiniteRelation rh_relation(const SubsetFamily& family);

/// Significant members of the family w.r.t. R_h, computed from the system of
/// threshold-count orders. Throws ArgumentError on an empty family.
ElementSet collective_altiset(const SubsetFamily& family);

/// The same set by single-pass pairwise elimination of strictly dominated members.
ElementSet pairwise_elimination(const SubsetFamily& family);

} // namespace altiset
