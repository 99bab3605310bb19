#include "altiset/collective.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <set>

#include "altiset/errors.hpp"
#include "altiset/induced_orders.hpp"

namespace altiset {

ValuedGroundSet::ValuedGroundSet(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
    if (labels_.size() != values_.size())
        throw DimensionError("ground set has " + std::to_string(labels_.size()) + " labels but " +
                             std::to_string(values_.size()) + " values");
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw ArgumentError("duplicate ground element '" + l + "'");
    for (auto v : values_)
        if (!std::isfinite(v)) throw ArgumentError("valuation must be finite");
    thresholds_ = values_;
    std::sort(thresholds_.begin(), thresholds_.end(), std::greater<>());
    thresholds_.erase(std::unique(thresholds_.begin(), thresholds_.end()), thresholds_.end());
    level_.reserve(values_.size());
    for (auto v : values_)
        level_.push_back(static_cast<std::size_t>(
            std::lower_bound(thresholds_.begin(), thresholds_.end(), v, std::greater<>()) - thresholds_.begin()));
}

std::vector<std::size_t> threshold_profile(std::span<const std::size_t> m, const ValuedGroundSet& ground) {
    ElementSet members(ground.size());
    for (auto x : m) {
        if (x >= ground.size())
            throw MembershipError("element " + std::to_string(x) + " is not in the ground set");
        members.insert(x);
    }
    std::vector<std::size_t> profile(ground.thresholds().size(), 0);
    members.for_each([&](std::size_t x) { ++profile[ground.threshold_of(x)]; });
    for (std::size_t i = 1; i < profile.size(); ++i) profile[i] += profile[i - 1];
    return profile;
}

namespace {

bool some_below(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < q[i]) return true;
    return false;
}

std::vector<std::vector<std::size_t>> profiles(const SubsetFamily& family) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(family.members.size());
    for (const auto& m : family.members) out.push_back(threshold_profile(m, family.ground));
    return out;
}

} // namespace

bool rh_dominates(std::span<const std::size_t> m, std::span<const std::size_t> n, const ValuedGroundSet& ground) {
    return some_below(threshold_profile(m, ground), threshold_profile(n, ground));
}

FiniteRelation rh_relation(const SubsetFamily& family) {
    const auto p = profiles(family);
    return FiniteRelation::from_predicate(Universe(p.size()),
                                          [&](std::size_t k, std::size_t l) { return some_below(p[k], p[l]); });
}

ElementSet collective_altiset(const SubsetFamily& family) {
    if (family.members.empty()) throw ArgumentError("subset family is empty");
    const auto p = profiles(family);
    // One gain order gamma_i per threshold; R_h is their union.
    std::vector<KeyedOrder> orders;
    for (std::size_t i = 0; i < family.ground.thresholds().size(); ++i) {
        KeyedOrder o{{}, Direction::gain};
        for (const auto& profile : p) o.keys.emplace_back(static_cast<std::int64_t>(profile[i]));
        orders.push_back(std::move(o));
    }
    if (orders.empty()) {
        // Empty ground set: every member is the empty subset.
        return ElementSet::full(p.size());
    }
    return altiset_of_system(OrderSystem(Universe(p.size()), std::move(orders)));
}

ElementSet pairwise_elimination(const SubsetFamily& family) {
    if (family.members.empty()) throw ArgumentError("subset family is empty");
    const auto p = profiles(family);
    // l strictly dominates k: (M_k, M_l) in R_h and not the converse.
    auto beats = [&](std::size_t l, std::size_t k) { return some_below(p[k], p[l]) && !some_below(p[l], p[k]); };

    std::list<std::size_t> survivors;
    for (std::size_t k = 0; k < p.size(); ++k) survivors.push_back(k);
    for (auto k = survivors.begin(); k != survivors.end();) {
        bool k_removed = false;
        for (auto l = std::next(k); l != survivors.end();) {
            if (beats(*k, *l)) {
                l = survivors.erase(l);
            } else if (beats(*l, *k)) {
                k_removed = true;
                break;
            } else {
                ++l;
            }
        }
        k = k_removed ? survivors.erase(k) : std::next(k);
    }
    ElementSet out(p.size());
    for (auto k : survivors) out.insert(k);
    return out;
}

} // namespace altiset
