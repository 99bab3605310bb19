#include "altiset/induced_orders.hpp"

#include <map>
#include <string>

#include "altiset/errors.hpp"

namespace altiset {

OrderSystem::OrderSystem(Universe universe, std::vector<KeyedOrder> orders)
    : universe_(std::move(universe)), orders_(std::move(orders)) {
    if (orders_.empty()) throw ArgumentError("an order system needs at least one order");
    ranks_.reserve(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        const auto& o = orders_[i];
        if (o.keys.size() != universe_.size())
            throw DimensionError("order " + std::to_string(i) + " has " + std::to_string(o.keys.size()) +
                                 " keys, universe has size " + std::to_string(universe_.size()));
        const auto dense = dense_ranks(o.keys);
        std::vector<std::int64_t> oriented(dense.begin(), dense.end());
        if (o.direction == Direction::price)
            for (auto& r : oriented) r = -r;
        ranks_.push_back(std::move(oriented));
    }
}

OrderSystem OrderSystem::restricted(std::span<const std::size_t> subset) const {
    const auto sel = ElementSet::from_indices(size(), subset).indices();
    std::vector<KeyedOrder> orders;
    for (const auto& o : orders_) {
        KeyedOrder k{{}, o.direction};
        for (auto i : sel) k.keys.push_back(o.keys[i]);
        orders.push_back(std::move(k));
    }
    Universe sub(sel.size());
    if (universe_.has_labels()) {
        std::vector<std::string> labels;
        for (auto i : sel) labels.push_back(universe_.labels()[i]);
        sub = Universe(std::move(labels));
    }
    return OrderSystem(std::move(sub), std::move(orders));
}

namespace {

// (a, b) in the system union: a = b or some order ranks b strictly higher than a.
bool union_contains(const OrderSystem& s, std::size_t a, std::size_t b) {
    if (a == b) return true;
    for (std::size_t i = 0; i < s.orders().size(); ++i) {
        const auto& r = s.oriented_ranks(i);
        if (r[a] < r[b]) return true;
    }
    return false;
}

} // namespace

FiniteRelation system_union(const OrderSystem& system) {
    return FiniteRelation::from_predicate(system.universe(),
                                          [&](std::size_t a, std::size_t b) { return union_contains(system, a, b); });
}

Partition indistinguishability(const OrderSystem& system) {
    std::map<std::vector<std::int64_t>, std::size_t> class_index;
    Partition classes;
    for (std::size_t a = 0; a < system.size(); ++a) {
        std::vector<std::int64_t> signature;
        signature.reserve(system.orders().size());
        for (std::size_t i = 0; i < system.orders().size(); ++i) signature.push_back(system.oriented_ranks(i)[a]);
        auto [it, inserted] = class_index.try_emplace(std::move(signature), classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(a);
    }
    return classes;
}

Partition partition_of(const FiniteRelation& equivalence) {
    if (!is_equivalence(equivalence)) throw OrderError("relation is not an equivalence");
    Partition classes;
    ElementSet seen(equivalence.size());
    for (std::size_t a = 0; a < equivalence.size(); ++a) {
        if (seen.contains(a)) continue;
        classes.push_back(equivalence.successors(a).indices());
        seen |= equivalence.successors(a);
    }
    return classes;
}

QuotientView quotient(const OrderSystem& system) {
    QuotientView q;
    q.classes = indistinguishability(system);
    q.class_of.assign(system.size(), 0);
    for (std::size_t c = 0; c < q.classes.size(); ++c)
        for (auto a : q.classes[c]) q.class_of[a] = c;

    // Indistinguishability preserves R, so representatives decide the class relation.
    const auto class_relation = FiniteRelation::from_predicate(Universe(q.classes.size()), [&](auto c, auto d) {
        return union_contains(system, q.classes[c].front(), q.classes[d].front());
    });
    q.class_order = asym_interior(class_relation);
    for (std::size_t c = 0; c < q.classes.size(); ++c)
        if (q.class_order.successors(c).empty()) q.maximal_classes.push_back(c);
    return q;
}

ElementSet altiset_of_system(const OrderSystem& system) {
    const auto q = quotient(system);
    ElementSet out(system.size());
    for (auto c : q.maximal_classes)
        for (auto a : q.classes[c]) out.insert(a);
    return out;
}

ElementSet altiset_of_system(const OrderSystem& system, std::span<const std::size_t> subset) {
    const auto sel = ElementSet::from_indices(system.size(), subset).indices();
    const auto local = altiset_of_system(system.restricted(sel));
    ElementSet out(system.size());
    local.for_each([&](std::size_t i) { out.insert(sel[i]); });
    return out;
}

namespace {

ElementSet validated_cover(std::size_t size, const Partition& blocks) {
    ElementSet cover(size);
    for (const auto& block : blocks) {
        const auto b = ElementSet::from_indices(size, block);
        if (b.intersects(cover)) throw PartitionError("decomposition blocks overlap");
        cover |= b;
    }
    return cover;
}

} // namespace

ElementSet decompose_altiset(const OrderSystem& system, const Partition& blocks) {
    validated_cover(system.size(), blocks);
    ElementSet merged(system.size());
    for (const auto& block : blocks) merged |= altiset_of_system(system, block);
    return altiset_of_system(system, merged.indices());
}

ElementSet decompose_altiset(const FiniteRelation& relation, const Partition& blocks) {
    validated_cover(relation.size(), blocks);
    ElementSet merged(relation.size());
    for (const auto& block : blocks) merged |= altiset(relation, block);
    return altiset(relation, merged);
}

std::array<bool, 4> check_form_equivalences(std::span<const Key> f, std::span<const Key> g, std::size_t a,
                                            std::size_t b) {
    if (f.size() != g.size()) throw DimensionError("key vectors differ in length");
    if (a >= f.size() || b >= f.size()) throw IndexError("pair index outside the key vectors");
    auto implies = [](bool p, bool q) { return !p || q; };
    const auto &fa = f[a], &fb = f[b], &ga = g[a], &gb = g[b];
    return {
        implies(fa < fb, ga < gb) && implies(ga > gb, fa > fb),
        implies(fa <= fb, ga <= gb) && implies(ga >= gb, fa >= fb),
        implies(fa < fb, ga < gb) && implies(fa == fb, ga <= gb),
        implies(ga > gb, fa > fb) && implies(ga == gb, fa >= fb),
    };
}

} // namespace altiset
