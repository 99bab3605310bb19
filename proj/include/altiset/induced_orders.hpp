#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "altiset/element_set.hpp"
#include "altiset/key.hpp"
#include "altiset/relation.hpp"

namespace altiset {

// gain: larger keys are better; price: smaller keys are better.
enum class Direction { gain, price };

struct KeyedOrder {
    std::vector<Key> keys;
    Direction direction = Direction::gain;
};

/// A finite family of linearly induced orders on one universe. Order i is the
/// partial order a <=_i b iff a = b or key_i(a) is strictly worse than key_i(b);
/// distinct elements with equal keys are incomparable under it.
class OrderSystem {
public:
    /// Throws ArgumentError on an empty order list, DimensionError on key-length mismatch.
    OrderSystem(Universe universe, std::vector<KeyedOrder> orders);

    const Universe& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }
    const std::vector<KeyedOrder>& orders() const noexcept { return orders_; }

    /// Dense key ranks of order i, negated for price orders so that a larger
    /// rank is always better.
    const std::vector<std::int64_t>& oriented_ranks(std::size_t i) const { return ranks_[i]; }

    /// The same orders on the elements of `subset` (ascending), with labels carried along.
    OrderSystem restricted(std::span<const std::size_t> subset) const;

private:
    Universe universe_;
    std::vector<KeyedOrder> orders_;
    std::vector<std::vector<std::int64_t>> ranks_;
};

using Partition = std::vector<std::vector<std::size_t>>;

struct QuotientView {
    Partition classes;                   // ordered by smallest member
    std::vector<std::size_t> class_of;   // element -> class index
    FiniteRelation class_order;          // strict characteristic order on class indices
    std::vector<std::size_t> maximal_classes;
};

/// R = union of the system's orders (price orders enter inverted).
FiniteRelation system_union(const OrderSystem& system);

/// Classes of elements with equal keys under every order.
Partition indistinguishability(const OrderSystem& system);

/// Classes of an equivalence relation, ordered by smallest member.
/// Throws OrderError when `equivalence` is not an equivalence.
Partition partition_of(const FiniteRelation& equivalence);

QuotientView quotient(const OrderSystem& system);

/// Union of the maximal classes of the quotient taken on `subset`.
ElementSet altiset_of_system(const OrderSystem& system);
ElementSet altiset_of_system(const OrderSystem& system, std::span<const std::size_t> subset);

/// Altiset over W, W being the union of the per-block altisets. Blocks must be
/// pairwise disjoint (PartitionError) and in range (IndexError).
ElementSet decompose_altiset(const OrderSystem& system, const Partition& blocks);
/// Same merge step on a raw relation; agrees with the direct altiset only for
/// systems of linearly induced orders.
ElementSet decompose_altiset(const FiniteRelation& relation, const Partition& blocks);

/// Truth values of the four equivalent forms of
///   (f(a) < f(b) => g(a) < g(b)) and (g(a) > g(b) => f(a) > f(b))
/// at the pair (a, b).
std::array<bool, 4> check_form_equivalences(std::span<const Key> f, std::span<const Key> g, std::size_t a,
                                            std::size_t b);

} // namespace altiset
