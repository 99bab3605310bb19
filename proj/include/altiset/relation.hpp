#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altiset/element_set.hpp"
#include "altiset/key.hpp"

namespace altiset {

/// The carrier set: indices 0..size-1 with optional distinct labels.
class Universe {
public:
    Universe() = default;
    explicit Universe(std::size_t size) : size_(size) {}
    /// Throws ArgumentError on duplicate labels.
    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const noexcept { return size_; }
    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool operator==(const Universe&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::string> labels_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A binary relation on a finite universe stored as packed adjacency rows.
/// Row a holds every b with (a, b) in the relation. Immutable once built;
/// every operator below returns a fresh relation.
class FiniteRelation {
public:
    FiniteRelation() = default;
    /// The empty relation on `universe`.
    explicit FiniteRelation(Universe universe);

    /// Duplicates are ignored; out-of-range indices throw IndexError.
    static FiniteRelation from_pairs(Universe universe, std::span<const IndexPair> pairs);
    static FiniteRelation from_pairs(std::size_t size, std::initializer_list<IndexPair> pairs);
    /// Rows must number `universe.size()` and each have that universe size.
    static FiniteRelation from_rows(Universe universe, std::vector<ElementSet> rows);
    static FiniteRelation full(Universe universe);
    static FiniteRelation identity(Universe universe);

    template <typename Pred>
    static FiniteRelation from_predicate(Universe universe, Pred&& related) {
        FiniteRelation r(std::move(universe));
        for (std::size_t a = 0; a < r.size(); ++a)
            for (std::size_t b = 0; b < r.size(); ++b)
                if (related(a, b)) r.rows_[a].insert(b);
        return r;
    }

    const Universe& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }

    bool contains(std::size_t a, std::size_t b) const noexcept { return rows_[a].contains(b); }
    const ElementSet& successors(std::size_t a) const noexcept { return rows_[a]; }

    FiniteRelation inverse() const;
    /// Sorted lexicographically.
    std::vector<IndexPair> pairs() const;
    std::size_t pair_count() const noexcept;

    bool operator==(const FiniteRelation&) const = default;

private:
    Universe universe_;
    std::vector<ElementSet> rows_;
};

enum class Strictness { strict, non_strict };

/// (a, b) iff keys[a] < keys[b] (strict) or keys[a] <= keys[b] (non-strict).
FiniteRelation induce(std::span<const Key> keys, Strictness strictness);
/// As above on a labelled universe; throws DimensionError on a length mismatch.
FiniteRelation induce(const Universe& universe, std::span<const Key> keys, Strictness strictness);

/// Element-wise union. Throws DimensionError on an empty list or mismatched universes.
FiniteRelation relation_union(std::span<const FiniteRelation> relations);
FiniteRelation relation_union(const FiniteRelation& a, const FiniteRelation& b);
/// R \ S. Throws DimensionError on mismatched universes.
FiniteRelation relation_difference(const FiniteRelation& r, const FiniteRelation& s);

/// asym R = R \ R^-1
FiniteRelation asym_interior(const FiniteRelation& r);
/// Smallest transitive relation containing R (Warshall over bit rows).
FiniteRelation transitive_closure(const FiniteRelation& r);
/// R* = (complement of R)^-1; an involution.
FiniteRelation complementary_inversion(const FiniteRelation& r);
/// (R u R^-1)' u Delta
FiniteRelation reflexive_incomparability(const FiniteRelation& r);

bool is_symmetric(const FiniteRelation& r);
bool is_reflexive(const FiniteRelation& r);
bool is_irreflexive(const FiniteRelation& r);
bool is_transitive(const FiniteRelation& r);
bool is_strict_order(const FiniteRelation& r);
bool is_equivalence(const FiniteRelation& r);

/// A cycle of the digraph (A, asym R) as a vertex sequence v0 -> v1 -> ... -> v0
/// (v0 listed once), or nullopt when none exists.
std::optional<std::vector<std::size_t>> find_asym_cycle(const FiniteRelation& r);
/// True iff (A, asym R) is acyclic.
bool has_aa_property(const FiniteRelation& r);

/// Significant elements of R restricted to `subset`:
/// { a in B : for all b in B, aRb implies bRa }.
ElementSet altiset(const FiniteRelation& r);
ElementSet altiset(const FiniteRelation& r, const ElementSet& subset);
/// Index-list form; throws IndexError for indices outside the universe.
ElementSet altiset(const FiniteRelation& r, std::span<const std::size_t> subset);

struct Restriction {
    FiniteRelation relation;           // on the re-indexed sub-universe
    std::vector<std::size_t> indices;  // new index i stands for indices[i]
};

/// Restriction of R to `subset`, re-indexed in ascending order. Labels are carried along.
Restriction restrict(const FiniteRelation& r, const ElementSet& subset);
Restriction restrict(const FiniteRelation& r, std::span<const std::size_t> subset);

} // namespace altiset
