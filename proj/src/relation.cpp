#include "altiset/relation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "altiset/errors.hpp"

namespace altiset {

Universe::Universe(std::vector<std::string> labels) : size_(labels.size()), labels_(std::move(labels)) {
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw ArgumentError("duplicate universe label '" + l + "'");
}

FiniteRelation::FiniteRelation(Universe universe)
    : universe_(std::move(universe)), rows_(universe_.size(), ElementSet(universe_.size())) {}

FiniteRelation FiniteRelation::from_pairs(Universe universe, std::span<const IndexPair> pairs) {
    FiniteRelation r(std::move(universe));
    for (auto [a, b] : pairs) {
        if (a >= r.size() || b >= r.size())
            throw IndexError("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") outside universe of size " + std::to_string(r.size()));
        r.rows_[a].insert(b);
    }
    return r;
}

FiniteRelation FiniteRelation::from_pairs(std::size_t size, std::initializer_list<IndexPair> pairs) {
    return from_pairs(Universe(size), std::span<const IndexPair>(pairs.begin(), pairs.size()));
}

FiniteRelation FiniteRelation::from_rows(Universe universe, std::vector<ElementSet> rows) {
    if (rows.size() != universe.size()) throw DimensionError("row count does not match universe size");
    for (const auto& row : rows)
        if (row.universe_size() != universe.size())
            throw DimensionError("row width does not match universe size");
    FiniteRelation r;
    r.universe_ = std::move(universe);
    r.rows_ = std::move(rows);
    return r;
}

FiniteRelation FiniteRelation::full(Universe universe) {
    const auto n = universe.size();
    return from_rows(std::move(universe), std::vector<ElementSet>(n, ElementSet::full(n)));
}

FiniteRelation FiniteRelation::identity(Universe universe) {
    return from_predicate(std::move(universe), [](std::size_t a, std::size_t b) { return a == b; });
}

FiniteRelation FiniteRelation::inverse() const {
    FiniteRelation r(universe_);
    for (std::size_t a = 0; a < size(); ++a) rows_[a].for_each([&](std::size_t b) { r.rows_[b].insert(a); });
    return r;
}

std::vector<IndexPair> FiniteRelation::pairs() const {
    std::vector<IndexPair> out;
    for (std::size_t a = 0; a < size(); ++a) rows_[a].for_each([&](std::size_t b) { out.emplace_back(a, b); });
    return out;
}

std::size_t FiniteRelation::pair_count() const noexcept {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.count();
    return n;
}

namespace {

void require_same_universe(const FiniteRelation& a, const FiniteRelation& b) {
    if (a.size() != b.size())
        throw DimensionError("relations live on universes of different size (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
}

std::vector<ElementSet> rows_of(const FiniteRelation& r) {
    std::vector<ElementSet> rows;
    rows.reserve(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) rows.push_back(r.successors(a));
    return rows;
}

} // namespace

FiniteRelation induce(std::span<const Key> keys, Strictness strictness) {
    return induce(Universe(keys.size()), keys, strictness);
}

FiniteRelation induce(const Universe& universe, std::span<const Key> keys, Strictness strictness) {
    if (keys.size() != universe.size())
        throw DimensionError("key vector has length " + std::to_string(keys.size()) + ", universe has size " +
                             std::to_string(universe.size()));
    const auto ranks = dense_ranks(keys);
    if (strictness == Strictness::strict)
        return FiniteRelation::from_predicate(universe, [&](auto a, auto b) { return ranks[a] < ranks[b]; });
    return FiniteRelation::from_predicate(universe, [&](auto a, auto b) { return ranks[a] <= ranks[b]; });
}

FiniteRelation relation_union(std::span<const FiniteRelation> relations) {
    if (relations.empty()) throw DimensionError("union of an empty list of relations");
    auto rows = rows_of(relations.front());
    for (const auto& r : relations.subspan(1)) {
        require_same_universe(relations.front(), r);
        for (std::size_t a = 0; a < r.size(); ++a) rows[a] |= r.successors(a);
    }
    return FiniteRelation::from_rows(relations.front().universe(), std::move(rows));
}

FiniteRelation relation_union(const FiniteRelation& a, const FiniteRelation& b) {
    const FiniteRelation both[] = {a, b};
    return relation_union(both);
}

FiniteRelation relation_difference(const FiniteRelation& r, const FiniteRelation& s) {
    require_same_universe(r, s);
    auto rows = rows_of(r);
    for (std::size_t a = 0; a < r.size(); ++a) rows[a].subtract(s.successors(a));
    return FiniteRelation::from_rows(r.universe(), std::move(rows));
}

FiniteRelation asym_interior(const FiniteRelation& r) { return relation_difference(r, r.inverse()); }

FiniteRelation transitive_closure(const FiniteRelation& r) {
    auto rows = rows_of(r);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const ElementSet via = rows[k];
        for (auto& row : rows)
            if (row.contains(k)) row |= via;
    }
    return FiniteRelation::from_rows(r.universe(), std::move(rows));
}

FiniteRelation complementary_inversion(const FiniteRelation& r) {
    const auto inv = r.inverse();
    std::vector<ElementSet> rows;
    rows.reserve(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) rows.push_back(inv.successors(a).complement());
    return FiniteRelation::from_rows(r.universe(), std::move(rows));
}

FiniteRelation reflexive_incomparability(const FiniteRelation& r) {
    const auto inv = r.inverse();
    std::vector<ElementSet> rows;
    rows.reserve(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
        auto row = (r.successors(a) | inv.successors(a)).complement();
        row.insert(a);
        rows.push_back(std::move(row));
    }
    return FiniteRelation::from_rows(r.universe(), std::move(rows));
}

bool is_symmetric(const FiniteRelation& r) { return r == r.inverse(); }

bool is_reflexive(const FiniteRelation& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        if (!r.contains(a, a)) return false;
    return true;
}

bool is_irreflexive(const FiniteRelation& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        if (r.contains(a, a)) return false;
    return true;
}

bool is_transitive(const FiniteRelation& r) { return transitive_closure(r) == r; }

bool is_strict_order(const FiniteRelation& r) { return is_irreflexive(r) && is_transitive(r); }

bool is_equivalence(const FiniteRelation& r) { return is_reflexive(r) && is_symmetric(r) && is_transitive(r); }

std::optional<std::vector<std::size_t>> find_asym_cycle(const FiniteRelation& r) {
    const auto q = asym_interior(r);
    const auto n = q.size();
    enum class Mark : unsigned char { fresh, open, done };
    std::vector<Mark> mark(n, Mark::fresh);
    std::vector<std::size_t> parent(n, n);

    struct Frame {
        std::size_t vertex;
        std::vector<std::size_t> succ;
        std::size_t next = 0;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (mark[root] != Mark::fresh) continue;
        std::vector<Frame> stack;
        stack.push_back({root, q.successors(root).indices()});
        mark[root] = Mark::open;
        while (!stack.empty()) {
            auto& top = stack.back();
            if (top.next == top.succ.size()) {
                mark[top.vertex] = Mark::done;
                stack.pop_back();
                continue;
            }
            const auto w = top.succ[top.next++];
            if (mark[w] == Mark::open) {
                // Back edge top.vertex -> w closes a cycle along the open stack.
                std::vector<std::size_t> cycle;
                for (auto v = top.vertex; v != w; v = parent[v]) cycle.push_back(v);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (mark[w] == Mark::fresh) {
                mark[w] = Mark::open;
                parent[w] = top.vertex;
                stack.push_back({w, q.successors(w).indices()});
            }
        }
    }
    return std::nullopt;
}

bool has_aa_property(const FiniteRelation& r) { return !find_asym_cycle(r).has_value(); }

ElementSet altiset(const FiniteRelation& r) { return altiset(r, ElementSet::full(r.size())); }

ElementSet altiset(const FiniteRelation& r, const ElementSet& subset) {
    if (subset.universe_size() != r.size())
        throw DimensionError("subset universe size does not match relation");
    const auto inv = r.inverse();
    ElementSet out(r.size());
    subset.for_each([&](std::size_t a) {
        // a is dominated iff some b in B has aRb and not bRa.
        auto dominators = r.successors(a) - inv.successors(a);
        if (!dominators.intersects(subset)) out.insert(a);
    });
    return out;
}

ElementSet altiset(const FiniteRelation& r, std::span<const std::size_t> subset) {
    return altiset(r, ElementSet::from_indices(r.size(), subset));
}

Restriction restrict(const FiniteRelation& r, const ElementSet& subset) {
    if (subset.universe_size() != r.size())
        throw DimensionError("subset universe size does not match relation");
    Restriction out;
    out.indices = subset.indices();
    const auto m = out.indices.size();
    Universe sub(m);
    if (r.universe().has_labels()) {
        std::vector<std::string> labels;
        for (auto i : out.indices) labels.push_back(r.universe().labels()[i]);
        sub = Universe(std::move(labels));
    }
    out.relation = FiniteRelation::from_predicate(
        std::move(sub), [&](std::size_t a, std::size_t b) { return r.contains(out.indices[a], out.indices[b]); });
    return out;
}

Restriction restrict(const FiniteRelation& r, std::span<const std::size_t> subset) {
    return restrict(r, ElementSet::from_indices(r.size(), subset));
}

} // namespace altiset
