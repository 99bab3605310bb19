#include "altiset/layers.hpp"

#include <algorithm>
#include <numeric>

#include "altiset/errors.hpp"

namespace altiset {

namespace {

std::string describe_cycle(const std::vector<std::size_t>& cycle) {
    std::string s;
    for (auto v : cycle) s += std::to_string(v) + " -> ";
    return s + std::to_string(cycle.front());
}

void require_aa(const FiniteRelation& r) {
    if (auto cycle = find_asym_cycle(r)) {
        auto message = "relation violates the AA-property; cycle " + describe_cycle(*cycle);
        throw CyclicRelationError(message, std::move(*cycle));
    }
}

// Peels altisets off the universe; index[x] = 1-based layer number.
std::vector<std::size_t> peel(const FiniteRelation& r, std::size_t& layers) {
    const auto n = r.size();
    std::vector<std::size_t> index(n, 0);
    ElementSet remaining = ElementSet::full(n);
    layers = 0;
    while (!remaining.empty()) {
        if (layers > n) throw NonterminationError("layer iteration exceeded the universe size");
        const auto layer = altiset(r, remaining);
        if (layer.empty()) throw NonterminationError("empty altiset on a nonempty remainder");
        ++layers;
        layer.for_each([&](std::size_t x) { index[x] = layers; });
        remaining.subtract(layer);
    }
    return index;
}

std::vector<std::vector<std::size_t>> level_sets(const std::vector<std::size_t>& index) {
    std::vector<std::vector<std::size_t>> out(index.empty() ? 0 : *std::max_element(index.begin(), index.end()));
    for (std::size_t x = 0; x < index.size(); ++x) out[index[x] - 1].push_back(x);
    return out;
}

} // namespace

std::vector<std::vector<std::size_t>> LayerDecomposition::upper_layers() const {
    return level_sets(upper_index);
}

std::vector<std::vector<std::size_t>> LayerDecomposition::lower_layers() const {
    return level_sets(lower_index);
}

LayerDecomposition upper_layers(const FiniteRelation& r) {
    require_aa(r);
    LayerDecomposition d;
    std::size_t lower = 0;
    d.upper_index = peel(r, d.class_count);
    d.lower_index = peel(r.inverse(), lower);
    return d;
}

ElementSet apply_operator(LayerOp op, const FiniteRelation& r, const ElementSet& x) {
    const auto v = op == LayerOp::upsilon ? altiset(r, x) : altiset(r.inverse(), x);
    return x - v;
}

ChainTerm::ChainTerm(std::vector<LayerOp> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw ArgumentError("chain term must be nonempty");
}

ChainTerm ChainTerm::parse(std::string_view text) {
    static constexpr std::string_view upsilon = "\xCF\x85";  // υ
    static constexpr std::string_view lambda = "\xCE\xBB";   // λ
    std::vector<LayerOp> ops;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == 'u' || c == 'U') {
            ops.push_back(LayerOp::upsilon);
            ++i;
        } else if (c == 'l' || c == 'L') {
            ops.push_back(LayerOp::lambda);
            ++i;
        } else if (text.substr(i, 2) == upsilon) {
            ops.push_back(LayerOp::upsilon);
            i += 2;
        } else if (text.substr(i, 2) == lambda) {
            ops.push_back(LayerOp::lambda);
            i += 2;
        } else {
            throw ArgumentError("invalid chain term '" + std::string(text) + "'");
        }
    }
    return ChainTerm(std::move(ops));
}

std::string ChainTerm::to_string() const {
    std::string s;
    for (auto op : ops_) s += op == LayerOp::upsilon ? "\xCF\x85" : "\xCE\xBB";
    return s;
}

ChainEvaluation eval_chain(const ChainTerm& term, const FiniteRelation& r) {
    require_aa(r);
    const auto inv = r.inverse();
    ChainEvaluation ev;
    ElementSet x = ElementSet::full(r.size());
    ev.steps.push_back(x);
    for (auto it = term.ops().rbegin(); it != term.ops().rend(); ++it) {
        x.subtract(*it == LayerOp::upsilon ? altiset(r, x) : altiset(inv, x));
        ev.steps.push_back(x);
    }
    ev.result = std::move(x);
    return ev;
}

std::vector<std::size_t> chain_coloring(const ChainTerm& term, const FiniteRelation& r) {
    const auto d = upper_layers(r).class_count;
    if (term.length() != d)
        throw LengthError("chain term has length " + std::to_string(term.length()) + ", d(R) = " +
                          std::to_string(d));
    const auto ev = eval_chain(term, r);
    std::vector<std::size_t> color(r.size(), 0);
    for (std::size_t i = 0; i + 1 < ev.steps.size(); ++i)
        (ev.steps[i] - ev.steps[i + 1]).for_each([&](std::size_t x) { color[x] = i + 1; });
    return color;
}

namespace {

class ColoringSearch {
public:
    explicit ColoringSearch(std::vector<ElementSet> adj) : adj_(std::move(adj)), color_(adj_.size(), 0) {
        order_.resize(adj_.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](auto a, auto b) { return adj_[a].count() > adj_[b].count(); });
    }

    bool colorable(std::size_t k) {
        std::fill(color_.begin(), color_.end(), 0);
        return assign(0, k, 0);
    }

private:
    // Colours are 1..k; `used` is the largest colour in play so far, which
    // breaks the symmetry between unused colours.
    bool assign(std::size_t pos, std::size_t k, std::size_t used) {
        if (pos == order_.size()) return true;
        const auto v = order_[pos];
        for (std::size_t c = 1; c <= std::min(k, used + 1); ++c) {
            bool clash = false;
            adj_[v].for_each([&](std::size_t w) { clash = clash || color_[w] == c; });
            if (clash) continue;
            color_[v] = c;
            if (assign(pos + 1, k, std::max(used, c))) return true;
            color_[v] = 0;
        }
        return false;
    }

    std::vector<ElementSet> adj_;
    std::vector<std::size_t> color_;
    std::vector<std::size_t> order_;
};

std::size_t greedy_clique(const std::vector<ElementSet>& adj) {
    std::size_t best = adj.empty() ? 0 : 1;
    for (std::size_t start = 0; start < adj.size(); ++start) {
        ElementSet candidates = adj[start];
        std::size_t size = 1;
        while (!candidates.empty()) {
            const auto v = candidates.indices().front();
            ++size;
            candidates &= adj[v];
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace

std::size_t chromatic_number_oracle(const FiniteRelation& g, std::size_t cap) {
    if (g.size() > cap)
        throw OracleSizeError("chromatic oracle limited to " + std::to_string(cap) + " vertices, got " +
                              std::to_string(g.size()));
    if (!is_irreflexive(g)) throw ArgumentError("graph has loops and admits no proper colouring");
    if (g.size() == 0) return 0;
    const auto sym = relation_union(g, g.inverse());
    std::vector<ElementSet> adj;
    for (std::size_t a = 0; a < sym.size(); ++a) adj.push_back(sym.successors(a));
    ColoringSearch search(adj);
    for (auto k = greedy_clique(adj);; ++k)
        if (search.colorable(k)) return k;
}

std::size_t longest_chain(const FiniteRelation& t) {
    if (!is_strict_order(t)) throw OrderError("longest_chain needs a strict order");
    const auto n = t.size();
    // Kahn's topological order, then longest path counted in vertices.
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t a = 0; a < n; ++a) t.successors(a).for_each([&](std::size_t b) { ++indegree[b]; });
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < n; ++a)
        if (indegree[a] == 0) queue.push_back(a);
    std::vector<std::size_t> length(n, 1);
    std::size_t best = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto a = queue[head];
        best = std::max(best, length[a]);
        t.successors(a).for_each([&](std::size_t b) {
            length[b] = std::max(length[b], length[a] + 1);
            if (--indegree[b] == 0) queue.push_back(b);
        });
    }
    return best;
}

bool is_proper_coloring(const FiniteRelation& g, const std::vector<std::size_t>& colors) {
    if (colors.size() != g.size()) return false;
    for (auto [a, b] : g.pairs())
        if (colors[a] == colors[b]) return false;
    return true;
}

} // namespace altiset
