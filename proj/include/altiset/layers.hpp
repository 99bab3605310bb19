#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "altiset/element_set.hpp"
#include "altiset/relation.hpp"

namespace altiset {

/// Successive altisets of a relation with the AA-property.
///
/// upper_index[x] = i iff x lies in the i-th upper altiset V^i (layers peeled
/// off by repeatedly removing the altiset of R); lower_index likewise for R^-1.
/// Indices are 1-based. class_count is d(R), the number of layers on either side.
struct LayerDecomposition {
    std::vector<std::size_t> upper_index;
    std::vector<std::size_t> lower_index;
    std::size_t class_count = 0;

    /// V^1, V^2, ... as ascending index lists.
    std::vector<std::vector<std::size_t>> upper_layers() const;
    /// V_1, V_2, ...
    std::vector<std::vector<std::size_t>> lower_layers() const;
};

/// Throws CyclicRelationError (with a witness cycle) when R lacks the AA-property.
LayerDecomposition upper_layers(const FiniteRelation& r);

/// upsilon(X) = X \ V_X(R), lambda(X) = X \ V_X(R^-1)
enum class LayerOp { upsilon, lambda };

ElementSet apply_operator(LayerOp op, const FiniteRelation& r, const ElementSet& x);

/// A word over {upsilon, lambda}, applied right to left like composition:
/// the term "lambda upsilon" applies upsilon first.
class ChainTerm {
public:
    /// Throws ArgumentError when empty.
    explicit ChainTerm(std::vector<LayerOp> ops);
    /// Letters: 'u', 'U' or "υ" for upsilon; 'l', 'L' or "λ" for lambda.
    static ChainTerm parse(std::string_view text);

    const std::vector<LayerOp>& ops() const noexcept { return ops_; }
    std::size_t length() const noexcept { return ops_.size(); }
    /// Greek-letter spelling, leftmost operator first.
    std::string to_string() const;

private:
    std::vector<LayerOp> ops_;
};

struct ChainEvaluation {
    ElementSet result;
    /// X_1 = A, X_2, ..., X_{len+1} = result: the set before and after each
    /// operator in application order.
    std::vector<ElementSet> steps;
};

/// Throws CyclicRelationError when R lacks the AA-property.
ChainEvaluation eval_chain(const ChainTerm& term, const FiniteRelation& r);

/// Colours x with the (1-based) step at which the chain removes it.
/// Throws LengthError unless term.length() == d(R).
std::vector<std::size_t> chain_coloring(const ChainTerm& term, const FiniteRelation& r);

/// Exact chromatic number of the underlying undirected graph of `g`
/// (arcs symmetrised). Zero for the empty universe. Throws OracleSizeError
/// above `cap` vertices and ArgumentError when `g` has loops.
std::size_t chromatic_number_oracle(const FiniteRelation& g, std::size_t cap = 12);

/// Vertex count of the longest chain of a strict order (0 on the empty
/// universe). Throws OrderError when `t` is not a strict order.
std::size_t longest_chain(const FiniteRelation& t);

/// True iff no arc of `g` joins two vertices of the same colour.
bool is_proper_coloring(const FiniteRelation& g, const std::vector<std::size_t>& colors);

} // namespace altiset
