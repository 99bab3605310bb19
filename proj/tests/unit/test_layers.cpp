#include <doctest.h>

#include <algorithm>
#include <set>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "altiset/errors.hpp"
#include "altiset/layers.hpp"
#include "helpers.hpp"

using namespace altiset;
using testing::Indices;
using testing::rel;

namespace {

std::vector<ChainTerm> all_terms(std::size_t len) {
    std::vector<ChainTerm> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
        std::vector<LayerOp> ops;
        for (std::size_t i = 0; i < len; ++i) ops.push_back(bits >> i & 1 ? LayerOp::lambda : LayerOp::upsilon);
        out.emplace_back(ops);
    }
    return out;
}

} // namespace

TEST_SUITE("layers") {

TEST_CASE("layer examples") {
    const auto chain = rel(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto d = upper_layers(chain);
    CHECK(d.upper_index == Indices{3, 2, 1});
    CHECK(d.lower_index == Indices{1, 2, 3});
    CHECK(d.class_count == 3);
    CHECK(d.upper_layers() == std::vector<Indices>{{2}, {1}, {0}});

    CHECK(upper_layers(rel(3, {{0, 1}, {1, 0}})).class_count == 1);
    CHECK(upper_layers(rel(3, {})).class_count == 1);

    const auto edge = upper_layers(rel(3, {{0, 1}}));
    CHECK(edge.class_count == 2);
    CHECK(edge.upper_layers() == std::vector<Indices>{{1, 2}, {0}});

    CHECK(upper_layers(rel(0, {})).class_count == 0);
}

TEST_CASE("cyclic relations report a witness cycle") {
    try {
        upper_layers(rel(3, {{0, 1}, {1, 2}, {2, 0}}));
        FAIL("expected CyclicRelationError");
    } catch (const CyclicRelationError& e) {
        CHECK(e.cycle().size() == 3);
        CHECK(std::string(e.what()).find("0 -> 1 -> 2 -> 0") != std::string::npos);
    }
}

TEST_CASE("operators") {
    const auto chain = rel(3, {{0, 1}, {1, 2}, {0, 2}});
    const ElementSet empty(3);
    CHECK(apply_operator(LayerOp::upsilon, chain, empty).empty());
    CHECK(apply_operator(LayerOp::lambda, chain, empty).empty());
    CHECK(apply_operator(LayerOp::upsilon, chain, ElementSet::full(3)).indices() == Indices{0, 1});
    CHECK(apply_operator(LayerOp::lambda, chain, ElementSet::full(3)).indices() == Indices{1, 2});
}

TEST_CASE("chain terms") {
    CHECK(ChainTerm::parse("uLλυ").length() == 4);
    CHECK(ChainTerm::parse("lu").to_string() == "λυ");
    CHECK_THROWS_AS(ChainTerm::parse(""), ArgumentError);
    CHECK_THROWS_AS(ChainTerm::parse("ux"), ArgumentError);
}

TEST_CASE("chain colouring examples") {
    const auto chain = rel(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto c = chain_coloring(ChainTerm::parse("uuu"), chain);
    CHECK(std::set<std::size_t>(c.begin(), c.end()).size() == 3);

    const auto edge = rel(3, {{0, 1}});
    const auto e = chain_coloring(ChainTerm::parse("lu"), edge);
    CHECK(e[0] != e[1]);
    CHECK(*std::max_element(e.begin(), e.end()) == 2);

    CHECK(chain_coloring(ChainTerm::parse("u"), rel(1, {})) == Indices{1});
    CHECK(eval_chain(ChainTerm::parse("u"), rel(2, {{0, 1}, {1, 0}})).result.empty());
    CHECK_THROWS_AS(chain_coloring(ChainTerm::parse("uu"), chain), LengthError);
}

TEST_CASE("chromatic number and longest chain") {
    CHECK(chromatic_number_oracle(rel(4, {})) == 1);
    CHECK(chromatic_number_oracle(rel(3, {{0, 1}, {1, 2}, {2, 0}})) == 3);
    CHECK(chromatic_number_oracle(rel(0, {})) == 0);
    CHECK_THROWS_AS(chromatic_number_oracle(rel(2, {{0, 0}})), ArgumentError);
    CHECK_THROWS_AS(chromatic_number_oracle(rel(13, {})), OracleSizeError);

    CHECK(longest_chain(rel(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
    CHECK(longest_chain(rel(4, {})) == 1);
    CHECK_THROWS_AS(longest_chain(rel(3, {{0, 1}, {1, 2}})), OrderError);

    for (std::size_t k = 1; k <= 6; ++k) {
        const auto c = FiniteRelation::from_predicate(Universe(k), [](std::size_t a, std::size_t b) { return a < b; });
        CHECK(chromatic_number_oracle(c) == k);
        CHECK(longest_chain(c) == k);
    }
}

TEST_CASE("oracles agree on random graphs") {
    gen::Rng rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const auto n = gen::uniform(rng, 1, 8);
        auto g = gen::relation(rng, n, 0.35);
        g = relation_difference(g, FiniteRelation::identity(Universe(n)));
        CHECK(chromatic_number_oracle(g) == oracle::chromatic_number(g));

        const auto t = transitive_closure(asym_interior(gen::aa_relation(rng, n, 0.4)));
        CHECK(longest_chain(t) == oracle::longest_path(t));
    }
}

TEST_CASE("layer theorems on random AA relations") {
    gen::Rng rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = gen::uniform(rng, 1, 10);
        const auto r = gen::aa_relation(rng, n, gen::uniform(rng, 1, 6) / 10.0);
        const auto t = transitive_closure(asym_interior(r));
        const auto d = upper_layers(r);

        // Both layerings cover A with the same number of classes.
        CHECK(*std::max_element(d.upper_index.begin(), d.upper_index.end()) ==
              *std::max_element(d.lower_index.begin(), d.lower_index.end()));
        CHECK(std::count(d.upper_index.begin(), d.upper_index.end(), 0) == 0);
        CHECK(d.class_count == chromatic_number_oracle(t));
        CHECK(d.class_count == longest_chain(t));

        // No level set carries an arc of T.
        CHECK(is_proper_coloring(t, d.upper_index));
        CHECK(is_proper_coloring(t, d.lower_index));

        // Layers depend only on the strict order induced by the index.
        const auto pi = FiniteRelation::from_predicate(
            Universe(n), [&](std::size_t a, std::size_t b) { return d.upper_index[a] > d.upper_index[b]; });
        CHECK(upper_layers(pi).upper_index == d.upper_index);

        // upsilon and lambda commute and strip both extremes at once.
        ElementSet x(n);
        for (std::size_t a = 0; a < n; ++a)
            if (gen::coin(rng, 0.6)) x.insert(a);
        const auto ul = apply_operator(LayerOp::upsilon, r, apply_operator(LayerOp::lambda, r, x));
        const auto lu = apply_operator(LayerOp::lambda, r, apply_operator(LayerOp::upsilon, r, x));
        CHECK(ul == lu);
        CHECK(ul == x - (altiset::altiset(r, x) | altiset::altiset(r.inverse(), x)));
        CHECK(apply_operator(LayerOp::upsilon, r, x).empty() == apply_operator(LayerOp::lambda, r, x).empty());

        if (d.class_count <= 6) {
            for (const auto& term : all_terms(d.class_count)) {
                CHECK(eval_chain(term, r).result.empty());
                const auto colors = chain_coloring(term, r);
                CHECK(is_proper_coloring(t, colors));
                CHECK(*std::max_element(colors.begin(), colors.end()) == d.class_count);
            }
            if (d.class_count > 1)
                for (const auto& term : all_terms(d.class_count - 1)) CHECK_FALSE(eval_chain(term, r).result.empty());
        }
    }
}

TEST_CASE("layers cover A only under the AA-property") {
    gen::Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const auto r = gen::relation(rng, gen::uniform(rng, 2, 7), 0.4);
        if (has_aa_property(r)) CHECK_NOTHROW(upper_layers(r));
        else CHECK_THROWS_AS(upper_layers(r), CyclicRelationError);
    }
}

} // TEST_SUITE
