#include <doctest.h>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "altiset/errors.hpp"
#include "altiset/relation.hpp"
#include "helpers.hpp"

using namespace altiset;
using testing::Indices;
using testing::Pairs;
using testing::rel;

TEST_SUITE("relation") {

TEST_CASE("element set basics") {
    auto s = ElementSet::from_indices(70, Indices{0, 64, 69});
    CHECK(s.count() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK(s.complement().count() == 67);
    CHECK((s | s.complement()) == ElementSet::full(70));
    CHECK((s & s.complement()).empty());
    CHECK(s.indices() == Indices{0, 64, 69});
    CHECK_THROWS_AS(ElementSet::from_indices(3, Indices{3}), IndexError);
}

TEST_CASE("universe labels must be distinct") {
    CHECK_THROWS_AS(Universe(std::vector<std::string>{"a", "a"}), ArgumentError);
    CHECK(Universe(std::vector<std::string>{"a", "b"}).size() == 2);
}

TEST_CASE("pairs out of range are rejected") {
    CHECK_THROWS_AS(rel(2, {{0, 2}}), IndexError);
}

TEST_CASE("induce") {
    const std::vector<Key> ascending{1, 2, 3}, constant{5, 5, 5}, bumpy{2, 1, 2};
    CHECK(induce(ascending, Strictness::strict).pairs() == Pairs{{0, 1}, {0, 2}, {1, 2}});
    CHECK(induce(constant, Strictness::strict).pairs().empty());
    CHECK(induce(bumpy, Strictness::strict).pairs() == Pairs{{1, 0}, {1, 2}});
    CHECK(induce(constant, Strictness::non_strict) == FiniteRelation::full(Universe(3)));
    CHECK_THROWS_AS(induce(Universe(2), ascending, Strictness::strict), DimensionError);
}

TEST_CASE("union and difference") {
    const auto a = rel(3, {{0, 1}}), b = rel(3, {{1, 2}});
    CHECK(relation_union(a, b).pairs() == Pairs{{0, 1}, {1, 2}});
    CHECK(relation_union(a, a) == a);
    CHECK(relation_union(rel(2, {{0, 1}}), rel(2, {{1, 0}})).pairs() == Pairs{{0, 1}, {1, 0}});
    CHECK(relation_difference(relation_union(a, b), b) == a);
    CHECK_THROWS_AS(relation_union(std::span<const FiniteRelation>{}), DimensionError);
    CHECK_THROWS_AS(relation_union(a, rel(2, {})), DimensionError);
}

TEST_CASE("asymmetric interior") {
    CHECK(asym_interior(rel(3, {{0, 1}, {1, 0}, {1, 2}})).pairs() == Pairs{{1, 2}});
    CHECK(asym_interior(rel(2, {{0, 1}, {1, 0}, {0, 0}})).pairs().empty());
    const auto strict = rel(3, {{0, 1}, {0, 2}});
    CHECK(asym_interior(strict) == strict);
}

TEST_CASE("transitive closure") {
    CHECK(transitive_closure(rel(3, {{0, 1}, {1, 2}})).pairs() == Pairs{{0, 1}, {0, 2}, {1, 2}});
    const auto t = rel(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(transitive_closure(t) == t);
    CHECK(transitive_closure(rel(3, {{0, 1}, {1, 2}, {2, 0}})) == FiniteRelation::full(Universe(3)));
}

TEST_CASE("complementary inversion") {
    CHECK(complementary_inversion(FiniteRelation::full(Universe(3))).pairs().empty());
    CHECK(complementary_inversion(rel(2, {})) == FiniteRelation::full(Universe(2)));
    CHECK(complementary_inversion(rel(2, {{0, 1}})).pairs() == Pairs{{0, 0}, {0, 1}, {1, 1}});
    const auto cyc = rel(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(complementary_inversion(cyc).pair_count() == 6);
    CHECK(altiset::altiset(complementary_inversion(cyc)).empty());
}

TEST_CASE("reflexive incomparability is an equivalence on orders") {
    const auto chain = rel(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(reflexive_incomparability(chain) == FiniteRelation::identity(Universe(3)));
    CHECK(reflexive_incomparability(rel(2, {})) == FiniteRelation::full(Universe(2)));
}

TEST_CASE("predicates") {
    CHECK(is_symmetric(rel(2, {})));
    CHECK(is_symmetric(rel(2, {{0, 1}, {1, 0}})));
    CHECK_FALSE(is_symmetric(rel(2, {{0, 1}})));
    CHECK(is_strict_order(rel(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(is_strict_order(rel(3, {{0, 1}, {1, 2}})));
    CHECK(is_equivalence(FiniteRelation::identity(Universe(4))));
    CHECK_FALSE(is_equivalence(rel(2, {{0, 1}})));
}

TEST_CASE("AA-property") {
    CHECK_FALSE(has_aa_property(rel(3, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK(has_aa_property(rel(2, {{0, 1}, {1, 0}})));
    CHECK(has_aa_property(rel(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(has_aa_property(rel(3, {})));
    // A cycle hidden behind symmetric pairs is no cycle of asym R.
    CHECK(has_aa_property(rel(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}})));

    const auto cycle = find_asym_cycle(rel(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}));
    REQUIRE(cycle);
    const auto q = asym_interior(rel(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}));
    for (std::size_t i = 0; i < cycle->size(); ++i)
        CHECK(q.contains((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
}

TEST_CASE("altiset examples") {
    const auto poset = rel(3, {{0, 1}, {1, 2}, {0, 2}, {0, 0}, {1, 1}, {2, 2}});
    CHECK(altiset::altiset(poset).indices() == Indices{2});
    CHECK(altiset::altiset(rel(3, {{0, 1}, {1, 2}, {2, 0}})).empty());
    CHECK(altiset::altiset(rel(3, {{0, 1}, {1, 0}})) == ElementSet::full(3));
    CHECK(altiset::altiset(poset, Indices{0, 1}).indices() == Indices{1});
    CHECK(altiset::altiset(rel(0, {})).empty());
    CHECK_THROWS_AS(altiset::altiset(poset, Indices{3}), IndexError);
}

TEST_CASE("restrict") {
    const auto r = restrict(FiniteRelation::full(Universe(3)), Indices{0});
    CHECK(r.relation.pairs() == Pairs{{0, 0}});
    const auto p = restrict(rel(3, {{0, 2}}), Indices{0, 2});
    CHECK(p.relation.pairs() == Pairs{{0, 1}});
    CHECK(p.indices == Indices{0, 2});
    const auto any = rel(3, {{0, 1}, {2, 2}});
    CHECK(restrict(any, testing::all(3)).relation == any);
}

TEST_CASE("altiset identities on random relations") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const auto n = gen::uniform(rng, 0, 8);
        const auto r = gen::relation(rng, n, 0.35);
        const auto v = altiset::altiset(r);
        CHECK(v.indices() == oracle::altiset(r));
        CHECK(altiset::altiset(complementary_inversion(r)) == v);
        CHECK(altiset::altiset(asym_interior(r)) == v);
        CHECK(complementary_inversion(complementary_inversion(r)) == r);
        CHECK((v == ElementSet::full(n)) == is_symmetric(r));

        // Symmetric pairs away from the asymmetric interior leave the altiset alone.
        const auto a = asym_interior(r);
        auto s = gen::relation(rng, n, 0.3);
        s = relation_difference(relation_union(s, s.inverse()), relation_union(a, a.inverse()));
        CHECK(altiset::altiset(relation_union(r, s)) == v);
        CHECK(altiset::altiset(relation_difference(r, s)) == v);

        if (has_aa_property(r)) {
            const auto t = transitive_closure(asym_interior(r));
            CHECK(is_strict_order(t));
            CHECK(altiset::altiset(t) == v);
        }

        const auto sub = gen::partition(rng, n);
        if (!sub.empty()) {
            std::vector<bool> in(n, false);
            for (auto x : sub.front()) in[x] = true;
            CHECK(altiset::altiset(r, sub.front()).indices() == oracle::altiset(r, in));
        }
    }
}

TEST_CASE("random AA relations have a nonempty altiset") {
    gen::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = gen::aa_relation(rng, gen::uniform(rng, 1, 10), 0.4);
        REQUIRE(has_aa_property(r));
        CHECK_FALSE(altiset::altiset(r).empty());
    }
}

} // TEST_SUITE
