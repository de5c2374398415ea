/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.h"

using namespace acp;
using namespace acp::test;

namespace {

std::map<Atom, long long> indexed_weights(std::initializer_list<std::pair<const char*, long long>> xs) {
    std::map<Atom, long long> weights;
    for (const auto& [name, w] : xs) {
        weights.emplace(Atom{name}, w);
    }
    return weights;
}

}  // namespace

TEST_CASE("weight atom satisfaction sums selected weights") {
    // weights p_i = i over {p1,p2,p5,p6}, bound 6
    ConstraintAtom pb6 = weight_atom(
            6, indexed_weights({{"p1", 1}, {"p2", 2}, {"p5", 5}, {"p6", 6}}));
    CHECK(satisfies(atoms({"p6"}), pb6));
    CHECK(satisfies(atoms({"p5", "p1"}), pb6));
    CHECK(satisfies(atoms({"p5", "p2"}), pb6));
    CHECK_FALSE(satisfies(atoms({"p5"}), pb6));
    CHECK_FALSE(satisfies(atoms({"p1", "p2"}), pb6));
    // atoms outside the atom set are ignored
    CHECK(satisfies(atoms({"p6", "q"}), pb6));
}

TEST_CASE("trivial cardinality bound is always satisfied") {
    CHECK(satisfies({}, cardinality_atom(0, atoms({"a", "b"}))));
}

TEST_CASE("parity atom looks only at its own atom set") {
    ConstraintAtom even = parity_even_atom(atoms({"p1", "p7"}));
    CHECK(satisfies(atoms({"p1", "p7", "q"}), even));
    CHECK(satisfies(atoms({"q"}), even));
    CHECK_FALSE(satisfies(atoms({"p1"}), even));
}

TEST_CASE("product and maximum atoms compare exactly") {
    std::map<Atom, Rational> w{{Atom{"x"}, Rational(1, 2)}, {Atom{"y"}, Rational(8)}};
    ConstraintAtom prod = product_atom(Rational(4), w);
    CHECK(satisfies(atoms({"x", "y"}), prod));   // 1/2 * 8 = 4
    CHECK(satisfies(atoms({"y"}), prod));        // 8
    CHECK_FALSE(satisfies(atoms({"x"}), prod));  // 1/2

    ConstraintAtom mx = maximum_atom(Rational(5),
            {{Atom{"p2"}, Rational(2)}, {Atom{"p4"}, Rational(4)}, {Atom{"p6"}, Rational(6)},
                    {Atom{"p8"}, Rational(8)}});
    CHECK(satisfies(atoms({"p6"}), mx));
    CHECK_FALSE(satisfies(atoms({"p2", "p4"}), mx));
    CHECK_FALSE(satisfies({}, mx));
}

TEST_CASE("containment atom needs a witness inside the selection") {
    ConstraintAtom cc = containment_atom(
            atoms({"a", "b", "c"}), {atoms({"a", "b"}), atoms({"c"})});
    CHECK(satisfies(atoms({"a", "b"}), cc));
    CHECK(satisfies(atoms({"c", "a"}), cc));
    CHECK_FALSE(satisfies(atoms({"a"}), cc));
}

TEST_CASE("clause and program satisfaction") {
    Program p4 = load_acp("p4.acp");
    REQUIRE(p4.clauses.size() == 3);
    // r2 = 1{b,c} :- not(1{e}): body false under {b,c,e}
    CHECK(satisfies(atoms({"b", "c", "e"}), p4.clauses[1]));
    CHECK_FALSE(satisfies_body(atoms({"b", "c", "e"}), p4.clauses[1]));

    Program empty;
    CHECK(satisfies(atoms({"a"}), empty));
    CHECK(satisfies({}, empty));

    Program p5 = load_acp("p5.acp");
    CHECK(satisfies(atoms({"q"}), p5));
}

TEST_CASE("consistency of constraint atoms") {
    CHECK_FALSE(is_consistent(cardinality_atom(2, atoms({"a"}))));
    CHECK_FALSE(is_consistent(
            weight_atom(7, indexed_weights({{"p1", 1}, {"p2", 2}, {"p3", 3}}))));
    CHECK(is_consistent(table_atom(atoms({"a", "b"}), {atoms({"a"})})));
    CHECK(is_consistent(cardinality_atom(0, {})));
    CHECK_FALSE(is_consistent(inconsistent_atom()));
    CHECK_FALSE(is_consistent(parity_odd_atom({})));
    CHECK(is_consistent(parity_odd_atom(atoms({"a"}))));
    // finite upper bound may leave a hole: weights {5}, range [2,3]
    CHECK_FALSE(is_consistent(weight_range_atom(2, 3, indexed_weights({{"a", 5}}))));
    CHECK(is_consistent(weight_range_atom(2, 3, indexed_weights({{"a", 3}}))));
}

TEST_CASE("monotonicity by family and by table scan") {
    CHECK_FALSE(is_monotone(parity_even_atom(atoms({"p1", "p7"}))));
    CHECK(is_monotone(maximum_atom(Rational(5),
            {{Atom{"p2"}, Rational(2)}, {Atom{"p4"}, Rational(4)}, {Atom{"p6"}, Rational(6)},
                    {Atom{"p8"}, Rational(8)}})));
    CHECK(is_monotone(table_atom(atoms({"a", "b"}), {atoms({"a"}), atoms({"a", "b"})})));
    CHECK_FALSE(is_monotone(table_atom(atoms({"a", "b"}), {atoms({"a"})})));
    CHECK(is_monotone(cardinality_atom(2, atoms({"a"}))));  // inconsistent but monotone
    CHECK(is_monotone(inconsistent_atom()));
    CHECK(is_monotone(weight_range_atom(1, std::nullopt, indexed_weights({{"a", 1}}))));
    CHECK_FALSE(is_monotone(weight_range_atom(0, 1, indexed_weights({{"a", 1}, {"b", 1}}))));
    // a finite upper bound at the total weight never bites
    CHECK(is_monotone(weight_range_atom(0, 2, indexed_weights({{"a", 1}, {"b", 1}}))));
    CHECK_FALSE(is_monotone(product_atom(Rational(1), {{Atom{"a"}, Rational(1, 2)}})));
    CHECK(is_monotone(product_atom(Rational(2), {{Atom{"a"}, Rational(2)}})));
}

TEST_CASE("definite atoms are minimal satisfying sets") {
    CHECK(is_definite(table_atom(atoms({"a", "b"}), {atoms({"a", "b"})})));
    CHECK(is_definite(pb_atom(Atom{"a"})));
    CHECK_FALSE(is_definite(cardinality_atom(1, atoms({"a", "b"}))));
    CHECK(is_definite(cardinality_atom(2, atoms({"a", "b"}))));
    CHECK(is_definite(cardinality_atom(0, {})));
    CHECK_FALSE(is_definite(weight_atom(1, indexed_weights({{"a", 1}, {"b", 2}}))));
    CHECK(is_definite(weight_atom(3, indexed_weights({{"a", 1}, {"b", 2}}))));
    // a zero-weight atom is never part of a minimal set
    CHECK_FALSE(is_definite(weight_atom(1, indexed_weights({{"a", 1}, {"z", 0}}))));
    CHECK_FALSE(is_definite(inconsistent_atom()));
    CHECK(is_definite(maximum_atom(Rational(1), {{Atom{"a"}, Rational(2)}})));
    CHECK_FALSE(is_definite(maximum_atom(
            Rational(1), {{Atom{"a"}, Rational(2)}, {Atom{"b"}, Rational(3)}})));
}

TEST_CASE("head and atom set helpers") {
    Program p4 = load_acp("p4.acp");
    CHECK(hset(p4) == atoms({"a", "b", "c", "d"}));
    CHECK(hset(Program{}) == AtomSet{});
    CHECK(aset(neg(cardinality_atom(1, atoms({"e"})))) == atoms({"e"}));
    CHECK(atoms_of(p4) == atoms({"a", "b", "c", "d", "e"}));
}

TEST_CASE("constraint clauses are detected via head consistency") {
    Program p4 = load_acp("p4.acp");
    CHECK(is_constraint_clause(p4.clauses[0]));  // head 2{a}
    CHECK_FALSE(is_constraint_clause(p4.clauses[1]));
}

TEST_CASE("construction rejects invalid constraints") {
    CHECK_THROWS_AS(weight_atom(1, indexed_weights({{"a", -1}})), NegativeWeightError);
    CHECK_THROWS_AS(weight_range_atom(3, 2, indexed_weights({{"a", 1}})), BoundInversionError);
    CHECK_THROWS_AS(weight_atom(-1, indexed_weights({{"a", 1}})), InvalidConstraintError);
    CHECK_THROWS_AS(cardinality_atom(-1, atoms({"a"})), InvalidConstraintError);
    CHECK_THROWS_AS(table_atom(atoms({"a"}), {atoms({"a", "b"})}), InvalidConstraintError);
    CHECK_THROWS_AS(acp::atom(""), InvalidConstraintError);
}

TEST_CASE("to_table preserves satisfaction") {
    ConstraintAtom range = weight_range_atom(1, 2, indexed_weights({{"a", 1}, {"b", 2}}));
    ConstraintAtom table = to_table(range);
    for (const AtomSet& s : subsets_of(atoms({"a", "b"}))) {
        CHECK(satisfies(s, range) == satisfies(s, table));
    }
}

TEST_CASE("canonical order is size first, then lexicographic") {
    auto xs = sets({{"a", "d"}, {"d"}, {"a"}, {}});
    CHECK(xs[0] == atoms({}));
    CHECK(xs[1] == atoms({"a"}));
    CHECK(xs[2] == atoms({"d"}));
    CHECK(xs[3] == atoms({"a", "d"}));
}

TEST_CASE("rational arithmetic stays exact") {
    CHECK(Rational(1, 3) * Rational(3, 2) == Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), InvalidConstraintError);
}
