/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acp/oracle.h"

#include "testutil.h"

using namespace acp;
using namespace acp::test;

TEST_CASE("split programs replace disjunctions by chosen atoms") {
    DProgram pd = load_dlp("pd.dlp");
    REQUIRE(pd.clauses.size() == 4);

    // the selections {a}, {a,c}, {b}, {} from the worked example
    SplitSelection sel{{atoms({"a"}), atoms({"a", "c"}), atoms({"b"}), {}}};
    NormalProgram q = split_program(pd, sel);
    REQUIRE(q.clauses.size() == 5);
    CHECK(q.clauses[0] == NormalClause{Atom{"a"}, {}, {}});
    CHECK(q.clauses[1] == NormalClause{Atom{"a"}, {}, {Atom{"b"}}});
    CHECK(q.clauses[2] == NormalClause{Atom{"c"}, {}, {Atom{"b"}}});
    CHECK(q.clauses[3] == NormalClause{Atom{"b"}, {}, {Atom{"c"}}});
    CHECK(q.clauses[4] == NormalClause{std::nullopt, {}, {Atom{"a"}}});

    // that split witnesses {a,b} as a possible model
    CHECK(oracle::gl_stable(q, atoms({"a", "b"})));

    // full-head selections on a normal program reproduce the program
    DProgram normal_like = DProgram::from_clauses(
            {DClause{atoms({"x"}), {}, {}}, DClause{atoms({"y"}), {Atom{"x"}}, {}}});
    SplitSelection full{{atoms({"x"}), atoms({"y"})}};
    CHECK(split_program(normal_like, full).clauses.size() == 2);

    // empty selections produce a pure constraint program
    SplitSelection none{{{}, {}}};
    for (const NormalClause& r : split_program(normal_like, none).clauses) {
        CHECK_FALSE(r.head.has_value());
    }

    CHECK_THROWS_AS(split_program(pd, SplitSelection{{atoms({"z"}), {}, {}, {}}}),
            SelectionNotSubsetOfHeadError);
    CHECK_THROWS_AS(split_program(pd, SplitSelection{{}}), SelectionNotSubsetOfHeadError);
}

TEST_CASE("canonical split keeps the head atoms of the interpretation") {
    DProgram pd = load_dlp("pd.dlp");
    NormalProgram s = canonical_split(pd, atoms({"a", "b"}));
    // clause 1 contributes a and b, clause 2 contributes a, clause 3
    // contributes b, clause 4 becomes a constraint
    REQUIRE(s.clauses.size() == 5);
    CHECK(oracle::gl_stable(s, atoms({"a", "b"})));

    NormalProgram all_constraints = canonical_split(pd, {});
    for (const NormalClause& r : all_constraints.clauses) {
        CHECK_FALSE(r.head.has_value());
    }

    // on a normal program and a model, the canonical split keeps the
    // clauses whose heads the model makes true and turns the others
    // into constraints
    DProgram normal_like = DProgram::from_clauses({
            DClause{atoms({"x"}), {}, {}},
            DClause{atoms({"y"}), {Atom{"x"}}, {}},
            DClause{atoms({"z"}), {Atom{"z"}}, {}},
    });
    NormalProgram split = canonical_split(normal_like, atoms({"x", "y"}));
    REQUIRE(split.clauses.size() == 3);
    CHECK(split.clauses[0].head == Atom{"x"});
    CHECK(split.clauses[1].head == Atom{"y"});
    CHECK_FALSE(split.clauses[2].head.has_value());
}

TEST_CASE("possible models of the worked example") {
    DProgram pd = load_dlp("pd.dlp");
    CHECK(is_possible(pd, atoms({"a", "b"})));
    CHECK(is_possible(DProgram{}, {}));

    auto possible = enumerate_possible(pd);
    CHECK(std::find(possible.begin(), possible.end(), atoms({"a", "b"})) != possible.end());
    CHECK(possible == oracle::possible(pd));
}

TEST_CASE("single disjunctive fact") {
    DProgram p = DProgram::from_clauses({DClause{atoms({"a", "b"}), {}, {}}});
    CHECK(enumerate_possible(p) == sets({{"a"}, {"b"}, {"a", "b"}}));
}

TEST_CASE("cardinality embedding of disjunctive programs") {
    DProgram pd = load_dlp("pd.dlp");
    Program ca = to_ca(pd);
    REQUIRE(ca.clauses.size() == 4);
    CHECK(ca.clauses[0].head == cardinality_atom(1, atoms({"a", "b", "c"})));
    CHECK(ca.clauses[1].body[0] == neg(cardinality_atom(1, atoms({"b"}))));

    CHECK(enumerate_possible(pd) == enumerate_stable(ca));

    // empty heads become inconsistent cardinality atoms
    DProgram with_constraint = DProgram::from_clauses({DClause{{}, {Atom{"a"}}, {}}});
    Program cc = to_ca(with_constraint);
    CHECK(cc.clauses[0].head == cardinality_atom(1, {}));
    CHECK(is_constraint_clause(cc.clauses[0]));
}

TEST_CASE("possible models through some split equal those through the canonical split") {
    Rng rng(777001);
    for (int i = 0; i < 80; ++i) {
        DProgram p = random_disjunctive_program(rng, 4, 3);
        auto canonical = enumerate_possible(p);
        auto all_splits = oracle::possible_all_splits(p);
        CHECK(canonical == all_splits);
    }
}

TEST_CASE("on normal programs possible models coincide with stable models") {
    Rng rng(777002);
    for (int i = 0; i < 80; ++i) {
        NormalProgram n = random_normal_program(rng, 4, 3);
        std::vector<DClause> clauses;
        for (const NormalClause& r : n.clauses) {
            clauses.push_back(DClause{AtomSet{*r.head}, r.pos_body, r.neg_body});
        }
        DProgram d = DProgram::from_clauses(std::move(clauses));
        for (const AtomSet& m : subsets_of(atoms({"a", "b", "c", "d"}))) {
            CHECK(is_possible(d, m) == oracle::gl_stable(n, m));
        }
    }
}
