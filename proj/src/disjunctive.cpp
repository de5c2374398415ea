/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/disjunctive.h"

#include "acp/stable.h"

namespace acp {

DProgram DProgram::from_clauses(std::vector<DClause> clauses, const AtomSet& extra_universe) {
    DProgram p;
    p.clauses = std::move(clauses);
    for (const DClause& r : p.clauses) {
        p.universe.add_all(r.head);
        for (const Atom& a : r.pos_body) {
            p.universe.add(a);
        }
        for (const Atom& a : r.neg_body) {
            p.universe.add(a);
        }
    }
    p.universe.add_all(extra_universe);
    return p;
}

NormalProgram split_program(const DProgram& p, const SplitSelection& sel) {
    if (sel.chosen.size() != p.clauses.size()) {
        throw SelectionNotSubsetOfHeadError("selection must cover every clause");
    }
    std::vector<NormalClause> clauses;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        const DClause& r = p.clauses[i];
        const AtomSet& selected = sel.chosen[i];
        if (!is_subset(selected, r.head)) {
            throw SelectionNotSubsetOfHeadError(
                    "selection for clause " + std::to_string(i) + " is not a subset of its head");
        }
        if (selected.empty()) {
            clauses.push_back(NormalClause{std::nullopt, r.pos_body, r.neg_body});
        } else {
            for (const Atom& a : selected) {
                clauses.push_back(NormalClause{a, r.pos_body, r.neg_body});
            }
        }
    }
    return NormalProgram::from_clauses(std::move(clauses), p.universe.atom_set());
}

NormalProgram canonical_split(const DProgram& p, const Interpretation& m) {
    SplitSelection sel;
    sel.chosen.reserve(p.clauses.size());
    for (const DClause& r : p.clauses) {
        sel.chosen.push_back(set_intersect(m, r.head));
    }
    return split_program(p, sel);
}

bool is_possible(const DProgram& p, const Interpretation& m) {
    return is_stable(normal_to_pb(canonical_split(p, m)), m);
}

namespace {

AtomSet head_atoms(const DProgram& p) {
    AtomSet result;
    for (const DClause& r : p.clauses) {
        result = set_union(result, r.head);
    }
    return result;
}

}  // namespace

std::vector<Interpretation> enumerate_possible(const DProgram& p, std::size_t budget) {
    AtomSet candidates = head_atoms(p);
    if (candidates.size() > budget) {
        throw BudgetExceededError(candidates.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& m : subsets_of(candidates)) {
        if (is_possible(p, m)) {
            result.push_back(m);
        }
    }
    return result;
}

Program to_ca(const DProgram& p) {
    Program result;
    result.universe = p.universe;
    for (const DClause& r : p.clauses) {
        Clause c{cardinality_atom(1, r.head), {}};
        for (const Atom& a : r.pos_body) {
            c.body.push_back(pos(cardinality_atom(1, {a})));
        }
        for (const Atom& a : r.neg_body) {
            c.body.push_back(neg(cardinality_atom(1, {a})));
        }
        result.clauses.push_back(std::move(c));
    }
    return result;
}

}  // namespace acp
