/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/horn.h"

namespace acp {

bool is_horn(const Program& p) {
    for (const Clause& r : p.clauses) {
        if (!is_monotone(r.head)) {
            return false;
        }
        for (const Literal& lit : r.body) {
            if (lit.negated || !is_monotone(lit.atom)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void require_horn(const Program& p, const char* op) {
    if (!is_horn(p)) {
        throw NotHornError(std::string(op) + " requires a Horn program");
    }
}

}  // namespace

Computation canonical_computation(const Program& p, const Interpretation& m) {
    require_horn(p, "canonical_computation");
    if (!is_model(p, m)) {
        throw NotAModelError("canonical_computation requires a model of the program");
    }
    Computation t;
    t.steps.push_back({});
    for (;;) {
        Interpretation current = t.steps.back();
        Interpretation next = set_intersect(hset_of(p, applicable_clauses(p, current)), m);
        bool fixed = next == current;
        t.steps.push_back(std::move(next));
        if (fixed) {
            return t;
        }
    }
}

bool is_derivable(const Program& p, const Interpretation& m) {
    require_horn(p, "is_derivable");
    if (!is_model(p, m)) {
        return false;
    }
    return canonical_computation(p, m).result() == m;
}

std::vector<Interpretation> enumerate_derivable(const Program& p, std::size_t budget) {
    require_horn(p, "enumerate_derivable");
    AtomSet heads = hset(p);
    if (heads.size() > budget) {
        throw BudgetExceededError(heads.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& candidate : subsets_of(heads)) {
        if (is_derivable(p, candidate)) {
            result.push_back(candidate);
        }
    }
    return result;
}

Interpretation largest_derivable(const Program& p) {
    require_horn(p, "largest_derivable");
    for (const Clause& r : p.clauses) {
        if (is_constraint_clause(r)) {
            throw HasConstraintClausesError(
                    "largest_derivable requires a program without constraint clauses");
        }
    }
    return canonical_computation(p, atoms_of(p)).result();
}

}  // namespace acp
