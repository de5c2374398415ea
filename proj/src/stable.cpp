/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/stable.h"

namespace acp {

namespace {

void require_monotone(const Program& p, const char* op) {
    for (const Clause& r : p.clauses) {
        if (!is_monotone(r.head)) {
            throw NonMonotoneAtomError(std::string(op) + ": non-monotone head atom");
        }
        for (const Literal& lit : r.body) {
            if (!is_monotone(lit.atom)) {
                throw NonMonotoneAtomError(std::string(op) + ": non-monotone body atom");
            }
        }
    }
}

}  // namespace

Reduct reduct(const Program& p, const Interpretation& m) {
    require_monotone(p, "reduct");
    Reduct result;
    result.program.universe = p.universe;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        const Clause& r = p.clauses[i];
        bool blocked = false;
        for (const Literal& lit : r.body) {
            if (lit.negated && satisfies(m, lit.atom)) {
                blocked = true;
                break;
            }
        }
        if (blocked) {
            result.removed.push_back(i);
            continue;
        }
        Clause kept{r.head, {}};
        for (const Literal& lit : r.body) {
            if (!lit.negated) {
                kept.body.push_back(lit);
            }
        }
        result.stripped[i] = result.program.clauses.size();
        result.program.clauses.push_back(std::move(kept));
    }
    return result;
}

bool is_stable(const Program& p, const Interpretation& m) {
    return is_derivable(reduct(p, m).program, m);
}

std::vector<Interpretation> enumerate_stable(const Program& p, std::size_t budget) {
    require_monotone(p, "enumerate_stable");
    AtomSet heads = hset(p);
    if (heads.size() > budget) {
        throw BudgetExceededError(heads.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& candidate : subsets_of(heads)) {
        if (is_stable(p, candidate)) {
            result.push_back(candidate);
        }
    }
    return result;
}

Interpretation td(const Program& p, const Interpretation& m) {
    for (const Clause& r : p.clauses) {
        if (!is_definite(r.head)) {
            throw NotDefiniteError("td requires every clause head to be definite");
        }
    }
    return hset_of(p, applicable_clauses(p, m));
}

}  // namespace acp
