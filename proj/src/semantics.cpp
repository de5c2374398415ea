/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/semantics.h"

#include <algorithm>

namespace acp {

std::vector<std::size_t> applicable_clauses(const Program& p, const Interpretation& m) {
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        if (satisfies_body(m, p.clauses[i])) {
            result.push_back(i);
        }
    }
    return result;
}

AtomSet hset_of(const Program& p, const std::vector<std::size_t>& indices) {
    AtomSet result;
    for (std::size_t i : indices) {
        result = set_union(result, hset(p.clauses[i]));
    }
    return result;
}

TndResult tnd(const Program& p, const Interpretation& m, std::size_t budget) {
    TndResult result;
    result.applicable = applicable_clauses(p, m);
    AtomSet heads = hset_of(p, result.applicable);
    if (heads.size() > budget) {
        throw BudgetExceededError(heads.size(), budget);
    }
    for (const AtomSet& candidate : subsets_of(heads)) {
        bool ok = true;
        for (std::size_t i : result.applicable) {
            if (!satisfies(candidate, p.clauses[i].head)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.derivable_sets.push_back(candidate);
        }
    }
    return result;
}

bool is_model(const Program& p, const Interpretation& m) {
    return satisfies(m, p);
}

bool is_supported(const Program& p, const Interpretation& m) {
    if (!is_model(p, m)) {
        return false;
    }
    return is_subset(m, hset_of(p, applicable_clauses(p, m)));
}

namespace {

template <typename Check>
std::vector<Interpretation> enumerate_by(const Program& p, const std::optional<AtomSet>& scope,
        std::size_t budget, const Check& check) {
    AtomSet base = scope ? *scope : atoms_of(p);
    if (base.size() > budget) {
        throw BudgetExceededError(base.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& candidate : subsets_of(base)) {
        if (check(candidate)) {
            result.push_back(candidate);
        }
    }
    return result;
}

}  // namespace

std::vector<Interpretation> enumerate_models(
        const Program& p, const std::optional<AtomSet>& scope, std::size_t budget) {
    return enumerate_by(p, scope, budget, [&](const AtomSet& m) { return is_model(p, m); });
}

std::vector<Interpretation> enumerate_supported(
        const Program& p, const std::optional<AtomSet>& scope, std::size_t budget) {
    return enumerate_by(p, scope, budget, [&](const AtomSet& m) { return is_supported(p, m); });
}

}  // namespace acp
