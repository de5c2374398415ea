/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file semantics.h
 *
 * Applicability, the nondeterministic one-step provability operator,
 * and model / supported-model checking and enumeration.
 *
 ***********************************************************************/

#pragma once

#include "acp/core.h"

#include <cstddef>
#include <optional>
#include <vector>

namespace acp {

/// Enumerations refuse to scan more than 2^budget candidates.
inline constexpr std::size_t kDefaultBudget = 20;

/// One application of the one-step provability operator: the applicable
/// clause indices and every set derivable from them, canonically
/// ordered. Each derivable set is a subset of the applicable head sets
/// and satisfies every applicable head.
struct TndResult {
    std::vector<std::size_t> applicable;
    std::vector<Interpretation> derivable_sets;
};

/// Indices of the clauses whose body m satisfies.
std::vector<std::size_t> applicable_clauses(const Program& p, const Interpretation& m);

/// Head atoms of the clauses with the given indices.
AtomSet hset_of(const Program& p, const std::vector<std::size_t>& indices);

TndResult tnd(const Program& p, const Interpretation& m, std::size_t budget = kDefaultBudget);

bool is_model(const Program& p, const Interpretation& m);

/// A model all of whose atoms have support: m ⊆ hset of the applicable
/// clauses. Equivalent to m being a fixpoint of the one-step operator;
/// needs no monotonicity and no enumeration.
bool is_supported(const Program& p, const Interpretation& m);

/// All subsets of the scope (default: the atoms occurring in p) that
/// pass the respective check, canonically ordered.
std::vector<Interpretation> enumerate_models(const Program& p,
        const std::optional<AtomSet>& scope = std::nullopt, std::size_t budget = kDefaultBudget);
std::vector<Interpretation> enumerate_supported(const Program& p,
        const std::optional<AtomSet>& scope = std::nullopt, std::size_t budget = kDefaultBudget);

}  // namespace acp
