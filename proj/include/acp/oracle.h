/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file oracle.h
 *
 * Deliberately naive reference implementations used for cross-checking:
 * satisfaction goes through explicit tables built by per-family
 * formulas, supported models through the fixpoint characterization,
 * derivable models through a search over all computations, and
 * normal-program stability through the classical reduct. None of these
 * share an evaluation path with the main modules.
 *
 ***********************************************************************/

#pragma once

#include "acp/disjunctive.h"
#include "acp/semantics.h"
#include "acp/translate.h"

namespace acp::oracle {

/// Satisfying subsets of the atom set, evaluated per family from the
/// defining formulas.
std::set<AtomSet> table_of(const ConstraintAtom& a);

bool satisfies(const Interpretation& m, const ConstraintAtom& a);
bool satisfies(const Interpretation& m, const Literal& lit);
bool satisfies_body(const Interpretation& m, const Clause& r);

TndResult tnd(const Program& p, const Interpretation& m, std::size_t budget = kDefaultBudget);

bool is_model(const Program& p, const Interpretation& m);
bool is_supported(const Program& p, const Interpretation& m);

std::vector<Interpretation> models(const Program& p, const AtomSet& scope,
        std::size_t budget = kDefaultBudget);

/// Supported models via m ∈ T(m) rather than via the support condition.
std::vector<Interpretation> supported(const Program& p, const AtomSet& scope,
        std::size_t budget = kDefaultBudget);

/// Results of all computations, found by branching over every one-step
/// provable successor.
std::vector<Interpretation> derivable(const Program& p, std::size_t budget = kDefaultBudget);

/// Stable models via a literal reduct and membership in the derivable
/// set of the reduct.
bool stable(const Program& p, const Interpretation& m, std::size_t budget = kDefaultBudget);
std::vector<Interpretation> stable_set(const Program& p, std::size_t budget = kDefaultBudget);

/// The classical one-step operator of a normal program (constraint
/// clauses contribute nothing).
Interpretation tp(const NormalProgram& p, const Interpretation& m);

/// Classical stable-model check: reduct of the definite part, iterate
/// tp to the least model, and require the integrity constraints to
/// hold.
bool gl_stable(const NormalProgram& p, const Interpretation& m);

/// Possible models via the canonical split and the classical check.
std::vector<Interpretation> possible(const DProgram& p, std::size_t budget = kDefaultBudget);

/// Possible models by trying every split selection; exponential in the
/// head sizes.
std::vector<Interpretation> possible_all_splits(
        const DProgram& p, std::size_t budget = kDefaultBudget);

}  // namespace acp::oracle
