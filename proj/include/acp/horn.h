/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file horn.h
 *
 * Horn programs, bottom-up computations, canonical computations, and
 * derivable models.
 *
 ***********************************************************************/

#pragma once

#include "acp/semantics.h"

namespace acp {

/// A bottom-up computation: an inclusion-increasing sequence starting
/// from the empty set in which each step is one-step provable from the
/// previous one. Finite programs reach a fixpoint, so the final step is
/// the result.
struct Computation {
    std::vector<Interpretation> steps;

    const Interpretation& result() const {
        return steps.back();
    }
};

/// Negation-free and every head/body atom monotone.
bool is_horn(const Program& p);

/// The deterministic computation guided by a model m: each step takes
/// the applicable head atoms intersected with m. Stops at the first
/// repeated step (steps only grow over a finite universe).
Computation canonical_computation(const Program& p, const Interpretation& m);

/// Is m the result of some computation of p?
bool is_derivable(const Program& p, const Interpretation& m);

/// All derivable models; candidates are subsets of hset(p), since every
/// derivable model is supported.
std::vector<Interpretation> enumerate_derivable(
        const Program& p, std::size_t budget = kDefaultBudget);

/// The largest derivable model of a Horn program without constraint
/// clauses; the canonical computation seeded with all atoms of p.
Interpretation largest_derivable(const Program& p);

}  // namespace acp
