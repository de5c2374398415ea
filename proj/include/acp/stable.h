/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file stable.h
 *
 * The reduct, stable models, and the deterministic one-step operator of
 * definite programs.
 *
 ***********************************************************************/

#pragma once

#include "acp/horn.h"

#include <map>

namespace acp {

/// The reduct of a program with respect to an interpretation: a Horn
/// program plus the bookkeeping of which source clauses were removed
/// and where the survivors went.
struct Reduct {
    Program program;
    std::vector<std::size_t> removed;
    std::map<std::size_t, std::size_t> stripped;  // source index -> reduct index
};

/// Drops every clause with a negated body literal whose atom m
/// satisfies, and erases the remaining negated literals. Requires all
/// atoms of p to be monotone.
Reduct reduct(const Program& p, const Interpretation& m);

/// Is m a derivable model of the reduct of p with respect to m?
bool is_stable(const Program& p, const Interpretation& m);

/// All stable models; candidates are subsets of hset(p), since every
/// stable model is supported.
std::vector<Interpretation> enumerate_stable(const Program& p, std::size_t budget = kDefaultBudget);

/// The deterministic one-step operator of a definite program: the head
/// atoms of the applicable clauses, which form the unique one-step
/// provable set.
Interpretation td(const Program& p, const Interpretation& m);

}  // namespace acp
