/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file disjunctive.h
 *
 * Disjunctive programs, split programs, possible models, and the
 * embedding into cardinality-atom programs.
 *
 ***********************************************************************/

#pragma once

#include "acp/semantics.h"
#include "acp/translate.h"

#include <cstddef>
#include <vector>

namespace acp {

/// A disjunctive clause; an empty head marks an integrity constraint.
struct DClause {
    AtomSet head;
    std::vector<Atom> pos_body;
    std::vector<Atom> neg_body;

    bool operator==(const DClause&) const = default;
};

struct DProgram {
    std::vector<DClause> clauses;
    Universe universe;

    static DProgram from_clauses(std::vector<DClause> clauses, const AtomSet& extra_universe = {});
};

/// A chosen head subset per clause, indexed like the source program.
struct SplitSelection {
    std::vector<AtomSet> chosen;
};

/// Replaces each clause by one normal clause per selected head atom, or
/// by an integrity constraint when the selection is empty.
NormalProgram split_program(const DProgram& p, const SplitSelection& sel);

/// The split determined by m: each clause keeps the head atoms m makes
/// true.
NormalProgram canonical_split(const DProgram& p, const Interpretation& m);

/// m is a possible model iff it is a stable model of its canonical
/// split. Normal-program stability is evaluated through the weight-atom
/// embedding.
bool is_possible(const DProgram& p, const Interpretation& m);

/// All possible models; candidates are subsets of the head atoms.
std::vector<Interpretation> enumerate_possible(
        const DProgram& p, std::size_t budget = kDefaultBudget);

/// Clause-for-clause encoding into cardinality atoms; an empty head
/// becomes the inconsistent atom 1{}.
Program to_ca(const DProgram& p);

}  // namespace acp
