/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file translate.h
 *
 * Normal logic programs and their embedding into weight-atom programs.
 *
 ***********************************************************************/

#pragma once

#include "acp/core.h"

#include <optional>

namespace acp {

/// A normal clause; an absent head marks an integrity constraint.
struct NormalClause {
    std::optional<Atom> head;
    std::vector<Atom> pos_body;
    std::vector<Atom> neg_body;

    bool operator==(const NormalClause&) const = default;
};

struct NormalProgram {
    std::vector<NormalClause> clauses;
    Universe universe;

    static NormalProgram from_clauses(
            std::vector<NormalClause> clauses, const AtomSet& extra_universe = {});
};

/// Replaces every atom occurrence a by the weight atom PB(a); absent
/// heads become inconsistent heads. Models, supported models, and
/// stable models all transfer across this embedding.
Program normal_to_pb(const NormalProgram& p);

/// Classical stable-model check (reduct plus least-model test), kept
/// deliberately naive; forwarded from the oracle module.
bool normal_stable_direct(const NormalProgram& p, const Interpretation& m);

}  // namespace acp
