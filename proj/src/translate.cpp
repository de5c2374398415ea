/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/translate.h"

#include "acp/oracle.h"

namespace acp {

NormalProgram NormalProgram::from_clauses(
        std::vector<NormalClause> clauses, const AtomSet& extra_universe) {
    NormalProgram p;
    p.clauses = std::move(clauses);
    for (const NormalClause& r : p.clauses) {
        if (r.head) {
            p.universe.add(*r.head);
        }
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

Program normal_to_pb(const NormalProgram& p) {
    Program result;
    result.universe = p.universe;
    for (const NormalClause& r : p.clauses) {
        Clause c{r.head ? pb_atom(*r.head) : inconsistent_atom(), {}};
        for (const Atom& a : r.pos_body) {
            c.body.push_back(pos(pb_atom(a)));
        }
        for (const Atom& a : r.neg_body) {
            c.body.push_back(neg(pb_atom(a)));
        }
        result.clauses.push_back(std::move(c));
    }
    return result;
}

bool normal_stable_direct(const NormalProgram& p, const Interpretation& m) {
    return oracle::gl_stable(p, m);
}

}  // namespace acp
