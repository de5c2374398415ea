/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file lparse.h
 *
 * Weight atoms kWl over weighted positive and negated literals,
 * programs of them, their reduct and stable/supported models, negation
 * elimination, and the translations to and from weight-atom programs.
 *
 ***********************************************************************/

#pragma once

#include "acp/semantics.h"

#include <map>
#include <optional>
#include <utility>

namespace acp {

/// Reserved prefix of atoms introduced by eliminate_not; not a legal
/// identifier character in any input dialect.
inline constexpr char kFreshAtomSigil = '~';

struct PlainLiteral {
    Atom atom;
    bool negated = false;

    auto operator<=>(const PlainLiteral&) const = default;
};

/// A weight function on plain literals. No atom appears twice (in
/// either polarity) and all weights are non-negative.
class WeightedLiteralSet {
public:
    WeightedLiteralSet() = default;
    static WeightedLiteralSet from_entries(std::vector<std::pair<PlainLiteral, long long>> entries);

    const std::map<PlainLiteral, long long>& entries() const {
        return entries_;
    }

    /// Atoms occurring in any literal, either polarity.
    AtomSet aset() const;
    /// Atoms occurring positively.
    AtomSet positive_atoms() const;
    /// The weight map restricted to positive literals.
    std::map<Atom, long long> positive_restriction() const;
    /// Sum over the negated literals not(b) with b not in m.
    long long negative_weight_outside(const Interpretation& m) const;
    long long total_weight() const;
    bool has_negated() const;

    bool operator==(const WeightedLiteralSet&) const = default;

private:
    std::map<PlainLiteral, long long> entries_;
};

/// The atom kWl: the weighted count of true positive literals plus
/// false negated literals must lie in [lower, upper].
struct LAtom {
    long long lower = 0;
    std::optional<long long> upper;
    WeightedLiteralSet weights;

    bool operator==(const LAtom&) const = default;
};

LAtom l_atom(long long lower, std::optional<long long> upper, WeightedLiteralSet weights);

struct LClause {
    LAtom head;
    std::vector<LAtom> body;

    bool operator==(const LClause&) const = default;
};

struct LProgram {
    std::vector<LClause> clauses;
    Universe universe;

    static LProgram from_clauses(std::vector<LClause> clauses, const AtomSet& extra_universe = {});
};

bool l_satisfies(const Interpretation& m, const LAtom& a);
bool l_satisfies(const Interpretation& m, const LClause& r);
bool l_satisfies(const Interpretation& m, const LProgram& p);

/// The reduct with respect to m: clauses with an m-falsified body atom
/// are dropped; each survivor emits, per positive head atom a in m, a
/// clause deriving a whose body atoms keep only positive literals, with
/// lower bounds discounted by the weight of the m-false negated
/// literals (clamped at zero). The result is a definite Horn
/// weight-atom program.
Program lparse_reduct(const LProgram& p, const Interpretation& m);

/// m equals the least model of the reduct and is a model of p.
bool lparse_stable(const LProgram& p, const Interpretation& m);

/// m is a model and every atom of m occurs in the head atom set of some
/// clause whose body m satisfies.
bool lparse_supported(const LProgram& p, const Interpretation& m);

std::vector<Interpretation> enumerate_lparse_stable(
        const LProgram& p, std::size_t budget = kDefaultBudget);
std::vector<Interpretation> enumerate_lparse_supported(
        const LProgram& p, std::size_t budget = kDefaultBudget);

struct NotElimination {
    LProgram program;
    std::map<Atom, Atom> fresh_to_source;
};

/// Replaces each negated literal not(b) by a fresh atom defined by the
/// clause fresh <- 0{b=1}0. Stable models correspond by adding the
/// fresh atoms of the sources absent from the model.
NotElimination eliminate_not(const LProgram& p);

/// Encodes a negation-free program clause-for-clause as a pair of
/// weight-atom clauses: one carrying the lower bounds, one an integrity
/// constraint enforcing the head's upper bound. Atoms with no upper
/// bound need no constraint clause, and no negated companion literal.
Program e_translate(const LProgram& p);

/// Encodes a program of weight atoms as a negation-free program:
/// not(lV) becomes 0V(l-1); a negated atom with lower bound zero makes
/// the clause vacuous and it is replaced by the tautology kW <- kW.
LProgram f_translate(const Program& p);

}  // namespace acp
