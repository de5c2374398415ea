/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/lparse.h"

#include "acp/horn.h"

#include <algorithm>

namespace acp {

WeightedLiteralSet WeightedLiteralSet::from_entries(
        std::vector<std::pair<PlainLiteral, long long>> entries) {
    WeightedLiteralSet result;
    AtomSet seen;
    for (auto& [lit, weight] : entries) {
        if (weight < 0) {
            throw NegativeWeightError("negative weight on literal of atom '" + lit.atom.name + "'");
        }
        if (!seen.insert(lit.atom).second) {
            throw DuplicateAtomError("atom '" + lit.atom.name + "' listed twice in a weighted set");
        }
        result.entries_.emplace(lit, weight);
    }
    return result;
}

AtomSet WeightedLiteralSet::aset() const {
    AtomSet result;
    for (const auto& [lit, weight] : entries_) {
        result.insert(lit.atom);
    }
    return result;
}

AtomSet WeightedLiteralSet::positive_atoms() const {
    AtomSet result;
    for (const auto& [lit, weight] : entries_) {
        if (!lit.negated) {
            result.insert(lit.atom);
        }
    }
    return result;
}

std::map<Atom, long long> WeightedLiteralSet::positive_restriction() const {
    std::map<Atom, long long> result;
    for (const auto& [lit, weight] : entries_) {
        if (!lit.negated) {
            result.emplace(lit.atom, weight);
        }
    }
    return result;
}

long long WeightedLiteralSet::negative_weight_outside(const Interpretation& m) const {
    long long sum = 0;
    for (const auto& [lit, weight] : entries_) {
        if (lit.negated && m.count(lit.atom) == 0) {
            sum += weight;
        }
    }
    return sum;
}

long long WeightedLiteralSet::total_weight() const {
    long long sum = 0;
    for (const auto& [lit, weight] : entries_) {
        sum += weight;
    }
    return sum;
}

bool WeightedLiteralSet::has_negated() const {
    for (const auto& [lit, weight] : entries_) {
        if (lit.negated) {
            return true;
        }
    }
    return false;
}

LAtom l_atom(long long lower, std::optional<long long> upper, WeightedLiteralSet weights) {
    if (upper && *upper < lower) {
        throw BoundInversionError("lower bound exceeds upper bound");
    }
    return LAtom{lower, upper, std::move(weights)};
}

LProgram LProgram::from_clauses(std::vector<LClause> clauses, const AtomSet& extra_universe) {
    LProgram p;
    p.clauses = std::move(clauses);
    for (const LClause& r : p.clauses) {
        p.universe.add_all(r.head.weights.aset());
        for (const LAtom& b : r.body) {
            p.universe.add_all(b.weights.aset());
        }
    }
    p.universe.add_all(extra_universe);
    return p;
}

bool l_satisfies(const Interpretation& m, const LAtom& a) {
    long long sum = 0;
    for (const auto& [lit, weight] : a.weights.entries()) {
        bool in = m.count(lit.atom) > 0;
        if (lit.negated ? !in : in) {
            sum += weight;
        }
    }
    return sum >= a.lower && (!a.upper || sum <= *a.upper);
}

bool l_satisfies(const Interpretation& m, const LClause& r) {
    for (const LAtom& b : r.body) {
        if (!l_satisfies(m, b)) {
            return true;
        }
    }
    return l_satisfies(m, r.head);
}

bool l_satisfies(const Interpretation& m, const LProgram& p) {
    for (const LClause& r : p.clauses) {
        if (!l_satisfies(m, r)) {
            return false;
        }
    }
    return true;
}

namespace {

long long clamp_lower(long long k) {
    return k < 0 ? 0 : k;
}

/// The weight atom k'W' obtained from a body atom by keeping the
/// positive literals and discounting the lower bound by the weight of
/// the m-false negated literals. Upper bounds play no further role in
/// the reduct.
ConstraintAtom reduced_body_atom(const LAtom& b, const Interpretation& m) {
    long long lower = clamp_lower(b.lower - b.weights.negative_weight_outside(m));
    return weight_atom(lower, b.weights.positive_restriction());
}

AtomSet head_atoms(const LProgram& p) {
    AtomSet result;
    for (const LClause& r : p.clauses) {
        result = set_union(result, r.head.weights.aset());
    }
    return result;
}

}  // namespace

Program lparse_reduct(const LProgram& p, const Interpretation& m) {
    Program result;
    result.universe = p.universe;
    for (const LClause& r : p.clauses) {
        bool blocked = false;
        for (const LAtom& b : r.body) {
            if (!l_satisfies(m, b)) {
                blocked = true;
                break;
            }
        }
        if (blocked) {
            continue;
        }
        std::vector<Literal> body;
        body.reserve(r.body.size());
        for (const LAtom& b : r.body) {
            body.push_back(pos(reduced_body_atom(b, m)));
        }
        for (const Atom& a : set_intersect(r.head.weights.positive_atoms(), m)) {
            result.clauses.push_back(Clause{pb_atom(a), body});
        }
    }
    return result;
}

bool lparse_stable(const LProgram& p, const Interpretation& m) {
    if (!l_satisfies(m, p)) {
        return false;
    }
    // The reduct's heads are atoms of m, so m is a model of it and the
    // canonical computation with respect to m yields its least model.
    Program r = lparse_reduct(p, m);
    return canonical_computation(r, m).result() == m;
}

bool lparse_supported(const LProgram& p, const Interpretation& m) {
    if (!l_satisfies(m, p)) {
        return false;
    }
    for (const Atom& a : m) {
        bool covered = false;
        for (const LClause& r : p.clauses) {
            if (r.head.weights.aset().count(a) == 0) {
                continue;
            }
            bool applicable = true;
            for (const LAtom& b : r.body) {
                if (!l_satisfies(m, b)) {
                    applicable = false;
                    break;
                }
            }
            if (applicable) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return false;
        }
    }
    return true;
}

namespace {

template <typename Check>
std::vector<Interpretation> enumerate_l(const LProgram& p, std::size_t budget, const Check& check) {
    AtomSet candidates = head_atoms(p);
    if (candidates.size() > budget) {
        throw BudgetExceededError(candidates.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& m : subsets_of(candidates)) {
        if (check(m)) {
            result.push_back(m);
        }
    }
    return result;
}

}  // namespace

std::vector<Interpretation> enumerate_lparse_stable(const LProgram& p, std::size_t budget) {
    return enumerate_l(p, budget, [&](const AtomSet& m) { return lparse_stable(p, m); });
}

std::vector<Interpretation> enumerate_lparse_supported(const LProgram& p, std::size_t budget) {
    return enumerate_l(p, budget, [&](const AtomSet& m) { return lparse_supported(p, m); });
}

namespace {

LAtom substitute_negated(const LAtom& a, const std::map<Atom, Atom>& fresh_of) {
    std::vector<std::pair<PlainLiteral, long long>> entries;
    for (const auto& [lit, weight] : a.weights.entries()) {
        if (lit.negated) {
            entries.emplace_back(PlainLiteral{fresh_of.at(lit.atom), false}, weight);
        } else {
            entries.emplace_back(lit, weight);
        }
    }
    return LAtom{a.lower, a.upper, WeightedLiteralSet::from_entries(std::move(entries))};
}

}  // namespace

NotElimination eliminate_not(const LProgram& p) {
    // Collect the negated source atoms in universe order for stable
    // output.
    AtomSet negated;
    for (const LClause& r : p.clauses) {
        for (const auto& [lit, weight] : r.head.weights.entries()) {
            if (lit.negated) {
                negated.insert(lit.atom);
            }
        }
        for (const LAtom& b : r.body) {
            for (const auto& [lit, weight] : b.weights.entries()) {
                if (lit.negated) {
                    negated.insert(lit.atom);
                }
            }
        }
    }

    NotElimination result;
    std::map<Atom, Atom> fresh_of;
    for (const Atom& b : negated) {
        Atom fresh{std::string(1, kFreshAtomSigil) + b.name};
        if (p.universe.contains(fresh)) {
            throw NameClashError("fresh atom '" + fresh.name + "' already exists");
        }
        fresh_of.emplace(b, fresh);
        result.fresh_to_source.emplace(fresh, b);
    }

    std::vector<LClause> clauses;
    for (const LClause& r : p.clauses) {
        LClause c{substitute_negated(r.head, fresh_of), {}};
        for (const LAtom& b : r.body) {
            c.body.push_back(substitute_negated(b, fresh_of));
        }
        clauses.push_back(std::move(c));
    }
    for (const Atom& b : negated) {
        LAtom head{1, std::nullopt,
                WeightedLiteralSet::from_entries({{PlainLiteral{fresh_of.at(b), false}, 1}})};
        LAtom body{0, 0, WeightedLiteralSet::from_entries({{PlainLiteral{b, false}, 1}})};
        clauses.push_back(LClause{head, {body}});
    }
    result.program = LProgram::from_clauses(std::move(clauses), p.universe.atom_set());
    return result;
}

namespace {

void require_not_free(const LProgram& p, const char* op) {
    for (const LClause& r : p.clauses) {
        if (r.head.weights.has_negated()) {
            throw UnsupportedAtomKindError(std::string(op) + ": negated literal in a head atom");
        }
        for (const LAtom& b : r.body) {
            if (b.weights.has_negated()) {
                throw UnsupportedAtomKindError(std::string(op) + ": negated literal in a body atom");
            }
        }
    }
}

ConstraintAtom lower_bound_atom(const LAtom& a) {
    return weight_atom(clamp_lower(a.lower), a.weights.positive_restriction());
}

/// The atom (l+1)W; satisfied exactly when the upper bound l is
/// violated.
ConstraintAtom upper_violation_atom(const LAtom& a) {
    return weight_atom(clamp_lower(*a.upper + 1), a.weights.positive_restriction());
}

}  // namespace

Program e_translate(const LProgram& p) {
    require_not_free(p, "e_translate");
    Program result;
    result.universe = p.universe;
    for (const LClause& r : p.clauses) {
        std::vector<Literal> body;
        for (const LAtom& b : r.body) {
            body.push_back(pos(lower_bound_atom(b)));
        }
        for (const LAtom& b : r.body) {
            if (b.upper) {
                body.push_back(neg(upper_violation_atom(b)));
            }
        }
        result.clauses.push_back(Clause{lower_bound_atom(r.head), body});
        if (r.head.upper) {
            std::vector<Literal> guard_body;
            guard_body.push_back(pos(upper_violation_atom(r.head)));
            guard_body.insert(guard_body.end(), body.begin(), body.end());
            result.clauses.push_back(Clause{inconsistent_atom(), std::move(guard_body)});
        }
    }
    return result;
}

namespace {

WeightedLiteralSet positive_weight_set(const std::map<Atom, long long>& weights) {
    std::vector<std::pair<PlainLiteral, long long>> entries;
    for (const auto& [a, w] : weights) {
        entries.emplace_back(PlainLiteral{a, false}, w);
    }
    return WeightedLiteralSet::from_entries(std::move(entries));
}

const WeightConstraint& as_weight(const ConstraintAtom& a, const char* op) {
    const auto* w = std::get_if<WeightConstraint>(&a.constraint());
    if (!w) {
        throw UnsupportedAtomKindError(std::string(op) + ": expected a weight (lower-bound) atom");
    }
    return *w;
}

}  // namespace

LProgram f_translate(const Program& p) {
    std::vector<LClause> clauses;
    for (const Clause& r : p.clauses) {
        const WeightConstraint& head = as_weight(r.head, "f_translate");
        LAtom l_head{head.lower, std::nullopt, positive_weight_set(head.weights)};

        bool vacuous = false;
        for (const Literal& lit : r.body) {
            const WeightConstraint& w = as_weight(lit.atom, "f_translate");
            if (lit.negated && w.lower == 0) {
                vacuous = true;
                break;
            }
        }
        if (vacuous) {
            clauses.push_back(LClause{l_head, {l_head}});
            continue;
        }

        LClause c{l_head, {}};
        for (const Literal& lit : r.body) {
            const WeightConstraint& w = as_weight(lit.atom, "f_translate");
            if (lit.negated) {
                c.body.push_back(LAtom{0, w.lower - 1, positive_weight_set(w.weights)});
            } else {
                c.body.push_back(LAtom{w.lower, std::nullopt, positive_weight_set(w.weights)});
            }
        }
        clauses.push_back(std::move(c));
    }
    return LProgram::from_clauses(std::move(clauses), p.universe.atom_set());
}

}  // namespace acp
