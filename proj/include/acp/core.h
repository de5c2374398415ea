/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file core.h
 *
 * Domain types for atoms, constraints, constraint atoms, literals,
 * clauses, programs, and interpretations, together with the
 * constraint-level predicates (satisfaction, consistency, monotonicity,
 * definiteness).
 *
 * A constraint atom C(X) pairs a constraint with a finite atom set X.
 * Satisfaction depends only on M ∩ X, so every constraint is
 * represented by its restriction to subsets of X. All types are
 * immutable after construction; all operations are pure.
 *
 ***********************************************************************/

#pragma once

#include "acp/error.h"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace acp {

// ---------------------------------------------------------------- atoms

struct Atom {
    std::string name;

    auto operator<=>(const Atom&) const = default;
};

/// Makes an atom, rejecting empty names.
Atom atom(std::string name);

using AtomSet = std::set<Atom>;

/// A truth assignment, represented by the set of true atoms.
using Interpretation = AtomSet;

AtomSet set_union(const AtomSet& a, const AtomSet& b);
AtomSet set_intersect(const AtomSet& a, const AtomSet& b);
AtomSet set_difference(const AtomSet& a, const AtomSet& b);
bool is_subset(const AtomSet& a, const AtomSet& b);

/// Deterministic order on interpretations: by cardinality, then
/// lexicographically on the sorted atom names. Used everywhere an
/// enumeration result is reported.
bool canonical_less(const Interpretation& a, const Interpretation& b);

/// Renders {a,b,c}; the empty set renders as {}.
std::string to_string(const Interpretation& m);

// ------------------------------------------------------------ rationals

/// Exact rational arithmetic for product and maximum constraints, so
/// that bound comparisons have no floating-point tie ambiguity.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(long long num, long long den);

    long long num() const {
        return num_;
    }
    long long den() const {
        return den_;
    }

    Rational operator*(const Rational& other) const;
    std::strong_ordering operator<=>(const Rational& other) const;
    bool operator==(const Rational& other) const = default;

    std::string to_string() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

// ----------------------------------------------------------- constraints

/// Explicit list of satisfying subsets; the universal fallback
/// representation. Entries are subsets of the owning atom's set.
struct TableConstraint {
    std::set<AtomSet> satisfying;

    bool operator==(const TableConstraint&) const = default;
};

/// Total weight of the selected atoms is at least `lower`.
struct WeightConstraint {
    long long lower = 0;
    std::map<Atom, long long> weights;

    bool operator==(const WeightConstraint&) const = default;
};

/// Total weight lies in [lower, upper]; `upper` absent means no upper
/// bound.
struct WeightRangeConstraint {
    long long lower = 0;
    std::optional<long long> upper;
    std::map<Atom, long long> weights;

    bool operator==(const WeightRangeConstraint&) const = default;
};

/// At least `lower` of the atoms are selected.
struct CardinalityConstraint {
    long long lower = 0;

    bool operator==(const CardinalityConstraint&) const = default;
};

/// Product of the selected atoms' weights is at least `lower`; the
/// empty product is 1.
struct ProductConstraint {
    Rational lower;
    std::map<Atom, Rational> weights;

    bool operator==(const ProductConstraint&) const = default;
};

/// Maximum selected weight is at least `lower`; never satisfied by the
/// empty selection.
struct MaximumConstraint {
    Rational lower;
    std::map<Atom, Rational> weights;

    bool operator==(const MaximumConstraint&) const = default;
};

/// Cardinality of the selection is even (odd = false) or odd.
struct ParityConstraint {
    bool odd = false;

    bool operator==(const ParityConstraint&) const = default;
};

/// The selection contains at least one of the witness sets.
struct ContainmentConstraint {
    std::set<AtomSet> witnesses;

    bool operator==(const ContainmentConstraint&) const = default;
};

/// The distinguished inconsistent constraint; satisfied by nothing.
struct InconsistentConstraint {
    bool operator==(const InconsistentConstraint&) const = default;
};

using Constraint = std::variant<TableConstraint, WeightConstraint, WeightRangeConstraint,
        CardinalityConstraint, ProductConstraint, MaximumConstraint, ParityConstraint,
        ContainmentConstraint, InconsistentConstraint>;

// -------------------------------------------------------- constraint atoms

/// A constraint paired with the finite atom set it ranges over.
class ConstraintAtom {
public:
    ConstraintAtom(Constraint constraint, AtomSet atom_set);

    const Constraint& constraint() const {
        return constraint_;
    }
    const AtomSet& atom_set() const {
        return atom_set_;
    }

    bool operator==(const ConstraintAtom&) const = default;

private:
    Constraint constraint_;
    AtomSet atom_set_;
};

ConstraintAtom cardinality_atom(long long lower, AtomSet atoms);
ConstraintAtom weight_atom(long long lower, std::map<Atom, long long> weights);
ConstraintAtom weight_range_atom(
        long long lower, std::optional<long long> upper, std::map<Atom, long long> weights);
ConstraintAtom table_atom(AtomSet over, std::set<AtomSet> satisfying);
ConstraintAtom product_atom(Rational lower, std::map<Atom, Rational> weights);
ConstraintAtom maximum_atom(Rational lower, std::map<Atom, Rational> weights);
ConstraintAtom parity_even_atom(AtomSet atoms);
ConstraintAtom parity_odd_atom(AtomSet atoms);
ConstraintAtom containment_atom(AtomSet over, std::set<AtomSet> witnesses);
ConstraintAtom inconsistent_atom(AtomSet atoms = {});

/// The atom PB(a): weight 1 on a with lower bound 1; true exactly when
/// a is.
ConstraintAtom pb_atom(const Atom& a);

// ------------------------------------------------- literals and clauses

struct Literal {
    ConstraintAtom atom;
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

Literal pos(ConstraintAtom a);
Literal neg(ConstraintAtom a);

struct Clause {
    ConstraintAtom head;
    std::vector<Literal> body;

    bool operator==(const Clause&) const = default;
};

/// The declared atom vocabulary; insertion-ordered, duplicate-free.
class Universe {
public:
    void add(const Atom& a);
    void add_all(const AtomSet& atoms);
    bool contains(const Atom& a) const;

    const std::vector<Atom>& atoms() const {
        return ordered_;
    }
    AtomSet atom_set() const;

private:
    std::vector<Atom> ordered_;
    std::set<Atom> index_;
};

struct Program {
    std::vector<Clause> clauses;
    Universe universe;

    /// Builds a program whose universe covers every mentioned atom plus
    /// the given extras.
    static Program from_clauses(std::vector<Clause> clauses, const AtomSet& extra_universe = {});
};

// ------------------------------------------------------------ operations

/// M ⊨ C(X): does M ∩ X satisfy the constraint? Parametric families are
/// evaluated analytically; tables by lookup.
bool satisfies(const Interpretation& m, const ConstraintAtom& a);
bool satisfies(const Interpretation& m, const Literal& lit);
bool satisfies_body(const Interpretation& m, const Clause& r);
bool satisfies(const Interpretation& m, const Clause& r);
bool satisfies(const Interpretation& m, const Program& p);

/// Does any subset of the atom set satisfy the constraint?
bool is_consistent(const ConstraintAtom& a);

/// Is the restriction to subsets of the atom set upward closed?
bool is_monotone(const ConstraintAtom& a);

/// Is the atom set itself a minimal satisfying set?
bool is_definite(const ConstraintAtom& a);

/// A clause whose head is inconsistent acts as an integrity constraint.
bool is_constraint_clause(const Clause& r);

AtomSet hset(const Clause& r);
AtomSet hset(const Program& p);
AtomSet aset(const Literal& lit);

/// Every atom occurring in some head set or body atom set.
AtomSet atoms_of(const Program& p);

/// Rebuilds the atom's constraint as an explicit table over its atom
/// set, the universal fallback representation.
ConstraintAtom to_table(const ConstraintAtom& a);

/// All subsets of the given set, in canonical order.
std::vector<AtomSet> subsets_of(const AtomSet& base);

}  // namespace acp
