/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/core.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace acp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <class Weights>
void check_weights_non_negative(const Weights& weights) {
    for (const auto& [a, w] : weights) {
        if (w < typename Weights::mapped_type(0)) {
            throw NegativeWeightError("negative weight on atom '" + a.name + "'");
        }
    }
}

template <class Weights>
AtomSet weight_domain(const Weights& weights) {
    AtomSet result;
    for (const auto& [a, w] : weights) {
        result.insert(a);
    }
    return result;
}

}  // namespace

// ---------------------------------------------------------------- atoms

Atom atom(std::string name) {
    if (name.empty()) {
        throw InvalidConstraintError("atom names must be non-empty");
    }
    return Atom{std::move(name)};
}

AtomSet set_union(const AtomSet& a, const AtomSet& b) {
    AtomSet result = a;
    result.insert(b.begin(), b.end());
    return result;
}

AtomSet set_intersect(const AtomSet& a, const AtomSet& b) {
    AtomSet result;
    std::set_intersection(
            a.begin(), a.end(), b.begin(), b.end(), std::inserter(result, result.end()));
    return result;
}

AtomSet set_difference(const AtomSet& a, const AtomSet& b) {
    AtomSet result;
    std::set_difference(
            a.begin(), a.end(), b.begin(), b.end(), std::inserter(result, result.end()));
    return result;
}

bool is_subset(const AtomSet& a, const AtomSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool canonical_less(const Interpretation& a, const Interpretation& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Interpretation& m) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const Atom& a : m) {
        if (!first) {
            out << ",";
        }
        out << a.name;
        first = false;
    }
    out << "}";
    return out.str();
}

// ------------------------------------------------------------ rationals

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) {
        throw InvalidConstraintError("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator*(const Rational& other) const {
    // Reduce cross-wise first to keep intermediate products small.
    long long g1 = std::gcd(num_ < 0 ? -num_ : num_, other.den_);
    long long g2 = std::gcd(other.num_ < 0 ? -other.num_ : other.num_, den_);
    return Rational((num_ / g1) * (other.num_ / g2), (den_ / g2) * (other.den_ / g1));
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    // cross-multiplied in 128 bits so large products compare exactly
    return static_cast<__int128>(num_) * other.den_ <=> static_cast<__int128>(other.num_) * den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

// -------------------------------------------------------- constraint atoms

ConstraintAtom::ConstraintAtom(Constraint constraint, AtomSet atom_set)
        : constraint_(std::move(constraint)), atom_set_(std::move(atom_set)) {
    std::visit(overloaded{
                       [&](const TableConstraint& c) {
                           for (const AtomSet& entry : c.satisfying) {
                               if (!is_subset(entry, atom_set_)) {
                                   throw InvalidConstraintError(
                                           "table entry mentions atoms outside the atom set");
                               }
                           }
                       },
                       [&](const WeightConstraint& c) {
                           if (c.lower < 0) {
                               throw InvalidConstraintError("weight bound must be non-negative");
                           }
                           check_weights_non_negative(c.weights);
                           if (weight_domain(c.weights) != atom_set_) {
                               throw InvalidConstraintError(
                                       "weight domain must equal the atom set");
                           }
                       },
                       [&](const WeightRangeConstraint& c) {
                           if (c.lower < 0) {
                               throw InvalidConstraintError("weight bound must be non-negative");
                           }
                           if (c.upper && *c.upper < c.lower) {
                               throw BoundInversionError("lower bound exceeds upper bound");
                           }
                           check_weights_non_negative(c.weights);
                           if (weight_domain(c.weights) != atom_set_) {
                               throw InvalidConstraintError(
                                       "weight domain must equal the atom set");
                           }
                       },
                       [&](const CardinalityConstraint& c) {
                           if (c.lower < 0) {
                               throw InvalidConstraintError(
                                       "cardinality bound must be non-negative");
                           }
                       },
                       [&](const ProductConstraint& c) {
                           check_weights_non_negative(c.weights);
                           if (weight_domain(c.weights) != atom_set_) {
                               throw InvalidConstraintError(
                                       "weight domain must equal the atom set");
                           }
                       },
                       [&](const MaximumConstraint& c) {
                           // Maximum weights may be negative.
                           if (weight_domain(c.weights) != atom_set_) {
                               throw InvalidConstraintError(
                                       "weight domain must equal the atom set");
                           }
                       },
                       [](const ParityConstraint&) {},
                       [](const ContainmentConstraint&) {},
                       [](const InconsistentConstraint&) {},
               },
            constraint_);
}

ConstraintAtom cardinality_atom(long long lower, AtomSet atoms) {
    return ConstraintAtom(CardinalityConstraint{lower}, std::move(atoms));
}

ConstraintAtom weight_atom(long long lower, std::map<Atom, long long> weights) {
    AtomSet over = weight_domain(weights);
    return ConstraintAtom(WeightConstraint{lower, std::move(weights)}, std::move(over));
}

ConstraintAtom weight_range_atom(
        long long lower, std::optional<long long> upper, std::map<Atom, long long> weights) {
    AtomSet over = weight_domain(weights);
    return ConstraintAtom(WeightRangeConstraint{lower, upper, std::move(weights)}, std::move(over));
}

ConstraintAtom table_atom(AtomSet over, std::set<AtomSet> satisfying) {
    return ConstraintAtom(TableConstraint{std::move(satisfying)}, std::move(over));
}

ConstraintAtom product_atom(Rational lower, std::map<Atom, Rational> weights) {
    AtomSet over = weight_domain(weights);
    return ConstraintAtom(ProductConstraint{lower, std::move(weights)}, std::move(over));
}

ConstraintAtom maximum_atom(Rational lower, std::map<Atom, Rational> weights) {
    AtomSet over = weight_domain(weights);
    return ConstraintAtom(MaximumConstraint{lower, std::move(weights)}, std::move(over));
}

ConstraintAtom parity_even_atom(AtomSet atoms) {
    return ConstraintAtom(ParityConstraint{false}, std::move(atoms));
}

ConstraintAtom parity_odd_atom(AtomSet atoms) {
    return ConstraintAtom(ParityConstraint{true}, std::move(atoms));
}

ConstraintAtom containment_atom(AtomSet over, std::set<AtomSet> witnesses) {
    return ConstraintAtom(ContainmentConstraint{std::move(witnesses)}, std::move(over));
}

ConstraintAtom inconsistent_atom(AtomSet atoms) {
    return ConstraintAtom(InconsistentConstraint{}, std::move(atoms));
}

ConstraintAtom pb_atom(const Atom& a) {
    return weight_atom(1, {{a, 1}});
}

Literal pos(ConstraintAtom a) {
    return Literal{std::move(a), false};
}

Literal neg(ConstraintAtom a) {
    return Literal{std::move(a), true};
}

// ------------------------------------------------------------- universe

void Universe::add(const Atom& a) {
    if (index_.insert(a).second) {
        ordered_.push_back(a);
    }
}

void Universe::add_all(const AtomSet& atoms) {
    for (const Atom& a : atoms) {
        add(a);
    }
}

bool Universe::contains(const Atom& a) const {
    return index_.count(a) > 0;
}

AtomSet Universe::atom_set() const {
    return index_;
}

Program Program::from_clauses(std::vector<Clause> clauses, const AtomSet& extra_universe) {
    Program p;
    p.clauses = std::move(clauses);
    for (const Clause& r : p.clauses) {
        p.universe.add_all(r.head.atom_set());
        for (const Literal& lit : r.body) {
            p.universe.add_all(lit.atom.atom_set());
        }
    }
    p.universe.add_all(extra_universe);
    return p;
}

// ----------------------------------------------------------- satisfaction

namespace {

long long weight_of(const std::map<Atom, long long>& weights, const AtomSet& selected) {
    long long sum = 0;
    for (const Atom& a : selected) {
        sum += weights.at(a);
    }
    return sum;
}

bool eval_on_selection(const Constraint& c, const AtomSet& s) {
    return std::visit(
            overloaded{
                    [&](const TableConstraint& t) { return t.satisfying.count(s) > 0; },
                    [&](const WeightConstraint& w) { return weight_of(w.weights, s) >= w.lower; },
                    [&](const WeightRangeConstraint& w) {
                        long long sum = weight_of(w.weights, s);
                        return sum >= w.lower && (!w.upper || sum <= *w.upper);
                    },
                    [&](const CardinalityConstraint& c2) {
                        return static_cast<long long>(s.size()) >= c2.lower;
                    },
                    [&](const ProductConstraint& p) {
                        Rational product(1);
                        for (const Atom& a : s) {
                            product = product * p.weights.at(a);
                        }
                        return product >= p.lower;
                    },
                    [&](const MaximumConstraint& mx) {
                        // max over the empty selection is -inf: never satisfied.
                        bool any = false;
                        Rational best(0);
                        for (const Atom& a : s) {
                            const Rational& w = mx.weights.at(a);
                            if (!any || w > best) {
                                best = w;
                                any = true;
                            }
                        }
                        return any && best >= mx.lower;
                    },
                    [&](const ParityConstraint& p) { return (s.size() % 2 == 1) == p.odd; },
                    [&](const ContainmentConstraint& cc) {
                        for (const AtomSet& witness : cc.witnesses) {
                            if (is_subset(witness, s)) {
                                return true;
                            }
                        }
                        return false;
                    },
                    [&](const InconsistentConstraint&) { return false; },
            },
            c);
}

}  // namespace

bool satisfies(const Interpretation& m, const ConstraintAtom& a) {
    return eval_on_selection(a.constraint(), set_intersect(m, a.atom_set()));
}

bool satisfies(const Interpretation& m, const Literal& lit) {
    return satisfies(m, lit.atom) != lit.negated;
}

bool satisfies_body(const Interpretation& m, const Clause& r) {
    for (const Literal& lit : r.body) {
        if (!satisfies(m, lit)) {
            return false;
        }
    }
    return true;
}

bool satisfies(const Interpretation& m, const Clause& r) {
    return !satisfies_body(m, r) || satisfies(m, r.head);
}

bool satisfies(const Interpretation& m, const Program& p) {
    for (const Clause& r : p.clauses) {
        if (!satisfies(m, r)) {
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ predicates

namespace {

/// Smallest subset weight reachable when one atom is dropped from the
/// full set; used by the definiteness checks.
long long min_weight(const std::map<Atom, long long>& weights) {
    long long best = 0;
    bool first = true;
    for (const auto& [a, w] : weights) {
        if (first || w < best) {
            best = w;
            first = false;
        }
    }
    return best;
}

}  // namespace

bool is_consistent(const ConstraintAtom& a) {
    const AtomSet& x = a.atom_set();
    return std::visit(
            overloaded{
                    [&](const TableConstraint& t) { return !t.satisfying.empty(); },
                    [&](const WeightConstraint& w) {
                        return weight_of(w.weights, x) >= w.lower;
                    },
                    [&](const WeightRangeConstraint& w) {
                        if (!w.upper) {
                            return weight_of(w.weights, x) >= w.lower;
                        }
                        // A finite upper bound defeats the monotone shortcut.
                        // Walk the reachable subset sums, pruning past the
                        // upper bound (sums never decrease).
                        std::set<long long> sums{0};
                        for (const auto& [a, wt] : w.weights) {
                            std::set<long long> grown = sums;
                            for (long long s : sums) {
                                if (s + wt <= *w.upper) {
                                    grown.insert(s + wt);
                                }
                            }
                            sums = std::move(grown);
                        }
                        return *sums.rbegin() >= w.lower;
                    },
                    [&](const CardinalityConstraint& c) {
                        return static_cast<long long>(x.size()) >= c.lower;
                    },
                    [&](const ProductConstraint& p) {
                        // The maximal product takes exactly the weights above 1.
                        Rational best(1);
                        for (const auto& [at, w] : p.weights) {
                            if (w > Rational(1)) {
                                best = best * w;
                            }
                        }
                        return best >= p.lower;
                    },
                    [&](const MaximumConstraint& mx) {
                        for (const auto& [at, w] : mx.weights) {
                            if (w >= mx.lower) {
                                return true;
                            }
                        }
                        return false;
                    },
                    [&](const ParityConstraint& p) { return !p.odd || !x.empty(); },
                    [&](const ContainmentConstraint& cc) {
                        for (const AtomSet& witness : cc.witnesses) {
                            if (is_subset(witness, x)) {
                                return true;
                            }
                        }
                        return false;
                    },
                    [&](const InconsistentConstraint&) { return false; },
            },
            a.constraint());
}

bool is_monotone(const ConstraintAtom& a) {
    const AtomSet& x = a.atom_set();
    return std::visit(
            overloaded{
                    [&](const TableConstraint& t) {
                        // Upward closure under single-atom extensions implies
                        // full upward closure.
                        for (const AtomSet& s : t.satisfying) {
                            for (const Atom& extra : set_difference(x, s)) {
                                AtomSet bigger = s;
                                bigger.insert(extra);
                                if (t.satisfying.count(bigger) == 0) {
                                    return false;
                                }
                            }
                        }
                        return true;
                    },
                    [&](const WeightConstraint&) { return true; },
                    [&](const WeightRangeConstraint& w) {
                        return !w.upper || *w.upper >= weight_of(w.weights, x);
                    },
                    [&](const CardinalityConstraint&) { return true; },
                    [&](const ProductConstraint& p) {
                        for (const auto& [at, w] : p.weights) {
                            if (w < Rational(1)) {
                                return false;
                            }
                        }
                        return true;
                    },
                    [&](const MaximumConstraint&) { return true; },
                    [&](const ParityConstraint&) { return false; },
                    [&](const ContainmentConstraint&) { return true; },
                    [&](const InconsistentConstraint&) { return true; },
            },
            a.constraint());
}

bool is_definite(const ConstraintAtom& a) {
    const AtomSet& x = a.atom_set();
    return std::visit(
            overloaded{
                    [&](const TableConstraint& t) {
                        if (t.satisfying.count(x) == 0) {
                            return false;
                        }
                        for (const AtomSet& s : t.satisfying) {
                            if (s != x && is_subset(s, x)) {
                                return false;
                            }
                        }
                        return true;
                    },
                    [&](const WeightConstraint& w) {
                        long long total = weight_of(w.weights, x);
                        if (total < w.lower) {
                            return false;
                        }
                        return x.empty() || total - min_weight(w.weights) < w.lower;
                    },
                    [&](const WeightRangeConstraint& w) {
                        long long total = weight_of(w.weights, x);
                        if (total < w.lower || (w.upper && total > *w.upper)) {
                            return false;
                        }
                        // Proper subsets only shrink the sum, so the upper
                        // bound cannot exclude them; minimality reduces to the
                        // lower bound after the cheapest single removal.
                        return x.empty() || total - min_weight(w.weights) < w.lower;
                    },
                    [&](const CardinalityConstraint& c) {
                        return static_cast<long long>(x.size()) == c.lower;
                    },
                    [&](const ProductConstraint& p) {
                        Rational total(1);
                        for (const auto& [at, w] : p.weights) {
                            total = total * w;
                        }
                        if (total < p.lower) {
                            return false;
                        }
                        for (const Atom& drop : x) {
                            Rational rest(1);
                            for (const auto& [at, w] : p.weights) {
                                if (at != drop) {
                                    rest = rest * w;
                                }
                            }
                            if (rest >= p.lower) {
                                return false;
                            }
                        }
                        return true;
                    },
                    [&](const MaximumConstraint& mx) {
                        if (x.size() != 1) {
                            return false;
                        }
                        return mx.weights.begin()->second >= mx.lower;
                    },
                    [&](const ParityConstraint& p) {
                        return p.odd ? x.size() == 1 : x.empty();
                    },
                    [&](const ContainmentConstraint& cc) {
                        bool covered = false;
                        for (const AtomSet& witness : cc.witnesses) {
                            if (is_subset(witness, x)) {
                                covered = true;
                                if (witness != x) {
                                    return false;
                                }
                            }
                        }
                        return covered;
                    },
                    [&](const InconsistentConstraint&) { return false; },
            },
            a.constraint());
}

bool is_constraint_clause(const Clause& r) {
    return !is_consistent(r.head);
}

AtomSet hset(const Clause& r) {
    return r.head.atom_set();
}

AtomSet hset(const Program& p) {
    AtomSet result;
    for (const Clause& r : p.clauses) {
        result = set_union(result, hset(r));
    }
    return result;
}

AtomSet aset(const Literal& lit) {
    return lit.atom.atom_set();
}

AtomSet atoms_of(const Program& p) {
    AtomSet result;
    for (const Clause& r : p.clauses) {
        result = set_union(result, r.head.atom_set());
        for (const Literal& lit : r.body) {
            result = set_union(result, lit.atom.atom_set());
        }
    }
    return result;
}

ConstraintAtom to_table(const ConstraintAtom& a) {
    const AtomSet& x = a.atom_set();
    std::set<AtomSet> satisfying;
    for (const AtomSet& s : subsets_of(x)) {
        if (eval_on_selection(a.constraint(), s)) {
            satisfying.insert(s);
        }
    }
    return table_atom(x, std::move(satisfying));
}

std::vector<AtomSet> subsets_of(const AtomSet& base) {
    std::vector<Atom> ordered(base.begin(), base.end());
    if (ordered.size() >= 63) {
        throw BudgetExceededError(ordered.size(), 62);
    }
    std::vector<AtomSet> result;
    std::uint64_t count = std::uint64_t{1} << ordered.size();
    result.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        AtomSet s;
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                s.insert(ordered[i]);
            }
        }
        result.push_back(std::move(s));
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

}  // namespace acp
