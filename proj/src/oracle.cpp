/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/oracle.h"

#include "acp/horn.h"

#include <algorithm>
#include <functional>

namespace acp::oracle {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool holds_on(const Constraint& c, const AtomSet& s) {
    return std::visit(
            overloaded{
                    [&](const TableConstraint& t) { return t.satisfying.count(s) > 0; },
                    [&](const WeightConstraint& w) {
                        long long sum = 0;
                        for (const auto& [a, weight] : w.weights) {
                            if (s.count(a)) {
                                sum += weight;
                            }
                        }
                        return sum >= w.lower;
                    },
                    [&](const WeightRangeConstraint& w) {
                        long long sum = 0;
                        for (const auto& [a, weight] : w.weights) {
                            if (s.count(a)) {
                                sum += weight;
                            }
                        }
                        if (sum < w.lower) {
                            return false;
                        }
                        return !w.upper.has_value() || sum <= *w.upper;
                    },
                    [&](const CardinalityConstraint& c2) {
                        long long count = 0;
                        for ([[maybe_unused]] const Atom& a : s) {
                            ++count;
                        }
                        return count >= c2.lower;
                    },
                    [&](const ProductConstraint& p) {
                        Rational product(1);
                        for (const auto& [a, weight] : p.weights) {
                            if (s.count(a)) {
                                product = product * weight;
                            }
                        }
                        return product >= p.lower;
                    },
                    [&](const MaximumConstraint& mx) {
                        bool seen = false;
                        Rational best(0);
                        for (const auto& [a, weight] : mx.weights) {
                            if (s.count(a) && (!seen || weight > best)) {
                                best = weight;
                                seen = true;
                            }
                        }
                        return seen && best >= mx.lower;
                    },
                    [&](const ParityConstraint& p) {
                        return p.odd ? s.size() % 2 == 1 : s.size() % 2 == 0;
                    },
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

std::set<AtomSet> table_of(const ConstraintAtom& a) {
    std::set<AtomSet> result;
    for (const AtomSet& s : subsets_of(a.atom_set())) {
        if (holds_on(a.constraint(), s)) {
            result.insert(s);
        }
    }
    return result;
}

bool satisfies(const Interpretation& m, const ConstraintAtom& a) {
    return table_of(a).count(set_intersect(m, a.atom_set())) > 0;
}

bool satisfies(const Interpretation& m, const Literal& lit) {
    return oracle::satisfies(m, lit.atom) != lit.negated;
}

bool satisfies_body(const Interpretation& m, const Clause& r) {
    for (const Literal& lit : r.body) {
        if (!oracle::satisfies(m, lit)) {
            return false;
        }
    }
    return true;
}

TndResult tnd(const Program& p, const Interpretation& m, std::size_t budget) {
    TndResult result;
    AtomSet heads;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        if (oracle::satisfies_body(m, p.clauses[i])) {
            result.applicable.push_back(i);
            heads = set_union(heads, p.clauses[i].head.atom_set());
        }
    }
    if (heads.size() > budget) {
        throw BudgetExceededError(heads.size(), budget);
    }
    // head tables built once, then candidates checked by lookup
    std::vector<std::pair<const ConstraintAtom*, std::set<AtomSet>>> head_tables;
    for (std::size_t i : result.applicable) {
        head_tables.emplace_back(&p.clauses[i].head, table_of(p.clauses[i].head));
    }
    for (const AtomSet& candidate : subsets_of(heads)) {
        bool ok = true;
        for (const auto& [head, table] : head_tables) {
            if (table.count(set_intersect(candidate, head->atom_set())) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.derivable_sets.push_back(candidate);
        }
    }
    return result;
}

bool is_model(const Program& p, const Interpretation& m) {
    for (const Clause& r : p.clauses) {
        if (oracle::satisfies_body(m, r) && !oracle::satisfies(m, r.head)) {
            return false;
        }
    }
    return true;
}

bool is_supported(const Program& p, const Interpretation& m) {
    const auto sets = oracle::tnd(p, m).derivable_sets;
    return std::find(sets.begin(), sets.end(), m) != sets.end();
}

std::vector<Interpretation> models(const Program& p, const AtomSet& scope, std::size_t budget) {
    if (scope.size() > budget) {
        throw BudgetExceededError(scope.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& m : subsets_of(scope)) {
        if (oracle::is_model(p, m)) {
            result.push_back(m);
        }
    }
    return result;
}

std::vector<Interpretation> supported(const Program& p, const AtomSet& scope, std::size_t budget) {
    if (scope.size() > budget) {
        throw BudgetExceededError(scope.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& m : subsets_of(scope)) {
        const auto sets = oracle::tnd(p, m, budget).derivable_sets;
        if (std::find(sets.begin(), sets.end(), m) != sets.end()) {
            result.push_back(m);
        }
    }
    return result;
}

namespace {

void derivable_from(const Program& p, const AtomSet& current, std::size_t budget,
        std::set<AtomSet>& visited, std::set<AtomSet>& results) {
    if (!visited.insert(current).second) {
        return;
    }
    for (const AtomSet& next : oracle::tnd(p, current, budget).derivable_sets) {
        if (!is_subset(current, next)) {
            continue;
        }
        if (next == current) {
            // The computation can repeat this step forever; its result
            // is the current set.
            results.insert(current);
        } else {
            derivable_from(p, next, budget, visited, results);
        }
    }
}

}  // namespace

std::vector<Interpretation> derivable(const Program& p, std::size_t budget) {
    if (!is_horn(p)) {
        throw NotHornError("oracle::derivable requires a Horn program");
    }
    if (hset(p).size() > budget) {
        throw BudgetExceededError(hset(p).size(), budget);
    }
    std::set<AtomSet> visited;
    std::set<AtomSet> results;
    derivable_from(p, {}, budget, visited, results);
    std::vector<Interpretation> out(results.begin(), results.end());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool stable(const Program& p, const Interpretation& m, std::size_t budget) {
    Program red;
    red.universe = p.universe;
    for (const Clause& r : p.clauses) {
        bool blocked = false;
        for (const Literal& lit : r.body) {
            if (lit.negated && oracle::satisfies(m, lit.atom)) {
                blocked = true;
                break;
            }
        }
        if (blocked) {
            continue;
        }
        Clause kept{r.head, {}};
        for (const Literal& lit : r.body) {
            if (!lit.negated) {
                kept.body.push_back(lit);
            }
        }
        red.clauses.push_back(std::move(kept));
    }
    const auto all = oracle::derivable(red, budget);
    return std::find(all.begin(), all.end(), m) != all.end();
}

std::vector<Interpretation> stable_set(const Program& p, std::size_t budget) {
    AtomSet heads = hset(p);
    if (heads.size() > budget) {
        throw BudgetExceededError(heads.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& m : subsets_of(heads)) {
        if (oracle::stable(p, m, budget)) {
            result.push_back(m);
        }
    }
    return result;
}

Interpretation tp(const NormalProgram& p, const Interpretation& m) {
    Interpretation result;
    for (const NormalClause& r : p.clauses) {
        if (!r.head) {
            continue;
        }
        bool fires = true;
        for (const Atom& a : r.pos_body) {
            if (m.count(a) == 0) {
                fires = false;
                break;
            }
        }
        for (const Atom& a : r.neg_body) {
            if (m.count(a) > 0) {
                fires = false;
                break;
            }
        }
        if (fires) {
            result.insert(*r.head);
        }
    }
    return result;
}

bool gl_stable(const NormalProgram& p, const Interpretation& m) {
    NormalProgram definite;
    for (const NormalClause& r : p.clauses) {
        bool blocked = false;
        for (const Atom& a : r.neg_body) {
            if (m.count(a) > 0) {
                blocked = true;
                break;
            }
        }
        if (blocked) {
            continue;
        }
        if (!r.head) {
            // A surviving integrity constraint: its positive body must
            // not hold in m.
            bool fires = true;
            for (const Atom& a : r.pos_body) {
                if (m.count(a) == 0) {
                    fires = false;
                    break;
                }
            }
            if (fires) {
                return false;
            }
            continue;
        }
        definite.clauses.push_back(NormalClause{r.head, r.pos_body, {}});
    }
    Interpretation least;
    for (;;) {
        Interpretation next = tp(definite, least);
        if (next == least) {
            break;
        }
        least = next;
    }
    return least == m;
}

std::vector<Interpretation> possible(const DProgram& p, std::size_t budget) {
    AtomSet heads;
    for (const DClause& r : p.clauses) {
        heads = set_union(heads, r.head);
    }
    if (heads.size() > budget) {
        throw BudgetExceededError(heads.size(), budget);
    }
    std::vector<Interpretation> result;
    for (const AtomSet& m : subsets_of(heads)) {
        if (gl_stable(canonical_split(p, m), m)) {
            result.push_back(m);
        }
    }
    return result;
}

namespace {

void for_each_selection(const DProgram& p, std::size_t index, SplitSelection& sel,
        const std::function<void(const SplitSelection&)>& visit) {
    if (index == p.clauses.size()) {
        visit(sel);
        return;
    }
    for (const AtomSet& choice : subsets_of(p.clauses[index].head)) {
        sel.chosen.push_back(choice);
        for_each_selection(p, index + 1, sel, visit);
        sel.chosen.pop_back();
    }
}

}  // namespace

std::vector<Interpretation> possible_all_splits(const DProgram& p, std::size_t budget) {
    AtomSet heads;
    for (const DClause& r : p.clauses) {
        heads = set_union(heads, r.head);
    }
    if (heads.size() > budget) {
        throw BudgetExceededError(heads.size(), budget);
    }
    std::set<AtomSet> found;
    SplitSelection sel;
    for_each_selection(p, 0, sel, [&](const SplitSelection& s) {
        NormalProgram split = split_program(p, s);
        for (const AtomSet& m : subsets_of(heads)) {
            if (gl_stable(split, m)) {
                found.insert(m);
            }
        }
    });
    std::vector<Interpretation> result(found.begin(), found.end());
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

}  // namespace acp::oracle
