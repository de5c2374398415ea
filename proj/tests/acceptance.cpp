/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file acceptance.cpp
 *
 * End-to-end acceptance suite. Prints one PASS/FAIL line per criterion
 * (the randomized theorem suite prints one line per sub-item) and exits
 * non-zero if anything failed. All randomized suites run 500 cases with
 * pinned seeds on programs of at most 6 atoms and 5 clauses; every
 * comparison is exact set equality.
 *
 ***********************************************************************/

#include "acp/oracle.h"

#include "testutil.h"

#include <cstdio>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace acp;
using namespace acp::test;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name;
    if (!ok && !detail.empty()) {
        std::cout << "  [" << detail << "]";
    }
    std::cout << "\n";
    if (!ok) {
        ++failures;
    }
}

template <typename Fn>
void criterion(const std::string& name, Fn&& fn) {
    try {
        std::string detail;
        bool ok = fn(detail);
        report(name, ok, detail);
    } catch (const std::exception& e) {
        report(name, false, std::string("exception: ") + e.what());
    }
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(ACP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        throw std::runtime_error("failed to launch CLI");
    }
    CliResult result;
    char buffer[512];
    while (fgets(buffer, sizeof(buffer), pipe)) {
        result.output += buffer;
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) {
        s.pop_back();
    }
    return s;
}

std::string describe(const Program& p, const Interpretation& m) {
    std::ostringstream out;
    out << "program:\n" << print(p) << "m=" << to_string(m);
    return out.str();
}

template <typename ProgramT>
bool check_enumeration_agreement(ProgramT p,
        const std::function<std::vector<Interpretation>(const ProgramT&)>& main_route,
        const std::function<std::vector<Interpretation>(const ProgramT&)>& oracle_route,
        std::string& detail, const std::string& what) {
    auto diverges = [&](const ProgramT& q) { return main_route(q) != oracle_route(q); };
    if (!diverges(p)) {
        return true;
    }
    ProgramT minimal = shrink_clauses<ProgramT>(p, diverges);
    std::ostringstream out;
    out << what << " diverges; minimal program:\n" << print(minimal);
    detail = out.str();
    return false;
}

// classical satisfaction of a normal program
bool normal_model(const NormalProgram& p, const Interpretation& m) {
    for (const NormalClause& r : p.clauses) {
        bool body = true;
        for (const Atom& x : r.pos_body) {
            if (m.count(x) == 0) {
                body = false;
            }
        }
        for (const Atom& x : r.neg_body) {
            if (m.count(x) > 0) {
                body = false;
            }
        }
        if (body && (!r.head || m.count(*r.head) == 0)) {
            return false;
        }
    }
    return true;
}

constexpr int kCases = 500;

// ------------------------------------------------------- criteria 1..6

bool criterion1(std::string& detail) {
    CliResult cli = run_cli(
            "tnd --interp b,c,e --format json " + fixture_path("p4.acp"));
    if (cli.exit_code != 0 || trim(cli.output) != R"([["a"],["d"],["a","d"]])") {
        detail = "CLI tnd output was " + trim(cli.output);
        return false;
    }
    Program p4 = load_acp("p4.acp");
    for (const AtomSet& extra : subsets_of(atoms({"a", "c", "e"}))) {
        Interpretation m = set_union(atoms({"b", "d"}), extra);
        if (!tnd(p4, m).derivable_sets.empty()) {
            detail = "expected empty collection for m=" + to_string(m);
            return false;
        }
    }
    return true;
}

bool criterion2(std::string& detail) {
    Program p5 = load_acp("p5.acp");
    AtomSet scope = atoms({"p", "q", "s"});
    if (enumerate_supported(p5, scope) != sets({{"p"}})) {
        detail = "supported set mismatch";
        return false;
    }
    bool models_ok = is_model(p5, atoms({"q"})) && is_model(p5, atoms({"p", "s"}));
    bool unsupported_ok = !is_supported(p5, atoms({"q"})) && !is_supported(p5, atoms({"p", "s"}));
    if (!models_ok || !unsupported_ok) {
        detail = "model/supported flags wrong on {q} or {p,s}";
        return false;
    }
    return true;
}

bool criterion3(std::string& detail) {
    Program p6 = load_acp("p6.acp");
    Interpretation m = atoms({"a", "b", "c", "d"});
    Computation t = canonical_computation(p6, m);
    std::vector<Interpretation> expected = {
            {}, atoms({"b", "c"}), atoms({"a", "b", "c"}), atoms({"a", "b", "c"})};
    if (t.steps != expected) {
        detail = "steps mismatch";
        return false;
    }
    if (t.result() == m) {
        detail = "result unexpectedly reconstructed all of m";
        return false;
    }
    return true;
}

bool criterion4(std::string& detail) {
    Program p7 = load_acp("p7.acp");
    if (enumerate_stable(p7) != sets({{"a"}, {"a", "d"}})) {
        detail = "stable set of the nesting example is wrong";
        return false;
    }
    if (!is_model(p7, atoms({"a", "b", "c"})) || is_stable(p7, atoms({"a", "b", "c"}))) {
        detail = "{a,b,c} must be a model but not stable";
        return false;
    }
    if (is_model(p7, {})) {
        detail = "the empty set must not be a model";
        return false;
    }
    Program p7b = load_acp("p7b.acp");
    if (enumerate_models(p7b).empty() || !enumerate_stable(p7b).empty()) {
        detail = "p7b must have models and no stable models";
        return false;
    }
    return true;
}

bool criterion5(std::string& detail) {
    Program p = load_acp("one_of_two.acp");
    if (enumerate_derivable(p) != sets({{"a"}, {"b"}, {"a", "b"}})) {
        detail = "derivable set mismatch";
        return false;
    }
    if (!is_derivable(p, atoms({"a"})) || !is_derivable(p, atoms({"b"}))) {
        detail = "a minimal model is not derivable";
        return false;
    }
    if (largest_derivable(p) != atoms({"a", "b"})) {
        detail = "largest derivable mismatch";
        return false;
    }
    return true;
}

bool criterion6(std::string& detail) {
    DProgram pd = load_dlp("pd.dlp");
    Interpretation m = atoms({"a", "b"});

    // the worked example's split
    SplitSelection sel{{atoms({"a"}), atoms({"a", "c"}), atoms({"b"}), {}}};
    NormalProgram q = split_program(pd, sel);
    if (!is_stable(normal_to_pb(q), m) || !oracle::gl_stable(q, m)) {
        detail = "{a,b} is not stable for the example split";
        return false;
    }
    if (!is_possible(pd, m)) {
        detail = "{a,b} is not recognized via the canonical split";
        return false;
    }
    if (enumerate_possible(pd) != enumerate_stable(to_ca(pd))) {
        detail = "possible-model set differs from the stable set of the embedding";
        return false;
    }
    return true;
}

// ------------------------------------------------- criterion 7 (a..j)

bool theorem_model_prefixpoint(std::string& detail) {
    Rng rng(0xACCE0701);
    for (int i = 0; i < kCases; ++i) {
        Program p = random_program(rng, {.max_atoms = 6, .max_clauses = 5, .allow_not = true,
                                                .monotone_only = true});
        for (const AtomSet& m : subsets_of(atoms_of(p))) {
            bool prefix = false;
            for (const Interpretation& d : tnd(p, m).derivable_sets) {
                if (is_subset(d, m)) {
                    prefix = true;
                    break;
                }
            }
            if (is_model(p, m) != prefix) {
                detail = describe(p, m);
                return false;
            }
        }
    }
    return true;
}

bool theorem_supported_fixpoint(std::string& detail) {
    Rng rng(0xACCE0702);
    for (int i = 0; i < kCases; ++i) {
        Program p = random_program(rng, {.max_atoms = 6, .max_clauses = 5, .allow_not = true,
                                                .monotone_only = false});
        for (const AtomSet& m : subsets_of(atoms_of(p))) {
            const auto sets = tnd(p, m).derivable_sets;
            bool fixpoint = std::find(sets.begin(), sets.end(), m) != sets.end();
            if (is_supported(p, m) != fixpoint) {
                detail = describe(p, m);
                return false;
            }
        }
    }
    return true;
}

bool theorem_stable_supported_model(std::string& detail) {
    Rng rng(0xACCE0703);
    for (int i = 0; i < kCases; ++i) {
        Program p = random_program(rng, {.max_atoms = 6, .max_clauses = 5, .allow_not = true,
                                                .monotone_only = true});
        for (const AtomSet& m : subsets_of(atoms_of(p))) {
            if (is_stable(p, m) && !is_supported(p, m)) {
                detail = "stable but unsupported: " + describe(p, m);
                return false;
            }
            if (is_supported(p, m) && !is_model(p, m)) {
                detail = "supported but no model: " + describe(p, m);
                return false;
            }
        }
    }
    return true;
}

bool theorem_horn_stable_derivable(std::string& detail) {
    Rng rng(0xACCE0704);
    for (int i = 0; i < kCases; ++i) {
        Program p = random_program(rng, {.max_atoms = 6, .max_clauses = 5, .allow_not = false,
                                                .monotone_only = true});
        if (enumerate_stable(p) != enumerate_derivable(p)) {
            detail = "program:\n" + print(p);
            return false;
        }
    }
    return true;
}

bool theorem_definite(std::string& detail) {
    Rng rng(0xACCE0705);
    for (int i = 0; i < kCases; ++i) {
        Program p = random_program(rng, {.max_atoms = 6, .max_clauses = 5, .allow_not = true,
                                                .monotone_only = true, .definite_heads = true});
        for (const AtomSet& m : subsets_of(atoms_of(p))) {
            TndResult r = tnd(p, m);
            if (r.derivable_sets.size() != 1 || r.derivable_sets[0] != td(p, m)) {
                detail = "operator not deterministic: " + describe(p, m);
                return false;
            }
        }

        Program q = random_program(rng, {.max_atoms = 6, .max_clauses = 5, .allow_not = false,
                                                .monotone_only = true, .definite_heads = true});
        Interpretation limit;
        for (;;) {
            Interpretation next = td(q, limit);
            if (next == limit) {
                break;
            }
            limit = next;
        }
        if (enumerate_derivable(q) != std::vector<Interpretation>{limit}) {
            detail = "td limit is not the unique derivable model:\n" + print(q);
            return false;
        }
    }
    return true;
}

bool theorem_lp_mca(std::string& detail) {
    Rng rng(0xACCE0706);
    for (int i = 0; i < kCases; ++i) {
        NormalProgram p = random_normal_program(rng, 6, 5);
        Program image = normal_to_pb(p);
        for (const AtomSet& m : subsets_of(atoms({"a", "b", "c", "d", "e", "f"}))) {
            if (is_model(image, m) != normal_model(p, m)) {
                detail = "model mismatch:\n" + print(p) + "m=" + to_string(m);
                return false;
            }
            if (is_supported(image, m) != (normal_model(p, m) && oracle::tp(p, m) == m)) {
                detail = "supported mismatch:\n" + print(p) + "m=" + to_string(m);
                return false;
            }
            if (is_stable(image, m) != oracle::gl_stable(p, m)) {
                detail = "stable mismatch:\n" + print(p) + "m=" + to_string(m);
                return false;
            }
        }
    }
    return true;
}

bool theorem_ca_mca(std::string& detail) {
    Rng rng(0xACCE0707);
    AtomSet pool = atoms({"a", "b", "c", "d", "e", "f"});
    for (int i = 0; i < kCases; ++i) {
        LProgram p = random_lparse_program(rng, 6, 5, /*allow_not=*/false);
        Program e = e_translate(p);
        for (const AtomSet& m : subsets_of(pool)) {
            if (lparse_stable(p, m) != is_stable(e, m)) {
                detail = "stable mismatch under e:\n" + print(p) + "m=" + to_string(m);
                return false;
            }
            if (lparse_supported(p, m) != is_supported(e, m)) {
                detail = "supported mismatch under e:\n" + print(p) + "m=" + to_string(m);
                return false;
            }
        }

        Program q = random_pb_program(rng, 6, 5, /*min_neg_lower=*/1);
        LProgram f = f_translate(q);
        for (const AtomSet& m : subsets_of(pool)) {
            if (is_stable(q, m) != lparse_stable(f, m)) {
                detail = "stable mismatch under f:\n" + print(q) + "m=" + to_string(m);
                return false;
            }
            if (is_supported(q, m) != lparse_supported(f, m)) {
                detail = "supported mismatch under f:\n" + print(q) + "m=" + to_string(m);
                return false;
            }
        }

        // The tautology branch of f is inert only while no other clause
        // can reach the tautology head's lower bound, so the
        // branch-taking clause gets a positive bound over atoms
        // disjoint from the rest of the program.
        Program rest = random_pb_program(rng, 4, 4, /*min_neg_lower=*/1);
        std::map<Atom, long long> head_weights{
                {Atom{"e"}, rng.range(1, 3)}, {Atom{"f"}, rng.range(0, 3)}};
        std::map<Atom, long long> never_weights{{Atom{"a"}, rng.range(0, 3)}};
        Clause branch_clause{weight_atom(rng.range(1, 3), head_weights),
                {neg(weight_atom(0, never_weights))}};
        std::vector<Clause> taut_clauses = rest.clauses;
        taut_clauses.push_back(branch_clause);
        Program taut = Program::from_clauses(std::move(taut_clauses));
        LProgram ft = f_translate(taut);
        for (const AtomSet& m : subsets_of(pool)) {
            if (is_stable(taut, m) != lparse_stable(ft, m)) {
                detail = "stable mismatch under f (tautology):\n" + print(taut) +
                        "m=" + to_string(m);
                return false;
            }
        }
    }
    return true;
}

bool theorem_eliminate_not(std::string& detail) {
    Rng rng(0xACCE0708);
    for (int i = 0; i < kCases; ++i) {
        // negation confined to bodies: a negated literal in a head
        // would turn into a positive fresh atom the head can derive,
        // which the source literal never could
        LProgram p = random_lparse_program(
                rng, 6, 5, /*allow_not=*/true, /*allow_not_in_heads=*/false);
        NotElimination ne = eliminate_not(p);
        auto original = enumerate_lparse_stable(p);
        auto rewritten = enumerate_lparse_stable(ne.program);
        std::vector<Interpretation> mapped;
        for (Interpretation m : original) {
            for (const auto& [fresh, source] : ne.fresh_to_source) {
                if (m.count(source) == 0) {
                    m.insert(fresh);
                }
            }
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end(), canonical_less);
        if (mapped != rewritten) {
            detail = "bijection failed:\n" + print(p);
            return false;
        }
        // backward direction: stripping fresh atoms lands in the original set
        for (Interpretation m : rewritten) {
            Interpretation stripped;
            for (const Atom& x : m) {
                if (ne.fresh_to_source.count(x) == 0) {
                    stripped.insert(x);
                }
            }
            if (!lparse_stable(p, stripped)) {
                detail = "backward direction failed:\n" + print(p);
                return false;
            }
        }
    }
    return true;
}

bool theorem_prop_comp(std::string& detail) {
    Rng rng(0xACCE0709);
    for (int i = 0; i < kCases; ++i) {
        Program p = random_program(rng, {.max_atoms = 6, .max_clauses = 4, .allow_not = true,
                                                .monotone_only = true});
        Program q = random_program(rng, {.max_atoms = 6, .max_clauses = 3, .allow_not = true,
                                                .monotone_only = true});
        Program both = Program::from_clauses([&] {
            std::vector<Clause> clauses = p.clauses;
            clauses.insert(clauses.end(), q.clauses.begin(), q.clauses.end());
            return clauses;
        }());
        AtomSet scope = set_union(atoms_of(p), atoms_of(q));
        for (const AtomSet& m : subsets_of(scope)) {
            if (is_stable(p, m) && is_model(q, m) && !is_stable(both, m)) {
                detail = "union direction failed:\n" + print(both) + "m=" + to_string(m);
                return false;
            }
        }

        // attach a random pure-constraint program
        std::vector<Clause> constraints;
        int n = rng.range(0, 3);
        std::vector<Atom> pool = atom_pool(6);
        for (int j = 0; j < n; ++j) {
            std::vector<Literal> body;
            int len = rng.range(0, 2);
            for (int k = 0; k < len; ++k) {
                body.push_back(Literal{random_catom(rng, pool, true), rng.chance(0.4)});
            }
            constraints.push_back(Clause{inconsistent_atom(), std::move(body)});
        }
        Program qc = Program::from_clauses(constraints);
        Program with_constraints = Program::from_clauses([&] {
            std::vector<Clause> clauses = p.clauses;
            clauses.insert(clauses.end(), qc.clauses.begin(), qc.clauses.end());
            return clauses;
        }());
        for (const AtomSet& m : subsets_of(set_union(atoms_of(p), atoms_of(qc)))) {
            if (is_stable(with_constraints, m) && !is_stable(p, m)) {
                detail = "constraint direction failed:\n" + print(with_constraints) +
                        "m=" + to_string(m);
                return false;
            }
        }
    }
    return true;
}

bool theorem_oracle_agreement(std::string& detail) {
    Rng rng(0xACCE0710);
    for (int i = 0; i < kCases; ++i) {
        Program p = random_program(rng, {.max_atoms = 6, .max_clauses = 5, .allow_not = true,
                                                .monotone_only = true});
        if (!check_enumeration_agreement<Program>(
                    p, [](const Program& q) { return enumerate_models(q); },
                    [](const Program& q) { return oracle::models(q, atoms_of(q)); }, detail,
                    "enumerate_models")) {
            return false;
        }
        if (!check_enumeration_agreement<Program>(
                    p, [](const Program& q) { return enumerate_supported(q); },
                    [](const Program& q) { return oracle::supported(q, atoms_of(q)); }, detail,
                    "enumerate_supported")) {
            return false;
        }
        if (!check_enumeration_agreement<Program>(
                    p, [](const Program& q) { return enumerate_stable(q); },
                    [](const Program& q) { return oracle::stable_set(q); }, detail,
                    "enumerate_stable")) {
            return false;
        }

        AtomSet m = random_subset(rng, atom_pool(6), 5);
        TndResult main_result = tnd(p, m);
        TndResult oracle_result = oracle::tnd(p, m);
        if (main_result.applicable != oracle_result.applicable ||
                main_result.derivable_sets != oracle_result.derivable_sets) {
            detail = "tnd diverges: " + describe(p, m);
            return false;
        }

        Program horn = random_program(rng, {.max_atoms = 6, .max_clauses = 5,
                                                   .allow_not = false, .monotone_only = true});
        if (!check_enumeration_agreement<Program>(
                    horn, [](const Program& q) { return enumerate_derivable(q); },
                    [](const Program& q) { return oracle::derivable(q); }, detail,
                    "enumerate_derivable")) {
            return false;
        }

        DProgram d = random_disjunctive_program(rng, 5, 4);
        if (!check_enumeration_agreement<DProgram>(
                    d, [](const DProgram& q) { return enumerate_possible(q); },
                    [](const DProgram& q) { return oracle::possible(q); }, detail,
                    "enumerate_possible")) {
            return false;
        }
    }
    return true;
}

// ----------------------------------------------------- criterion 8

bool criterion8(std::string& detail) {
    Program parity = Program::from_clauses({Clause{
            cardinality_atom(1, atoms({"a"})), {neg(parity_even_atom(atoms({"b"})))}}});
    try {
        enumerate_stable(parity);
        detail = "non-monotone stable query did not fail";
        return false;
    } catch (const NonMonotoneAtomError&) {
    }

    try {
        enumerate_derivable(load_acp("p5.acp"));
        detail = "derivable query with negation did not fail";
        return false;
    } catch (const NotHornError&) {
    }

    try {
        enumerate_derivable(load_acp("three_heads.acp"), 2);
        detail = "budget 2 on a 3-head-atom program did not fail";
        return false;
    } catch (const BudgetExceededError&) {
    }

    CliResult cli = run_cli("derivable --budget 2 " + fixture_path("three_heads.acp"));
    if (cli.exit_code != 3) {
        detail = "CLI exit code was " + std::to_string(cli.exit_code) + ", expected 3";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion("criterion 1: one-step operator on the worked example (via CLI)", criterion1);
    criterion("criterion 2: supported models of the support example", criterion2);
    criterion("criterion 3: canonical computation of the Horn example", criterion3);
    criterion("criterion 4: stable models nest; models without stable models", criterion4);
    criterion("criterion 5: derivable models of a one-of-two fact", criterion5);
    criterion("criterion 6: possible models and the cardinality embedding", criterion6);
    criterion("criterion 7a: model iff prefixpoint (500 cases)", theorem_model_prefixpoint);
    criterion("criterion 7b: supported iff fixpoint (500 cases)", theorem_supported_fixpoint);
    criterion("criterion 7c: stable => supported => model (500 cases)",
            theorem_stable_supported_model);
    criterion("criterion 7d: Horn stable set equals derivable set (500 cases)",
            theorem_horn_stable_derivable);
    criterion("criterion 7e: definite operator determinism and least model (500 cases)",
            theorem_definite);
    criterion("criterion 7f: normal-program embedding preserves semantics (500 cases)",
            theorem_lp_mca);
    criterion("criterion 7g: e/f translations preserve stable and supported (500 cases)",
            theorem_ca_mca);
    criterion("criterion 7h: negation elimination bijection (500 cases)", theorem_eliminate_not);
    criterion("criterion 7i: modular composition with constraints (500 cases)", theorem_prop_comp);
    criterion("criterion 7j: main vs oracle agreement on enumerations (500 cases)",
            theorem_oracle_agreement);
    criterion("criterion 8: error paths and exit codes", criterion8);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
