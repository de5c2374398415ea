/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file main.cpp
 *
 * Command line driver. Exit codes: 0 success, 1 semantic error,
 * 2 syntax error, 3 budget exceeded.
 *
 ***********************************************************************/

#include "acp/oracle.h"
#include "acp/stable.h"
#include "acp/textio.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace acp;

struct Options {
    std::string file;
    std::string dialect;
    std::string interp;
    std::string universe;
    std::string format = "text";
    std::string from;
    std::string to;
    std::size_t budget = kDefaultBudget;
    bool use_oracle = false;
    bool interp_given = false;
};

std::string read_input(const Options& opt) {
    if (opt.file.empty() || opt.file == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(opt.file);
    if (!in) {
        throw SemanticError("cannot open file '" + opt.file + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

AtomSet parse_atom_list(const std::string& csv) {
    AtomSet result;
    std::istringstream in(csv);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (!name.empty()) {
            result.insert(atom(name));
        }
    }
    return result;
}

Dialect resolve_dialect(const Options& opt, const std::string& command) {
    if (!opt.dialect.empty()) {
        return dialect_from_string(opt.dialect);
    }
    if (command == "possible") {
        return Dialect::disjunctive;
    }
    if (command == "lparse-stable") {
        return Dialect::lparse;
    }
    return Dialect::acp;
}

void emit_sets(const Options& opt, const std::vector<Interpretation>& sets) {
    if (opt.format == "json") {
        std::cout << emit_json(sets) << "\n";
        return;
    }
    for (const Interpretation& m : sets) {
        std::cout << to_string(m) << "\n";
    }
}

void emit_bool(const Options& opt, bool value) {
    if (opt.format == "json") {
        std::cout << emit_json(value) << "\n";
    } else {
        std::cout << (value ? "true" : "false") << "\n";
    }
}

void emit_set(const Options& opt, const Interpretation& m) {
    if (opt.format == "json") {
        std::cout << emit_json(m) << "\n";
    } else {
        std::cout << to_string(m) << "\n";
    }
}

void require_same(const std::vector<Interpretation>& main_result,
        const std::vector<Interpretation>& oracle_result, const std::string& what) {
    if (main_result != oracle_result) {
        throw SemanticError("oracle divergence on " + what);
    }
}

void require_same(bool main_result, bool oracle_result, const std::string& what) {
    if (main_result != oracle_result) {
        throw SemanticError("oracle divergence on " + what);
    }
}

/// acp-program commands accept the acp dialect directly and the normal
/// dialect through the weight-atom embedding.
Program load_acp_program(Dialect dialect, const std::string& text, const AtomSet& extra) {
    SourceProgram src = parse(dialect, text);
    Program p;
    if (dialect == Dialect::acp) {
        p = std::get<Program>(std::move(src.parsed));
    } else if (dialect == Dialect::normal) {
        p = normal_to_pb(std::get<NormalProgram>(src.parsed));
    } else {
        throw SemanticError("this command expects an acp or normal program; use --dialect");
    }
    p.universe.add_all(extra);
    return p;
}

int run(const std::string& command, const Options& opt) {
    if (opt.format != "text" && opt.format != "json") {
        throw SemanticError("unknown format '" + opt.format + "'; use text or json");
    }
    std::string text = read_input(opt);
    Dialect dialect = resolve_dialect(opt, command);
    AtomSet interp = parse_atom_list(opt.interp);
    AtomSet extra = set_union(parse_atom_list(opt.universe), interp);

    if (command == "check") {
        SourceProgram src = parse(dialect, text);
        std::size_t clause_count = src.clause_spans.size();
        if (opt.format == "json") {
            std::cout << "{\"dialect\":\"" << to_string(dialect) << "\",\"clauses\":"
                      << clause_count << "}\n";
        } else {
            std::cout << "ok: " << to_string(dialect) << " program, " << clause_count
                      << " clause(s)\n";
        }
        return 0;
    }

    if (command == "possible") {
        if (dialect != Dialect::disjunctive) {
            throw SemanticError("possible models are defined for disjunctive programs");
        }
        DProgram p = std::get<DProgram>(parse(dialect, text).parsed);
        p.universe.add_all(extra);
        if (opt.interp_given) {
            bool value = is_possible(p, interp);
            if (opt.use_oracle) {
                require_same(value, oracle::gl_stable(canonical_split(p, interp), interp),
                        "is_possible");
            }
            emit_bool(opt, value);
        } else {
            auto sets = enumerate_possible(p, opt.budget);
            if (opt.use_oracle) {
                require_same(sets, oracle::possible(p, opt.budget), "enumerate_possible");
            }
            emit_sets(opt, sets);
        }
        return 0;
    }

    if (command == "lparse-stable") {
        if (dialect != Dialect::lparse) {
            throw SemanticError("lparse-stable expects an lparse program");
        }
        LProgram p = std::get<LProgram>(parse(dialect, text).parsed);
        p.universe.add_all(extra);
        if (opt.use_oracle) {
            std::cerr << "note: no oracle route for lparse-stable; flag ignored\n";
        }
        if (opt.interp_given) {
            emit_bool(opt, lparse_stable(p, interp));
        } else {
            emit_sets(opt, enumerate_lparse_stable(p, opt.budget));
        }
        return 0;
    }

    if (command == "supported" && dialect == Dialect::lparse) {
        LProgram p = std::get<LProgram>(parse(dialect, text).parsed);
        p.universe.add_all(extra);
        if (opt.interp_given) {
            emit_bool(opt, lparse_supported(p, interp));
        } else {
            emit_sets(opt, enumerate_lparse_supported(p, opt.budget));
        }
        return 0;
    }

    if (command == "translate") {
        if (opt.from == "normal-as-pb") {
            NormalProgram p = std::get<NormalProgram>(parse(Dialect::normal, text).parsed);
            Program out = normal_to_pb(p);
            if (opt.format == "json") {
                std::cout << emit_json(clause_lines(out)) << "\n";
            } else {
                std::cout << print(out);
            }
            return 0;
        }
        if (opt.from == "disjunctive-as-ca") {
            DProgram p = std::get<DProgram>(parse(Dialect::disjunctive, text).parsed);
            Program out = to_ca(p);
            if (opt.format == "json") {
                std::cout << emit_json(clause_lines(out)) << "\n";
            } else {
                std::cout << print(out);
            }
            return 0;
        }
        if (opt.from == "lparse" && (opt.to.empty() || opt.to == "pb")) {
            LProgram p = std::get<LProgram>(parse(Dialect::lparse, text).parsed);
            Program out = e_translate(eliminate_not(p).program);
            if (opt.format == "json") {
                std::cout << emit_json(clause_lines(out)) << "\n";
            } else {
                std::cout << print(out);
            }
            return 0;
        }
        if (opt.from == "pb" && (opt.to.empty() || opt.to == "lparse")) {
            Program p = std::get<Program>(parse(Dialect::acp, text).parsed);
            LProgram out = f_translate(p);
            if (opt.format == "json") {
                std::cout << emit_json(clause_lines(out)) << "\n";
            } else {
                std::cout << print(out);
            }
            return 0;
        }
        throw SemanticError(
                "unsupported translation; use --from pb|lparse|normal-as-pb|disjunctive-as-ca");
    }

    // Remaining commands operate on acp programs.
    Program p = load_acp_program(dialect, text, extra);

    // enumeration scope: the atoms of the program, widened by --universe
    AtomSet scope = p.universe.atom_set();

    if (command == "models") {
        if (opt.interp_given) {
            bool value = is_model(p, interp);
            if (opt.use_oracle) {
                require_same(value, oracle::is_model(p, interp), "is_model");
            }
            emit_bool(opt, value);
        } else {
            auto sets = enumerate_models(p, scope, opt.budget);
            if (opt.use_oracle) {
                require_same(sets, oracle::models(p, scope, opt.budget), "enumerate_models");
            }
            emit_sets(opt, sets);
        }
        return 0;
    }
    if (command == "supported") {
        if (opt.interp_given) {
            bool value = is_supported(p, interp);
            if (opt.use_oracle) {
                require_same(value, oracle::is_supported(p, interp), "is_supported");
            }
            emit_bool(opt, value);
        } else {
            auto sets = enumerate_supported(p, scope, opt.budget);
            if (opt.use_oracle) {
                require_same(sets, oracle::supported(p, scope, opt.budget), "enumerate_supported");
            }
            emit_sets(opt, sets);
        }
        return 0;
    }
    if (command == "stable") {
        if (opt.interp_given) {
            bool value = is_stable(p, interp);
            if (opt.use_oracle) {
                require_same(value, oracle::stable(p, interp, opt.budget), "is_stable");
            }
            emit_bool(opt, value);
        } else {
            auto sets = enumerate_stable(p, opt.budget);
            if (opt.use_oracle) {
                require_same(sets, oracle::stable_set(p, opt.budget), "enumerate_stable");
            }
            emit_sets(opt, sets);
        }
        return 0;
    }
    if (command == "derivable") {
        if (opt.interp_given) {
            bool value = is_derivable(p, interp);
            if (opt.use_oracle) {
                auto all = oracle::derivable(p, opt.budget);
                require_same(value, std::find(all.begin(), all.end(), interp) != all.end(),
                        "is_derivable");
            }
            emit_bool(opt, value);
        } else {
            auto sets = enumerate_derivable(p, opt.budget);
            if (opt.use_oracle) {
                require_same(sets, oracle::derivable(p, opt.budget), "enumerate_derivable");
            }
            emit_sets(opt, sets);
        }
        return 0;
    }
    if (command == "largest-derivable") {
        emit_set(opt, largest_derivable(p));
        return 0;
    }
    if (command == "tnd") {
        TndResult result = tnd(p, interp, opt.budget);
        if (opt.use_oracle) {
            require_same(result.derivable_sets, oracle::tnd(p, interp, opt.budget).derivable_sets,
                    "tnd");
        }
        emit_sets(opt, result.derivable_sets);
        return 0;
    }
    if (command == "reduct") {
        Reduct r = reduct(p, interp);
        if (opt.format == "json") {
            nlohmann::json obj;
            obj["removed"] = r.removed;
            obj["clauses"] = clause_lines(r.program);
            std::cout << obj.dump() << "\n";
        } else {
            std::cout << print(r.program);
        }
        return 0;
    }
    throw SemanticError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semantics engine for logic programs with constraint atoms"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> commands = {
            {"models", "enumerate models, or check one with --interp"},
            {"supported", "supported models (also for --dialect lparse)"},
            {"stable", "stable models of a monotone program"},
            {"derivable", "derivable models of a Horn program"},
            {"largest-derivable", "largest derivable model"},
            {"tnd", "one-step provable sets from --interp"},
            {"reduct", "the reduct with respect to --interp"},
            {"possible", "possible models of a disjunctive program"},
            {"lparse-stable", "lparse-stable models of a weight-atom program"},
            {"translate", "source-to-source translation (--from/--to)"},
            {"check", "parse and validate only"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("file", opt.file, "program file (stdin when absent)");
        sub->add_option("--dialect", opt.dialect, "acp|lparse|normal|disjunctive");
        sub->add_option("--interp", opt.interp, "comma-separated interpretation");
        sub->add_option("--universe", opt.universe, "extra universe atoms");
        sub->add_option("--budget", opt.budget, "enumeration budget (atom count)");
        sub->add_option("--format", opt.format, "text|json");
        sub->add_flag("--oracle", opt.use_oracle, "cross-check against the oracle");
        if (name == "translate") {
            sub->add_option("--from", opt.from, "pb|lparse|normal-as-pb|disjunctive-as-ca");
            sub->add_option("--to", opt.to, "pb|lparse");
        }
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    std::string command;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            command = commands[i].first;
            opt.interp_given = subs[i]->count("--interp") > 0;
        }
    }

    try {
        return run(command, opt);
    } catch (const acp::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const acp::BudgetExceededError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const acp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
