/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file textio.h
 *
 * Text syntax for the four program dialects, the pretty-printer, and
 * JSON serialization of results.
 *
 * Shared grammar conventions: clauses end with '.'; ':-' separates head
 * and body; '%' starts a comment; identifiers are a lowercase letter
 * followed by [a-z0-9_]*; 'not', 'FALSE' and 'TABLE' are reserved; the
 * sigil '~' is reserved for atoms introduced by eliminate_not.
 *
 * acp dialect:      2{a} :- 2{b,d}, not(1{e}).   bounds k{...}l with
 *                   missing lower 0 and missing upper infinite; bare
 *                   lists are cardinality atoms, '=' weights make a
 *                   weight atom; TABLE[a,b: {a},{a,b}] is an explicit
 *                   table; a bare identifier abbreviates the weight
 *                   atom 1{a=1}.
 * lparse dialect:   1{a=1,not(b)=2}3 :- 0{c=1}0. elements may be
 *                   negated; body atoms are never literal-negated.
 * normal dialect:   a :- b, not(c).
 * disjunctive:      a | b :- c, not(d).          empty heads allowed.
 *
 ***********************************************************************/

#pragma once

#include "acp/disjunctive.h"
#include "acp/horn.h"
#include "acp/lparse.h"
#include "acp/translate.h"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace acp {

enum class Dialect { acp, lparse, normal, disjunctive };

std::string to_string(Dialect d);
Dialect dialect_from_string(const std::string& name);

struct SourceSpan {
    int line = 0;
    int column = 0;
};

struct SourceProgram {
    Dialect dialect;
    std::string text;
    std::variant<Program, LProgram, NormalProgram, DProgram> parsed;
    std::vector<SourceSpan> clause_spans;
};

/// Parses the given dialect; every mentioned atom is registered into
/// the program's universe. Throws SyntaxError with a 1-based position.
SourceProgram parse(Dialect dialect, std::string_view text);

std::string print(const ConstraintAtom& a);
std::string print(const Literal& lit);
std::string print(const Clause& r);
std::string print(const Program& p);
std::string print(const LAtom& a);
std::string print(const LClause& r);
std::string print(const LProgram& p);
std::string print(const NormalClause& r);
std::string print(const NormalProgram& p);
std::string print(const DClause& r);
std::string print(const DProgram& p);

/// JSON: interpretations are arrays of sorted atom names; collections
/// are arrays of those; programs are arrays of clause strings.
std::string emit_json(const std::vector<Interpretation>& sets);
std::string emit_json(const Interpretation& m);
std::string emit_json(bool value);
std::string emit_json(const Computation& t);
std::string emit_json(const std::vector<std::string>& clause_lines);

std::vector<std::string> clause_lines(const Program& p);
std::vector<std::string> clause_lines(const LProgram& p);
std::vector<std::string> clause_lines(const NormalProgram& p);
std::vector<std::string> clause_lines(const DProgram& p);

}  // namespace acp
