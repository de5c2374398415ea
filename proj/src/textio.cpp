/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

#include "acp/textio.h"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace acp {

std::string to_string(Dialect d) {
    switch (d) {
        case Dialect::acp: return "acp";
        case Dialect::lparse: return "lparse";
        case Dialect::normal: return "normal";
        case Dialect::disjunctive: return "disjunctive";
    }
    return "acp";
}

Dialect dialect_from_string(const std::string& name) {
    if (name == "acp") return Dialect::acp;
    if (name == "lparse") return Dialect::lparse;
    if (name == "normal") return Dialect::normal;
    if (name == "disjunctive") return Dialect::disjunctive;
    throw SemanticError("unknown dialect '" + name + "'");
}

// ------------------------------------------------------------------ lexer

namespace {

enum class Tok {
    Ident,
    Int,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Colon,
    Comma,
    Dot,
    Arrow,
    Equals,
    Pipe,
    KwNot,
    KwFalse,
    KwTable,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        for (;;) {
            skip_trivia();
            if (pos_ >= text_.size()) {
                tokens.push_back({Tok::End, "", 0, line_, column_});
                return tokens;
            }
            tokens.push_back(next_token());
        }
    }

private:
    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, line_, column_);
    }

    Token next_token() {
        int line = line_;
        int column = column_;
        char c = text_[pos_];
        auto simple = [&](Tok kind) {
            advance();
            return Token{kind, std::string(1, c), 0, line, column};
        };
        switch (c) {
            case '{': return simple(Tok::LBrace);
            case '}': return simple(Tok::RBrace);
            case '[': return simple(Tok::LBracket);
            case ']': return simple(Tok::RBracket);
            case '(': return simple(Tok::LParen);
            case ')': return simple(Tok::RParen);
            case ',': return simple(Tok::Comma);
            case '.': return simple(Tok::Dot);
            case '=': return simple(Tok::Equals);
            case '|': return simple(Tok::Pipe);
            case ':':
                advance();
                if (pos_ < text_.size() && text_[pos_] == '-') {
                    advance();
                    return Token{Tok::Arrow, ":-", 0, line, column};
                }
                return Token{Tok::Colon, ":", 0, line, column};
            default: break;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            if (c == '-') {
                advance();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    fail("expected a digit after '-'");
                }
            }
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            std::string digits(text_.substr(start, pos_ - start));
            try {
                return Token{Tok::Int, digits, std::stoll(digits), line, column};
            } catch (const std::out_of_range&) {
                throw SyntaxError("integer '" + digits + "' out of range", line, column);
            }
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                    (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                            std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                            text_[pos_] == '_')) {
                advance();
            }
            std::string word(text_.substr(start, pos_ - start));
            if (word == "not") {
                return Token{Tok::KwNot, word, 0, line, column};
            }
            return Token{Tok::Ident, word, 0, line, column};
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isupper(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            std::string word(text_.substr(start, pos_ - start));
            if (word == "FALSE") {
                return Token{Tok::KwFalse, word, 0, line, column};
            }
            if (word == "TABLE") {
                return Token{Tok::KwTable, word, 0, line, column};
            }
            fail("unknown keyword '" + word + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// ----------------------------------------------------------------- parser

class Parser {
public:
    Parser(Dialect dialect, std::string_view text)
            : dialect_(dialect), tokens_(Lexer(text).run()) {}

    SourceProgram run(std::string_view text) {
        SourceProgram out;
        out.dialect = dialect_;
        out.text = std::string(text);
        switch (dialect_) {
            case Dialect::acp: out.parsed = parse_acp(out.clause_spans); break;
            case Dialect::lparse: out.parsed = parse_lparse(out.clause_spans); break;
            case Dialect::normal: out.parsed = parse_normal(out.clause_spans); break;
            case Dialect::disjunctive: out.parsed = parse_disjunctive(out.clause_spans); break;
        }
        return out;
    }

private:
    const Token& peek() const {
        return tokens_[pos_];
    }

    bool at(Tok kind) const {
        return peek().kind == kind;
    }

    Token take() {
        return tokens_[pos_++];
    }

    Token expect(Tok kind, const char* what) {
        if (!at(kind)) {
            fail(std::string("expected ") + what);
        }
        return take();
    }

    bool accept(Tok kind) {
        if (at(kind)) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message + ", got '" + peek().text + "'", peek().line, peek().column);
    }

    /// Re-raises construction errors (negative weight, bound inversion,
    /// duplicates) as positioned syntax errors.
    template <typename Fn>
    auto located(int line, int column, Fn&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (const SemanticError& e) {
            throw SyntaxError(e.what(), line, column);
        }
    }

    Atom ident_atom() {
        Token t = expect(Tok::Ident, "an identifier");
        return Atom{t.text};
    }

    // -- acp dialect -------------------------------------------------

    Program parse_acp(std::vector<SourceSpan>& spans) {
        std::vector<Clause> clauses;
        while (!at(Tok::End)) {
            spans.push_back({peek().line, peek().column});
            clauses.push_back(parse_acp_clause());
        }
        return Program::from_clauses(std::move(clauses));
    }

    Clause parse_acp_clause() {
        ConstraintAtom head = inconsistent_atom();
        if (!at(Tok::Arrow)) {
            if (accept(Tok::KwFalse)) {
                // keep the inconsistent head
            } else {
                head = parse_catom();
            }
        }
        std::vector<Literal> body;
        if (accept(Tok::Arrow)) {
            body.push_back(parse_acp_literal());
            while (accept(Tok::Comma)) {
                body.push_back(parse_acp_literal());
            }
        }
        expect(Tok::Dot, "'.'");
        return Clause{std::move(head), std::move(body)};
    }

    Literal parse_acp_literal() {
        if (accept(Tok::KwNot)) {
            expect(Tok::LParen, "'('");
            ConstraintAtom a = parse_catom();
            expect(Tok::RParen, "')'");
            return neg(std::move(a));
        }
        return pos(parse_catom());
    }

    ConstraintAtom parse_catom() {
        int line = peek().line;
        int column = peek().column;
        if (at(Tok::KwTable)) {
            return parse_table_atom();
        }
        if (at(Tok::Ident)) {
            return pb_atom(ident_atom());
        }
        long long lower = 0;
        if (at(Tok::Int)) {
            lower = take().value;
        }
        expect(Tok::LBrace, "'{'");
        AtomSet atoms;
        std::map<Atom, long long> weights;
        bool explicit_weights = false;
        if (!at(Tok::RBrace)) {
            for (;;) {
                int elem_line = peek().line;
                int elem_column = peek().column;
                Atom a = ident_atom();
                long long w = 1;
                if (accept(Tok::Equals)) {
                    w = expect(Tok::Int, "a weight").value;
                    explicit_weights = true;
                }
                if (!atoms.insert(a).second) {
                    throw SyntaxError(
                            "atom '" + a.name + "' listed twice", elem_line, elem_column);
                }
                weights.emplace(a, w);
                if (!accept(Tok::Comma)) {
                    break;
                }
            }
        }
        expect(Tok::RBrace, "'}'");
        std::optional<long long> upper;
        if (at(Tok::Int)) {
            upper = take().value;
        }
        return located(line, column, [&]() {
            if (upper) {
                return weight_range_atom(lower, upper, std::move(weights));
            }
            if (explicit_weights) {
                return weight_atom(lower, std::move(weights));
            }
            return cardinality_atom(lower, std::move(atoms));
        });
    }

    ConstraintAtom parse_table_atom() {
        int line = peek().line;
        int column = peek().column;
        expect(Tok::KwTable, "'TABLE'");
        expect(Tok::LBracket, "'['");
        AtomSet over;
        while (at(Tok::Ident)) {
            over.insert(ident_atom());
            if (!accept(Tok::Comma)) {
                break;
            }
        }
        expect(Tok::Colon, "':'");
        std::set<AtomSet> satisfying;
        while (at(Tok::LBrace)) {
            take();
            AtomSet entry;
            while (at(Tok::Ident)) {
                entry.insert(ident_atom());
                if (!accept(Tok::Comma)) {
                    break;
                }
            }
            expect(Tok::RBrace, "'}'");
            satisfying.insert(std::move(entry));
            if (!accept(Tok::Comma)) {
                break;
            }
        }
        expect(Tok::RBracket, "']'");
        return located(line, column,
                [&]() { return table_atom(std::move(over), std::move(satisfying)); });
    }

    // -- lparse dialect ----------------------------------------------

    LProgram parse_lparse(std::vector<SourceSpan>& spans) {
        std::vector<LClause> clauses;
        while (!at(Tok::End)) {
            spans.push_back({peek().line, peek().column});
            LClause r{parse_latom(), {}};
            if (accept(Tok::Arrow)) {
                r.body.push_back(parse_latom());
                while (accept(Tok::Comma)) {
                    r.body.push_back(parse_latom());
                }
            }
            expect(Tok::Dot, "'.'");
            clauses.push_back(std::move(r));
        }
        return LProgram::from_clauses(std::move(clauses));
    }

    LAtom parse_latom() {
        int line = peek().line;
        int column = peek().column;
        if (at(Tok::Ident)) {
            Atom a = ident_atom();
            return located(line, column, [&]() {
                return l_atom(1, std::nullopt,
                        WeightedLiteralSet::from_entries({{PlainLiteral{a, false}, 1}}));
            });
        }
        long long lower = 0;
        if (at(Tok::Int)) {
            lower = take().value;
        }
        expect(Tok::LBrace, "'{'");
        std::vector<std::pair<PlainLiteral, long long>> entries;
        if (!at(Tok::RBrace)) {
            for (;;) {
                PlainLiteral lit{Atom{}, false};
                if (accept(Tok::KwNot)) {
                    expect(Tok::LParen, "'('");
                    lit = PlainLiteral{ident_atom(), true};
                    expect(Tok::RParen, "')'");
                } else {
                    lit = PlainLiteral{ident_atom(), false};
                }
                long long w = 1;
                if (accept(Tok::Equals)) {
                    w = expect(Tok::Int, "a weight").value;
                }
                entries.emplace_back(lit, w);
                if (!accept(Tok::Comma)) {
                    break;
                }
            }
        }
        expect(Tok::RBrace, "'}'");
        std::optional<long long> upper;
        if (at(Tok::Int)) {
            upper = take().value;
        }
        return located(line, column, [&]() {
            return l_atom(lower, upper, WeightedLiteralSet::from_entries(std::move(entries)));
        });
    }

    // -- normal dialect ----------------------------------------------

    NormalProgram parse_normal(std::vector<SourceSpan>& spans) {
        std::vector<NormalClause> clauses;
        while (!at(Tok::End)) {
            spans.push_back({peek().line, peek().column});
            NormalClause r;
            if (at(Tok::Ident)) {
                r.head = ident_atom();
            } else if (accept(Tok::KwFalse)) {
                // constraint clause
            } else if (!at(Tok::Arrow)) {
                fail("expected a head atom, 'FALSE', or ':-'");
            }
            parse_plain_body(r.pos_body, r.neg_body);
            clauses.push_back(std::move(r));
        }
        return NormalProgram::from_clauses(std::move(clauses));
    }

    // -- disjunctive dialect -------------------------------------------

    DProgram parse_disjunctive(std::vector<SourceSpan>& spans) {
        std::vector<DClause> clauses;
        while (!at(Tok::End)) {
            spans.push_back({peek().line, peek().column});
            DClause r;
            if (at(Tok::Ident)) {
                r.head.insert(ident_atom());
                while (accept(Tok::Pipe)) {
                    r.head.insert(ident_atom());
                }
            } else if (accept(Tok::KwFalse)) {
                // empty head
            } else if (!at(Tok::Arrow)) {
                fail("expected a head, 'FALSE', or ':-'");
            }
            parse_plain_body(r.pos_body, r.neg_body);
            clauses.push_back(std::move(r));
        }
        return DProgram::from_clauses(std::move(clauses));
    }

    void parse_plain_body(std::vector<Atom>& pos_body, std::vector<Atom>& neg_body) {
        if (accept(Tok::Arrow)) {
            for (;;) {
                if (accept(Tok::KwNot)) {
                    expect(Tok::LParen, "'('");
                    neg_body.push_back(ident_atom());
                    expect(Tok::RParen, "')'");
                } else {
                    pos_body.push_back(ident_atom());
                }
                if (!accept(Tok::Comma)) {
                    break;
                }
            }
        }
        expect(Tok::Dot, "'.'");
    }

    Dialect dialect_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

SourceProgram parse(Dialect dialect, std::string_view text) {
    return Parser(dialect, text).run(text);
}

// ---------------------------------------------------------------- printer

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void print_atom_list(std::ostringstream& out, const AtomSet& atoms) {
    bool first = true;
    for (const Atom& a : atoms) {
        if (!first) {
            out << ",";
        }
        out << a.name;
        first = false;
    }
}

void print_weight_list(std::ostringstream& out, const std::map<Atom, long long>& weights,
        bool explicit_weights) {
    bool first = true;
    for (const auto& [a, w] : weights) {
        if (!first) {
            out << ",";
        }
        out << a.name;
        if (explicit_weights || w != 1) {
            out << "=" << w;
        }
        first = false;
    }
}

void print_table(std::ostringstream& out, const AtomSet& over, const std::set<AtomSet>& satisfying) {
    out << "TABLE[";
    print_atom_list(out, over);
    out << ": ";
    bool first = true;
    for (const AtomSet& entry : satisfying) {
        if (!first) {
            out << ",";
        }
        out << "{";
        print_atom_list(out, entry);
        out << "}";
        first = false;
    }
    out << "]";
}

}  // namespace

std::string print(const ConstraintAtom& a) {
    std::ostringstream out;
    std::visit(overloaded{
                       [&](const TableConstraint& t) { print_table(out, a.atom_set(), t.satisfying); },
                       [&](const WeightConstraint& w) {
                           if (w.lower == 1 && w.weights.size() == 1 &&
                                   w.weights.begin()->second == 1) {
                               out << w.weights.begin()->first.name;
                               return;
                           }
                           if (w.lower != 0) {
                               out << w.lower;
                           }
                           out << "{";
                           print_weight_list(out, w.weights, true);
                           out << "}";
                       },
                       [&](const WeightRangeConstraint& w) {
                           if (w.lower != 0) {
                               out << w.lower;
                           }
                           out << "{";
                           print_weight_list(out, w.weights, !w.upper.has_value());
                           out << "}";
                           if (w.upper) {
                               out << *w.upper;
                           }
                       },
                       [&](const CardinalityConstraint& c) {
                           if (c.lower != 0) {
                               out << c.lower;
                           }
                           out << "{";
                           print_atom_list(out, a.atom_set());
                           out << "}";
                       },
                       [&](const ProductConstraint&) {
                           print_table(out, a.atom_set(),
                                   std::get<TableConstraint>(to_table(a).constraint()).satisfying);
                       },
                       [&](const MaximumConstraint&) {
                           print_table(out, a.atom_set(),
                                   std::get<TableConstraint>(to_table(a).constraint()).satisfying);
                       },
                       [&](const ParityConstraint&) {
                           print_table(out, a.atom_set(),
                                   std::get<TableConstraint>(to_table(a).constraint()).satisfying);
                       },
                       [&](const ContainmentConstraint&) {
                           print_table(out, a.atom_set(),
                                   std::get<TableConstraint>(to_table(a).constraint()).satisfying);
                       },
                       [&](const InconsistentConstraint&) { out << "FALSE"; },
               },
            a.constraint());
    return out.str();
}

std::string print(const Literal& lit) {
    if (lit.negated) {
        return "not(" + print(lit.atom) + ")";
    }
    return print(lit.atom);
}

std::string print(const Clause& r) {
    std::ostringstream out;
    bool constraint_head = std::holds_alternative<InconsistentConstraint>(r.head.constraint());
    if (constraint_head && !r.body.empty()) {
        out << ":-";
    } else {
        out << print(r.head);
        if (!r.body.empty()) {
            out << " :-";
        }
    }
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        out << (i == 0 ? " " : ", ") << print(r.body[i]);
    }
    out << ".";
    return out.str();
}

std::string print(const LAtom& a) {
    std::ostringstream out;
    const auto& entries = a.weights.entries();
    if (a.lower == 1 && !a.upper && entries.size() == 1 && !entries.begin()->first.negated &&
            entries.begin()->second == 1) {
        return entries.begin()->first.atom.name;
    }
    if (a.lower != 0) {
        out << a.lower;
    }
    out << "{";
    bool first = true;
    for (const auto& [lit, w] : entries) {
        if (!first) {
            out << ",";
        }
        if (lit.negated) {
            out << "not(" << lit.atom.name << ")";
        } else {
            out << lit.atom.name;
        }
        if (w != 1) {
            out << "=" << w;
        }
        first = false;
    }
    out << "}";
    if (a.upper) {
        out << *a.upper;
    }
    return out.str();
}

std::string print(const LClause& r) {
    std::ostringstream out;
    out << print(r.head);
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        out << (i == 0 ? " :- " : ", ") << print(r.body[i]);
    }
    out << ".";
    return out.str();
}

std::string print(const NormalClause& r) {
    std::ostringstream out;
    if (r.head) {
        out << r.head->name;
    }
    bool has_body = !r.pos_body.empty() || !r.neg_body.empty();
    if (!r.head && !has_body) {
        return "FALSE.";
    }
    if (has_body) {
        out << (r.head ? " :-" : ":-");
        bool first = true;
        for (const Atom& a : r.pos_body) {
            out << (first ? " " : ", ") << a.name;
            first = false;
        }
        for (const Atom& a : r.neg_body) {
            out << (first ? " " : ", ") << "not(" << a.name << ")";
            first = false;
        }
    }
    out << ".";
    return out.str();
}

std::string print(const DClause& r) {
    std::ostringstream out;
    bool first = true;
    for (const Atom& a : r.head) {
        if (!first) {
            out << " | ";
        }
        out << a.name;
        first = false;
    }
    bool has_body = !r.pos_body.empty() || !r.neg_body.empty();
    if (r.head.empty() && !has_body) {
        return "FALSE.";
    }
    if (has_body) {
        out << (r.head.empty() ? ":-" : " :-");
        first = true;
        for (const Atom& a : r.pos_body) {
            out << (first ? " " : ", ") << a.name;
            first = false;
        }
        for (const Atom& a : r.neg_body) {
            out << (first ? " " : ", ") << "not(" << a.name << ")";
            first = false;
        }
    }
    out << ".";
    return out.str();
}

namespace {

template <typename ProgramT>
std::string print_lines(const ProgramT& p) {
    std::ostringstream out;
    for (const auto& r : p.clauses) {
        out << print(r) << "\n";
    }
    return out.str();
}

}  // namespace

std::string print(const Program& p) {
    return print_lines(p);
}
std::string print(const LProgram& p) {
    return print_lines(p);
}
std::string print(const NormalProgram& p) {
    return print_lines(p);
}
std::string print(const DProgram& p) {
    return print_lines(p);
}

// ------------------------------------------------------------------- json

namespace {

nlohmann::json json_of(const Interpretation& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Atom& a : m) {
        arr.push_back(a.name);
    }
    return arr;
}

}  // namespace

std::string emit_json(const std::vector<Interpretation>& sets) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Interpretation& m : sets) {
        arr.push_back(json_of(m));
    }
    return arr.dump();
}

std::string emit_json(const Interpretation& m) {
    return json_of(m).dump();
}

std::string emit_json(bool value) {
    return nlohmann::json(value).dump();
}

std::string emit_json(const Computation& t) {
    nlohmann::json obj;
    nlohmann::json steps = nlohmann::json::array();
    for (const Interpretation& step : t.steps) {
        steps.push_back(json_of(step));
    }
    obj["steps"] = steps;
    obj["result"] = json_of(t.result());
    return obj.dump();
}

std::string emit_json(const std::vector<std::string>& clause_lines) {
    nlohmann::json arr = nlohmann::json::array();
    for (const std::string& line : clause_lines) {
        arr.push_back(line);
    }
    return arr.dump();
}

namespace {

template <typename ProgramT>
std::vector<std::string> lines_of(const ProgramT& p) {
    std::vector<std::string> result;
    result.reserve(p.clauses.size());
    for (const auto& r : p.clauses) {
        result.push_back(print(r));
    }
    return result;
}

}  // namespace

std::vector<std::string> clause_lines(const Program& p) {
    return lines_of(p);
}
std::vector<std::string> clause_lines(const LProgram& p) {
    return lines_of(p);
}
std::vector<std::string> clause_lines(const NormalProgram& p) {
    return lines_of(p);
}
std::vector<std::string> clause_lines(const DProgram& p) {
    return lines_of(p);
}

}  // namespace acp
