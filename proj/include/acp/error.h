/*
 * acp - a semantics engine for logic programs with constraint atoms
 * Copyright (c) 2026, the acp developers. All rights reserved.
 * Licensed under the MIT license. See the LICENSE file for details.
 */

/************************************************************************
 *
 * @file error.h
 *
 * Error hierarchy shared by all modules. Semantic errors name the
 * violated precondition; the CLI maps them to exit codes (semantic 1,
 * syntax 2, budget 3).
 *
 ***********************************************************************/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violation of an operation precondition or a type invariant.
class SemanticError : public Error {
public:
    using Error::Error;
};

class NotHornError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NotAModelError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NonMonotoneAtomError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NotDefiniteError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class HasConstraintClausesError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NegativeWeightError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class DuplicateAtomError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class BoundInversionError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class InvalidConstraintError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class UnsupportedAtomKindError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class SelectionNotSubsetOfHeadError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NameClashError : public SemanticError {
public:
    using SemanticError::SemanticError;
};

/// An enumeration would require scanning more than 2^budget candidates.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(std::size_t required, std::size_t budget)
            : Error("budget exceeded: need " + std::to_string(required) + " atoms, budget is " +
                    std::to_string(budget)),
              required_(required), budget_(budget) {}

    std::size_t required() const {
        return required_;
    }
    std::size_t budget() const {
        return budget_;
    }

private:
    std::size_t required_;
    std::size_t budget_;
};

/// Parse failure; carries a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int column)
            : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
              column_(column) {}

    int line() const {
        return line_;
    }
    int column() const {
        return column_;
    }

private:
    int line_;
    int column_;
};

}  // namespace acp
