#pragma once

#include <stdexcept>
#include <string>

namespace groundhog {

// Base class for every failure caused by user input or resource limits.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lexical or grammatical problem; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A rule whose variables cannot all be bound by positive atoms or
// assignment builtins.
class UnsafeRuleError : public Error {
public:
    UnsafeRuleError(const std::string& variable, const std::string& ruleText)
        : Error("unsafe rule: variable " + variable + " is unbound in \"" + ruleText + "\""),
          variable_(variable) {}

    const std::string& variable() const { return variable_; }

private:
    std::string variable_;
};

// Fact-shaped rule found in a program file; facts travel separately.
class FactInProgramError : public Error {
public:
    explicit FactInProgramError(const std::string& atomText)
        : Error("fact \"" + atomText + "\" not allowed in a program file; supply it via a fact set") {}
};

class NonGroundFactError : public Error {
public:
    NonGroundFactError(const std::string& variable, const std::string& atomText)
        : Error("fact \"" + atomText + "\" is not ground: variable " + variable) {}
};

// A grounding resource cap (instance or rule budget) was hit.
class CapExceededError : public Error {
public:
    using Error::Error;
};

// Brute-force search space too large; the caller should try the
// stratified path or raise the cap.
class SolverCapError : public Error {
public:
    using Error::Error;
};

// Two embedding candidates built over different (program, facts) pairs.
class ProvenanceMismatchError : public Error {
public:
    ProvenanceMismatchError() : Error("embedding candidates have different provenance") {}
};

} // namespace groundhog
