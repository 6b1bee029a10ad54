#pragma once

#include <cstdint>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "groundhog/ast.hpp"

namespace groundhog {

using TermId = std::uint32_t;
using PredId = std::uint32_t;
using AtomId = std::uint32_t;

// Session-wide tables mapping constants, predicates and ground atoms to
// dense handles. Handles are stable for the lifetime of the interner;
// structural equality of ground atoms is handle equality. Reads may run
// concurrently; writes are serialized.
class Interner {
public:
    Interner() = default;
    Interner(const Interner&) = delete;
    Interner& operator=(const Interner&) = delete;

    TermId constant(std::string_view text);
    TermId integer(std::int64_t value);
    TermId term(const Term& t);  // t must be ground

    PredId predicate(std::string_view name, std::uint32_t arity);

    AtomId atom(PredId pred, std::span<const TermId> args);
    AtomId atom(const Atom& ground);

    bool isInteger(TermId t) const;
    std::int64_t intValue(TermId t) const;
    std::string termText(TermId t) const;

    std::string predName(PredId p) const;
    std::uint32_t predArity(PredId p) const;
    std::size_t predCount() const;

    PredId atomPred(AtomId a) const;
    std::vector<TermId> atomArgs(AtomId a) const;
    void atomArgsInto(AtomId a, std::vector<TermId>& out) const;
    std::size_t atomCount() const;

    std::string atomText(AtomId a) const;
    Atom toAst(AtomId a) const;
    Term termToAst(TermId t) const;

    // Content-based orders, independent of interning order: integers
    // before symbols, integers by value, symbols lexicographically;
    // atoms by predicate name, arity, then argument-wise.
    bool termLess(TermId a, TermId b) const;
    bool atomLess(AtomId a, AtomId b) const;

private:
    struct TermRec {
        bool isInt;
        std::int64_t value;
        std::string text;
    };
    struct PredRec {
        std::string name;
        std::uint32_t arity;
    };
    struct AtomRec {
        PredId pred;
        std::uint32_t argsBegin;
        std::uint32_t argsLen;
    };

    bool termLessLocked(TermId a, TermId b) const;

    mutable std::shared_mutex mx_;
    std::vector<TermRec> terms_;
    std::unordered_map<std::string, TermId> symbolIds_;
    std::unordered_map<std::int64_t, TermId> intIds_;
    std::vector<PredRec> preds_;
    std::unordered_map<std::string, PredId> predIds_;
    std::vector<AtomRec> atoms_;
    std::vector<TermId> atomArgPool_;
    std::unordered_map<std::string, AtomId> atomIds_;
};

} // namespace groundhog
