#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace groundhog {

enum class TermKind { Constant, Integer, Variable };

// A constant symbol, a bounded integer, or a variable. Anonymous
// variables are replaced by fresh named variables during parsing and
// never reach this representation.
struct Term {
    TermKind kind = TermKind::Constant;
    std::string name;         // constant symbol or variable spelling
    std::int64_t value = 0;   // integer payload

    static Term constant(std::string text) { return {TermKind::Constant, std::move(text), 0}; }
    static Term integer(std::int64_t v) { return {TermKind::Integer, {}, v}; }
    static Term variable(std::string text) { return {TermKind::Variable, std::move(text), 0}; }

    bool isGround() const { return kind != TermKind::Variable; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.kind == b.kind && a.value == b.value && a.name == b.name;
    }
    friend bool operator<(const Term& a, const Term& b) {
        return std::tie(a.kind, a.value, a.name) < std::tie(b.kind, b.value, b.name);
    }
};

struct Atom {
    std::string predicate;
    std::vector<Term> terms;

    std::size_t arity() const { return terms.size(); }

    bool isGround() const {
        for (const auto& t : terms)
            if (!t.isGround()) return false;
        return true;
    }

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.predicate == b.predicate && a.terms == b.terms;
    }
    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.predicate != b.predicate) return a.predicate < b.predicate;
        if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
        return a.terms < b.terms;
    }
};

enum class Relop { Eq, Neq, Lt, Gt, Leq, Geq };
enum class ArithOp { Add, Sub, Mul, Div };

// Left-associative chain of terms joined by +, -, *, /.
struct ArithExpr {
    Term first;
    std::vector<std::pair<ArithOp, Term>> rest;

    bool isArithmetic() const { return !rest.empty(); }

    friend bool operator==(const ArithExpr& a, const ArithExpr& b) {
        return a.first == b.first && a.rest == b.rest;
    }
};

// Comparison between a term and an arithmetic expression. Only "=" with
// an unbound variable on the left acts as an assignment; every other
// form is a test over already-bound values.
struct BuiltinAtom {
    Relop op = Relop::Eq;
    Term lhs;
    ArithExpr rhs;

    friend bool operator==(const BuiltinAtom& a, const BuiltinAtom& b) {
        return a.op == b.op && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

struct Rule {
    std::vector<Atom> head;
    std::vector<Atom> posBody;
    std::vector<Atom> negBody;
    std::vector<BuiltinAtom> builtins;
    int sourceId = -1;  // position of the rule in its source program

    bool isConstraint() const { return head.empty(); }

    // Fact shape: single head atom and a completely empty body.
    bool isFactShaped() const {
        return head.size() == 1 && posBody.empty() && negBody.empty() && builtins.empty();
    }

    // Structural equality; the source id is bookkeeping, not structure.
    friend bool operator==(const Rule& a, const Rule& b) {
        return a.head == b.head && a.posBody == b.posBody && a.negBody == b.negBody &&
               a.builtins == b.builtins;
    }
};

struct PredicateSig {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const PredicateSig& a, const PredicateSig& b) {
        return a.name == b.name && a.arity == b.arity;
    }
    friend bool operator<(const PredicateSig& a, const PredicateSig& b) {
        return std::tie(a.name, a.arity) < std::tie(b.name, b.arity);
    }
};

// A set of safe non-ground rules. Facts are not allowed; they are given
// separately per shot as FactSets.
struct Program {
    std::vector<Rule> rules;
    std::vector<PredicateSig> predicates;                      // sorted, unique
    std::optional<std::pair<std::int64_t, std::int64_t>> intBounds;  // declared integer domain

    bool hasArithmetic() const {
        for (const auto& r : rules)
            for (const auto& b : r.builtins)
                if (b.rhs.isArithmetic()) return true;
        return false;
    }
};

// Deduplicated set of ground atoms.
class FactSet {
public:
    FactSet() = default;

    // Precondition: atom is ground.
    bool insert(Atom atom) { return atoms_.insert(std::move(atom)).second; }

    bool contains(const Atom& atom) const { return atoms_.count(atom) != 0; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    auto begin() const { return atoms_.begin(); }
    auto end() const { return atoms_.end(); }

    void unionWith(const FactSet& other) { atoms_.insert(other.begin(), other.end()); }

    bool isSubsetOf(const FactSet& other) const {
        for (const auto& a : atoms_)
            if (!other.contains(a)) return false;
        return true;
    }

    friend bool operator==(const FactSet& a, const FactSet& b) { return a.atoms_ == b.atoms_; }

private:
    std::set<Atom> atoms_;
};

} // namespace groundhog
