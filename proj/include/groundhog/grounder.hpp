#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "groundhog/ast.hpp"
#include "groundhog/ground.hpp"
#include "groundhog/interner.hpp"

namespace groundhog {

struct GroundingLimits {
    // Upper bound on enumerated substitutions (theoretical grounding)
    // and on emitted ground rules (fixpoints).
    std::size_t maxInstances = 1'000'000;
};

// Failed-substitution diagnostics. A division by zero or an arithmetic
// overflow makes the candidate substitution fail; it never aborts the
// run.
struct EvalCounters {
    std::uint64_t divisionByZero = 0;
    std::uint64_t overflow = 0;
    std::uint64_t nonIntegerArith = 0;
};

// Finite constant pool. Grows monotonically: program constants, fact
// constants, declared integer bounds, and any integer first
// materialized in a ground rule head.
class Universe {
public:
    explicit Universe(Interner& in) : in_(&in) {}

    bool add(TermId t);
    void addProgram(const Program& p);
    void addFacts(const FactSet& f);
    void addAtomArgs(AtomId a);

    bool contains(TermId t) const { return present_.count(t) != 0; }
    std::span<const TermId> constants() const { return constants_; }
    std::size_t size() const { return constants_.size(); }

    static Universe forProblem(Interner& in, const Program& p, const FactSet& f);

private:
    Interner* in_;
    std::vector<TermId> constants_;
    std::unordered_set<TermId> present_;
};

struct EngineStats {
    std::size_t rounds = 0;
    std::size_t firings = 0;
};

namespace detail {
struct CompiledProgram;
class AtomStore;
}

// Compiled program bound to an interner. Stateless with respect to
// facts; each call works on the arguments alone.
class Grounder {
public:
    Grounder(Interner& in, const Program& p);
    ~Grounder();
    Grounder(Grounder&&) noexcept;
    Grounder& operator=(Grounder&&) noexcept;

    const Program& program() const { return program_; }
    Interner& interner() const { return *in_; }

    // The instantiation operator: every ground instance whose positive
    // body is contained in s, computed by joins over s. Rules with an
    // empty positive body are always included. The negative body is
    // never inspected.
    GroundProgram inst(std::span<const AtomId> s, EvalCounters* counters = nullptr) const;
    GroundProgram inst(const FactSet& s, EvalCounters* counters = nullptr) const;
    // Overload over a rule set: inst over Heads(r) plus extra atoms.
    GroundProgram instOverRules(const GroundProgram& r, std::span<const AtomId> extra = {},
                                EvalCounters* counters = nullptr) const;

    // Theoretical instantiation over a finite universe; the desk-scale
    // oracle. Requires declared integer bounds when the program uses
    // arithmetic. Throws CapExceededError past limits.maxInstances.
    GroundProgram grndNaive(const Universe& u, const GroundingLimits& limits = {},
                            EvalCounters* counters = nullptr) const;

    // Least fixpoint of the instantiation operator, naive iteration:
    // recomputes the full operator each round. Test oracle. Facts are
    // not included as rules.
    GroundProgram fixpointNaive(const FactSet& f, const GroundingLimits& limits = {},
                                EvalCounters* counters = nullptr) const;

    // Same fixpoint, computed by predicate-SCC-ordered semi-naive
    // evaluation. Production path.
    GroundProgram fixpointSeminaive(const FactSet& f, const GroundingLimits& limits = {},
                                    EvalCounters* counters = nullptr,
                                    EngineStats* stats = nullptr) const;

    const detail::CompiledProgram& compiled() const { return *compiled_; }

private:
    Interner* in_;
    Program program_;
    std::unique_ptr<detail::CompiledProgram> compiled_;
};

// Incremental semi-naive engine with a persistent atom store. Each shot
// seeds the store with the genuinely new atoms and derives exactly the
// rules missing from g.
class SemiNaiveEngine {
public:
    SemiNaiveEngine(Interner& in, const Program& p);
    ~SemiNaiveEngine();

    struct ShotOutcome {
        GroundProgram delta;
    };

    // Appends new rules to g (g grows monotonically) and returns them.
    ShotOutcome shot(const FactSet& facts, GroundProgram& g, const GroundingLimits& limits = {},
                     EvalCounters* counters = nullptr, EngineStats* stats = nullptr);

    const Grounder& grounder() const { return grounder_; }

private:
    Grounder grounder_;
    std::unique_ptr<detail::AtomStore> store_;
    std::size_t rulesSeen_ = 0;
};

} // namespace groundhog
