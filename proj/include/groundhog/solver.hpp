#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groundhog/ground.hpp"
#include "groundhog/interner.hpp"

namespace groundhog::solver {

// Sorted-by-id set of ground atoms.
using Interpretation = std::vector<AtomId>;

Interpretation makeInterpretation(std::vector<AtomId> atoms);
bool interpretationContains(const Interpretation& i, AtomId a);

enum class Certificate { BruteForceMinimal, StratifiedPerfectModel };

struct AnswerSet {
    Interpretation atoms;
    Certificate certificate = Certificate::BruteForceMinimal;
};

struct SolverLimits {
    // Brute-force search caps out at this many candidate atoms and
    // raises SolverCapError beyond it. Hard ceiling 62 (bitmask width).
    std::size_t candidateCap = 24;
};

// Rules of g whose whole body is satisfied by a: positive body inside
// a, no negative-body atom inside a. Rules are kept whole.
GroundProgram flpReduct(const Interner& in, const GroundProgram& g, const Interpretation& a);

// True iff a is a model of g and no proper subset of a models the
// reduct of g with respect to a.
bool isAnswerSet(const Interner& in, const GroundProgram& g, const Interpretation& a,
                 const SolverLimits& limits = {});

// All answer sets of g (up to maxModels), canonically ordered by their
// printed text. The search ranges over subsets of Heads(g) only.
std::vector<AnswerSet> enumerateAnswerSets(const Interner& in, const GroundProgram& g,
                                           std::size_t maxModels = SIZE_MAX,
                                           const SolverLimits& limits = {});

// Same search over an explicit candidate atom pool (superset checks for
// the head restriction).
std::vector<AnswerSet> enumerateOverCandidates(const Interner& in, const GroundProgram& g,
                                               std::span<const AtomId> candidates,
                                               std::size_t maxModels = SIZE_MAX,
                                               const SolverLimits& limits = {});

// Predicate-level stratification of a ground program. Fails (nullopt)
// on disjunctive heads or recursion through negation.
struct Stratification {
    std::vector<std::vector<PredId>> strata;  // bottom-up
};
std::optional<Stratification> stratify(const Interner& in, const GroundProgram& g);

// Iterated least fixpoint over the strata; the unique answer set of a
// stratified program, or nullopt when a constraint fires.
std::optional<AnswerSet> perfectModel(const Interner& in, const GroundProgram& g,
                                      const Stratification& strat);

// Stratified fast path when available, otherwise brute-force
// enumeration.
std::vector<AnswerSet> solve(const Interner& in, const GroundProgram& g,
                             std::size_t maxModels = SIZE_MAX, const SolverLimits& limits = {});

// "{a, b, c}" with atom texts sorted.
std::string printAnswerSet(const Interner& in, const AnswerSet& a);
// One answer set per line; "UNSATISFIABLE" when the list is empty.
std::string printAnswerSets(const Interner& in, const std::vector<AnswerSet>& list);

} // namespace groundhog::solver
