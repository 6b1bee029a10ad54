#pragma once

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "groundhog/ast.hpp"
#include "groundhog/ground.hpp"
#include "groundhog/grounder.hpp"

namespace groundhog::embedding {

// A (program, facts) pair fixing the universe every candidate is judged
// against. Candidates built over different problems never mix.
class Problem {
public:
    Problem(Interner& in, Program program, FactSet facts);

    Interner& interner() const { return *in_; }
    const Program& program() const { return program_; }
    const FactSet& facts() const { return facts_; }
    const Universe& universe() const { return universe_; }
    const Grounder& grounder() const { return grounder_; }

    // grnd(P) over the problem universe plus the facts as bodyless
    // rules; desk-scale, cached after the first call.
    const GroundProgram& groundUnion(const GroundingLimits& limits = {}) const;

    std::vector<AtomId> factAtoms() const;

private:
    Interner* in_;
    Program program_;
    FactSet facts_;
    Universe universe_;
    Grounder grounder_;
    mutable std::optional<GroundProgram> groundUnion_;
};

// A set of ground rules drawn from grnd(P) ∪ F. Construction verifies
// membership: every rule either matches a program rule under some
// substitution or is a fact of F.
class Candidate {
public:
    Candidate(const Problem& problem, GroundProgram rules);

    const Problem& problem() const { return *problem_; }
    const GroundProgram& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }

private:
    const Problem* problem_;
    GroundProgram rules_;
};

// R embeds the body of r: every positive body atom of r is the head of
// some rule of R.
bool embedsBody(const Candidate& r, const GroundRule& rule);

// R embeds r: either the body is not embedded, or r is in R.
bool embedsRule(const Candidate& r, const GroundRule& rule);

struct EmbeddingCheck {
    bool isEmbedding = false;
    std::optional<GroundRule> witness;  // a rule the candidate fails on
};

// Checks the embedding condition against every rule of grnd(P) ∪ F.
EmbeddingCheck isEmbeddingProgram(const Candidate& r, const GroundingLimits& limits = {});

// The instantiation fixpoint plus the facts as rules: the intersection
// of all embedding programs.
Candidate minimalEmbedding(const Problem& problem, const GroundingLimits& limits = {});

// Canonical set intersection; embeddings are closed under it.
Candidate intersect(const Candidate& a, const Candidate& b);

// Random embedding: grow the minimal embedding by random rules, closing
// under the body-embedded condition after each addition.
Candidate sampleEmbedding(const Problem& problem, std::mt19937& rng,
                          const GroundingLimits& limits = {});

// True iff the rule matches some rule of the program under a
// substitution over the universe (builtins must evaluate true), used by
// the membership precondition.
bool matchesProgram(const Problem& problem, const GroundRule& rule);

} // namespace groundhog::embedding
