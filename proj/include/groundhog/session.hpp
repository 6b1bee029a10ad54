#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groundhog/ast.hpp"
#include "groundhog/ground.hpp"
#include "groundhog/grounder.hpp"
#include "groundhog/solver.hpp"

namespace groundhog {

struct ShotRecord {
    int shot = 0;
    std::size_t newFacts = 0;
    std::size_t deltaRules = 0;
    std::size_t totalRules = 0;
    std::chrono::microseconds groundTime{0};
    std::optional<std::chrono::microseconds> solveTime;
};

// One multi-shot evaluation session: accumulated facts, the overgrounded
// program, and the per-shot log. The overgrounded program only ever
// grows; facts retracted between shots leave their rules in place.
class Session {
public:
    Session(Interner& in, const Program& program, const FactSet& firstShot,
            const GroundingLimits& limits = {});

    // Runs shot k: accumulates facts, extends the overgrounded program,
    // and returns the newly added rules.
    GroundProgram shot(const FactSet& facts);

    // Answer sets of the overgrounded program plus the given shot's
    // facts (facts must be a subset of the accumulated facts). Records
    // solve time on the current shot's log entry.
    std::vector<solver::AnswerSet> solve(const FactSet& shotFacts, std::size_t maxModels = SIZE_MAX,
                                         const solver::SolverLimits& solverLimits = {});

    // The overgrounded program joined with facts-as-rules, ready for a
    // solver.
    GroundProgram solverInput(const FactSet& shotFacts) const;

    const GroundProgram& overground() const { return overground_; }
    const FactSet& accumulatedFacts() const { return accumulated_; }
    const FactSet& lastShotFacts() const { return lastShot_; }
    int shotCounter() const { return shotCounter_; }
    const std::vector<ShotRecord>& records() const { return log_; }
    const Universe& universe() const { return universe_; }
    Interner& interner() const { return *in_; }
    const Program& program() const { return grounder().program(); }
    const Grounder& grounder() const { return engine_.grounder(); }
    const EvalCounters& evalCounters() const { return counters_; }
    const EngineStats& engineStats() const { return stats_; }

private:
    GroundProgram runShot(const FactSet& facts);

    Interner* in_;
    GroundingLimits limits_;
    SemiNaiveEngine engine_;
    GroundProgram overground_;
    FactSet accumulated_;
    FactSet lastShot_;
    Universe universe_;
    int shotCounter_ = 0;
    std::vector<ShotRecord> log_;
    EvalCounters counters_;
    EngineStats stats_;
};

// CSV with header "shot,new_facts,delta_rules,total_rules,ground_time_us,solve_time_us".
// zeroTimes replaces both time columns with 0 for reproducible output.
std::string statsCsv(std::span<const ShotRecord> records, bool zeroTimes = false);

} // namespace groundhog
