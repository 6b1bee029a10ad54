#include "groundhog/session.hpp"

#include <sstream>

#include "groundhog/errors.hpp"

namespace groundhog {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

} // namespace

Session::Session(Interner& in, const Program& program, const FactSet& firstShot,
                 const GroundingLimits& limits)
    : in_(&in), limits_(limits), engine_(in, program), universe_(in) {
    universe_.addProgram(program);
    runShot(firstShot);
}

GroundProgram Session::shot(const FactSet& facts) { return runShot(facts); }

GroundProgram Session::runShot(const FactSet& facts) {
    ShotRecord rec;
    rec.shot = ++shotCounter_;
    std::size_t known = 0;
    for (const auto& a : facts)
        if (accumulated_.contains(a)) ++known;
    rec.newFacts = facts.size() - known;

    auto start = Clock::now();
    auto outcome = engine_.shot(facts, overground_, limits_, &counters_, &stats_);
    rec.groundTime = since(start);

    accumulated_.unionWith(facts);
    lastShot_ = facts;
    universe_.addFacts(facts);
    for (AtomId h : outcome.delta.headList()) universe_.addAtomArgs(h);

    rec.deltaRules = outcome.delta.size();
    rec.totalRules = overground_.size();
    log_.push_back(rec);
    return std::move(outcome.delta);
}

GroundProgram Session::solverInput(const FactSet& shotFacts) const {
    GroundProgram g;
    g.addAll(*in_, overground_);
    for (const auto& a : shotFacts) g.add(*in_, makeFactRule(in_->atom(a)));
    return g;
}

std::vector<solver::AnswerSet> Session::solve(const FactSet& shotFacts, std::size_t maxModels,
                                              const solver::SolverLimits& solverLimits) {
    if (!shotFacts.isSubsetOf(accumulated_))
        throw Error("solve was given facts outside the accumulated fact set");
    auto start = Clock::now();
    GroundProgram input = solverInput(shotFacts);
    auto result = solver::solve(*in_, input, maxModels, solverLimits);
    if (!log_.empty()) log_.back().solveTime = since(start);
    return result;
}

std::string statsCsv(std::span<const ShotRecord> records, bool zeroTimes) {
    std::ostringstream out;
    out << "shot,new_facts,delta_rules,total_rules,ground_time_us,solve_time_us\n";
    for (const auto& r : records) {
        const auto ground = zeroTimes ? 0 : r.groundTime.count();
        const auto solve = zeroTimes || !r.solveTime ? 0 : r.solveTime->count();
        out << r.shot << ',' << r.newFacts << ',' << r.deltaRules << ',' << r.totalRules << ','
            << ground << ',' << solve << '\n';
    }
    return out.str();
}

} // namespace groundhog
