#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "groundhog/ast.hpp"

namespace groundhog {

// One step of a rule evaluation plan.
//   Join:   match a positive body atom, binding its free variables.
//   Assign: evaluate an "=" builtin with an unbound variable lhs.
//   Check:  evaluate a builtin whose variables are all bound.
struct PlanStep {
    enum class Kind { Join, Assign, Check };
    Kind kind;
    std::size_t index;               // index into posBody or builtins
    std::vector<std::string> binds;  // variables first bound by this step
};

struct SafetyPlan {
    std::vector<PlanStep> steps;
    std::vector<std::string> variables;  // all rule variables, first-occurrence order

    std::size_t bindingStepCount() const {
        std::size_t n = 0;
        for (const auto& s : steps) n += s.binds.empty() ? 0 : 1;
        return n;
    }
};

// Orders the body so that every builtin and every negative literal sees
// all its variables bound by earlier positive atoms or assignments.
// Throws UnsafeRuleError naming the offending variable if no such order
// exists.
SafetyPlan makeSafetyPlan(const Rule& rule);

} // namespace groundhog
