#include "groundhog/safety.hpp"

#include <algorithm>
#include <set>

#include "groundhog/errors.hpp"
#include "groundhog/printer.hpp"

namespace groundhog {

namespace {

void collectVars(const Term& t, std::vector<std::string>& order, std::set<std::string>& seen) {
    if (t.kind == TermKind::Variable && seen.insert(t.name).second) order.push_back(t.name);
}

void collectVars(const Atom& a, std::vector<std::string>& order, std::set<std::string>& seen) {
    for (const auto& t : a.terms) collectVars(t, order, seen);
}

std::vector<std::string> atomVars(const Atom& a) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    collectVars(a, order, seen);
    return order;
}

std::vector<std::string> exprVars(const ArithExpr& e) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    collectVars(e.first, order, seen);
    for (const auto& [op, t] : e.rest) collectVars(t, order, seen);
    return order;
}

bool allBound(const std::vector<std::string>& vars, const std::set<std::string>& bound) {
    return std::all_of(vars.begin(), vars.end(),
                       [&](const std::string& v) { return bound.count(v) != 0; });
}

} // namespace

SafetyPlan makeSafetyPlan(const Rule& rule) {
    SafetyPlan plan;
    {
        std::set<std::string> seen;
        for (const auto& a : rule.head) collectVars(a, plan.variables, seen);
        for (const auto& a : rule.posBody) collectVars(a, plan.variables, seen);
        for (const auto& a : rule.negBody) collectVars(a, plan.variables, seen);
        for (const auto& b : rule.builtins) {
            collectVars(b.lhs, plan.variables, seen);
            for (const auto& v : exprVars(b.rhs))
                if (seen.insert(v).second) plan.variables.push_back(v);
        }
    }

    std::set<std::string> bound;
    std::vector<bool> atomDone(rule.posBody.size(), false);
    std::vector<bool> builtinDone(rule.builtins.size(), false);
    std::size_t remaining = rule.posBody.size() + rule.builtins.size();

    auto tryBuiltin = [&](std::size_t i) -> bool {
        const BuiltinAtom& b = rule.builtins[i];
        const auto rhsVars = exprVars(b.rhs);
        const bool lhsIsVar = b.lhs.kind == TermKind::Variable;
        const bool lhsBound = !lhsIsVar || bound.count(b.lhs.name) != 0;
        if (lhsBound && allBound(rhsVars, bound)) {
            plan.steps.push_back({PlanStep::Kind::Check, i, {}});
            return true;
        }
        // An "=" with unbound variable lhs and fully bound rhs assigns.
        if (b.op == Relop::Eq && lhsIsVar && !lhsBound && allBound(rhsVars, bound)) {
            bound.insert(b.lhs.name);
            plan.steps.push_back({PlanStep::Kind::Assign, i, {b.lhs.name}});
            return true;
        }
        return false;
    };

    std::size_t nextAtom = 0;
    while (remaining > 0) {
        bool progressed = false;
        for (std::size_t i = 0; i < rule.builtins.size(); ++i) {
            if (builtinDone[i]) continue;
            if (tryBuiltin(i)) {
                builtinDone[i] = true;
                --remaining;
                progressed = true;
            }
        }
        if (nextAtom < rule.posBody.size()) {
            std::vector<std::string> binds;
            for (const auto& v : atomVars(rule.posBody[nextAtom]))
                if (bound.insert(v).second) binds.push_back(v);
            plan.steps.push_back({PlanStep::Kind::Join, nextAtom, std::move(binds)});
            atomDone[nextAtom] = true;
            ++nextAtom;
            --remaining;
            progressed = true;
        }
        if (!progressed) break;
    }

    // Anything still unbound makes the rule unsafe; name the first witness.
    for (std::size_t i = 0; i < rule.builtins.size(); ++i) {
        if (builtinDone[i]) continue;
        const BuiltinAtom& b = rule.builtins[i];
        if (b.lhs.kind == TermKind::Variable && bound.count(b.lhs.name) == 0 && b.op != Relop::Eq)
            throw UnsafeRuleError(b.lhs.name, printRule(rule));
        for (const auto& v : exprVars(b.rhs))
            if (bound.count(v) == 0) throw UnsafeRuleError(v, printRule(rule));
        if (b.lhs.kind == TermKind::Variable && bound.count(b.lhs.name) == 0)
            throw UnsafeRuleError(b.lhs.name, printRule(rule));
    }
    for (const auto& v : plan.variables)
        if (bound.count(v) == 0) throw UnsafeRuleError(v, printRule(rule));

    return plan;
}

} // namespace groundhog
