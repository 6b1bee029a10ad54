#include "groundhog/embedding.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "groundhog/errors.hpp"
#include "groundhog/safety.hpp"

namespace groundhog::embedding {

namespace {

// AST-level arithmetic mirroring the grounder's semantics: integer-only
// arithmetic, division by zero and overflow fail the substitution.
class AstEval {
public:
    AstEval(Interner& in, const std::unordered_map<std::string, TermId>& bind)
        : in_(in), bind_(bind) {}

    bool termValue(const Term& t, TermId& out) const {
        switch (t.kind) {
            case TermKind::Constant: out = in_.constant(t.name); return true;
            case TermKind::Integer: out = in_.integer(t.value); return true;
            case TermKind::Variable: {
                auto it = bind_.find(t.name);
                if (it == bind_.end()) return false;
                out = it->second;
                return true;
            }
        }
        return false;
    }

    bool exprValue(const ArithExpr& e, TermId& out) const {
        TermId first = 0;
        if (!termValue(e.first, first)) return false;
        if (e.rest.empty()) {
            out = first;
            return true;
        }
        if (!in_.isInteger(first)) return false;
        std::int64_t acc = in_.intValue(first);
        for (const auto& [op, t] : e.rest) {
            TermId v = 0;
            if (!termValue(t, v) || !in_.isInteger(v)) return false;
            std::int64_t rhs = in_.intValue(v);
            bool bad = false;
            switch (op) {
                case ArithOp::Add: bad = __builtin_add_overflow(acc, rhs, &acc); break;
                case ArithOp::Sub: bad = __builtin_sub_overflow(acc, rhs, &acc); break;
                case ArithOp::Mul: bad = __builtin_mul_overflow(acc, rhs, &acc); break;
                case ArithOp::Div:
                    if (rhs == 0 || (acc == std::numeric_limits<std::int64_t>::min() && rhs == -1))
                        return false;
                    acc /= rhs;
                    break;
            }
            if (bad) return false;
        }
        out = in_.integer(acc);
        return true;
    }

    bool builtinHolds(const BuiltinAtom& b) const {
        TermId lhs = 0, rhs = 0;
        if (!termValue(b.lhs, lhs) || !exprValue(b.rhs, rhs)) return false;
        switch (b.op) {
            case Relop::Eq: return lhs == rhs;
            case Relop::Neq: return lhs != rhs;
            default: break;
        }
        if (!in_.isInteger(lhs) || !in_.isInteger(rhs)) return false;
        std::int64_t a = in_.intValue(lhs), c = in_.intValue(rhs);
        switch (b.op) {
            case Relop::Lt: return a < c;
            case Relop::Gt: return a > c;
            case Relop::Leq: return a <= c;
            case Relop::Geq: return a >= c;
            default: return false;
        }
    }

private:
    Interner& in_;
    const std::unordered_map<std::string, TermId>& bind_;
};

// Backtracking match of one ground rule against one program rule: every
// source atom is aligned to some candidate atom of the same section,
// remaining variables come from assignment builtins, and the fully
// instantiated rule must reproduce the candidate exactly.
class RuleMatcher {
public:
    RuleMatcher(const Problem& pb, const Rule& rule, const GroundRule& target)
        : pb_(pb), in_(pb.interner()), rule_(rule), target_(target) {
        for (const auto& a : rule.posBody) items_.push_back({&a, &target.pos});
        for (const auto& a : rule.head) items_.push_back({&a, &target.head});
        for (const auto& a : rule.negBody) items_.push_back({&a, &target.neg});
    }

    bool run() {
        if (rule_.head.empty() != target_.head.empty()) return false;
        return place(0);
    }

private:
    struct Item {
        const Atom* src;
        const std::vector<AtomId>* pool;
    };

    bool place(std::size_t i) {
        if (i == items_.size()) return finish();
        const Item& item = items_[i];
        for (AtomId cand : *item.pool) {
            auto saved = bind_;
            if (unify(*item.src, cand) && place(i + 1)) return true;
            bind_ = std::move(saved);
        }
        return false;
    }

    bool unify(const Atom& src, AtomId cand) {
        if (in_.predName(in_.atomPred(cand)) != src.predicate) return false;
        auto args = in_.atomArgs(cand);
        if (args.size() != src.terms.size()) return false;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const Term& t = src.terms[i];
            if (t.kind == TermKind::Variable) {
                auto [it, inserted] = bind_.emplace(t.name, args[i]);
                if (!inserted && it->second != args[i]) return false;
            } else if (in_.term(t) != args[i]) {
                return false;
            }
        }
        return true;
    }

    bool finish() {
        AstEval eval(in_, bind_);
        // Assignment builtins may bind variables the atoms left open.
        SafetyPlan plan = makeSafetyPlan(rule_);
        for (const auto& step : plan.steps) {
            if (step.kind != PlanStep::Kind::Assign) continue;
            const BuiltinAtom& b = rule_.builtins[step.index];
            if (bind_.count(b.lhs.name)) continue;
            TermId v = 0;
            if (!eval.exprValue(b.rhs, v)) return false;
            bind_.emplace(b.lhs.name, v);
        }
        for (const auto& v : plan.variables)
            if (!bind_.count(v)) return false;
        for (const auto& b : rule_.builtins)
            if (!eval.builtinHolds(b)) return false;
        // Substitutions range over the problem universe.
        for (const auto& [name, value] : bind_)
            if (!pb_.universe().contains(value)) return false;

        auto groundSection = [&](const std::vector<Atom>& atoms) {
            std::vector<AtomId> out;
            out.reserve(atoms.size());
            for (const auto& a : atoms) {
                std::vector<TermId> args;
                args.reserve(a.terms.size());
                for (const auto& t : a.terms) {
                    TermId v = 0;
                    eval.termValue(t, v);
                    args.push_back(v);
                }
                out.push_back(
                    in_.atom(in_.predicate(a.predicate, static_cast<std::uint32_t>(a.arity())), args));
            }
            return out;
        };
        GroundRule built =
            makeGroundRule(in_, groundSection(rule_.head), groundSection(rule_.posBody),
                           groundSection(rule_.negBody), rule_.sourceId);
        return GroundProgram::ruleKey(built) == GroundProgram::ruleKey(target_);
    }

    const Problem& pb_;
    Interner& in_;
    const Rule& rule_;
    const GroundRule& target_;
    std::vector<Item> items_;
    std::unordered_map<std::string, TermId> bind_;
};

} // namespace

Problem::Problem(Interner& in, Program program, FactSet facts)
    : in_(&in),
      program_(std::move(program)),
      facts_(std::move(facts)),
      universe_(Universe::forProblem(in, program_, facts_)),
      grounder_(in, program_) {}

const GroundProgram& Problem::groundUnion(const GroundingLimits& limits) const {
    if (!groundUnion_) {
        GroundProgram g = grounder_.grndNaive(universe_, limits);
        for (const auto& a : facts_) g.add(*in_, makeFactRule(in_->atom(a)));
        groundUnion_ = std::move(g);
    }
    return *groundUnion_;
}

std::vector<AtomId> Problem::factAtoms() const {
    std::vector<AtomId> out;
    out.reserve(facts_.size());
    for (const auto& a : facts_) out.push_back(in_->atom(a));
    return out;
}

bool matchesProgram(const Problem& problem, const GroundRule& rule) {
    for (const auto& r : problem.program().rules) {
        RuleMatcher matcher(problem, r, rule);
        if (matcher.run()) return true;
    }
    return false;
}

Candidate::Candidate(const Problem& problem, GroundProgram rules)
    : problem_(&problem), rules_(std::move(rules)) {
    Interner& in = problem.interner();
    for (const auto& r : rules_.rules()) {
        if (r.isFactRule() && problem.facts().contains(in.toAst(r.head[0]))) continue;
        if (!matchesProgram(problem, r))
            throw Error("rule not in grnd(P) ∪ F: " + printGroundRule(in, r));
    }
}

bool embedsBody(const Candidate& r, const GroundRule& rule) {
    for (AtomId a : rule.pos)
        if (!r.rules().containsHead(a)) return false;
    return true;
}

bool embedsRule(const Candidate& r, const GroundRule& rule) {
    return !embedsBody(r, rule) || r.rules().contains(rule);
}

EmbeddingCheck isEmbeddingProgram(const Candidate& r, const GroundingLimits& limits) {
    const GroundProgram& pool = r.problem().groundUnion(limits);
    for (const auto& rule : pool.rules()) {
        if (!embedsRule(r, rule)) return {false, rule};
    }
    return {true, std::nullopt};
}

Candidate minimalEmbedding(const Problem& problem, const GroundingLimits& limits) {
    Interner& in = problem.interner();
    GroundProgram g = problem.grounder().fixpointSeminaive(problem.facts(), limits);
    for (const auto& a : problem.facts()) g.add(in, makeFactRule(in.atom(a)));
    return Candidate(problem, std::move(g));
}

Candidate intersect(const Candidate& a, const Candidate& b) {
    if (&a.problem() != &b.problem()) throw ProvenanceMismatchError();
    return Candidate(a.problem(),
                     GroundProgram::intersection(a.problem().interner(), a.rules(), b.rules()));
}

Candidate sampleEmbedding(const Problem& problem, std::mt19937& rng,
                          const GroundingLimits& limits) {
    Interner& in = problem.interner();
    const GroundProgram& pool = problem.groundUnion(limits);
    GroundProgram e = minimalEmbedding(problem, limits).rules();

    auto close = [&] {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : pool.rules()) {
                if (e.contains(r)) continue;
                bool bodyEmbedded = true;
                for (AtomId a : r.pos)
                    if (!e.containsHead(a)) {
                        bodyEmbedded = false;
                        break;
                    }
                if (bodyEmbedded && e.add(in, r)) changed = true;
            }
        }
    };
    close();

    if (pool.size() > e.size()) {
        std::size_t additions = rng() % (pool.size() - e.size() + 1);
        for (std::size_t i = 0; i < additions && e.size() < pool.size(); ++i) {
            std::size_t pick = rng() % pool.size();
            for (std::size_t probe = 0; probe < pool.size(); ++probe) {
                const GroundRule& r = pool.rules()[(pick + probe) % pool.size()];
                if (!e.contains(r)) {
                    e.add(in, r);
                    break;
                }
            }
            close();
        }
    }
    return Candidate(problem, std::move(e));
}

} // namespace groundhog::embedding
