#include "groundhog/grounder.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <unordered_set>

#include "groundhog/errors.hpp"
#include "groundhog/safety.hpp"

namespace groundhog {

namespace detail {

constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

struct CArg {
    bool isVar = false;
    std::uint32_t slot = 0;
    TermId cnst = 0;
};

struct CAtom {
    PredId pred = 0;
    std::vector<CArg> args;
};

struct CExpr {
    CArg first;
    std::vector<std::pair<ArithOp, CArg>> rest;
};

struct CBuiltin {
    Relop op = Relop::Eq;
    CArg lhs;
    CExpr rhs;
};

struct CStep {
    PlanStep::Kind kind;
    std::uint32_t index;
};

struct CompiledRule {
    std::vector<CAtom> head;
    std::vector<CAtom> pos;
    std::vector<CAtom> neg;
    std::vector<CBuiltin> builtins;
    std::vector<CStep> plan;
    std::uint32_t varCount = 0;
    std::int32_t sourceId = -1;
};

struct CompiledProgram {
    std::vector<CompiledRule> rules;
    // Scheduling: components of the positive predicate dependency graph
    // in topological order. Head atoms of one disjunctive rule share a
    // component.
    std::vector<std::vector<std::uint32_t>> schedule;
    std::vector<std::uint32_t> emptyPosRules;   // fired once per shot
    std::vector<std::uint32_t> constraintRules; // evaluated after all components
};

// Per-predicate extensions with insertion order preserved; row indexes
// double as delta watermarks.
class AtomStore {
public:
    explicit AtomStore(Interner& in) : in_(&in) {}

    bool insert(AtomId a) {
        if (a >= present_.size()) present_.resize(a + 1, false);
        if (present_[a]) return false;
        present_[a] = true;
        PredId p = in_->atomPred(a);
        if (p >= rows_.size()) rows_.resize(p + 1);
        rows_[p].push_back(a);
        return true;
    }

    bool contains(AtomId a) const { return a < present_.size() && present_[a]; }

    std::size_t rowCount(PredId p) const { return p < rows_.size() ? rows_[p].size() : 0; }

    AtomId row(PredId p, std::size_t i) const { return rows_[p][i]; }

    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> out(rows_.size());
        for (std::size_t p = 0; p < rows_.size(); ++p) out[p] = rows_[p].size();
        return out;
    }

    std::size_t atomCountTotal() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    template <typename Fn>
    void forEach(Fn&& fn) const {
        for (const auto& r : rows_)
            for (AtomId a : r) fn(a);
    }

private:
    Interner* in_;
    std::vector<std::vector<AtomId>> rows_;
    std::vector<bool> present_;
};

namespace {

std::size_t sizeAt(const std::vector<std::size_t>& sizes, PredId p) {
    return p < sizes.size() ? sizes[p] : 0;
}

CArg compileArg(Interner& in, const Term& t,
                const std::unordered_map<std::string, std::uint32_t>& slots) {
    CArg a;
    if (t.kind == TermKind::Variable) {
        a.isVar = true;
        a.slot = slots.at(t.name);
    } else {
        a.cnst = in.term(t);
    }
    return a;
}

CAtom compileAtom(Interner& in, const Atom& atom,
                  const std::unordered_map<std::string, std::uint32_t>& slots) {
    CAtom out;
    out.pred = in.predicate(atom.predicate, static_cast<std::uint32_t>(atom.arity()));
    out.args.reserve(atom.terms.size());
    for (const auto& t : atom.terms) out.args.push_back(compileArg(in, t, slots));
    return out;
}

CompiledRule compileRule(Interner& in, const Rule& rule) {
    SafetyPlan plan = makeSafetyPlan(rule);
    std::unordered_map<std::string, std::uint32_t> slots;
    for (std::size_t i = 0; i < plan.variables.size(); ++i)
        slots.emplace(plan.variables[i], static_cast<std::uint32_t>(i));

    CompiledRule out;
    out.varCount = static_cast<std::uint32_t>(plan.variables.size());
    out.sourceId = rule.sourceId;
    for (const auto& a : rule.head) out.head.push_back(compileAtom(in, a, slots));
    for (const auto& a : rule.posBody) out.pos.push_back(compileAtom(in, a, slots));
    for (const auto& a : rule.negBody) out.neg.push_back(compileAtom(in, a, slots));
    for (const auto& b : rule.builtins) {
        CBuiltin cb;
        cb.op = b.op;
        cb.lhs = compileArg(in, b.lhs, slots);
        cb.rhs.first = compileArg(in, b.rhs.first, slots);
        for (const auto& [op, t] : b.rhs.rest) cb.rhs.rest.emplace_back(op, compileArg(in, t, slots));
        out.builtins.push_back(std::move(cb));
    }
    for (const auto& s : plan.steps)
        out.plan.push_back({s.kind, static_cast<std::uint32_t>(s.index)});
    return out;
}

// Tarjan over the positive predicate dependency graph.
class SccBuilder {
public:
    explicit SccBuilder(std::size_t n) : adj_(n), index_(n, -1), low_(n, 0), onStack_(n, false) {}

    void addEdge(std::uint32_t from, std::uint32_t to) { adj_[from].push_back(to); }

    // Components in reverse topological order of emission; reversed at
    // the end so bodies come before heads.
    std::vector<std::vector<std::uint32_t>> run() {
        for (std::uint32_t v = 0; v < adj_.size(); ++v)
            if (index_[v] < 0) strongConnect(v);
        std::reverse(components_.begin(), components_.end());
        return components_;
    }

private:
    void strongConnect(std::uint32_t v) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        onStack_[v] = true;
        for (std::uint32_t w : adj_[v]) {
            if (index_[w] < 0) {
                strongConnect(w);
                low_[v] = std::min(low_[v], low_[w]);
            } else if (onStack_[w]) {
                low_[v] = std::min(low_[v], index_[w]);
            }
        }
        if (low_[v] == index_[v]) {
            std::vector<std::uint32_t> comp;
            while (true) {
                std::uint32_t w = stack_.back();
                stack_.pop_back();
                onStack_[w] = false;
                comp.push_back(w);
                if (w == v) break;
            }
            components_.push_back(std::move(comp));
        }
    }

    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<int> index_;
    std::vector<int> low_;
    std::vector<bool> onStack_;
    std::vector<std::uint32_t> stack_;
    std::vector<std::vector<std::uint32_t>> components_;
    int counter_ = 0;
};

void buildSchedule(Interner& in, CompiledProgram& cp) {
    std::size_t predCount = in.predCount();
    SccBuilder scc(predCount);
    for (const auto& r : cp.rules) {
        for (const auto& h : r.head) {
            for (const auto& b : r.pos) scc.addEdge(b.pred, h.pred);
            // Disjunctive heads are mutually dependent.
            for (const auto& h2 : r.head)
                if (h.pred != h2.pred) scc.addEdge(h.pred, h2.pred);
        }
    }
    auto components = scc.run();
    std::vector<std::uint32_t> componentOf(predCount, 0);
    for (std::uint32_t c = 0; c < components.size(); ++c)
        for (std::uint32_t p : components[c]) componentOf[p] = c;

    cp.schedule.assign(components.size(), {});
    for (std::uint32_t i = 0; i < cp.rules.size(); ++i) {
        const CompiledRule& r = cp.rules[i];
        if (r.head.empty()) {
            if (r.pos.empty())
                cp.emptyPosRules.push_back(i);
            else
                cp.constraintRules.push_back(i);
            continue;
        }
        if (r.pos.empty()) {
            cp.emptyPosRules.push_back(i);
            continue;
        }
        cp.schedule[componentOf[r.head[0].pred]].push_back(i);
    }
    std::erase_if(cp.schedule, [](const auto& v) { return v.empty(); });
}

bool toInt(const Interner& in, TermId t, std::int64_t& out, EvalCounters* counters) {
    if (!in.isInteger(t)) {
        if (counters) ++counters->nonIntegerArith;
        return false;
    }
    out = in.intValue(t);
    return true;
}

TermId argValue(const CArg& a, const std::vector<TermId>& bind) {
    return a.isVar ? bind[a.slot] : a.cnst;
}

// Evaluates an expression under a total binding of its variables.
// Returns false when the substitution must fail (division by zero,
// overflow, arithmetic over non-integers).
bool evalExpr(Interner& in, const CExpr& e, const std::vector<TermId>& bind, TermId& out,
              EvalCounters* counters) {
    TermId firstVal = argValue(e.first, bind);
    if (e.rest.empty()) {
        out = firstVal;
        return true;
    }
    std::int64_t acc = 0;
    if (!toInt(in, firstVal, acc, counters)) return false;
    for (const auto& [op, arg] : e.rest) {
        std::int64_t rhs = 0;
        if (!toInt(in, argValue(arg, bind), rhs, counters)) return false;
        bool bad = false;
        switch (op) {
            case ArithOp::Add: bad = __builtin_add_overflow(acc, rhs, &acc); break;
            case ArithOp::Sub: bad = __builtin_sub_overflow(acc, rhs, &acc); break;
            case ArithOp::Mul: bad = __builtin_mul_overflow(acc, rhs, &acc); break;
            case ArithOp::Div:
                if (rhs == 0) {
                    if (counters) ++counters->divisionByZero;
                    return false;
                }
                if (acc == std::numeric_limits<std::int64_t>::min() && rhs == -1) {
                    bad = true;
                    break;
                }
                acc /= rhs;
                break;
        }
        if (bad) {
            if (counters) ++counters->overflow;
            return false;
        }
    }
    out = in.integer(acc);
    return true;
}

bool checkRelop(const Interner& in, Relop op, TermId lhs, TermId rhs, EvalCounters* counters) {
    switch (op) {
        case Relop::Eq: return lhs == rhs;
        case Relop::Neq: return lhs != rhs;
        default: break;
    }
    std::int64_t a = 0, b = 0;
    if (!toInt(in, lhs, a, counters) || !toInt(in, rhs, b, counters)) return false;
    switch (op) {
        case Relop::Lt: return a < b;
        case Relop::Gt: return a > b;
        case Relop::Leq: return a <= b;
        case Relop::Geq: return a >= b;
        default: return false;
    }
}

struct PosRange {
    PredId pred = 0;
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// Backtracking evaluation of one rule over the given row ranges. The
// sink receives the total binding plus the matched positive atoms.
class RuleFirer {
public:
    RuleFirer(Interner& in, const AtomStore& store, EvalCounters* counters)
        : in_(in), store_(store), counters_(counters) {}

    template <typename Sink>
    void fire(const CompiledRule& rule, const std::vector<PosRange>& ranges, Sink&& sink) {
        rule_ = &rule;
        bind_.assign(rule.varCount, kUnbound);
        posMatch_.assign(rule.pos.size(), 0);
        step(0, ranges, sink);
    }

private:
    bool matchAtom(const CAtom& ca, AtomId atom, std::vector<std::uint32_t>& trail) {
        in_.atomArgsInto(atom, argbuf_);
        for (std::size_t i = 0; i < ca.args.size(); ++i) {
            const CArg& a = ca.args[i];
            if (!a.isVar) {
                if (argbuf_[i] != a.cnst) return false;
            } else if (bind_[a.slot] == kUnbound) {
                bind_[a.slot] = argbuf_[i];
                trail.push_back(a.slot);
            } else if (bind_[a.slot] != argbuf_[i]) {
                return false;
            }
        }
        return true;
    }

    template <typename Sink>
    void step(std::size_t stepIdx, const std::vector<PosRange>& ranges, Sink&& sink) {
        if (stepIdx == rule_->plan.size()) {
            sink(bind_, posMatch_);
            return;
        }
        const CStep& s = rule_->plan[stepIdx];
        switch (s.kind) {
            case PlanStep::Kind::Join: {
                const CAtom& ca = rule_->pos[s.index];
                const PosRange& range = ranges[s.index];
                std::vector<std::uint32_t> trail;
                for (std::size_t i = range.lo; i < range.hi; ++i) {
                    AtomId atom = store_.row(range.pred, i);
                    trail.clear();
                    if (matchAtom(ca, atom, trail)) {
                        posMatch_[s.index] = atom;
                        step(stepIdx + 1, ranges, sink);
                    }
                    for (std::uint32_t slot : trail) bind_[slot] = kUnbound;
                }
                return;
            }
            case PlanStep::Kind::Assign: {
                const CBuiltin& b = rule_->builtins[s.index];
                TermId value = 0;
                if (!evalExpr(in_, b.rhs, bind_, value, counters_)) return;
                bind_[b.lhs.slot] = value;
                step(stepIdx + 1, ranges, sink);
                bind_[b.lhs.slot] = kUnbound;
                return;
            }
            case PlanStep::Kind::Check: {
                const CBuiltin& b = rule_->builtins[s.index];
                TermId value = 0;
                if (!evalExpr(in_, b.rhs, bind_, value, counters_)) return;
                if (checkRelop(in_, b.op, argValue(b.lhs, bind_), value, counters_))
                    step(stepIdx + 1, ranges, sink);
                return;
            }
        }
    }

    Interner& in_;
    const AtomStore& store_;
    EvalCounters* counters_;
    const CompiledRule* rule_ = nullptr;
    std::vector<TermId> bind_;
    std::vector<AtomId> posMatch_;
    std::vector<TermId> argbuf_;
};

GroundRule instantiate(Interner& in, const CompiledRule& rule, const std::vector<TermId>& bind,
                       const std::vector<AtomId>& posMatch) {
    std::vector<TermId> argbuf;
    auto ground = [&](const CAtom& ca) {
        argbuf.clear();
        for (const CArg& a : ca.args) argbuf.push_back(argValue(a, bind));
        return in.atom(ca.pred, argbuf);
    };
    std::vector<AtomId> head, neg;
    head.reserve(rule.head.size());
    for (const CAtom& h : rule.head) head.push_back(ground(h));
    neg.reserve(rule.neg.size());
    for (const CAtom& n : rule.neg) neg.push_back(ground(n));
    return makeGroundRule(in, std::move(head), posMatch, std::move(neg), rule.sourceId);
}

std::vector<PosRange> fullRanges(const CompiledRule& rule, const std::vector<std::size_t>& caps) {
    std::vector<PosRange> ranges(rule.pos.size());
    for (std::size_t i = 0; i < rule.pos.size(); ++i) {
        ranges[i].pred = rule.pos[i].pred;
        ranges[i].hi = sizeAt(caps, rule.pos[i].pred);
    }
    return ranges;
}

// Shared core of the semi-naive paths: runs the schedule over the store
// seeded with everything past shotStart, appending new rules to g and
// delta.
void runSchedule(Interner& in, const CompiledProgram& cp, AtomStore& store,
                 const std::vector<std::size_t>& shotStart, GroundProgram& g, GroundProgram* delta,
                 bool feedHeads, const GroundingLimits& limits, EvalCounters* counters,
                 EngineStats* stats) {
    RuleFirer firer(in, store, counters);
    auto sink = [&](const CompiledRule& rule, const std::vector<TermId>& bind,
                    const std::vector<AtomId>& posMatch) {
        GroundRule ground = instantiate(in, rule, bind, posMatch);
        if (stats) ++stats->firings;
        if (!g.add(in, ground)) return;
        if (g.size() > limits.maxInstances)
            throw CapExceededError("ground rule budget exceeded (" +
                                   std::to_string(limits.maxInstances) + ")");
        if (delta) delta->add(in, ground);
        if (feedHeads)
            for (AtomId h : g.rules().back().head) store.insert(h);
    };

    for (std::uint32_t i : cp.emptyPosRules) {
        const CompiledRule& rule = cp.rules[i];
        firer.fire(rule, {}, [&](const auto& bind, const auto& posMatch) {
            sink(rule, bind, posMatch);
        });
    }

    for (const auto& component : cp.schedule) {
        std::vector<std::size_t> marks = shotStart;
        while (true) {
            std::vector<std::size_t> caps = store.sizes();
            bool anyWindow = false;
            for (std::uint32_t i : component) {
                for (const CAtom& b : cp.rules[i].pos) {
                    if (sizeAt(marks, b.pred) < sizeAt(caps, b.pred)) {
                        anyWindow = true;
                        break;
                    }
                }
                if (anyWindow) break;
            }
            if (!anyWindow) break;
            if (stats) ++stats->rounds;
            for (std::uint32_t i : component) {
                const CompiledRule& rule = cp.rules[i];
                for (std::size_t d = 0; d < rule.pos.size(); ++d) {
                    PredId dp = rule.pos[d].pred;
                    std::size_t lo = sizeAt(marks, dp);
                    std::size_t hi = sizeAt(caps, dp);
                    if (lo >= hi) continue;
                    auto ranges = fullRanges(rule, caps);
                    ranges[d].lo = lo;
                    ranges[d].hi = hi;
                    firer.fire(rule, ranges, [&](const auto& bind, const auto& posMatch) {
                        sink(rule, bind, posMatch);
                    });
                }
            }
            marks = std::move(caps);
        }
    }

    // Constraints never derive atoms; one differential pass at the end.
    std::vector<std::size_t> caps = store.sizes();
    for (std::uint32_t i : cp.constraintRules) {
        const CompiledRule& rule = cp.rules[i];
        for (std::size_t d = 0; d < rule.pos.size(); ++d) {
            PredId dp = rule.pos[d].pred;
            std::size_t lo = sizeAt(shotStart, dp);
            std::size_t hi = sizeAt(caps, dp);
            if (lo >= hi) continue;
            auto ranges = fullRanges(rule, caps);
            ranges[d].lo = lo;
            ranges[d].hi = hi;
            firer.fire(rule, ranges, [&](const auto& bind, const auto& posMatch) {
                sink(rule, bind, posMatch);
            });
        }
    }
}

} // namespace

} // namespace detail

using detail::AtomStore;
using detail::CompiledProgram;

// ---------------------------------------------------------------------------
// Universe

bool Universe::add(TermId t) {
    if (!present_.insert(t).second) return false;
    constants_.push_back(t);
    return true;
}

void Universe::addProgram(const Program& p) {
    auto addTerm = [&](const Term& t) {
        if (t.isGround()) add(in_->term(t));
    };
    for (const auto& r : p.rules) {
        for (const auto& a : r.head)
            for (const auto& t : a.terms) addTerm(t);
        for (const auto& a : r.posBody)
            for (const auto& t : a.terms) addTerm(t);
        for (const auto& a : r.negBody)
            for (const auto& t : a.terms) addTerm(t);
        for (const auto& b : r.builtins) {
            addTerm(b.lhs);
            addTerm(b.rhs.first);
            for (const auto& [op, t] : b.rhs.rest) addTerm(t);
        }
    }
    if (p.intBounds) {
        auto [lo, hi] = *p.intBounds;
        if (hi < lo) throw Error("declared integer bounds are empty");
        if (hi - lo >= 1'000'000)
            throw CapExceededError("declared integer bounds span more than 1000000 values");
        for (std::int64_t v = lo; v <= hi; ++v) add(in_->integer(v));
    }
}

void Universe::addFacts(const FactSet& f) {
    for (const auto& a : f)
        for (const auto& t : a.terms) add(in_->term(t));
}

void Universe::addAtomArgs(AtomId a) {
    for (TermId t : in_->atomArgs(a)) add(t);
}

Universe Universe::forProblem(Interner& in, const Program& p, const FactSet& f) {
    Universe u(in);
    u.addProgram(p);
    u.addFacts(f);
    return u;
}

// ---------------------------------------------------------------------------
// Grounder

Grounder::Grounder(Interner& in, const Program& p)
    : in_(&in), program_(p), compiled_(std::make_unique<CompiledProgram>()) {
    for (const auto& r : p.rules) compiled_->rules.push_back(detail::compileRule(in, r));
    detail::buildSchedule(in, *compiled_);
}

Grounder::~Grounder() = default;
Grounder::Grounder(Grounder&&) noexcept = default;
Grounder& Grounder::operator=(Grounder&&) noexcept = default;

GroundProgram Grounder::inst(std::span<const AtomId> s, EvalCounters* counters) const {
    AtomStore store(*in_);
    for (AtomId a : s) store.insert(a);
    GroundProgram out;
    detail::RuleFirer firer(*in_, store, counters);
    auto caps = store.sizes();
    for (const auto& rule : compiled_->rules) {
        auto ranges = detail::fullRanges(rule, caps);
        firer.fire(rule, ranges, [&](const auto& bind, const auto& posMatch) {
            out.add(*in_, detail::instantiate(*in_, rule, bind, posMatch));
        });
    }
    return out;
}

GroundProgram Grounder::inst(const FactSet& s, EvalCounters* counters) const {
    std::vector<AtomId> atoms;
    atoms.reserve(s.size());
    for (const auto& a : s) atoms.push_back(in_->atom(a));
    return inst(atoms, counters);
}

GroundProgram Grounder::instOverRules(const GroundProgram& r, std::span<const AtomId> extra,
                                      EvalCounters* counters) const {
    std::vector<AtomId> atoms = r.headList();
    atoms.insert(atoms.end(), extra.begin(), extra.end());
    return inst(atoms, counters);
}

GroundProgram Grounder::grndNaive(const Universe& u, const GroundingLimits& limits,
                                  EvalCounters* counters) const {
    if (program_.hasArithmetic() && !program_.intBounds)
        throw Error("theoretical grounding of a program with arithmetic requires declared "
                    "integer bounds");
    GroundProgram out;
    std::size_t enumerated = 0;
    auto constants = u.constants();
    for (const auto& rule : compiled_->rules) {
        std::vector<TermId> bind(rule.varCount, 0);
        std::vector<AtomId> pos(rule.pos.size());
        // Odometer over all substitutions of the rule's variables.
        std::vector<std::size_t> odo(rule.varCount, 0);
        if (rule.varCount > 0 && constants.empty()) continue;
        while (true) {
            if (++enumerated > limits.maxInstances)
                throw CapExceededError("theoretical grounding exceeds " +
                                       std::to_string(limits.maxInstances) + " substitutions");
            for (std::uint32_t v = 0; v < rule.varCount; ++v) bind[v] = constants[odo[v]];
            bool ok = true;
            for (const auto& b : rule.builtins) {
                TermId value = 0;
                if (!detail::evalExpr(*in_, b.rhs, bind, value, counters) ||
                    !detail::checkRelop(*in_, b.op, detail::argValue(b.lhs, bind), value,
                                        counters)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (std::size_t i = 0; i < rule.pos.size(); ++i) {
                    std::vector<TermId> args;
                    for (const auto& a : rule.pos[i].args) args.push_back(detail::argValue(a, bind));
                    pos[i] = in_->atom(rule.pos[i].pred, args);
                }
                out.add(*in_, detail::instantiate(*in_, rule, bind, pos));
                if (out.size() > limits.maxInstances)
                    throw CapExceededError("theoretical grounding exceeds " +
                                           std::to_string(limits.maxInstances) + " rules");
            }
            // Advance the odometer.
            std::uint32_t v = 0;
            for (; v < rule.varCount; ++v) {
                if (++odo[v] < constants.size()) break;
                odo[v] = 0;
            }
            if (v == rule.varCount) break;
        }
    }
    return out;
}

GroundProgram Grounder::fixpointNaive(const FactSet& f, const GroundingLimits& limits,
                                      EvalCounters* counters) const {
    std::vector<AtomId> factAtoms;
    factAtoms.reserve(f.size());
    for (const auto& a : f) factAtoms.push_back(in_->atom(a));

    GroundProgram r;
    while (true) {
        GroundProgram next = instOverRules(r, factAtoms, counters);
        if (next.size() > limits.maxInstances)
            throw CapExceededError("instantiation fixpoint exceeds " +
                                   std::to_string(limits.maxInstances) + " rules");
        assert(r.isSubsetOf(next));
        if (next.size() == r.size()) return r;
        r = std::move(next);
    }
}

GroundProgram Grounder::fixpointSeminaive(const FactSet& f, const GroundingLimits& limits,
                                          EvalCounters* counters, EngineStats* stats) const {
    AtomStore store(*in_);
    std::vector<std::size_t> shotStart;  // all empty
    for (const auto& a : f) store.insert(in_->atom(a));
    GroundProgram g;
    detail::runSchedule(*in_, *compiled_, store, shotStart, g, nullptr, /*feedHeads=*/true, limits,
                        counters, stats);
    return g;
}

// ---------------------------------------------------------------------------
// SemiNaiveEngine

SemiNaiveEngine::SemiNaiveEngine(Interner& in, const Program& p)
    : grounder_(in, p), store_(std::make_unique<AtomStore>(in)) {}

SemiNaiveEngine::~SemiNaiveEngine() = default;

SemiNaiveEngine::ShotOutcome SemiNaiveEngine::shot(const FactSet& facts, GroundProgram& g,
                                                   const GroundingLimits& limits,
                                                   EvalCounters* counters, EngineStats* stats) {
    Interner& in = grounder_.interner();
    std::vector<std::size_t> shotStart = store_->sizes();
    for (const auto& a : facts) store_->insert(in.atom(a));

    ShotOutcome outcome;
    detail::runSchedule(in, grounder_.compiled(), *store_, shotStart, g, &outcome.delta,
                        /*feedHeads=*/true, limits, counters, stats);
    rulesSeen_ = g.size();
    return outcome;
}

} // namespace groundhog
