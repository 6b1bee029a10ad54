#include "groundhog/solver.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "groundhog/errors.hpp"

namespace groundhog::solver {

namespace {

constexpr std::size_t kMaskCeiling = 62;

using Mask = std::uint64_t;

// g translated onto a candidate atom index: one bitmask per section.
// Rules whose positive body mentions an atom outside the candidate pool
// can never fire inside the pool and are dropped; negative literals
// outside the pool are vacuously true and erased.
struct MaskedProgram {
    struct MRule {
        Mask head = 0, pos = 0, neg = 0;
        bool headEmpty = false;
    };
    std::vector<AtomId> candidates;
    std::unordered_map<AtomId, std::size_t> indexOf;
    std::vector<MRule> rules;

    bool inPool(AtomId a) const { return indexOf.count(a) != 0; }
};

MaskedProgram buildMasks(const Interner& in, const GroundProgram& g,
                         std::span<const AtomId> candidates, const SolverLimits& limits) {
    if (candidates.size() > limits.candidateCap)
        throw SolverCapError("brute-force candidate pool has " + std::to_string(candidates.size()) +
                             " atoms, cap is " + std::to_string(limits.candidateCap) +
                             "; use the stratified path or raise the cap");
    if (candidates.size() > kMaskCeiling)
        throw SolverCapError("brute-force candidate pool exceeds the 62-atom hard ceiling");

    MaskedProgram mp;
    mp.candidates.assign(candidates.begin(), candidates.end());
    std::sort(mp.candidates.begin(), mp.candidates.end(),
              [&](AtomId a, AtomId b) { return in.atomLess(a, b); });
    mp.candidates.erase(std::unique(mp.candidates.begin(), mp.candidates.end()),
                        mp.candidates.end());
    for (std::size_t i = 0; i < mp.candidates.size(); ++i) mp.indexOf[mp.candidates[i]] = i;

    for (const auto& r : g.rules()) {
        MaskedProgram::MRule m;
        m.headEmpty = r.head.empty();
        bool dead = false;
        for (AtomId a : r.pos) {
            auto it = mp.indexOf.find(a);
            if (it == mp.indexOf.end()) {
                dead = true;  // body atom can never hold within the pool
                break;
            }
            m.pos |= Mask(1) << it->second;
        }
        if (dead) continue;
        for (AtomId a : r.neg) {
            auto it = mp.indexOf.find(a);
            if (it != mp.indexOf.end()) m.neg |= Mask(1) << it->second;
        }
        for (AtomId a : r.head) {
            auto it = mp.indexOf.find(a);
            if (it != mp.indexOf.end()) m.head |= Mask(1) << it->second;
        }
        mp.rules.push_back(m);
    }
    return mp;
}

bool isModel(const MaskedProgram& mp, Mask a) {
    for (const auto& r : mp.rules) {
        if ((r.pos & a) == r.pos && (r.neg & a) == 0) {
            if (r.headEmpty || (r.head & a) == 0) return false;
        }
    }
    return true;
}

// For b ⊆ a the negative literals of every reduct rule stay true, so
// the reduct behaves as a positive program over subsets of a.
bool smallerModelOfReductExists(const MaskedProgram& mp, Mask a) {
    std::vector<const MaskedProgram::MRule*> reduct;
    for (const auto& r : mp.rules)
        if ((r.pos & a) == r.pos && (r.neg & a) == 0) reduct.push_back(&r);
    for (Mask b = (a - 1) & a;; b = (b - 1) & a) {
        bool model = true;
        for (const auto* r : reduct) {
            if ((r->pos & b) == r->pos) {
                if (r->headEmpty || (r->head & b) == 0) {
                    model = false;
                    break;
                }
            }
        }
        if (model) return true;
        if (b == 0) break;
    }
    return false;
}

bool isAnswerSetMask(const MaskedProgram& mp, Mask a) {
    if (!isModel(mp, a)) return false;
    if (a == 0) return true;
    return !smallerModelOfReductExists(mp, a);
}

Interpretation maskToInterpretation(const MaskedProgram& mp, Mask a) {
    Interpretation out;
    for (std::size_t i = 0; i < mp.candidates.size(); ++i)
        if (a & (Mask(1) << i)) out.push_back(mp.candidates[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sortedAtomTexts(const Interner& in, const Interpretation& atoms) {
    std::vector<std::string> texts;
    texts.reserve(atoms.size());
    for (AtomId a : atoms) texts.push_back(in.atomText(a));
    std::sort(texts.begin(), texts.end());
    return texts;
}

} // namespace

Interpretation makeInterpretation(std::vector<AtomId> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

bool interpretationContains(const Interpretation& i, AtomId a) {
    return std::binary_search(i.begin(), i.end(), a);
}

GroundProgram flpReduct(const Interner& in, const GroundProgram& g, const Interpretation& a) {
    GroundProgram out;
    for (const auto& r : g.rules()) {
        bool bodyTrue = true;
        for (AtomId p : r.pos)
            if (!interpretationContains(a, p)) {
                bodyTrue = false;
                break;
            }
        if (bodyTrue)
            for (AtomId n : r.neg)
                if (interpretationContains(a, n)) {
                    bodyTrue = false;
                    break;
                }
        if (bodyTrue) out.add(in, r);
    }
    return out;
}

bool isAnswerSet(const Interner& in, const GroundProgram& g, const Interpretation& a,
                 const SolverLimits& limits) {
    // Atoms outside Heads(g) can always be dropped, so a is not minimal.
    for (AtomId x : a)
        if (!g.containsHead(x)) return false;
    MaskedProgram mp = buildMasks(in, g, g.headList(), limits);
    Mask mask = 0;
    for (AtomId x : a) mask |= Mask(1) << mp.indexOf.at(x);
    return isAnswerSetMask(mp, mask);
}

std::vector<AnswerSet> enumerateOverCandidates(const Interner& in, const GroundProgram& g,
                                               std::span<const AtomId> candidates,
                                               std::size_t maxModels, const SolverLimits& limits) {
    MaskedProgram mp = buildMasks(in, g, candidates, limits);
    std::vector<AnswerSet> found;
    const Mask end = Mask(1) << mp.candidates.size();
    for (Mask a = 0; a < end; ++a) {
        if (isAnswerSetMask(mp, a))
            found.push_back({maskToInterpretation(mp, a), Certificate::BruteForceMinimal});
    }
    std::sort(found.begin(), found.end(), [&](const AnswerSet& x, const AnswerSet& y) {
        return sortedAtomTexts(in, x.atoms) < sortedAtomTexts(in, y.atoms);
    });
    if (found.size() > maxModels) found.resize(maxModels);
    return found;
}

std::vector<AnswerSet> enumerateAnswerSets(const Interner& in, const GroundProgram& g,
                                           std::size_t maxModels, const SolverLimits& limits) {
    return enumerateOverCandidates(in, g, g.headList(), maxModels, limits);
}

std::optional<Stratification> stratify(const Interner& in, const GroundProgram& g) {
    for (const auto& r : g.rules())
        if (r.head.size() > 1) return std::nullopt;

    // Collect predicates and dependency edges at the predicate level.
    std::unordered_map<PredId, std::size_t> nodeOf;
    std::vector<PredId> preds;
    auto node = [&](PredId p) {
        auto it = nodeOf.find(p);
        if (it != nodeOf.end()) return it->second;
        nodeOf.emplace(p, preds.size());
        preds.push_back(p);
        return preds.size() - 1;
    };
    struct Edge {
        std::size_t from, to;
        bool negative;
    };
    std::vector<Edge> edges;
    for (const auto& r : g.rules()) {
        for (AtomId p : r.pos) node(in.atomPred(p));
        for (AtomId n : r.neg) node(in.atomPred(n));
        for (AtomId h : r.head) node(in.atomPred(h));
        if (r.head.empty()) continue;  // constraints derive nothing
        std::size_t h = node(in.atomPred(r.head[0]));
        for (AtomId p : r.pos) edges.push_back({node(in.atomPred(p)), h, false});
        for (AtomId n : r.neg) edges.push_back({node(in.atomPred(n)), h, true});
    }

    // Iterated stratum assignment; growth past the node count means a
    // negative cycle.
    std::vector<std::size_t> stratum(preds.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : edges) {
            std::size_t need = stratum[e.from] + (e.negative ? 1 : 0);
            if (stratum[e.to] < need) {
                if (need > preds.size()) return std::nullopt;
                stratum[e.to] = need;
                changed = true;
            }
        }
    }

    std::size_t top = 0;
    for (std::size_t s : stratum) top = std::max(top, s);
    Stratification out;
    out.strata.assign(top + 1, {});
    for (std::size_t i = 0; i < preds.size(); ++i) out.strata[stratum[i]].push_back(preds[i]);
    return out;
}

std::optional<AnswerSet> perfectModel(const Interner& in, const GroundProgram& g,
                                      const Stratification& strat) {
    std::unordered_map<PredId, std::size_t> stratumOf;
    for (std::size_t s = 0; s < strat.strata.size(); ++s)
        for (PredId p : strat.strata[s]) stratumOf[p] = s;

    std::vector<const GroundRule*> constraints;
    std::vector<std::vector<const GroundRule*>> ruleByStratum(strat.strata.size());
    for (const auto& r : g.rules()) {
        if (r.head.empty()) {
            constraints.push_back(&r);
            continue;
        }
        ruleByStratum[stratumOf.at(in.atomPred(r.head[0]))].push_back(&r);
    }

    std::unordered_set<AtomId> model;
    auto bodyHolds = [&](const GroundRule& r) {
        for (AtomId p : r.pos)
            if (!model.count(p)) return false;
        for (AtomId n : r.neg)
            if (model.count(n)) return false;
        return true;
    };

    for (const auto& rules : ruleByStratum) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const GroundRule* r : rules)
                if (bodyHolds(*r) && model.insert(r->head[0]).second) changed = true;
        }
    }
    for (const GroundRule* c : constraints)
        if (bodyHolds(*c)) return std::nullopt;

    Interpretation atoms(model.begin(), model.end());
    std::sort(atoms.begin(), atoms.end());
    return AnswerSet{std::move(atoms), Certificate::StratifiedPerfectModel};
}

std::vector<AnswerSet> solve(const Interner& in, const GroundProgram& g, std::size_t maxModels,
                             const SolverLimits& limits) {
    if (maxModels == 0) return {};
    if (auto strat = stratify(in, g)) {
        auto model = perfectModel(in, g, *strat);
        if (!model) return {};
        return {std::move(*model)};
    }
    return enumerateAnswerSets(in, g, maxModels, limits);
}

std::string printAnswerSet(const Interner& in, const AnswerSet& a) {
    std::string out = "{";
    auto texts = sortedAtomTexts(in, a.atoms);
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (i) out += ", ";
        out += texts[i];
    }
    out += "}";
    return out;
}

std::string printAnswerSets(const Interner& in, const std::vector<AnswerSet>& list) {
    if (list.empty()) return "UNSATISFIABLE\n";
    std::string out;
    for (const auto& a : list) {
        out += printAnswerSet(in, a);
        out += '\n';
    }
    return out;
}

} // namespace groundhog::solver
