#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "groundhog/interner.hpp"

namespace groundhog {

// Reserved origin for fact atoms represented as bodyless rules.
inline constexpr std::int32_t kFactOrigin = -1;

// A variable-free rule. Builtins are evaluated away during
// instantiation: true builtins vanish, false builtins kill the
// instance. Atom lists are sorted by content and deduplicated, so equal
// rules have equal id vectors.
struct GroundRule {
    std::vector<AtomId> head;
    std::vector<AtomId> pos;
    std::vector<AtomId> neg;
    std::int32_t origin = kFactOrigin;

    bool isConstraint() const { return head.empty(); }
    bool isFactRule() const { return head.size() == 1 && pos.empty() && neg.empty(); }
};

GroundRule makeGroundRule(const Interner& in, std::vector<AtomId> head, std::vector<AtomId> pos,
                          std::vector<AtomId> neg, std::int32_t origin);
GroundRule makeFactRule(AtomId atom);

std::string printGroundRule(const Interner& in, const GroundRule& r);

// Insertion-ordered deduplicated set of ground rules with a head-atom
// index. Adding a rule is idempotent.
class GroundProgram {
public:
    // Returns true if the rule was new. Origin is ignored for identity.
    bool add(const Interner& in, GroundRule r);

    void addAll(const Interner& in, const GroundProgram& other);

    bool contains(const GroundRule& r) const { return keys_.count(ruleKey(r)) != 0; }
    bool containsHead(AtomId a) const { return heads_.count(a) != 0; }

    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }
    const std::vector<GroundRule>& rules() const { return rules_; }
    const std::unordered_set<AtomId>& heads() const { return heads_; }
    const std::vector<AtomId>& headsOf(PredId p) const;
    const std::vector<AtomId>& headList() const { return headsOrdered_; }

    // Set semantics; meaningful only for programs over one interner.
    bool sameRuleSet(const GroundProgram& other) const;
    bool isSubsetOf(const GroundProgram& other) const;
    static GroundProgram intersection(const Interner& in, const GroundProgram& a,
                                      const GroundProgram& b);

    // Canonical text, one rule per line, sorted; interner-independent.
    std::vector<std::string> canonicalLines(const Interner& in) const;
    // One rule per line in insertion order; byte-reproducible for
    // identical inputs.
    std::string emitText(const Interner& in) const;

    static std::string ruleKey(const GroundRule& r);

private:
    std::vector<GroundRule> rules_;
    std::unordered_set<std::string> keys_;
    std::unordered_set<AtomId> heads_;
    std::vector<AtomId> headsOrdered_;
    std::unordered_map<PredId, std::vector<AtomId>> headsByPred_;
};

} // namespace groundhog
