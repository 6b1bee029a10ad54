#include "groundhog/ground.hpp"

#include <algorithm>
#include <sstream>

namespace groundhog {

namespace {

void sortUnique(const Interner& in, std::vector<AtomId>& atoms) {
    std::sort(atoms.begin(), atoms.end(), [&](AtomId a, AtomId b) { return in.atomLess(a, b); });
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

} // namespace

GroundRule makeGroundRule(const Interner& in, std::vector<AtomId> head, std::vector<AtomId> pos,
                          std::vector<AtomId> neg, std::int32_t origin) {
    GroundRule r;
    r.head = std::move(head);
    r.pos = std::move(pos);
    r.neg = std::move(neg);
    r.origin = origin;
    sortUnique(in, r.head);
    sortUnique(in, r.pos);
    sortUnique(in, r.neg);
    return r;
}

GroundRule makeFactRule(AtomId atom) {
    GroundRule r;
    r.head.push_back(atom);
    r.origin = kFactOrigin;
    return r;
}

std::string printGroundRule(const Interner& in, const GroundRule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
        if (i) out += " | ";
        out += in.atomText(r.head[i]);
    }
    if (!r.pos.empty() || !r.neg.empty()) {
        if (!r.head.empty()) out += " ";
        out += ":- ";
        bool first = true;
        auto sep = [&] {
            if (!first) out += ", ";
            first = false;
        };
        for (AtomId a : r.pos) {
            sep();
            out += in.atomText(a);
        }
        for (AtomId a : r.neg) {
            sep();
            out += "not " + in.atomText(a);
        }
    }
    out.push_back('.');
    return out;
}

std::string GroundProgram::ruleKey(const GroundRule& r) {
    std::string key;
    key.reserve((r.head.size() + r.pos.size() + r.neg.size() + 3) * 4);
    auto put = [&](std::uint32_t v) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
        key.push_back(static_cast<char>((v >> 16) & 0xff));
        key.push_back(static_cast<char>((v >> 24) & 0xff));
    };
    put(static_cast<std::uint32_t>(r.head.size()));
    for (AtomId a : r.head) put(a);
    put(static_cast<std::uint32_t>(r.pos.size()));
    for (AtomId a : r.pos) put(a);
    put(static_cast<std::uint32_t>(r.neg.size()));
    for (AtomId a : r.neg) put(a);
    return key;
}

bool GroundProgram::add(const Interner& in, GroundRule r) {
    if (!keys_.insert(ruleKey(r)).second) return false;
    for (AtomId a : r.head) {
        if (heads_.insert(a).second) {
            headsOrdered_.push_back(a);
            headsByPred_[in.atomPred(a)].push_back(a);
        }
    }
    rules_.push_back(std::move(r));
    return true;
}

void GroundProgram::addAll(const Interner& in, const GroundProgram& other) {
    for (const auto& r : other.rules()) add(in, r);
}

const std::vector<AtomId>& GroundProgram::headsOf(PredId p) const {
    static const std::vector<AtomId> kEmpty;
    auto it = headsByPred_.find(p);
    return it == headsByPred_.end() ? kEmpty : it->second;
}

bool GroundProgram::sameRuleSet(const GroundProgram& other) const {
    return keys_ == other.keys_;
}

bool GroundProgram::isSubsetOf(const GroundProgram& other) const {
    for (const auto& k : keys_)
        if (!other.keys_.count(k)) return false;
    return true;
}

GroundProgram GroundProgram::intersection(const Interner& in, const GroundProgram& a,
                                          const GroundProgram& b) {
    GroundProgram out;
    for (const auto& r : a.rules())
        if (b.contains(r)) out.add(in, r);
    return out;
}

std::vector<std::string> GroundProgram::canonicalLines(const Interner& in) const {
    std::vector<std::string> lines;
    lines.reserve(rules_.size());
    for (const auto& r : rules_) lines.push_back(printGroundRule(in, r));
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::string GroundProgram::emitText(const Interner& in) const {
    std::ostringstream out;
    for (const auto& r : rules_) out << printGroundRule(in, r) << '\n';
    return out.str();
}

} // namespace groundhog
