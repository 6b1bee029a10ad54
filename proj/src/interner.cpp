#include "groundhog/interner.hpp"

#include <cassert>
#include <mutex>

#include "groundhog/printer.hpp"

namespace groundhog {

namespace {

std::string atomKey(PredId pred, std::span<const TermId> args) {
    std::string key;
    key.reserve(4 + args.size() * 4);
    auto put = [&](std::uint32_t v) {
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
        key.push_back(static_cast<char>((v >> 16) & 0xff));
        key.push_back(static_cast<char>((v >> 24) & 0xff));
    };
    put(pred);
    for (TermId a : args) put(a);
    return key;
}

} // namespace

TermId Interner::constant(std::string_view text) {
    std::unique_lock lock(mx_);
    auto it = symbolIds_.find(std::string(text));
    if (it != symbolIds_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back({false, 0, std::string(text)});
    symbolIds_.emplace(std::string(text), id);
    return id;
}

TermId Interner::integer(std::int64_t value) {
    std::unique_lock lock(mx_);
    auto it = intIds_.find(value);
    if (it != intIds_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back({true, value, {}});
    intIds_.emplace(value, id);
    return id;
}

TermId Interner::term(const Term& t) {
    assert(t.isGround());
    return t.kind == TermKind::Integer ? integer(t.value) : constant(t.name);
}

PredId Interner::predicate(std::string_view name, std::uint32_t arity) {
    std::string key = std::string(name) + "/" + std::to_string(arity);
    std::unique_lock lock(mx_);
    auto it = predIds_.find(key);
    if (it != predIds_.end()) return it->second;
    PredId id = static_cast<PredId>(preds_.size());
    preds_.push_back({std::string(name), arity});
    predIds_.emplace(std::move(key), id);
    return id;
}

AtomId Interner::atom(PredId pred, std::span<const TermId> args) {
    std::string key = atomKey(pred, args);
    std::unique_lock lock(mx_);
    auto it = atomIds_.find(key);
    if (it != atomIds_.end()) return it->second;
    AtomId id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back({pred, static_cast<std::uint32_t>(atomArgPool_.size()),
                      static_cast<std::uint32_t>(args.size())});
    atomArgPool_.insert(atomArgPool_.end(), args.begin(), args.end());
    atomIds_.emplace(std::move(key), id);
    return id;
}

AtomId Interner::atom(const Atom& ground) {
    std::vector<TermId> args;
    args.reserve(ground.terms.size());
    for (const auto& t : ground.terms) args.push_back(term(t));
    PredId p = predicate(ground.predicate, static_cast<std::uint32_t>(ground.terms.size()));
    return atom(p, args);
}

bool Interner::isInteger(TermId t) const {
    std::shared_lock lock(mx_);
    return terms_[t].isInt;
}

std::int64_t Interner::intValue(TermId t) const {
    std::shared_lock lock(mx_);
    return terms_[t].value;
}

std::string Interner::termText(TermId t) const {
    return printTerm(termToAst(t));
}

std::string Interner::predName(PredId p) const {
    std::shared_lock lock(mx_);
    return preds_[p].name;
}

std::uint32_t Interner::predArity(PredId p) const {
    std::shared_lock lock(mx_);
    return preds_[p].arity;
}

std::size_t Interner::predCount() const {
    std::shared_lock lock(mx_);
    return preds_.size();
}

PredId Interner::atomPred(AtomId a) const {
    std::shared_lock lock(mx_);
    return atoms_[a].pred;
}

std::vector<TermId> Interner::atomArgs(AtomId a) const {
    std::shared_lock lock(mx_);
    const AtomRec& rec = atoms_[a];
    return {atomArgPool_.begin() + rec.argsBegin, atomArgPool_.begin() + rec.argsBegin + rec.argsLen};
}

void Interner::atomArgsInto(AtomId a, std::vector<TermId>& out) const {
    std::shared_lock lock(mx_);
    const AtomRec& rec = atoms_[a];
    out.assign(atomArgPool_.begin() + rec.argsBegin,
               atomArgPool_.begin() + rec.argsBegin + rec.argsLen);
}

std::size_t Interner::atomCount() const {
    std::shared_lock lock(mx_);
    return atoms_.size();
}

std::string Interner::atomText(AtomId a) const {
    return printAtom(toAst(a));
}

Atom Interner::toAst(AtomId a) const {
    std::shared_lock lock(mx_);
    const AtomRec& rec = atoms_[a];
    Atom out;
    out.predicate = preds_[rec.pred].name;
    out.terms.reserve(rec.argsLen);
    for (std::uint32_t i = 0; i < rec.argsLen; ++i) {
        const TermRec& t = terms_[atomArgPool_[rec.argsBegin + i]];
        out.terms.push_back(t.isInt ? Term::integer(t.value) : Term::constant(t.text));
    }
    return out;
}

Term Interner::termToAst(TermId t) const {
    std::shared_lock lock(mx_);
    const TermRec& rec = terms_[t];
    return rec.isInt ? Term::integer(rec.value) : Term::constant(rec.text);
}

bool Interner::termLessLocked(TermId a, TermId b) const {
    const TermRec& ta = terms_[a];
    const TermRec& tb = terms_[b];
    if (ta.isInt != tb.isInt) return ta.isInt;
    if (ta.isInt) return ta.value < tb.value;
    return ta.text < tb.text;
}

bool Interner::termLess(TermId a, TermId b) const {
    std::shared_lock lock(mx_);
    return termLessLocked(a, b);
}

bool Interner::atomLess(AtomId a, AtomId b) const {
    if (a == b) return false;
    std::shared_lock lock(mx_);
    const AtomRec& ra = atoms_[a];
    const AtomRec& rb = atoms_[b];
    const PredRec& pa = preds_[ra.pred];
    const PredRec& pb = preds_[rb.pred];
    if (pa.name != pb.name) return pa.name < pb.name;
    if (pa.arity != pb.arity) return pa.arity < pb.arity;
    for (std::uint32_t i = 0; i < ra.argsLen; ++i) {
        TermId x = atomArgPool_[ra.argsBegin + i];
        TermId y = atomArgPool_[rb.argsBegin + i];
        if (x != y) return termLessLocked(x, y);
    }
    return false;
}

} // namespace groundhog
