#include "groundhog/printer.hpp"

#include <cctype>
#include <sstream>

namespace groundhog {

namespace {

bool isPlainSymbol(const std::string& s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::string quoteSymbol(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

const char* arithText(ArithOp op) {
    switch (op) {
        case ArithOp::Add: return "+";
        case ArithOp::Sub: return "-";
        case ArithOp::Mul: return "*";
        case ArithOp::Div: return "/";
    }
    return "?";
}

} // namespace

std::string relopText(Relop op) {
    switch (op) {
        case Relop::Eq: return "=";
        case Relop::Neq: return "!=";
        case Relop::Lt: return "<";
        case Relop::Gt: return ">";
        case Relop::Leq: return "<=";
        case Relop::Geq: return ">=";
    }
    return "?";
}

std::string printTerm(const Term& t) {
    switch (t.kind) {
        case TermKind::Integer: return std::to_string(t.value);
        case TermKind::Variable: return t.name;
        case TermKind::Constant: return isPlainSymbol(t.name) ? t.name : quoteSymbol(t.name);
    }
    return "?";
}

std::string printAtom(const Atom& a) {
    std::string out = a.predicate;
    if (!a.terms.empty()) {
        out.push_back('(');
        for (std::size_t i = 0; i < a.terms.size(); ++i) {
            if (i) out.push_back(',');
            out += printTerm(a.terms[i]);
        }
        out.push_back(')');
    }
    return out;
}

std::string printBuiltin(const BuiltinAtom& b) {
    std::string out = printTerm(b.lhs) + " " + relopText(b.op) + " " + printTerm(b.rhs.first);
    for (const auto& [op, term] : b.rhs.rest) {
        out += arithText(op);
        out += printTerm(term);
    }
    return out;
}

std::string printRule(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
        if (i) out += " | ";
        out += printAtom(r.head[i]);
    }
    const bool hasBody = !r.posBody.empty() || !r.negBody.empty() || !r.builtins.empty();
    if (hasBody) {
        if (!r.head.empty()) out += " ";
        out += ":- ";
        bool first = true;
        auto sep = [&] {
            if (!first) out += ", ";
            first = false;
        };
        for (const auto& a : r.posBody) {
            sep();
            out += printAtom(a);
        }
        for (const auto& a : r.negBody) {
            sep();
            out += "not " + printAtom(a);
        }
        for (const auto& b : r.builtins) {
            sep();
            out += printBuiltin(b);
        }
    }
    out.push_back('.');
    return out;
}

std::string printProgram(const Program& p) {
    std::ostringstream out;
    for (const auto& r : p.rules) out << printRule(r) << '\n';
    return out.str();
}

std::string printFacts(const FactSet& f) {
    std::ostringstream out;
    for (const auto& a : f) out << printAtom(a) << ".\n";
    return out.str();
}

} // namespace groundhog
