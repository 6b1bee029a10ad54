#pragma once

#include <string>

#include "groundhog/ast.hpp"

namespace groundhog {

std::string printTerm(const Term& t);
std::string printAtom(const Atom& a);
std::string printBuiltin(const BuiltinAtom& b);
std::string relopText(Relop op);

// Canonical rule text. Body literals print as positive atoms, then
// negative literals, then builtins; reparsing yields a structurally
// equal rule.
std::string printRule(const Rule& r);

std::string printProgram(const Program& p);
std::string printFacts(const FactSet& f);

} // namespace groundhog
