#pragma once

#include <string_view>
#include <vector>

#include "groundhog/ast.hpp"

namespace groundhog {

// Parses a program file: safe rules only, no facts. Anonymous variables
// are replaced by fresh rule-local variables; rules keep source order
// and receive source ids 0, 1, ...
Program parseProgram(std::string_view text);

// Parses a fact file: ground atoms terminated by ".".
FactSet parseFacts(std::string_view text);

// Parses a ground rule file (the --emit format). Bodyless single-head
// rules are allowed here, representing facts. Builtins and variables
// are rejected.
std::vector<Rule> parseGroundRules(std::string_view text);

} // namespace groundhog
