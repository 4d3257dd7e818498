#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "skillmc/formula.hpp"

namespace skillmc {

// Symbol count of a primitive formula:
//   |p| = 1, |~f| = |f| + 1, |(f -> g)| = |f| + |g| + 3, |K_a f| = |f| + 2,
//   group operators |f| + 2|G| + 2, skill-set updates 2|S| + |f| + 5,
//   copy updates |f| + 5, quantifiers |f| + 2.
std::size_t formula_length(const Formula& f);

std::set<AgentId> agents_of(const Formula& f);
std::set<SkillId> skills_of(const Formula& f);
std::set<AtomId> atoms_of(const Formula& f);

enum class GroupScope {
  All,              // groups under any of C, D, E, F
  CommonOrMutual,   // groups under C or E only
};
std::set<Group> groups_of(const Formula& f,
                          GroupScope scope = GroupScope::All);

// Language letters beyond the basic epistemic language.
enum class Letter {
  Common,
  Distributed,
  Mutual,
  Field,
  Add,
  Remove,
  Assign,
  Copy,
  BoxPlus,
  BoxMinus,
  Box,
};

using Fragment = std::set<Letter>;

// Smallest set of letters whose language contains f.
Fragment fragment_of(const Formula& f);

// "C", "D", "E", "F", "+", "-", "=", "≡", "⊞", "⊟", "□".
std::string letter_symbol(Letter l);
// "L" for the basic language, otherwise e.g. "L_{F+⊞}" in canonical
// letter order.
std::string fragment_name(const Fragment& fr);

}  // namespace skillmc
