#include "skillmc/analysis.hpp"

#include <functional>

namespace skillmc {

namespace {

void walk(const Formula& f, const std::function<void(const Formula&)>& visit) {
  visit(f);
  if (f.op() == Op::Atom) return;
  walk(f.lhs(), visit);
  if (f.op() == Op::Implies) walk(f.rhs(), visit);
}

}  // namespace

std::size_t formula_length(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
      return 1;
    case Op::Not:
      return formula_length(f.child()) + 1;
    case Op::Implies:
      return formula_length(f.lhs()) + formula_length(f.rhs()) + 3;
    case Op::Knows:
      return formula_length(f.child()) + 2;
    case Op::Common:
    case Op::Distributed:
    case Op::Mutual:
    case Op::Field:
      return formula_length(f.child()) + 2 * f.group().size() + 2;
    case Op::AddSkills:
    case Op::RemoveSkills:
    case Op::AssignSkills:
      return 2 * f.skills().size() + formula_length(f.child()) + 5;
    case Op::CopySkills:
      return formula_length(f.child()) + 5;
    case Op::BoxPlus:
    case Op::BoxMinus:
    case Op::BoxAssign:
      return formula_length(f.child()) + 2;
  }
  return 0;
}

std::set<AgentId> agents_of(const Formula& f) {
  std::set<AgentId> out;
  walk(f, [&](const Formula& g) {
    switch (g.op()) {
      case Op::Atom:
      case Op::Not:
      case Op::Implies:
        break;
      case Op::Common:
      case Op::Distributed:
      case Op::Mutual:
      case Op::Field:
        out.insert(g.group().begin(), g.group().end());
        break;
      case Op::CopySkills:
        out.insert(g.agent());
        out.insert(g.source());
        break;
      default:
        out.insert(g.agent());
    }
  });
  return out;
}

std::set<SkillId> skills_of(const Formula& f) {
  std::set<SkillId> out;
  walk(f, [&](const Formula& g) {
    if (g.is_skill_update()) out.insert(g.skills().begin(), g.skills().end());
  });
  return out;
}

std::set<AtomId> atoms_of(const Formula& f) {
  std::set<AtomId> out;
  walk(f, [&](const Formula& g) {
    if (g.op() == Op::Atom) out.insert(g.atom());
  });
  return out;
}

std::set<Group> groups_of(const Formula& f, GroupScope scope) {
  std::set<Group> out;
  walk(f, [&](const Formula& g) {
    if (!g.is_group_op()) return;
    if (scope == GroupScope::CommonOrMutual && g.op() != Op::Common &&
        g.op() != Op::Mutual) {
      return;
    }
    out.insert(g.group());
  });
  return out;
}

Fragment fragment_of(const Formula& f) {
  Fragment out;
  walk(f, [&](const Formula& g) {
    switch (g.op()) {
      case Op::Common: out.insert(Letter::Common); break;
      case Op::Distributed: out.insert(Letter::Distributed); break;
      case Op::Mutual: out.insert(Letter::Mutual); break;
      case Op::Field: out.insert(Letter::Field); break;
      case Op::AddSkills: out.insert(Letter::Add); break;
      case Op::RemoveSkills: out.insert(Letter::Remove); break;
      case Op::AssignSkills: out.insert(Letter::Assign); break;
      case Op::CopySkills: out.insert(Letter::Copy); break;
      case Op::BoxPlus: out.insert(Letter::BoxPlus); break;
      case Op::BoxMinus: out.insert(Letter::BoxMinus); break;
      case Op::BoxAssign: out.insert(Letter::Box); break;
      default: break;
    }
  });
  return out;
}

std::string letter_symbol(Letter l) {
  switch (l) {
    case Letter::Common: return "C";
    case Letter::Distributed: return "D";
    case Letter::Mutual: return "E";
    case Letter::Field: return "F";
    case Letter::Add: return "+";
    case Letter::Remove: return "-";
    case Letter::Assign: return "=";
    case Letter::Copy: return "≡";
    case Letter::BoxPlus: return "⊞";
    case Letter::BoxMinus: return "⊟";
    case Letter::Box: return "□";
  }
  return "?";
}

std::string fragment_name(const Fragment& fr) {
  if (fr.empty()) return "L";
  std::string out = "L_{";
  for (Letter l : fr) out += letter_symbol(l);
  return out + "}";
}

}  // namespace skillmc
