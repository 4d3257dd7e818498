#include "skillmc/formula.hpp"

#include <functional>
#include <utility>

namespace skillmc {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void require_token(const std::string& s, const char* what) {
  if (!is_token(s)) {
    throw FormulaError(std::string("invalid ") + what + " name '" + s + "'");
  }
}

void require_members(const std::set<std::string>& members, const char* what) {
  if (members.empty()) {
    throw FormulaError(std::string("empty ") + what);
  }
  for (const auto& m : members) require_token(m, what);
}

}  // namespace

bool is_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Formula Formula::Make(Node node) {
  std::size_t h = std::hash<int>{}(static_cast<int>(node.op));
  h = mix(h, std::hash<std::string>{}(node.name));
  h = mix(h, std::hash<std::string>{}(node.source));
  for (const auto& m : node.members) h = mix(h, std::hash<std::string>{}(m));
  if (node.lhs) h = mix(h, node.lhs->hash());
  if (node.rhs) h = mix(h, node.rhs->hash());
  node.hash = h;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::Atom(AtomId p) {
  require_token(p, "atom");
  return Make({Op::Atom, std::move(p), {}, {}, nullptr, nullptr});
}

Formula Formula::Not(Formula f) {
  return Make({Op::Not, {}, {}, {}, std::make_shared<const Formula>(std::move(f)), nullptr});
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Make({Op::Implies, {}, {}, {},
               std::make_shared<const Formula>(std::move(lhs)),
               std::make_shared<const Formula>(std::move(rhs))});
}

Formula Formula::Knows(AgentId a, Formula f) {
  require_token(a, "agent");
  return Make({Op::Knows, std::move(a), {}, {}, std::make_shared<const Formula>(std::move(f)), nullptr});
}

#define SKILLMC_GROUP_CTOR(NAME)                                             \
  Formula Formula::NAME(Group g, Formula f) {                                \
    require_members(g, "group");                                             \
    return Make({Op::NAME, {}, {}, std::move(g),                             \
                 std::make_shared<const Formula>(std::move(f)), nullptr});   \
  }
SKILLMC_GROUP_CTOR(Common)
SKILLMC_GROUP_CTOR(Distributed)
SKILLMC_GROUP_CTOR(Mutual)
SKILLMC_GROUP_CTOR(Field)
#undef SKILLMC_GROUP_CTOR

#define SKILLMC_UPDATE_CTOR(NAME)                                            \
  Formula Formula::NAME(AgentId a, SkillSet s, Formula f) {                  \
    require_token(a, "agent");                                               \
    require_members(s, "skill set");                                         \
    return Make({Op::NAME, std::move(a), {}, std::move(s),                   \
                 std::make_shared<const Formula>(std::move(f)), nullptr});   \
  }
SKILLMC_UPDATE_CTOR(AddSkills)
SKILLMC_UPDATE_CTOR(RemoveSkills)
SKILLMC_UPDATE_CTOR(AssignSkills)
#undef SKILLMC_UPDATE_CTOR

Formula Formula::CopySkills(AgentId learner, AgentId source, Formula f) {
  require_token(learner, "agent");
  require_token(source, "agent");
  return Make({Op::CopySkills, std::move(learner), std::move(source), {},
               std::make_shared<const Formula>(std::move(f)), nullptr});
}

#define SKILLMC_QUANT_CTOR(NAME)                                             \
  Formula Formula::NAME(AgentId a, Formula f) {                              \
    require_token(a, "agent");                                               \
    return Make({Op::NAME, std::move(a), {}, {},                             \
                 std::make_shared<const Formula>(std::move(f)), nullptr});   \
  }
SKILLMC_QUANT_CTOR(BoxPlus)
SKILLMC_QUANT_CTOR(BoxMinus)
SKILLMC_QUANT_CTOR(BoxAssign)
#undef SKILLMC_QUANT_CTOR

bool Formula::is_unary() const {
  return op() != Op::Atom && op() != Op::Implies;
}

bool Formula::is_group_op() const {
  switch (op()) {
    case Op::Common:
    case Op::Distributed:
    case Op::Mutual:
    case Op::Field:
      return true;
    default:
      return false;
  }
}

bool Formula::is_skill_update() const {
  return op() == Op::AddSkills || op() == Op::RemoveSkills ||
         op() == Op::AssignSkills;
}

bool Formula::is_quantifier() const {
  return op() == Op::BoxPlus || op() == Op::BoxMinus || op() == Op::BoxAssign;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.op != y.op || x.name != y.name ||
      x.source != y.source || x.members != y.members) {
    return false;
  }
  if (static_cast<bool>(x.lhs) != static_cast<bool>(y.lhs)) return false;
  if (static_cast<bool>(x.rhs) != static_cast<bool>(y.rhs)) return false;
  if (x.lhs && !(*x.lhs == *y.lhs)) return false;
  if (x.rhs && !(*x.rhs == *y.rhs)) return false;
  return true;
}

Formula And(Formula lhs, Formula rhs) {
  return Formula::Not(Formula::Implies(std::move(lhs), Formula::Not(std::move(rhs))));
}

Formula Or(Formula lhs, Formula rhs) {
  return Formula::Implies(Formula::Not(std::move(lhs)), std::move(rhs));
}

Formula Iff(Formula lhs, Formula rhs) {
  return And(Formula::Implies(lhs, rhs), Formula::Implies(rhs, lhs));
}

Formula HatK(AgentId a, Formula f) {
  return Formula::Not(Formula::Knows(std::move(a), Formula::Not(std::move(f))));
}

Formula DiamondPlus(AgentId a, Formula f) {
  return Formula::Not(Formula::BoxPlus(std::move(a), Formula::Not(std::move(f))));
}

Formula DiamondMinus(AgentId a, Formula f) {
  return Formula::Not(Formula::BoxMinus(std::move(a), Formula::Not(std::move(f))));
}

Formula DiamondAssign(AgentId a, Formula f) {
  return Formula::Not(Formula::BoxAssign(std::move(a), Formula::Not(std::move(f))));
}

Formula True() {
  auto p = Formula::Atom(std::string(kReservedAtom));
  return Formula::Implies(p, p);
}

Formula False() { return Formula::Not(True()); }

}  // namespace skillmc
