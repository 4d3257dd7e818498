#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skillmc {

using AtomId = std::string;
using AgentId = std::string;
using SkillId = std::string;
using WorldId = std::string;

// Finite sets of agents / skills. Ordered so that equality and rendering
// are independent of the order in which members were written.
using Group = std::set<AgentId>;
using SkillSet = std::set<SkillId>;

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A formula that violates a structural rule (empty group / skill set,
// malformed token). The parser throws the more specific EmptySetError.
class FormulaError : public Error {
 public:
  using Error::Error;
};

// True iff `s` is a nonempty token over [A-Za-z0-9_].
bool is_token(std::string_view s);

enum class Op {
  Atom,
  Not,
  Implies,
  Knows,
  Common,
  Distributed,
  Mutual,
  Field,
  AddSkills,
  RemoveSkills,
  AssignSkills,
  CopySkills,
  BoxPlus,
  BoxMinus,
  BoxAssign,
};

// Immutable formula tree over the primitive constructors. Copies share
// structure; equality is structural.
class Formula {
 public:
  static Formula Atom(AtomId p);
  static Formula Not(Formula f);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Knows(AgentId a, Formula f);
  static Formula Common(Group g, Formula f);
  static Formula Distributed(Group g, Formula f);
  static Formula Mutual(Group g, Formula f);
  static Formula Field(Group g, Formula f);
  static Formula AddSkills(AgentId a, SkillSet s, Formula f);
  static Formula RemoveSkills(AgentId a, SkillSet s, Formula f);
  static Formula AssignSkills(AgentId a, SkillSet s, Formula f);
  // (≡_source)_learner f: the learner takes over the source's skill set.
  static Formula CopySkills(AgentId learner, AgentId source, Formula f);
  static Formula BoxPlus(AgentId a, Formula f);
  static Formula BoxMinus(AgentId a, Formula f);
  static Formula BoxAssign(AgentId a, Formula f);

  Op op() const { return node_->op; }

  // Atom name (Atom), acting agent (K, updates, quantifiers).
  const std::string& name() const { return node_->name; }
  const AtomId& atom() const { return node_->name; }
  const AgentId& agent() const { return node_->name; }
  // Agent whose skills are copied (CopySkills only).
  const AgentId& source() const { return node_->source; }
  const Group& group() const { return node_->members; }
  const SkillSet& skills() const { return node_->members; }

  // Sole operand of unary constructors; left operand of Implies.
  const Formula& child() const { return *node_->lhs; }
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  std::size_t hash() const { return node_->hash; }
  // Stable address of the shared node, usable as a cache key while this
  // formula (or a copy of it) is alive.
  const void* identity() const { return node_.get(); }

  bool is_unary() const;
  bool is_group_op() const;
  bool is_skill_update() const;
  bool is_quantifier() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op;
    std::string name;
    std::string source;
    std::set<std::string> members;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Node node);

  std::shared_ptr<const Node> node_;
};

// Derived connectives, expanded into primitives at construction.
Formula And(Formula lhs, Formula rhs);
Formula Or(Formula lhs, Formula rhs);
Formula Iff(Formula lhs, Formula rhs);
Formula HatK(AgentId a, Formula f);
Formula DiamondPlus(AgentId a, Formula f);
Formula DiamondMinus(AgentId a, Formula f);
Formula DiamondAssign(AgentId a, Formula f);

// Atom reserved for the expansion of true/false; never accepted by the
// parser as a user atom.
inline constexpr std::string_view kReservedAtom = "p0";
Formula True();
Formula False();

}  // namespace skillmc

template <>
struct std::hash<skillmc::Formula> {
  std::size_t operator()(const skillmc::Formula& f) const noexcept {
    return f.hash();
  }
};
