#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "skillmc/formula.hpp"
#include "skillmc/model.hpp"

namespace skillmc {

using TruthSet = std::set<WorldId>;

struct EvalOptions {
  // Number of unused skills added to the quantifier enumeration universe.
  // One suffices; larger values exist to test that claim.
  std::size_t fresh_skills = 1;
  // Refuse quantifiers whose enumeration universe exceeds this many skills.
  std::size_t max_universe = 24;
};

// Thrown when a quantifier would enumerate more than
// EvalOptions::max_universe skills.
class LimitError : public Error {
 public:
  using Error::Error;
};

// { x in W | m, x |= f }.
//
// Truth sets are computed recursively with per-subformula memoization
// keyed by the capabilities of the agents occurring in that subformula.
// Updates evaluate their body under the updated capability map;
// quantifiers conjoin over every nonempty subset of the enumeration
// universe: edge labels, capabilities of agents in the quantified
// formula, skills written in it, plus `fresh_skills` unused skills.
TruthSet truth_set(const Model& m, const Formula& f,
                   const EvalOptions& opts = {});

// m, w |= f. Only the worlds needed to decide w are evaluated.
bool holds(const Model& m, const WorldId& w, const Formula& f,
           const EvalOptions& opts = {});

// Common knowledge by literal iteration: the intersection of
// truth_set(E_G^n f) for n = 1..|W|. A test oracle for C_G.
TruthSet common_oracle(const Model& m, const Group& g, const Formula& f);

// Group edges of a formula: the groups under E or C treated as extra
// edge labels. G is on the one-step edge (w,u) iff some member's
// capability is contained in E(w,u); G is on the closure edge iff a
// path of one-step G-edges of length >= 1 leads from w to u.
class GroupEdgeView {
 public:
  GroupEdgeView(const Model& m, const Formula& f);

  const std::set<Group>& groups() const { return groups_; }
  bool one_step(const Group& g, const WorldId& w, const WorldId& u) const;
  bool closure(const Group& g, const WorldId& w, const WorldId& u) const;

 private:
  struct Relation {
    std::vector<std::vector<bool>> step;
    std::vector<std::vector<bool>> plus;
  };
  const Relation& relation(const Group& g) const;

  const Model* model_;
  std::set<Group> groups_;
  std::map<Group, Relation> relations_;
};

// Direct readings of the three de re / de dicto conditions. The
// existential over skill sets ranges over the empty set (when
// include_empty) and every nonempty subset of edge labels, capabilities
// of a and of the agents in f, skills written in f, and one fresh skill.
//
//   de dicto:        for all u with C(a) ⊆ E(w,u): exists S, M^{a+S},u |= f
//   explicit de re:  exists S, for all u with C(a) ⊆ E(w,u): M^{a+S},u |= f
//   implicit de re:  exists S, for all u with C(a)∪S ⊆ E(w,u): M^{a+S},u |= f
bool de_dicto(const Model& m, const WorldId& w, const AgentId& a,
              const Formula& f, bool include_empty = true);
bool explicit_de_re(const Model& m, const WorldId& w, const AgentId& a,
                    const Formula& f, bool include_empty = true);
bool implicit_de_re(const Model& m, const WorldId& w, const AgentId& a,
                    const Formula& f, bool include_empty = true);

// The formulas expressing the three conditions:
//   K_a <+*>_a f,  (==a)_c <+*>_c K_a (==c)_a f,  <+*>_a K_a f
// where c is the first of "c_", "c_0", "c_1", ... not occurring in f or a.
Formula de_dicto_formula(const AgentId& a, const Formula& f);
Formula explicit_de_re_formula(const AgentId& a, const Formula& f);
Formula implicit_de_re_formula(const AgentId& a, const Formula& f);

}  // namespace skillmc
