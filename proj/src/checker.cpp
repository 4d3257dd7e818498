#include "skillmc/checker.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>

#include "bits.hpp"
#include "skillmc/analysis.hpp"
#include "subsets.hpp"

namespace skillmc {

namespace {

using detail::Bits;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::size_t h = k.size();
    for (auto x : k) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// One evaluation session over a fixed frame (worlds, edges, valuation).
// Capabilities are passed explicitly since updates change them
// mid-evaluation.
class Evaluator {
 public:
  using Caps = std::vector<Bits>;  // indexed by agent id

  Evaluator(const Model& m, const Formula& f, const EvalOptions& opts)
      : model_(m), opts_(opts), nworlds_(m.worlds().size()) {
    for (const auto& s : m.edge_skill_universe()) skill_id(s);
    root_ = compile(f);

    edges_.assign(nworlds_ * nworlds_, Bits());
    for (const auto& [k, skills] : m.edges()) {
      std::size_t i = m.world_index(k.first);
      std::size_t j = m.world_index(k.second);
      Bits b;
      for (const auto& s : skills) b.set(skill_id(s));
      edge_universe_ |= b;
      edges_[i * nworlds_ + j] = b;
      edges_[j * nworlds_ + i] = b;
    }
    for (std::size_t a = 0; a < agent_names_.size(); ++a) {
      Bits c;
      for (const auto& s : m.capability(agent_names_[a])) c.set(skill_id(s));
      initial_caps_.push_back(c);
    }
  }

  Bits all_worlds() const { return Bits::full(nworlds_); }

  Bits evaluate(const Bits& demand) { return eval(root_, initial_caps_, demand); }

 private:
  struct Node {
    Op op;
    std::size_t lhs = kNone;
    std::size_t rhs = kNone;
    std::size_t agent = kNone;
    std::size_t source = kNone;
    std::vector<std::size_t> group;
    Bits skills;          // literal skill set of an update
    Bits valuation;       // worlds satisfying an atom
    std::vector<std::size_t> agents;  // agents occurring in the subformula
    Bits literal_skills;  // skills written in the subformula
  };

  struct Entry {
    Bits known;
    Bits value;
  };

  std::size_t skill_id(const SkillId& s) {
    auto [it, inserted] = skill_index_.emplace(s, nskills_);
    if (inserted) ++nskills_;
    return it->second;
  }

  std::size_t agent_id(const AgentId& a) {
    auto [it, inserted] = agent_index_.emplace(a, agent_names_.size());
    if (inserted) agent_names_.push_back(a);
    return it->second;
  }

  std::size_t compile(const Formula& f) {
    if (auto it = compiled_.find(f); it != compiled_.end()) return it->second;
    Node n;
    n.op = f.op();
    switch (f.op()) {
      case Op::Atom:
        n.valuation = Bits(nworlds_);
        for (std::size_t w = 0; w < nworlds_; ++w) {
          if (model_.valuation(model_.worlds()[w]).count(f.atom())) n.valuation.set(w);
        }
        break;
      case Op::Implies:
        n.lhs = compile(f.lhs());
        n.rhs = compile(f.rhs());
        break;
      case Op::Common:
      case Op::Distributed:
      case Op::Mutual:
      case Op::Field:
        for (const auto& a : f.group()) n.group.push_back(agent_id(a));
        n.lhs = compile(f.child());
        break;
      case Op::AddSkills:
      case Op::RemoveSkills:
      case Op::AssignSkills:
        for (const auto& s : f.skills()) n.skills.set(skill_id(s));
        n.agent = agent_id(f.agent());
        n.lhs = compile(f.child());
        break;
      case Op::CopySkills:
        n.agent = agent_id(f.agent());
        n.source = agent_id(f.source());
        n.lhs = compile(f.child());
        break;
      case Op::Not:
        n.lhs = compile(f.child());
        break;
      default:  // Knows and quantifiers
        n.agent = agent_id(f.agent());
        n.lhs = compile(f.child());
        break;
    }

    std::set<std::size_t> agents;
    if (n.agent != kNone) agents.insert(n.agent);
    if (n.source != kNone) agents.insert(n.source);
    agents.insert(n.group.begin(), n.group.end());
    n.literal_skills = n.skills;
    for (std::size_t c : {n.lhs, n.rhs}) {
      if (c == kNone) continue;
      agents.insert(nodes_[c].agents.begin(), nodes_[c].agents.end());
      n.literal_skills |= nodes_[c].literal_skills;
    }
    n.agents.assign(agents.begin(), agents.end());

    nodes_.push_back(std::move(n));
    compiled_.emplace(f, nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  Bits eval(std::size_t id, const Caps& caps, const Bits& demand) {
    const Node& n = nodes_[id];
    if (n.op == Op::Atom) return n.valuation & demand;
    if (demand.none()) return Bits();

    std::vector<std::uint64_t> key{id};
    for (std::size_t a : n.agents) caps[a].append_key(key);
    Bits todo;
    if (auto it = memo_.find(key); it != memo_.end()) {
      todo = demand - it->second.known;
      if (todo.none()) return it->second.value & demand;
    } else {
      todo = demand;
    }
    Bits computed = compute(id, caps, todo);
    Entry& e = memo_[key];
    e.known |= todo;
    e.value |= computed;
    return e.value & demand;
  }

  // Worlds x in `demand` all of whose successors satisfy the child.
  template <class Succ>
  Bits box(std::size_t child, const Caps& caps, const Bits& demand, Succ&& succ) {
    std::vector<std::pair<std::size_t, Bits>> rows;
    Bits needed;
    demand.for_each([&](std::size_t x) {
      Bits s = succ(x);
      needed |= s;
      rows.emplace_back(x, std::move(s));
    });
    Bits sat = needed.none() ? Bits() : eval(child, caps, needed);
    Bits out;
    for (const auto& [x, s] : rows) {
      if (s.subset_of(sat)) out.set(x);
    }
    return out;
  }

  Bits successors(std::size_t x, const Bits& mask) const {
    Bits out;
    for (std::size_t y = 0; y < nworlds_; ++y) {
      if (mask.subset_of(edges_[x * nworlds_ + y])) out.set(y);
    }
    return out;
  }

  Bits group_successors(std::size_t x, const std::vector<std::size_t>& group,
                        const Caps& caps) const {
    Bits out;
    for (std::size_t y = 0; y < nworlds_; ++y) {
      const Bits& e = edges_[x * nworlds_ + y];
      for (std::size_t a : group) {
        if (caps[a].subset_of(e)) {
          out.set(y);
          break;
        }
      }
    }
    return out;
  }

  Bits compute(std::size_t id, const Caps& caps, const Bits& demand) {
    const Node& n = nodes_[id];
    switch (n.op) {
      case Op::Atom:
        return n.valuation & demand;
      case Op::Not:
        return demand - eval(n.lhs, caps, demand);
      case Op::Implies: {
        Bits ante = eval(n.lhs, caps, demand);
        Bits cons = ante.none() ? Bits() : eval(n.rhs, caps, ante);
        return (demand - ante) | cons;
      }
      case Op::Knows: {
        const Bits mask = caps[n.agent];
        return box(n.lhs, caps, demand, [&](std::size_t x) { return successors(x, mask); });
      }
      case Op::Distributed: {
        Bits mask;
        for (std::size_t a : n.group) mask |= caps[a];
        return box(n.lhs, caps, demand, [&](std::size_t x) { return successors(x, mask); });
      }
      case Op::Field: {
        Bits mask = caps[n.group.front()];
        for (std::size_t a : n.group) mask &= caps[a];
        return box(n.lhs, caps, demand, [&](std::size_t x) { return successors(x, mask); });
      }
      case Op::Mutual: {
        const auto group = n.group;
        return box(n.lhs, caps, demand,
                   [&](std::size_t x) { return group_successors(x, group, caps); });
      }
      case Op::Common: {
        const auto group = n.group;
        std::vector<std::optional<Bits>> step(nworlds_);
        auto row = [&](std::size_t y) -> const Bits& {
          if (!step[y]) step[y] = group_successors(y, group, caps);
          return *step[y];
        };
        return box(n.lhs, caps, demand, [&](std::size_t x) {
          // Worlds reachable in one or more group steps.
          Bits reach;
          std::deque<std::size_t> queue;
          row(x).for_each([&](std::size_t y) {
            reach.set(y);
            queue.push_back(y);
          });
          while (!queue.empty()) {
            std::size_t y = queue.front();
            queue.pop_front();
            row(y).for_each([&](std::size_t z) {
              if (!reach.test(z)) {
                reach.set(z);
                queue.push_back(z);
              }
            });
          }
          return reach;
        });
      }
      case Op::AddSkills: {
        Caps next = caps;
        next[n.agent] |= n.skills;
        return eval(n.lhs, next, demand);
      }
      case Op::RemoveSkills: {
        Caps next = caps;
        next[n.agent] -= n.skills;
        return eval(n.lhs, next, demand);
      }
      case Op::AssignSkills: {
        Caps next = caps;
        next[n.agent] = n.skills;
        return eval(n.lhs, next, demand);
      }
      case Op::CopySkills: {
        Caps next = caps;
        next[n.agent] = caps[n.source];
        return eval(n.lhs, next, demand);
      }
      case Op::BoxPlus:
      case Op::BoxMinus:
      case Op::BoxAssign:
        return quantify(id, caps, demand);
    }
    return Bits();
  }

  Bits quantify(std::size_t id, const Caps& caps, const Bits& demand) {
    const Node& n = nodes_[id];
    Bits universe = edge_universe_ | n.literal_skills;
    for (std::size_t a : n.agents) universe |= caps[a];
    // Unused skills: the lowest ids outside the universe, allocating new
    // ones when every known skill is taken.
    std::size_t added = 0;
    for (std::size_t s = 0; added < opts_.fresh_skills; ++s) {
      if (s == nskills_) ++nskills_;
      if (!universe.test(s)) {
        universe.set(s);
        ++added;
      }
    }
    std::vector<std::size_t> elems;
    universe.for_each([&](std::size_t s) { elems.push_back(s); });
    if (elems.size() > opts_.max_universe) {
      throw LimitError("quantifier enumeration universe of " +
                       std::to_string(elems.size()) + " skills exceeds limit of " +
                       std::to_string(opts_.max_universe));
    }

    const Op op = n.op;
    const std::size_t agent = n.agent;
    const std::size_t child = n.lhs;
    Bits remaining = demand;
    detail::for_each_nonempty_subset(elems.size(), [&](const std::vector<std::size_t>& pick) {
      Bits chosen;
      for (std::size_t i : pick) chosen.set(elems[i]);
      Caps next = caps;
      if (op == Op::BoxPlus) {
        next[agent] |= chosen;
      } else if (op == Op::BoxMinus) {
        next[agent] -= chosen;
      } else {
        next[agent] = chosen;
      }
      remaining = eval(child, next, remaining);
      return !remaining.none();
    });
    return remaining;
  }

  const Model& model_;
  EvalOptions opts_;
  std::size_t nworlds_;
  std::size_t root_ = 0;

  std::map<SkillId, std::size_t> skill_index_;
  std::size_t nskills_ = 0;
  std::map<AgentId, std::size_t> agent_index_;
  std::vector<AgentId> agent_names_;

  std::vector<Node> nodes_;
  std::unordered_map<Formula, std::size_t> compiled_;
  std::vector<Bits> edges_;
  Bits edge_universe_;
  Caps initial_caps_;
  std::unordered_map<std::vector<std::uint64_t>, Entry, KeyHash> memo_;
};

TruthSet to_truth_set(const Model& m, const Bits& b) {
  TruthSet out;
  b.for_each([&](std::size_t i) { out.insert(m.worlds()[i]); });
  return out;
}

}  // namespace

TruthSet truth_set(const Model& m, const Formula& f, const EvalOptions& opts) {
  Evaluator ev(m, f, opts);
  return to_truth_set(m, ev.evaluate(ev.all_worlds()));
}

bool holds(const Model& m, const WorldId& w, const Formula& f, const EvalOptions& opts) {
  std::size_t idx = m.world_index(w);
  Evaluator ev(m, f, opts);
  Bits demand;
  demand.set(idx);
  return ev.evaluate(demand).test(idx);
}

TruthSet common_oracle(const Model& m, const Group& g, const Formula& f) {
  TruthSet out(m.worlds().begin(), m.worlds().end());
  Formula iterate = f;
  for (std::size_t n = 1; n <= m.worlds().size(); ++n) {
    iterate = Formula::Mutual(g, iterate);
    TruthSet level = truth_set(m, iterate);
    TruthSet kept;
    std::set_intersection(out.begin(), out.end(), level.begin(), level.end(),
                          std::inserter(kept, kept.end()));
    out = std::move(kept);
  }
  return out;
}

GroupEdgeView::GroupEdgeView(const Model& m, const Formula& f)
    : model_(&m), groups_(groups_of(f, GroupScope::CommonOrMutual)) {
  const auto& worlds = m.worlds();
  const std::size_t n = worlds.size();
  for (const auto& g : groups_) {
    Relation r;
    r.step.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = m.edge_skills(worlds[i], worlds[j]);
        for (const auto& a : g) {
          const auto& c = m.capability(a);
          if (std::includes(e.begin(), e.end(), c.begin(), c.end())) {
            r.step[i][j] = true;
            break;
          }
        }
      }
    }
    // Transitive closure of the one-step relation (paths of length >= 1).
    r.plus = r.step;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!r.plus[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (r.plus[k][j]) r.plus[i][j] = true;
        }
      }
    }
    relations_.emplace(g, std::move(r));
  }
}

const GroupEdgeView::Relation& GroupEdgeView::relation(const Group& g) const {
  auto it = relations_.find(g);
  if (it == relations_.end()) throw Error("group does not occur under E or C");
  return it->second;
}

bool GroupEdgeView::one_step(const Group& g, const WorldId& w, const WorldId& u) const {
  return relation(g).step[model_->world_index(w)][model_->world_index(u)];
}

bool GroupEdgeView::closure(const Group& g, const WorldId& w, const WorldId& u) const {
  return relation(g).plus[model_->world_index(w)][model_->world_index(u)];
}

namespace {

bool contains_all(const SkillSet& super, const SkillSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// Candidate skill sets for the existential of the de re / de dicto
// readings: optionally the empty set, then every nonempty subset of the
// bounded universe.
std::vector<SkillSet> candidate_updates(const Model& m, const AgentId& a,
                                        const Formula& f, bool include_empty) {
  Formula scope = Formula::Knows(a, f);
  SkillSet universe = relevant_skills(m, scope);
  SkillSet literal = skills_of(f);
  universe.insert(literal.begin(), literal.end());
  universe.insert(fresh_skill(m, scope));
  std::vector<SkillId> elems(universe.begin(), universe.end());

  std::vector<SkillSet> out;
  if (include_empty) out.emplace_back();
  detail::for_each_nonempty_subset(elems.size(), [&](const std::vector<std::size_t>& pick) {
    SkillSet s;
    for (std::size_t i : pick) s.insert(elems[i]);
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::vector<WorldId> accessible(const Model& m, const WorldId& w, const SkillSet& cap) {
  std::vector<WorldId> out;
  for (const auto& u : m.worlds()) {
    if (contains_all(m.edge_skills(w, u), cap)) out.push_back(u);
  }
  return out;
}

AgentId fresh_agent(const AgentId& a, const Formula& f) {
  auto used = agents_of(f);
  used.insert(a);
  if (!used.count("c_")) return "c_";
  for (std::size_t i = 0;; ++i) {
    AgentId c = "c_" + std::to_string(i);
    if (!used.count(c)) return c;
  }
}

}  // namespace

bool de_dicto(const Model& m, const WorldId& w, const AgentId& a, const Formula& f,
              bool include_empty) {
  const auto candidates = candidate_updates(m, a, f, include_empty);
  for (const auto& u : accessible(m, w, m.capability(a))) {
    bool some = std::any_of(candidates.begin(), candidates.end(), [&](const SkillSet& s) {
      return holds(apply_update(m, AddUpdate{a, s}), u, f);
    });
    if (!some) return false;
  }
  return true;
}

bool explicit_de_re(const Model& m, const WorldId& w, const AgentId& a, const Formula& f,
                    bool include_empty) {
  const auto candidates = candidate_updates(m, a, f, include_empty);
  const auto worlds = accessible(m, w, m.capability(a));
  return std::any_of(candidates.begin(), candidates.end(), [&](const SkillSet& s) {
    Model updated = apply_update(m, AddUpdate{a, s});
    return std::all_of(worlds.begin(), worlds.end(),
                       [&](const WorldId& u) { return holds(updated, u, f); });
  });
}

bool implicit_de_re(const Model& m, const WorldId& w, const AgentId& a, const Formula& f,
                    bool include_empty) {
  const auto candidates = candidate_updates(m, a, f, include_empty);
  return std::any_of(candidates.begin(), candidates.end(), [&](const SkillSet& s) {
    Model updated = apply_update(m, AddUpdate{a, s});
    const auto worlds = accessible(m, w, updated.capability(a));
    return std::all_of(worlds.begin(), worlds.end(),
                       [&](const WorldId& u) { return holds(updated, u, f); });
  });
}

Formula de_dicto_formula(const AgentId& a, const Formula& f) {
  return Formula::Knows(a, DiamondPlus(a, f));
}

Formula explicit_de_re_formula(const AgentId& a, const Formula& f) {
  AgentId c = fresh_agent(a, f);
  return Formula::CopySkills(
      c, a, DiamondPlus(c, Formula::Knows(a, Formula::CopySkills(a, c, f))));
}

Formula implicit_de_re_formula(const AgentId& a, const Formula& f) {
  return DiamondPlus(a, Formula::Knows(a, f));
}

}  // namespace skillmc
