#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "skillmc/formula.hpp"

namespace skillmc {

// Malformed model or graph document.
class FormatError : public Error {
 public:
  using Error::Error;
};

// The same unordered pair listed twice with different skill sets.
class ConflictError : public FormatError {
 public:
  using FormatError::FormatError;
};

class UnknownWorldError : public FormatError {
 public:
  using FormatError::FormatError;
};

struct AddUpdate {
  AgentId agent;
  SkillSet skills;
};
struct RemoveUpdate {
  AgentId agent;
  SkillSet skills;
};
struct AssignUpdate {
  AgentId agent;
  SkillSet skills;
};
struct CopyUpdate {
  AgentId learner;
  AgentId source;
};
using CapabilityUpdate =
    std::variant<AddUpdate, RemoveUpdate, AssignUpdate, CopyUpdate>;

// A finite weighted epistemic model (W, E, C, beta).
//
// Edges are keyed by unordered world pairs, so E(w,u) = E(u,w) holds by
// construction; pairs without an entry (self-loops included) carry the
// empty skill set. Only finite edge labels are representable, which makes
// positivity hold vacuously. Capabilities and valuations default to the
// empty set for unlisted agents and worlds.
//
// Worlds, edges and valuation live in a shared immutable frame; updates
// copy only the capability map.
class Model {
 public:
  using EdgeKey = std::pair<WorldId, WorldId>;

  explicit Model(std::vector<WorldId> worlds);

  // Builders. Both throw UnknownWorldError for undeclared worlds;
  // set_edge throws ConflictError if the pair already carries a
  // different nonempty set.
  Model& set_edge(const WorldId& w, const WorldId& u, SkillSet skills);
  Model& set_valuation(const WorldId& w, std::set<AtomId> atoms);
  Model& set_capability(const AgentId& a, SkillSet skills);

  const std::vector<WorldId>& worlds() const { return frame_->worlds; }
  bool has_world(const WorldId& w) const;
  std::size_t world_index(const WorldId& w) const;

  const SkillSet& edge_skills(const WorldId& w, const WorldId& u) const;
  // Nonempty edges keyed by (min, max) world name.
  const std::map<EdgeKey, SkillSet>& edges() const { return frame_->edges; }

  const SkillSet& capability(const AgentId& a) const;
  const std::map<AgentId, SkillSet>& capabilities() const { return caps_; }

  const std::set<AtomId>& valuation(const WorldId& w) const;
  const std::map<WorldId, std::set<AtomId>>& valuations() const {
    return frame_->valuation;
  }

  // Union of all edge labels.
  SkillSet edge_skill_universe() const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  struct Frame {
    std::vector<WorldId> worlds;
    std::map<WorldId, std::size_t> index;
    std::map<EdgeKey, SkillSet> edges;
    std::map<WorldId, std::set<AtomId>> valuation;
  };

  Frame& mutable_frame();
  EdgeKey key(const WorldId& w, const WorldId& u) const;

  std::shared_ptr<const Frame> frame_;
  std::map<AgentId, SkillSet> caps_;
};

// Returns a model differing from `m` only in the updated agent's
// capability.
Model apply_update(const Model& m, const CapabilityUpdate& update);

// Edge labels plus the capabilities of every agent occurring in f.
SkillSet relevant_skills(const Model& m, const Formula& f);

// "_fresh0", "_fresh1", ...: the first name outside relevant_skills(m, f)
// and skills_of(f).
SkillId fresh_skill(const Model& m, const Formula& f);

// JSON model document:
//   { "worlds": [..], "valuation": {w: [atom]},
//     "edges": [{"between": [w, u], "skills": [s]}],
//     "capabilities": {agent: [s]} }
Model load_model(std::string_view text);
Model load_model_file(const std::string& path);
// Canonical document: worlds in declaration order, edges sorted by world
// position, empty entries omitted, two-space indentation.
std::string save_model(const Model& m);

// The five-world, three-agent example model used throughout the tests.
Model demo_model();

}  // namespace skillmc
