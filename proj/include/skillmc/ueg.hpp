#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skillmc/checker.hpp"
#include "skillmc/formula.hpp"
#include "skillmc/model.hpp"

namespace skillmc {

using NodeId = std::string;

// Finite undirected irreflexive graph with a designated root.
class RootedGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // node positions, first < second

  RootedGraph(std::vector<NodeId> nodes, const std::vector<std::pair<NodeId, NodeId>>& edges,
              NodeId root);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::set<Edge>& edges() const { return edges_; }
  const NodeId& root() const { return nodes_[root_]; }
  std::size_t root_index() const { return root_; }
  std::size_t index(const NodeId& n) const;

 private:
  std::vector<NodeId> nodes_;
  std::set<Edge> edges_;
  std::size_t root_ = 0;
};

// { "nodes": [..], "edges": [[u, v], ..], "root": ".." }
RootedGraph load_graph(std::string_view text);
RootedGraph load_graph_file(const std::string& path);
std::string save_graph(const RootedGraph& g);

enum class Player { One, Two };
std::string to_string(Player p);

// Winner of undirected edge geography from the root: players alternately
// traverse an unused edge at the current node; whoever cannot move loses.
// Positions are memoized by (unused edges, current node). At most 64 edges.
Player ueg_winner(const RootedGraph& g);

enum class ReductionVariant {
  BoxPlus,   // upskilling quantifiers
  Box,       // reskilling quantifiers
  BoxMinus,  // downskilling quantifiers, players start with every pair skill
};
std::string to_string(ReductionVariant v);
ReductionVariant parse_variant(std::string_view name);  // "plus", "box", "minus"

// Number of players in the induced formula: the smallest positive even
// number >= |edges|.
std::size_t player_count(const RootedGraph& g);

AgentId player_agent(std::size_t i);          // "a1", "a2", ...
AtomId node_atom(const RootedGraph& g, std::size_t node);  // "p_<node>"
SkillId pair_skill(std::size_t i, std::size_t j);          // "s_<i>_<j>", i < j

// Worlds are the nodes; E({x,y}) = {s_x_y} for graph edges and empty
// otherwise (self-loops included); each node carries its own atom. Every
// player starts with no skills, except in the BoxMinus variant where each
// player starts with the skill of every unordered node pair.
Model induced_model(const RootedGraph& g,
                    ReductionVariant v = ReductionVariant::BoxPlus);

// The alternating formula: odd players pick an edge existentially, even
// players universally, with ⊞ replaced by □ or ⊟ per variant.
Formula induced_formula(const RootedGraph& g,
                        ReductionVariant v = ReductionVariant::BoxPlus);

struct ReductionResult {
  Player game;
  bool logic;
  bool agree;
};

class CapExceededError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultMaxEdges = 5;

// Solves the game and checks the induced formula at the root of the
// induced model. Graphs with more than `max_edges` edges are refused.
ReductionResult reduction_check(const RootedGraph& g,
                                ReductionVariant v = ReductionVariant::BoxPlus,
                                std::size_t max_edges = kDefaultMaxEdges);

}  // namespace skillmc
