#include "skillmc/ueg.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace skillmc {

RootedGraph::RootedGraph(std::vector<NodeId> nodes,
                         const std::vector<std::pair<NodeId, NodeId>>& edges, NodeId root)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw FormatError("a graph needs at least one node");
  std::set<NodeId> seen;
  for (const auto& n : nodes_) {
    if (!is_token(n)) throw FormatError("invalid node name '" + n + "'");
    if (!seen.insert(n).second) throw FormatError("duplicate node '" + n + "'");
  }
  for (const auto& [u, v] : edges) {
    std::size_t i = index(u);
    std::size_t j = index(v);
    if (i == j) throw FormatError("self-loop at node '" + u + "'");
    edges_.insert({std::min(i, j), std::max(i, j)});
  }
  root_ = index(root);
}

std::size_t RootedGraph::index(const NodeId& n) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == n) return i;
  }
  throw FormatError("unknown node '" + n + "'");
}

RootedGraph load_graph(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("graph document must be an object");
  for (const auto& [k, v] : doc.items()) {
    if (k != "nodes" && k != "edges" && k != "root") {
      throw FormatError("unknown key '" + k + "'");
    }
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw FormatError("'nodes' must be an array");
  }
  if (!doc.contains("root") || !doc["root"].is_string()) {
    throw FormatError("'root' must be a node name");
  }
  std::vector<NodeId> nodes;
  for (const auto& n : doc["nodes"]) {
    if (!n.is_string()) throw FormatError("'nodes' must contain only strings");
    nodes.push_back(n.get<std::string>());
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw FormatError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw FormatError("each edge must be a pair of node names");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return RootedGraph(std::move(nodes), edges, doc["root"].get<std::string>());
}

RootedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string save_graph(const RootedGraph& g) {
  nlohmann::ordered_json doc;
  doc["nodes"] = g.nodes();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({g.nodes()[i], g.nodes()[j]});
  doc["edges"] = edges;
  doc["root"] = g.root();
  return doc.dump(2) + "\n";
}

std::string to_string(Player p) { return p == Player::One ? "PlayerOne" : "PlayerTwo"; }

Player ueg_winner(const RootedGraph& g) {
  const std::size_t m = g.edges().size();
  if (m > 64) throw CapExceededError("game solver supports at most 64 edges");
  // incident[x] = (edge bit, other endpoint)
  std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> incident(g.nodes().size());
  std::size_t bit = 0;
  for (const auto& [i, j] : g.edges()) {
    std::uint64_t b = std::uint64_t{1} << bit++;
    incident[i].emplace_back(b, j);
    incident[j].emplace_back(b, i);
  }

  std::map<std::pair<std::uint64_t, std::size_t>, bool> memo;
  // True iff the player to move at `node` with `unused` edges wins.
  std::function<bool(std::uint64_t, std::size_t)> mover_wins =
      [&](std::uint64_t unused, std::size_t node) {
        auto key = std::make_pair(unused, node);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool win = false;
        for (const auto& [b, other] : incident[node]) {
          if ((unused & b) && !mover_wins(unused & ~b, other)) {
            win = true;
            break;
          }
        }
        memo.emplace(key, win);
        return win;
      };
  std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  return mover_wins(all, g.root_index()) ? Player::One : Player::Two;
}

std::string to_string(ReductionVariant v) {
  switch (v) {
    case ReductionVariant::BoxPlus: return "plus";
    case ReductionVariant::Box: return "box";
    case ReductionVariant::BoxMinus: return "minus";
  }
  return "?";
}

ReductionVariant parse_variant(std::string_view name) {
  if (name == "plus") return ReductionVariant::BoxPlus;
  if (name == "box") return ReductionVariant::Box;
  if (name == "minus") return ReductionVariant::BoxMinus;
  throw Error("unknown reduction variant '" + std::string(name) + "'");
}

std::size_t player_count(const RootedGraph& g) {
  std::size_t r = g.edges().size();
  return r <= 2 ? 2 : r + (r % 2);
}

AgentId player_agent(std::size_t i) { return "a" + std::to_string(i); }

AtomId node_atom(const RootedGraph& g, std::size_t node) { return "p_" + g.nodes()[node]; }

SkillId pair_skill(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return "s_" + std::to_string(i) + "_" + std::to_string(j);
}

Model induced_model(const RootedGraph& g, ReductionVariant v) {
  const auto& nodes = g.nodes();
  Model m(nodes);
  for (const auto& [i, j] : g.edges()) m.set_edge(nodes[i], nodes[j], {pair_skill(i, j)});
  for (std::size_t x = 0; x < nodes.size(); ++x) m.set_valuation(nodes[x], {node_atom(g, x)});
  if (v == ReductionVariant::BoxMinus) {
    SkillSet every_pair;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) every_pair.insert(pair_skill(i, j));
    }
    for (std::size_t i = 1; i <= player_count(g); ++i) {
      m.set_capability(player_agent(i), every_pair);
    }
  }
  return m;
}

namespace {

Formula disjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return False();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Or(out, parts[i]);
  return out;
}

class InducedFormula {
 public:
  InducedFormula(const RootedGraph& g, ReductionVariant v) : g_(g), variant_(v) {}

  Formula build() { return move(1); }

 private:
  Formula atom(std::size_t x) const { return Formula::Atom(node_atom(g_, x)); }

  // Player i sees exactly one node: ~K_ai false & OR_x K_ai p_x.
  Formula picks_edge(std::size_t i) const {
    std::vector<Formula> sees;
    for (std::size_t x = 0; x < g_.nodes().size(); ++x) {
      sees.push_back(Formula::Knows(player_agent(i), atom(x)));
    }
    return And(Formula::Not(Formula::Knows(player_agent(i), False())), disjunction(sees));
  }

  // Player i's edge {x,y} was already taken by an earlier player j.
  Formula reuses_edge(std::size_t i) const {
    std::vector<Formula> parts;
    const std::size_t n = g_.nodes().size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        for (std::size_t j = 1; j < i; ++j) {
          parts.push_back(And(And(atom(x), HatK(player_agent(j), atom(y))),
                              Formula::Knows(player_agent(i), atom(y))));
        }
      }
    }
    return disjunction(parts);
  }

  Formula box(std::size_t i, Formula f) const {
    switch (variant_) {
      case ReductionVariant::BoxPlus: return Formula::BoxPlus(player_agent(i), std::move(f));
      case ReductionVariant::Box: return Formula::BoxAssign(player_agent(i), std::move(f));
      case ReductionVariant::BoxMinus: return Formula::BoxMinus(player_agent(i), std::move(f));
    }
    return f;
  }

  Formula diamond(std::size_t i, Formula f) const {
    return Formula::Not(box(i, Formula::Not(std::move(f))));
  }

  // Odd player i moves, then every reply of player i+1 must be invalid or
  // lead to a position where player i+2 can move again.
  Formula move(std::size_t i) const {
    const std::size_t n = player_count(g_);
    Formula reply = Or(Formula::Not(picks_edge(i + 1)), reuses_edge(i + 1));
    if (i + 2 <= n) reply = Or(reply, HatK(player_agent(i + 1), move(i + 2)));
    Formula body = And(And(picks_edge(i), Formula::Not(reuses_edge(i))),
                       Formula::Knows(player_agent(i), box(i + 1, reply)));
    return diamond(i, body);
  }

  const RootedGraph& g_;
  ReductionVariant variant_;
};

}  // namespace

Formula induced_formula(const RootedGraph& g, ReductionVariant v) {
  return InducedFormula(g, v).build();
}

ReductionResult reduction_check(const RootedGraph& g, ReductionVariant v,
                                std::size_t max_edges) {
  if (g.edges().size() > max_edges) {
    throw CapExceededError("graph has " + std::to_string(g.edges().size()) +
                           " edges; the reduction check is capped at " +
                           std::to_string(max_edges) +
                           " (nested quantifier evaluation is exponential)");
  }
  ReductionResult r;
  r.game = ueg_winner(g);
  r.logic = holds(induced_model(g, v), g.root(), induced_formula(g, v));
  r.agree = (r.game == Player::One) == r.logic;
  return r;
}

}  // namespace skillmc
