#include "skillmc/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skillmc/analysis.hpp"

namespace skillmc {

namespace {

const SkillSet kEmptySkills;
const std::set<AtomId> kEmptyAtoms;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Model::Model(std::vector<WorldId> worlds) {
  if (worlds.empty()) throw FormatError("a model needs at least one world");
  auto frame = std::make_shared<Frame>();
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (!is_token(worlds[i])) {
      throw FormatError("invalid world name '" + worlds[i] + "'");
    }
    if (!frame->index.emplace(worlds[i], i).second) {
      throw FormatError("duplicate world '" + worlds[i] + "'");
    }
  }
  frame->worlds = std::move(worlds);
  frame_ = std::move(frame);
}

Model::Frame& Model::mutable_frame() {
  if (frame_.use_count() != 1) frame_ = std::make_shared<Frame>(*frame_);
  return const_cast<Frame&>(*frame_);
}

bool Model::has_world(const WorldId& w) const {
  return frame_->index.count(w) != 0;
}

std::size_t Model::world_index(const WorldId& w) const {
  auto it = frame_->index.find(w);
  if (it == frame_->index.end()) throw UnknownWorldError("unknown world '" + w + "'");
  return it->second;
}

Model::EdgeKey Model::key(const WorldId& w, const WorldId& u) const {
  world_index(w);
  world_index(u);
  return w < u ? EdgeKey{w, u} : EdgeKey{u, w};
}

Model& Model::set_edge(const WorldId& w, const WorldId& u, SkillSet skills) {
  EdgeKey k = key(w, u);
  for (const auto& s : skills) {
    if (!is_token(s)) throw FormatError("invalid skill name '" + s + "'");
  }
  auto it = frame_->edges.find(k);
  if (it != frame_->edges.end()) {
    if (it->second != skills) {
      throw ConflictError("conflicting skill sets for pair {" + k.first + "," +
                          k.second + "}");
    }
    return *this;
  }
  if (!skills.empty()) mutable_frame().edges.emplace(k, std::move(skills));
  return *this;
}

Model& Model::set_valuation(const WorldId& w, std::set<AtomId> atoms) {
  world_index(w);
  for (const auto& p : atoms) {
    if (!is_token(p)) throw FormatError("invalid atom name '" + p + "'");
  }
  auto& val = mutable_frame().valuation;
  if (atoms.empty()) {
    val.erase(w);
  } else {
    val[w] = std::move(atoms);
  }
  return *this;
}

Model& Model::set_capability(const AgentId& a, SkillSet skills) {
  if (!is_token(a)) throw FormatError("invalid agent name '" + a + "'");
  for (const auto& s : skills) {
    if (!is_token(s)) throw FormatError("invalid skill name '" + s + "'");
  }
  if (skills.empty()) {
    caps_.erase(a);
  } else {
    caps_[a] = std::move(skills);
  }
  return *this;
}

const SkillSet& Model::edge_skills(const WorldId& w, const WorldId& u) const {
  auto it = frame_->edges.find(key(w, u));
  return it == frame_->edges.end() ? kEmptySkills : it->second;
}

const SkillSet& Model::capability(const AgentId& a) const {
  auto it = caps_.find(a);
  return it == caps_.end() ? kEmptySkills : it->second;
}

const std::set<AtomId>& Model::valuation(const WorldId& w) const {
  world_index(w);
  auto it = frame_->valuation.find(w);
  return it == frame_->valuation.end() ? kEmptyAtoms : it->second;
}

SkillSet Model::edge_skill_universe() const {
  SkillSet out;
  for (const auto& [k, s] : frame_->edges) out.insert(s.begin(), s.end());
  return out;
}

bool operator==(const Model& a, const Model& b) {
  return a.worlds() == b.worlds() && a.edges() == b.edges() &&
         a.valuations() == b.valuations() && a.caps_ == b.caps_;
}

Model apply_update(const Model& m, const CapabilityUpdate& update) {
  Model out = m;
  std::visit(
      overloaded{
          [&](const AddUpdate& u) {
            SkillSet s = m.capability(u.agent);
            s.insert(u.skills.begin(), u.skills.end());
            out.set_capability(u.agent, std::move(s));
          },
          [&](const RemoveUpdate& u) {
            SkillSet s = m.capability(u.agent);
            for (const auto& x : u.skills) s.erase(x);
            out.set_capability(u.agent, std::move(s));
          },
          [&](const AssignUpdate& u) { out.set_capability(u.agent, u.skills); },
          [&](const CopyUpdate& u) {
            out.set_capability(u.learner, m.capability(u.source));
          },
      },
      update);
  return out;
}

SkillSet relevant_skills(const Model& m, const Formula& f) {
  SkillSet out = m.edge_skill_universe();
  for (const auto& a : agents_of(f)) {
    const auto& c = m.capability(a);
    out.insert(c.begin(), c.end());
  }
  return out;
}

SkillId fresh_skill(const Model& m, const Formula& f) {
  SkillSet used = relevant_skills(m, f);
  SkillSet literal = skills_of(f);
  used.insert(literal.begin(), literal.end());
  for (std::size_t i = 0;; ++i) {
    SkillId s = "_fresh" + std::to_string(i);
    if (!used.count(s)) return s;
  }
}

namespace {

using nlohmann::json;

std::set<std::string> string_set(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + " must be an array of names");
  std::set<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw FormatError(where + " must contain only strings");
    out.insert(x.get<std::string>());
  }
  return out;
}

}  // namespace

Model load_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("model document must be an object");
  for (const auto& [k, v] : doc.items()) {
    if (k != "worlds" && k != "valuation" && k != "edges" && k != "capabilities") {
      throw FormatError("unknown key '" + k + "'");
    }
  }
  if (!doc.contains("worlds") || !doc["worlds"].is_array()) {
    throw FormatError("'worlds' must be an array");
  }
  std::vector<WorldId> worlds;
  for (const auto& w : doc["worlds"]) {
    if (!w.is_string()) throw FormatError("'worlds' must contain only strings");
    worlds.push_back(w.get<std::string>());
  }
  Model m(std::move(worlds));

  if (doc.contains("valuation")) {
    const auto& val = doc["valuation"];
    if (!val.is_object()) throw FormatError("'valuation' must be an object");
    for (const auto& [w, atoms] : val.items()) {
      m.set_valuation(w, string_set(atoms, "valuation of " + w));
    }
  }
  if (doc.contains("edges")) {
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw FormatError("'edges' must be an array");
    std::map<Model::EdgeKey, SkillSet> seen;
    for (const auto& e : edges) {
      if (!e.is_object() || !e.contains("between") || !e.contains("skills")) {
        throw FormatError("each edge needs 'between' and 'skills'");
      }
      const auto& between = e["between"];
      if (!between.is_array() || between.size() != 2 || !between[0].is_string() ||
          !between[1].is_string()) {
        throw FormatError("'between' must be a pair of world names");
      }
      auto w = between[0].get<std::string>();
      auto u = between[1].get<std::string>();
      auto skills = string_set(e["skills"], "edge skills");
      m.world_index(w);
      m.world_index(u);
      Model::EdgeKey k = w < u ? Model::EdgeKey{w, u} : Model::EdgeKey{u, w};
      auto [it, fresh] = seen.emplace(k, skills);
      if (!fresh && it->second != skills) {
        throw ConflictError("conflicting skill sets for pair {" + k.first + "," +
                            k.second + "}");
      }
      m.set_edge(w, u, std::move(skills));
    }
  }
  if (doc.contains("capabilities")) {
    const auto& caps = doc["capabilities"];
    if (!caps.is_object()) throw FormatError("'capabilities' must be an object");
    for (const auto& [a, skills] : caps.items()) {
      m.set_capability(a, string_set(skills, "capability of " + a));
    }
  }
  return m;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

std::string save_model(const Model& m) {
  nlohmann::ordered_json doc;
  doc["worlds"] = m.worlds();
  auto val = nlohmann::ordered_json::object();
  for (const auto& w : m.worlds()) {
    const auto& atoms = m.valuation(w);
    if (!atoms.empty()) val[w] = atoms;
  }
  doc["valuation"] = val;

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, const Model::EdgeKey*>> order;
  for (const auto& [k, s] : m.edges()) {
    auto i = m.world_index(k.first);
    auto j = m.world_index(k.second);
    order.push_back({{std::min(i, j), std::max(i, j)}, &k});
  }
  std::sort(order.begin(), order.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [pos, k] : order) {
    nlohmann::ordered_json e;
    e["between"] = {m.worlds()[pos.first], m.worlds()[pos.second]};
    e["skills"] = m.edges().at(*k);
    edges.push_back(e);
  }
  doc["edges"] = edges;

  auto caps = nlohmann::ordered_json::object();
  for (const auto& [a, s] : m.capabilities()) caps[a] = s;
  doc["capabilities"] = caps;
  return doc.dump(2) + "\n";
}

Model demo_model() {
  Model m({"w1", "w2", "w3", "w4", "w5"});
  const SkillSet all = {"s1", "s2", "s3", "s4"};
  for (const auto& w : {"w1", "w2", "w3", "w4", "w5"}) m.set_edge(w, w, all);
  m.set_edge("w1", "w2", {"s1", "s4"});
  m.set_edge("w3", "w5", {"s1", "s4"});
  m.set_edge("w1", "w3", {"s1", "s2", "s3"});
  m.set_edge("w2", "w5", {"s1", "s2", "s3"});
  m.set_edge("w1", "w5", {"s1"});
  m.set_edge("w2", "w3", {"s1"});
  m.set_edge("w2", "w4", {"s2", "s3"});
  m.set_edge("w3", "w4", {"s4"});
  m.set_edge("w4", "w5", {"s2", "s3", "s4"});

  m.set_capability("a", {"s1", "s2", "s3"});
  m.set_capability("b", {"s2", "s3", "s4"});
  m.set_capability("c", {"s4"});

  m.set_valuation("w1", {"p1", "p2"});
  m.set_valuation("w2", {"p1", "p3"});
  m.set_valuation("w3", {"p1", "p2", "p4"});
  m.set_valuation("w4", {"p3", "p4"});
  m.set_valuation("w5", {"p1", "p3", "p4"});
  return m;
}

}  // namespace skillmc
