#include <random>

#include "doctest.h"
#include "support/oracles.hpp"

using namespace skillmc;

namespace {

const char* kNoEdges = R"({
  "worlds": ["w1", "w2", "w3", "w4", "w5"],
  "valuation": {"w1": ["p1", "p4"], "w2": ["p2", "p3"], "w3": ["p3"],
                "w4": ["p3", "p4"], "w5": ["p1", "p2", "p4"]},
  "capabilities": {"a": ["s1", "s2", "s3"], "b": ["s2", "s3", "s4"], "c": ["s4"]}
})";

std::size_t self_loops(const Model& m) {
  std::size_t n = 0;
  for (const auto& [k, s] : m.edges()) n += k.first == k.second;
  return n;
}

}  // namespace

TEST_CASE("demo model: shape of the five-world example") {
  Model m = demo_model();
  CHECK(m.worlds() == std::vector<WorldId>{"w1", "w2", "w3", "w4", "w5"});
  // Nine labeled edges between distinct worlds plus five listed self-loops.
  CHECK(m.edges().size() == 14);
  CHECK(self_loops(m) == 5);
  CHECK(m.capabilities().size() == 3);
  CHECK(m.capability("a") == SkillSet{"s1", "s2", "s3"});
  CHECK(m.capability("b") == SkillSet{"s2", "s3", "s4"});
  CHECK(m.capability("c") == SkillSet{"s4"});
  CHECK(m.edge_skills("w1", "w5") == SkillSet{"s1"});
  CHECK(m.edge_skills("w5", "w1") == SkillSet{"s1"});
  CHECK(m.edge_skills("w2", "w3") == SkillSet{"s1"});
  CHECK(m.edge_skills("w1", "w4").empty());
  CHECK(m.capability("nobody").empty());
}

TEST_CASE("load_model: reloads the saved demo document") {
  Model m = demo_model();
  Model back = load_model(save_model(m));
  CHECK(back == m);
  CHECK(save_model(back) == save_model(m));
}

TEST_CASE("load_model: defaults and errors") {
  Model m = load_model(kNoEdges);
  CHECK(m.edges().empty());
  CHECK(m.edge_skills("w1", "w4").empty());
  CHECK(m.edge_skills("w3", "w3").empty());
  CHECK(m.valuation("w3") == std::set<AtomId>{"p3"});

  CHECK_THROWS_AS(load_model(R"({"worlds": ["w1", "w2"], "edges": [
      {"between": ["w1", "w2"], "skills": ["s1"]},
      {"between": ["w2", "w1"], "skills": ["s2"]}]})"),
                  ConflictError);
  CHECK_THROWS_AS(load_model(R"({"worlds": ["w1", "w2"], "edges": [
      {"between": ["w1", "w2"], "skills": []},
      {"between": ["w2", "w1"], "skills": ["s2"]}]})"),
                  ConflictError);
  // The same entry repeated (in either orientation) is harmless.
  Model dup = load_model(R"({"worlds": ["w1", "w2"], "edges": [
      {"between": ["w1", "w2"], "skills": ["s1"]},
      {"between": ["w2", "w1"], "skills": ["s1"]}]})");
  CHECK(dup.edges().size() == 1);

  CHECK_THROWS_AS(load_model(R"({"worlds": ["w1"], "edges": [
      {"between": ["w1", "w9"], "skills": ["s1"]}]})"),
                  UnknownWorldError);
  CHECK_THROWS_AS(load_model(R"({"worlds": ["w1"], "valuation": {"w2": ["p"]}})"),
                  UnknownWorldError);
  CHECK_THROWS_AS(load_model("{"), FormatError);
  CHECK_THROWS_AS(load_model("[]"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"valuation": {}})"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"worlds": []})"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"worlds": ["w1", "w1"]})"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"worlds": ["w1"], "extra": 1})"), FormatError);
  CHECK_THROWS_AS(load_model(R"({"worlds": ["w1"], "capabilities": {"a": "s1"}})"),
                  FormatError);
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), FormatError);
  CHECK_THROWS_AS(m.edge_skills("w1", "w9"), UnknownWorldError);
}

TEST_CASE("apply_update: examples") {
  Model m = demo_model();
  CHECK(apply_update(m, AddUpdate{"a", {"s4"}}).capability("a") ==
        SkillSet{"s1", "s2", "s3", "s4"});
  CHECK(apply_update(m, RemoveUpdate{"a", {"s2", "s3"}}).capability("a") == SkillSet{"s1"});
  CHECK(apply_update(m, AssignUpdate{"c", {"s2"}}).capability("c") == SkillSet{"s2"});
  CHECK(apply_update(m, CopyUpdate{"b", "c"}).capability("b") == SkillSet{"s4"});
  CHECK(apply_update(m, CopyUpdate{"b", "nobody"}).capability("b").empty());
  CHECK(apply_update(m, AddUpdate{"z", {"s1"}}).capability("z") == SkillSet{"s1"});
}

TEST_CASE("apply_update: invariants on random models") {
  std::mt19937 rng(21);
  for (int i = 0; i < 200; ++i) {
    Model m = oracle::random_model(rng);
    const SkillSet before = m.capability("a");

    Model added = apply_update(m, AddUpdate{"a", {"s1", "t9"}});
    CHECK(added.edges() == m.edges());
    CHECK(added.valuations() == m.valuations());
    CHECK(added.worlds() == m.worlds());
    CHECK(added.capability("b") == m.capability("b"));
    CHECK(added.capability("c") == m.capability("c"));

    // Add then Remove of a set disjoint from C(a) restores C(a).
    SkillSet fresh = {"t1", "t2"};
    CHECK(apply_update(apply_update(m, AddUpdate{"a", fresh}), RemoveUpdate{"a", fresh}) == m);
    if (!before.empty()) CHECK(apply_update(m, AssignUpdate{"a", before}) == m);
    CHECK(apply_update(m, CopyUpdate{"a", "a"}) == m);
  }
}

TEST_CASE("relevant_skills and fresh_skill") {
  Model m = demo_model();
  Formula f = parse_formula("K_a p1");
  CHECK(relevant_skills(m, f) == SkillSet{"s1", "s2", "s3", "s4"});
  CHECK(fresh_skill(m, f) == "_fresh0");

  Model bare({"w1", "w2"});
  CHECK(relevant_skills(bare, parse_formula("K_a (+{s1})_b p")).empty());
  CHECK(fresh_skill(bare, parse_formula("K_a (+{s1})_b p")) == "_fresh0");

  bare.set_capability("a", {"_fresh0"});
  CHECK(fresh_skill(bare, f) == "_fresh1");
  // Capabilities of agents outside the formula do not count.
  CHECK(relevant_skills(bare, parse_formula("K_b p")).empty());
  // Skills written in the formula are avoided as well.
  CHECK(fresh_skill(Model({"w"}), parse_formula("(+{_fresh0})_a p")) == "_fresh1");

  RootedGraph g({"d", "e"}, {{"d", "e"}}, "d");
  CHECK(relevant_skills(induced_model(g), induced_formula(g)) == SkillSet{pair_skill(0, 1)});

  std::mt19937 rng(22);
  for (int i = 0; i < 100; ++i) {
    Model r = oracle::random_model(rng);
    Formula h = oracle::random_formula(rng, 4);
    SkillId s = fresh_skill(r, h);
    CHECK_FALSE(relevant_skills(r, h).count(s));
    CHECK_FALSE(skills_of(h).count(s));
  }
}

TEST_CASE("save_model/load_model round trip on random models") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    Model m = oracle::random_model(rng);
    std::string doc = save_model(m);
    Model back = load_model(doc);
    CHECK(back == m);
    CHECK(save_model(back) == doc);
  }
}

TEST_CASE("builders validate worlds") {
  Model m({"w1", "w2"});
  CHECK_THROWS_AS(m.set_edge("w1", "w3", {"s"}), UnknownWorldError);
  CHECK_THROWS_AS(m.set_valuation("w3", {"p"}), UnknownWorldError);
  m.set_edge("w1", "w2", {"s"});
  CHECK_THROWS_AS(m.set_edge("w2", "w1", {"t"}), ConflictError);
  CHECK_THROWS_AS(Model({}), FormatError);
}
