// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff every
// criterion not named with --known-failure passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "support/example_truths.hpp"
#include "support/oracles.hpp"

using namespace skillmc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome example_truths_suite() {
  auto start = Clock::now();
  Model m = demo_model();
  int ok = 0;
  std::string failed;
  for (std::size_t i = 0; i < example_truths::kItems.size(); ++i) {
    const auto& item = example_truths::kItems[i];
    if (holds(m, item.world, parse_formula(item.formula))) {
      ++ok;
    } else {
      failed += " item" + std::to_string(i + 1);
    }
  }
  double t = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/14 items true in %.3f s%s", ok, t, failed.c_str());
  return {ok == 14 && t < 1.0, buf};
}

Outcome reduction_equivalence() {
  auto start = Clock::now();
  std::size_t total = 0, agree = 0;
  for (const auto& g : oracle::small_rooted_graphs(4, 4)) {
    ++total;
    ReductionResult r = reduction_check(g, ReductionVariant::BoxPlus);
    if (r.agree && r.game == oracle::brute_force_winner(g)) ++agree;
  }
  ReductionResult none = reduction_check(RootedGraph({"d"}, {}, "d"));
  ReductionResult one = reduction_check(RootedGraph({"d", "e"}, {{"d", "e"}}, "d"));
  bool base = none.game == Player::Two && !none.logic && one.game == Player::One && one.logic;
  double t = seconds_since(start);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%zu/%zu rooted connected graphs (<=4 nodes, <=4 edges) agree; base cases %s; "
                "%.1f s",
                agree, total, base ? "match" : "MISMATCH", t);
  return {agree == total && base && t < 300.0, buf};
}

Outcome de_re_de_dicto() {
  std::mt19937 rng(103);
  oracle::FormulaShape shape;
  shape.quantifiers = false;
  std::size_t models = 0, checks = 0, agree = 0, agree_nonempty = 0;
  for (; models < 250; ++models) {
    Model m = oracle::random_model(rng);
    Formula f = oracle::random_formula(rng, 3, shape);
    for (const auto& w : m.worlds()) {
      const bool dicto = holds(m, w, de_dicto_formula("a", f));
      const bool explicit_re = holds(m, w, explicit_de_re_formula("a", f));
      const bool implicit_re = holds(m, w, implicit_de_re_formula("a", f));
      checks += 3;
      agree += (de_dicto(m, w, "a", f) == dicto) + (explicit_de_re(m, w, "a", f) == explicit_re) +
               (implicit_de_re(m, w, "a", f) == implicit_re);
      agree_nonempty += (de_dicto(m, w, "a", f, false) == dicto) +
                        (explicit_de_re(m, w, "a", f, false) == explicit_re) +
                        (implicit_de_re(m, w, "a", f, false) == implicit_re);
    }
  }
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "%zu/%zu checks agree on %zu random models with S ranging over all sets; "
                "%zu/%zu with S nonempty",
                agree, checks, models, agree_nonempty, checks);
  return {agree == checks, buf};
}

Outcome common_knowledge() {
  std::mt19937 rng(104);
  oracle::FormulaShape shape;
  shape.quantifiers = false;
  std::size_t total = 0, agree = 0, mutual = 0;
  for (; total < 300; ++total) {
    Model m = oracle::random_model(rng);
    Formula f = oracle::random_formula(rng, 3, shape);
    Group g;
    while (g.empty()) {
      for (const char* a : {"a", "b", "c"}) {
        if (rng() & 1u) g.insert(a);
      }
    }
    agree += truth_set(m, Formula::Common(g, f)) == common_oracle(m, g, f);
    TruthSet every(m.worlds().begin(), m.worlds().end());
    for (const auto& a : g) {
      TruthSet k = truth_set(m, Formula::Knows(a, f)), keep;
      for (const auto& w : every) {
        if (k.count(w)) keep.insert(w);
      }
      every = keep;
    }
    mutual += truth_set(m, Formula::Mutual(g, f)) == every;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "C_G vs iterated E_G: %zu/%zu; E_G vs meet of K_a: %zu/%zu",
                agree, total, mutual, total);
  return {agree == total && mutual == total, buf};
}

Outcome bound_stability() {
  std::mt19937 rng(105);
  oracle::FormulaShape shape;
  shape.max_quantifiers = 1;
  EvalOptions two;
  two.fresh_skills = 2;
  std::size_t total = 0, agree = 0;
  while (total < 300) {
    Model m = oracle::random_model(rng);
    Formula f = oracle::random_formula(rng, 4, shape);
    Fragment fr = fragment_of(f);
    if (!fr.count(Letter::BoxPlus) && !fr.count(Letter::BoxMinus) && !fr.count(Letter::Box)) {
      continue;
    }
    ++total;
    agree += truth_set(m, f) == truth_set(m, f, two);
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu/%zu one-quantifier instances unchanged", agree, total);
  return {agree == total, buf};
}

Outcome length_metric() {
  bool worked = formula_length(parse_formula("(p -> C_{a,b,c} q)")) == 13;
  std::mt19937 rng(106);
  std::size_t agree = 0;
  for (int i = 0; i < 100; ++i) {
    Formula f = oracle::random_formula(rng, 1 + i % 8);
    agree += formula_length(f) == oracle::notation_tokens(f).size();
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "worked example %s; %zu/100 random trees match token count",
                worked ? "= 13" : "WRONG", agree);
  return {worked && agree == 100, buf};
}

// Depth-20 spine cycling through every non-quantifier constructor, with
// small random side formulas under implications.
Formula deep_formula(std::mt19937& rng, const std::vector<AgentId>& agents,
                     const std::vector<SkillId>& skills) {
  oracle::FormulaShape side;
  side.agents = agents;
  side.skills = skills;
  side.atoms = {"p", "q", "r", "s"};
  side.quantifiers = false;
  auto agent = [&] { return agents[rng() % agents.size()]; };
  auto group = [&] { return Group{agent(), agent()}; };
  auto skill_set = [&] { return SkillSet{skills[rng() % skills.size()]}; };
  Formula f = Formula::Atom("p");
  for (int level = 0; level < 20; ++level) {
    switch (level % 10) {
      case 0: f = Formula::Common(group(), f); break;
      case 1: f = Formula::Implies(oracle::random_formula(rng, 2, side), f); break;
      case 2: f = Formula::Distributed(group(), f); break;
      case 3: f = Formula::Mutual(group(), Formula::Not(f)); break;
      case 4: f = Formula::Field(group(), f); break;
      case 5: f = Formula::AddSkills(agent(), skill_set(), Formula::Knows(agent(), f)); break;
      case 6: f = Formula::RemoveSkills(agent(), skill_set(), f); break;
      case 7: f = Formula::AssignSkills(agent(), skill_set(), f); break;
      case 8: f = Formula::CopySkills(agent(), agent(), f); break;
      default: f = Formula::Implies(f, oracle::random_formula(rng, 2, side)); break;
    }
  }
  return f;
}

Outcome performance_and_cap() {
  std::mt19937 rng(107);
  const std::vector<AgentId> agents = {"a", "b", "c", "d", "e"};
  const std::vector<SkillId> skills = {"s1", "s2", "s3", "s4", "s5", "s6"};
  std::vector<WorldId> worlds;
  for (int i = 0; i < 200; ++i) worlds.push_back("w" + std::to_string(i));
  Model m(worlds);
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    for (std::size_t j = i; j < worlds.size(); ++j) {
      SkillSet s;
      for (const auto& k : skills) {
        if (rng() % 2) s.insert(k);
      }
      m.set_edge(worlds[i], worlds[j], s);
    }
    std::set<AtomId> v;
    for (const char* p : {"p", "q", "r", "s"}) {
      if (rng() % 2) v.insert(p);
    }
    m.set_valuation(worlds[i], v);
  }
  for (const auto& a : agents) m.set_capability(a, {skills[rng() % skills.size()]});
  Formula f = deep_formula(rng, agents, skills);
  Fragment fr = fragment_of(f);

  auto start = Clock::now();
  TruthSet ts = truth_set(m, f);
  double t = seconds_since(start);

  bool refused = false;
  try {
    reduction_check(RootedGraph({"a", "b", "c", "d"},
                                {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                                 {"c", "d"}},
                                "a"));
  } catch (const CapExceededError&) {
    refused = true;
  }
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "|W|=200, fragment %s, |f|=%zu, %zu worlds true, %.2f s; 6-edge graph %s",
                fragment_name(fr).c_str(), formula_length(f), ts.size(), t,
                refused ? "refused by the cap" : "NOT refused");
  bool all_letters = fr.size() == 8 && !fr.count(Letter::BoxPlus);
  return {t < 10.0 && refused && all_letters, buf};
}

}  // namespace

// Usage: acceptance [--known-failure N]...
// A criterion named as a known failure is still run and reported, but
// does not affect the exit status.
int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--known-failure") known.insert(std::stoi(argv[i + 1]));
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"five-world example truths", example_truths_suite},
      {"edge geography reduction", reduction_equivalence},
      {"de dicto / de re formulas", de_re_de_dicto},
      {"common knowledge oracle", common_knowledge},
      {"quantifier bound stability", bound_stability},
      {"formula length metric", length_metric},
      {"performance smoke and cap", performance_and_cap},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && (o.pass || known.count(n));
    std::printf("%s criterion %d (%s): %s%s\n", o.pass ? "PASS" : "FAIL", n, name,
                o.detail.c_str(), !o.pass && known.count(n) ? " [known failure]" : "");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
