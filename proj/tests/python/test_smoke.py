import json

import pytest

import skillmc


def test_formula_round_trip():
    f = skillmc.parse_formula("(p -> C_{a,b,c} q)")
    assert str(f) == "(p -> C_{a,b,c} q)"
    assert len(f) == 13
    assert skillmc.formula_length("(p -> C_{a,b,c} q)") == 13
    assert f == skillmc.Formula("p -> C_{c,b,a} q")
    assert hash(f) == hash(skillmc.Formula("p -> C_{c,b,a} q"))
    assert f.agents == {"a", "b", "c"}
    assert skillmc.fragment("F_{a,b} (+{s1})_a p") == "L_{F+}"


def test_syntax_errors():
    with pytest.raises(skillmc.SyntaxError):
        skillmc.parse_formula("K_a (p")
    with pytest.raises(skillmc.FormulaError):
        skillmc.parse_formula("C_{} p")


def test_demo_model_checks():
    m = skillmc.demo_model()
    assert m.worlds == ["w1", "w2", "w3", "w4", "w5"]
    assert m.edge_skills("w5", "w1") == {"s1"}
    assert skillmc.holds(m, "w2", "K_a p3")
    assert not skillmc.holds(m, "w5", "K_a p4")
    assert skillmc.holds(m, "w5", "(+{s4})_a K_a p4")
    assert "w4" in skillmc.truth_set(m, "D_{a,b}(~p1 & p4)")
    assert skillmc.truth_set(m, "C_{a,c} p1") == skillmc.common_oracle(m, {"a", "c"}, "p1")
    assert skillmc.implicit_de_re(m, "w5", "a", "p4")
    with pytest.raises(skillmc.UnknownWorldError):
        skillmc.holds(m, "w9", "p1")


def test_model_building_and_updates():
    m = skillmc.Model(["w", "u"])
    m.set_edge("w", "u", {"s1"}).set_valuation("u", {"p"}).set_capability("a", {"s1"})
    assert skillmc.holds(m, "w", "K_a p")
    assert not skillmc.holds(m, "w", "(={s2})_a ~K_a false")
    assert m.add_skills("a", {"s2"}).capability("a") == {"s1", "s2"}
    assert m.remove_skills("a", {"s1"}).capability("a") == set()
    assert m.copy_skills("b", "a").capability("b") == {"s1"}
    with pytest.raises(skillmc.ConflictError):
        m.set_edge("u", "w", {"s2"})
    back = skillmc.load_model(m.to_json())
    assert back == m
    assert json.loads(skillmc.save_model(m))["worlds"] == ["w", "u"]


def test_reduction():
    g = skillmc.RootedGraph(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")], "x")
    assert skillmc.ueg_winner(g) == "PlayerOne"
    for variant in ("plus", "box", "minus"):
        assert skillmc.reduction_check(g, variant) == {
            "game": "PlayerOne", "logic": True, "agree": True}
    assert skillmc.induced_formula(g).fragment == "L_{⊞}"
    k4 = skillmc.load_graph(json.dumps({
        "nodes": ["a", "b", "c", "d"],
        "edges": [["a", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"], ["c", "d"]],
        "root": "a"}))
    with pytest.raises(skillmc.CapExceededError):
        skillmc.reduction_check(k4)
