import pytest

from bergefree import Graph, catalog
from bergefree.orderly import Budget, BudgetExhausted
from bergefree.ramsey import (
    RamseyExceedsCap,
    TwoColoring,
    edge_size_threshold,
    mono_copy,
    ramsey_number,
    threshold_table,
)

from oracles import avoiding_colourings

K2, K3, K4 = (catalog.complete(r) for r in (2, 3, 4))
P3 = catalog.path(3)
C4 = catalog.cycle(4)
K2_PLUS_K1 = Graph(3, ((0, 1),))

# counts of labelled colourings of K_n (n = 1, 2, ...) avoiding a colour-1 F and a colour-2 G,
# computed by enumerating all 2^C(n,2) colourings
AVOIDING_COUNTS = {
    ("P_3", "P_3"): [1, 2, 0],
    ("K_3", "P_3"): [1, 2, 3, 3, 0],
    ("K_3", "K_3"): [1, 2, 6, 18, 12, 0],
    ("P_3", "K_2+K_1"): [1, 2, 0],
}
GRAPHS = {"P_3": P3, "K_3": K3, "K_2+K_1": K2_PLUS_K1}


@pytest.mark.parametrize("key", sorted(AVOIDING_COUNTS))
def test_value_is_first_level_without_survivors(key):
    F, G = (GRAPHS[k] for k in key)
    counts = AVOIDING_COUNTS[key]
    assert ramsey_number(F, G).value == len(counts)


@pytest.mark.parametrize(
    "F, G, value",
    [
        (P3, P3, 3),
        (K3, P3, 5),
        (K3, K3, 6),
        (C4, C4, 6),
        (P3, K2_PLUS_K1, 3),
        (K2, Graph(2), 2),
    ],
)
def test_known_values(F, G, value):
    res = ramsey_number(F, G)
    assert res.value == value
    assert res.witness.n == value - 1
    assert mono_copy(res.witness, F, G) is None


def test_oracle_at_r_and_r_minus_one():
    assert avoiding_colourings(4, K3, P3) and not avoiding_colourings(5, K3, P3)
    assert avoiding_colourings(2, P3, P3) and not avoiding_colourings(3, P3, P3)


def test_k3_k4():
    assert ramsey_number(K3, K4).value == 9


def test_symmetry():
    assert ramsey_number(K3, P3).value == ramsey_number(P3, K3).value
    assert ramsey_number(C4, K3).value == ramsey_number(K3, C4).value


def test_subgraph_monotone():
    # P_3 is a subgraph of K_3, so R(P_3, G) <= R(K_3, G)
    for G in (P3, K3):
        assert ramsey_number(P3, G).value <= ramsey_number(K3, G).value


def test_edge_size_threshold_matches_direct_call():
    assert edge_size_threshold(K3, (0, 1)) == ramsey_number(K3, P3).value == 5
    assert edge_size_threshold(P3, (0, 1)) == 3


def test_threshold_table_rows():
    rows = threshold_table(K3)
    assert [r.value for r in rows] == [5, 5, 5]
    assert all(mono_copy(r.witness, K3, K3.without_edge(r.edge)) is None for r in rows)


def test_cap_exceeded_reports_lower_bound():
    with pytest.raises(RamseyExceedsCap) as info:
        ramsey_number(K3, K3, cap=5)
    assert info.value.lower_bound == 6
    rows = threshold_table(K3, cap=4, edges=[(0, 1)])
    assert rows[0].value is None and rows[0].lower_bound == 5


def test_budget_exhaustion():
    with pytest.raises(BudgetExhausted):
        ramsey_number(K3, K3, budget=Budget(3))


def test_colouring_text_round_trip():
    c = ramsey_number(K3, K3).witness
    text = c.to_text()
    assert text.startswith("# n=5\n")
    assert TwoColoring.from_text(text) == c
    assert c.swapped().swapped() == c
    assert c.color_graph(2) == c.red.complement()


def test_colouring_text_validation():
    with pytest.raises(ValueError):
        TwoColoring.from_text("# n=3\n0 1 1\n")
    with pytest.raises(ValueError):
        TwoColoring.from_text("# n=2\n0 1 3\n")
