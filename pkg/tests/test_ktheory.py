"""K-groups of the boundary algebras and the inductive limit ladders."""

import random
from fractions import Fraction

import pytest

from conftest import build, goldenmean, random_graph, reducible3
from rotshift.graph import symbol_matrices
from rotshift.graph import full_shift_graph
from rotshift.intlinalg import IntMatrix, smith_normal_form
from rotshift.ktheory import (
    bunce_deddens_data,
    core_dimension_data,
    displacement_matrix,
    fullshift_k_groups,
    graph_k_groups,
    scaled_equal,
    scaled_nonnegative,
    scaled_normal_form,
    scaled_value,
)
from rotshift.oracles import integer_determinant


def test_full_shift_k_groups():
    for n in range(2, 7):
        direct = fullshift_k_groups(n)
        via_graph = graph_k_groups(full_shift_graph(n))
        assert direct.k0 == via_graph.k0 == via_graph.k1
        expected = "0" if n == 2 else f"Z/{n - 1}"
        assert str(direct.k0) == expected


def test_goldenmean_k_trivial():
    graph, _ = goldenmean()
    kg = graph_k_groups(graph)
    assert kg.k0.is_trivial() and kg.k1.is_trivial()


def test_permutation_cycle_gives_free_part():
    graph = build(("v1", "v2"), (("v1", "v2", "a"), ("v2", "v1", "b")))
    kg = graph_k_groups(graph)
    assert str(kg.k0) == "Z^2"
    assert kg.k0 == kg.k1


def test_k0_equals_k1_always():
    rng = random.Random(2024)
    for _ in range(30):
        graph = random_graph(rng)
        kg = graph_k_groups(graph)
        assert kg.k0 == kg.k1


def test_torsion_order_is_absolute_determinant():
    rng = random.Random(451)
    checked = 0
    for _ in range(40):
        graph = random_graph(rng)
        m = displacement_matrix(graph)
        det = integer_determinant(m)
        if det == 0:
            continue
        checked += 1
        kg = graph_k_groups(graph)
        assert kg.k0.free_rank == 0
        assert kg.k0.torsion_order() == abs(det)
    assert checked >= 10


def test_reducible3_k_groups():
    graph, _ = reducible3()
    # I - A = [[0,-1,0],[0,1,-1],[0,0,0]]: rank 2, no torsion, kernel rank 1
    kg = graph_k_groups(graph)
    assert str(kg.k0) == "Z^2"


def test_to_json():
    kg = fullshift_k_groups(4)
    j = kg.to_json()
    assert j == {"K0": "Z/3", "K1": "Z/3", "criterion": kg.criterion}


# -- stationary dimension ladders ------------------------------------------------


def test_core_dimension_data_shapes():
    graph, _ = reducible3()
    data = core_dimension_data(graph, 3)
    n = graph.vertex_count
    assert len(data.k0_levels) == 4
    assert all(p.free_rank == n and not p.torsion for p in data.k0_levels)
    # the connecting map is the transpose of the adjacency in both degrees
    adjacency = IntMatrix.from_rows([list(r) for r in symbol_matrices(graph).adjacency])
    assert adjacency.entries != adjacency.transpose().entries  # asymmetric on purpose
    for m in data.k0_maps + data.k1_maps:
        assert m.entries == adjacency.transpose().entries
    assert data.k0_limit is None and data.k1_limit is None


def test_core_composed_maps():
    graph, _ = goldenmean()
    data = core_dimension_data(graph, 4)
    # composing levels 0..2 equals the square of the transpose adjacency
    two = data.composed_k0(0, 2)
    single = data.k0_maps[0]
    assert two.entries == single.mul(single).entries


def test_bunce_deddens_ladder():
    data = bunce_deddens_data(3, 4)
    assert [m.to_lists() for m in data.k0_maps] == [[[3]]] * 4
    assert [m.to_lists() for m in data.k1_maps] == [[[1]]] * 4
    assert data.k0_limit == "Z[1/3]"
    assert data.k1_limit == "Z"
    assert data.order_unit == (1,)
    j = data.to_json()
    assert j["K0_limit"] == "Z[1/3]" and j["K1_limit"] == "Z"
    assert j["order_unit"] == [1]


def test_scaled_integer_arithmetic():
    # a at level m stands for a / n^m in the limit
    assert scaled_value(3, 1, 2) == Fraction(3, 2)
    assert scaled_equal(3, 1, 6, 2, 2)
    assert not scaled_equal(3, 1, 5, 2, 2)
    assert scaled_normal_form(6, 2, 2) == (3, 1)
    assert scaled_normal_form(4, 2, 2) == (1, 0)
    assert scaled_nonnegative(0, 3, 2)
    assert scaled_nonnegative(7, 2, 3)
    assert not scaled_nonnegative(-1, 2, 3)


def test_scaled_identification_random():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.choice([2, 3])
        a = rng.randint(-50, 50)
        m = rng.randint(0, 6)
        # the defining identification: a@m == (n*a)@(m+1)
        assert scaled_equal(a, m, n * a, m + 1, n)
        assert scaled_value(a, m, n) == scaled_value(n * a, m + 1, n)
