import pytest

from conftest import brute_max_clique_size
from minorforge.analysis import clique_number, is_alpha_le_2
from minorforge.errors import UnknownName
from minorforge.generators import (
    GeneratorSpec,
    c5_blowup_complement,
    generate,
    named_graph,
    triangle_free_process_complement,
    two_clique_complement,
)
from minorforge.graph import Graph, complement
from minorforge.rng import trial_rng


def test_tfp_always_alpha2():
    for i in range(10):
        n = 5 + 3 * i
        g = triangle_free_process_complement(n, trial_rng(1, i))
        assert g.n == n and is_alpha_le_2(g)


def test_tfp_complement_is_maximal_triangle_free():
    g = triangle_free_process_complement(15, trial_rng(2))
    h = complement(g)
    # triangle-free
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if h.has_edge(u, v):
                assert not (h.adj[u] & h.adj[v])
    # maximal: every non-edge closes a triangle
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if not h.has_edge(u, v):
                assert h.adj[u] & h.adj[v], (u, v)


def test_tfp_deterministic():
    a = triangle_free_process_complement(20, trial_rng(5))
    b = triangle_free_process_complement(20, trial_rng(5))
    c = triangle_free_process_complement(20, trial_rng(6))
    assert a == b and a != c


def test_tfp_tiny():
    g = triangle_free_process_complement(3, trial_rng(0))
    assert is_alpha_le_2(g)


def test_c5_blowup_t1_is_c5():
    g = c5_blowup_complement(1)
    c5 = named_graph("c5")
    assert g.n == 5 and g.edge_count == 5
    assert all(g.degree(v) == 2 for v in range(5))
    assert is_alpha_le_2(g)  # 2-regular 5-vertex alpha<=2 graph must be C5
    assert clique_number(g) == clique_number(c5) == 2


def test_c5_blowup_t2():
    g = c5_blowup_complement(2)
    assert g.n == 10
    assert is_alpha_le_2(g)
    assert clique_number(g) == 4 == brute_max_clique_size(g)


def test_c5_blowup_omega_formula():
    for t in (1, 2, 3):
        g = c5_blowup_complement(t)
        assert is_alpha_le_2(g)
        assert clique_number(g) == 2 * t


def test_two_clique_complement():
    g = two_clique_complement(3, 4)
    assert g.n == 7 and is_alpha_le_2(g)
    assert clique_number(g) == 4
    assert complement(g).edge_count == 12  # K_{3,4}


def test_named_five_wheel():
    g = named_graph("five_wheel")
    assert g.n == 6 and g.edge_count == 10


def test_named_petersen_complement():
    g = named_graph("petersen_complement")
    assert is_alpha_le_2(g)
    assert clique_number(g) == 4 == brute_max_clique_size(g)


def test_named_circulant_instance():
    g = named_graph("circulant13_minus_one_complement")
    assert g.n == 12
    assert is_alpha_le_2(g)
    assert clique_number(g) == 4 == brute_max_clique_size(g)


def test_named_k_n():
    g = named_graph("k_n", 6)
    assert g.edge_count == 15
    with pytest.raises(UnknownName):
        named_graph("k_n")


def test_named_unknown():
    with pytest.raises(UnknownName):
        named_graph("dodecahedron")


def test_generate_dispatch():
    assert generate(GeneratorSpec(family="tfp", n=10, seed=3)).n == 10
    assert generate(GeneratorSpec(family="c5blowup", t=2)).n == 10
    assert generate(GeneratorSpec(family="two_clique", sizes=(2, 3))).n == 5
    assert generate(GeneratorSpec(family="named", name="c5")).n == 5
    with pytest.raises(ValueError):
        generate(GeneratorSpec(family="mystery"))
