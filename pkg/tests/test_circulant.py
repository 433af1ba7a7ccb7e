import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramseycert.certificate import ColoringCertificate, builtin_certificate
from ramseycert.circulant import (
    CirculantGraph,
    VertexSet,
    circular_distance,
    color_graph,
    edge_color,
    induced_neighbors,
    neighborhood,
)

from strategies import certificates, graphs


@pytest.mark.parametrize("i, j, n, d", [(0, 162, 163, 1), (1, 162, 163, 2), (0, 85, 170, 85), (3, 10, 163, 7), (10, 3, 163, 7)])
def test_circular_distance(i, j, n, d):
    assert circular_distance(i, j, n) == d


def test_circular_distance_rejects_self_pair():
    with pytest.raises(ValueError):
        circular_distance(4, 4, 9)


@given(st.integers(3, 300).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1), st.integers(0, 1000))))
def test_circular_distance_symmetric_and_rotation_invariant(case):
    n, i, j, k = case
    if i == j:
        return
    d = circular_distance(i, j, n)
    assert 1 <= d <= n // 2
    assert d == circular_distance(j, i, n)
    assert d == circular_distance((i + k) % n, (j + k) % n, n)


def test_neighborhood_small():
    assert neighborhood(CirculantGraph(5, (1,)), 0).to_list() == [1, 4]
    assert neighborhood(CirculantGraph(6, (3,)), 2).to_list() == [5]


def test_neighborhood_r4_16_color_1():
    g = color_graph(builtin_certificate("r4_16"), 1)
    assert len(g.neighborhood(0)) == 40
    assert g.degree() == 2 * len(g.distances)


def test_neighborhood_of_zero_size_with_antipode():
    g = CirculantGraph(10, (1, 5))
    assert len(g.neighborhood_of_zero) == 3


def test_distance_out_of_range_rejected():
    with pytest.raises(ValueError):
        CirculantGraph(7, (4,))


@given(graphs(max_n=40), st.integers(0, 39))
def test_rotation_equivariance(case, v):
    n, ds = case
    v %= n
    g = CirculantGraph(n, ds)
    expected = {(u + v) % n for u in g.neighborhood(0)}
    assert set(g.neighborhood(v)) == expected


@given(graphs(max_n=30))
def test_neighborhood_definition_and_symmetry(case):
    n, ds = case
    g = CirculantGraph(n, ds)
    for v in range(n):
        nv = g.neighborhood(v)
        assert set(nv) == {(v + d) % n for d in ds} | {(v - d) % n for d in ds}
        for u in nv:
            assert v in g.neighborhood(u)
    for u in range(1, n):
        assert (u in g.neighborhood_of_zero) == (min(u, n - u) in ds)


@given(certificates(max_colors=2, max_n=30))
def test_complement_consistency(cert):
    n = cert.n
    red, blue = color_graph(cert, 1), color_graph(cert, 2)
    full = VertexSet.full(n)
    for v in range(n):
        assert blue.neighborhood(v) == full - VertexSet.of(n, [v]) - red.neighborhood(v)


def test_edge_color_r3_3_9():
    cert = builtin_certificate("r3_3_9")
    assert edge_color(cert, 0, 1) == 1
    assert edge_color(cert, 0, 19) == 2
    assert edge_color(cert, 19, 0) == 2


def test_edge_color_small():
    cert = ColoringCertificate(5, ((1,), (2,)), (3, 3))
    assert edge_color(cert, 1, 3) == 2


def test_induced_neighbors():
    within = VertexSet.of(7, [1, 2, 6])
    assert induced_neighbors(CirculantGraph(7, (1,)), 0, within).to_list() == [1, 6]
    assert induced_neighbors(CirculantGraph(5, (1, 2)), 0, VertexSet.of(5, [1, 2, 3])).to_list() == [1, 2, 3]
    assert not induced_neighbors(CirculantGraph(5, (1, 2)), 0, VertexSet(5))


def test_vertex_set_ops():
    a = VertexSet.of(8, [0, 3, 7])
    b = VertexSet.of(8, [3, 4])
    assert len(a) == 3 and 3 in a and 4 not in a and 9 not in a
    assert (a & b).to_list() == [3]
    assert (a | b).to_list() == [0, 3, 4, 7]
    assert (a - b).to_list() == [0, 7]
    assert a.rotate(1).to_list() == [0, 1, 4]
    with pytest.raises(ValueError):
        a & VertexSet(9)
    with pytest.raises(ValueError):
        VertexSet.of(4, [4])
