"""Complex construction, parallels and Euler characteristics.

The parallel-neighbor rule has a brute-force oracle here: two distinct
p-simplices are parallel when exactly one of (shared codimension-1
coface, shared codimension-1 face) holds.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismcurv import (
    DomainError,
    WeightedComplex,
    close_under_faces,
    euler_of,
    faces_of,
    flag_complex,
    parallel_edges,
    parallels,
    persistent_complex,
    simplex,
)

graphs = st.sets(
    st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(lambda e: e[0] != e[1]),
    max_size=12,
)


def brute_parallels(cx, a):
    p = len(a) - 1
    out = []
    for b in cx.simplices(p):
        if b == a:
            continue
        share_co = any(
            set(a) <= set(c) and set(b) <= set(c) for c in cx.simplices(p + 1)
        )
        share_face = p >= 1 and any(
            set(g) <= set(a) and set(g) <= set(b) for g in cx.simplices(p - 1)
        )
        if share_co != share_face:
            out.append(b)
    return sorted(out)


# -- basic structure -----------------------------------------------------


def test_simplex_canonical():
    assert simplex([3, 1, 2, 1]) == (1, 2, 3)
    with pytest.raises(DomainError):
        simplex([])


def test_faces_of():
    assert faces_of((1, 2, 3)) == [(2, 3), (1, 3), (1, 2)]
    assert faces_of((1,)) == []


def test_close_under_faces():
    assert close_under_faces([(1, 2, 3)]) == {
        (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3),
    }


def test_complex_validation():
    with pytest.raises(DomainError, match="canonical"):
        WeightedComplex([(2, 1)])
    with pytest.raises(DomainError, match="missing face"):
        WeightedComplex([(1,), (1, 2)])
    with pytest.raises(DomainError, match="positive"):
        WeightedComplex([(1,)], weights={(1,): 0.0})


def test_empty_complex():
    cx = WeightedComplex([])
    assert len(cx) == 0
    assert cx.dim == -1
    assert cx.euler_characteristic() == 0


def test_structure_queries(triangle):
    assert (1, 2) in triangle
    assert (1, 4) not in triangle
    assert triangle.dim == 2
    assert triangle.counts() == {0: 3, 1: 3, 2: 1}
    assert triangle.cofaces_of((1, 2)) == ((1, 2, 3),)
    assert triangle.cofaces_of((1, 2, 3)) == ()
    with pytest.raises(KeyError):
        triangle.cofaces_of((1, 4))
    with pytest.raises(KeyError):
        triangle.weight((1, 4))


def test_simplices_iteration_deterministic(k4):
    listed = list(k4.simplices())
    assert listed == sorted(listed, key=lambda s: (len(s), s))
    assert list(k4.simplices(1)) == sorted(itertools.combinations(range(4), 2))


def test_reweighted_and_unit(triangle):
    doubled = triangle.reweighted(lambda s: 2.0)
    assert doubled.weight((1, 2)) == 2.0
    partial = triangle.reweighted({(1, 2): 0.5})
    assert partial.weight((1, 2)) == 0.5
    assert partial.weight((1, 3)) == 1.0  # unspecified weights default to 1
    assert partial.unit_weighted().weight((1, 2)) == 1.0


# -- flag complexes ------------------------------------------------------


def test_flag_triangle(triangle):
    assert triangle.counts() == {0: 3, 1: 3, 2: 1}


def test_flag_path(path):
    assert path.counts() == {0: 3, 1: 2}


def test_flag_k4(k4):
    assert k4.counts() == {0: 4, 1: 6, 2: 4, 3: 1}


def test_flag_max_dim():
    capped = flag_complex(itertools.combinations(range(4), 2), max_dim=1)
    assert capped.counts() == {0: 4, 1: 6}
    with pytest.raises(DomainError):
        flag_complex([(1, 2)], max_dim=-1)


def test_flag_extra_vertices():
    cx = flag_complex([(1, 2)], extra_vertices=[5, 6])
    assert (5,) in cx and (6,) in cx
    assert cx.euler_characteristic() == 3  # an edge plus two isolated points


def test_flag_rejects_degenerate_edge():
    with pytest.raises(ValueError):
        flag_complex([(1, 1)])


@settings(max_examples=60)
@given(graphs)
def test_flag_matches_brute_force_cliques(edges):
    cx = flag_complex(edges)
    verts = sorted({v for e in edges for v in e})
    adj = {v: set() for v in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for k in range(1, len(verts) + 1):
        expected = {
            c
            for c in itertools.combinations(verts, k)
            if all(b in adj[a] for a, b in itertools.combinations(c, 2))
        }
        assert set(cx.simplices(k - 1)) == expected


# -- Euler characteristics -----------------------------------------------


def test_euler_values(triangle):
    assert triangle.euler_characteristic() == 1
    boundary = WeightedComplex(
        close_under_faces(itertools.combinations(range(4), 3))
    )
    assert boundary.euler_characteristic() == 2  # sphere
    assert euler_of({(1,), (2,)}) == 2
    assert euler_of(set()) == 0


# -- parallels -----------------------------------------------------------


def test_parallels_path(path):
    assert parallels(path, (1, 2)) == [(2, 3)]
    assert parallel_edges(path, (1, 2)) == [(2, 3)]


def test_parallels_triangle(triangle):
    for e in triangle.simplices(1):
        assert parallels(triangle, e) == []
    assert parallels(triangle, (1,)) == [(2,), (3,)]
    assert parallels(triangle, (1, 2, 3)) == []


def test_parallels_two_triangles(two_triangles):
    assert parallels(two_triangles, (1, 3)) == [(1, 4)]
    assert parallel_edges(two_triangles, (1, 3)) == [(1, 4)]


def test_parallels_tetra_boundary():
    boundary = WeightedComplex(
        close_under_faces(itertools.combinations(range(4), 3))
    )
    for f in boundary.simplices(2):
        assert len(parallels(boundary, f)) == 3


def test_parallels_missing_simplex(triangle):
    with pytest.raises(KeyError):
        parallels(triangle, (1, 4))
    with pytest.raises(KeyError):
        parallel_edges(triangle, (9, 10))


@settings(max_examples=60)
@given(graphs)
def test_parallels_match_brute_force(edges):
    cx = flag_complex(edges)
    for a in cx.simplices():
        assert parallels(cx, a) == brute_parallels(cx, a)


@settings(max_examples=60)
@given(graphs)
def test_parallel_edges_consistent_and_symmetric(edges):
    cx = flag_complex(edges)
    for e in cx.simplices(1):
        assert parallel_edges(cx, e) == parallels(cx, e)
        for other in parallels(cx, e):
            assert e in parallels(cx, other)


# -- persistent intersections --------------------------------------------


def snapshot(edges, t):
    return flag_complex([((a, t), (b, t)) for a, b in edges])


def test_persistent_identical():
    a = snapshot([(1, 2), (2, 3), (1, 3)], 0)
    b = snapshot([(1, 2), (2, 3), (1, 3)], 4)
    inter = persistent_complex(a, b)
    assert inter.counts() == {0: 3, 1: 3, 2: 1}


def test_persistent_disjoint_edges_share_nodes():
    a = snapshot([(1, 2), (3, 4)], 0)
    b = snapshot([(1, 3), (2, 4)], 1)
    inter = persistent_complex(a, b)
    assert inter.counts() == {0: 4}  # shared nodes only, no shared edges


def test_persistent_triangle_vs_edge():
    a = snapshot([(1, 2), (2, 3), (1, 3)], 0)
    b = snapshot([(1, 2)], 1)
    inter = persistent_complex(a, b)
    assert inter.counts() == {0: 2, 1: 1}
    assert inter.euler_characteristic() == 1
