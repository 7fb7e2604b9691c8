"""Weighted abstract simplicial complexes.

A simplex is a sorted tuple of vertices; vertices may be any orderable
hashable (plain ints for static graphs, (node, slice) pairs for
spatiotemporal complexes).  Complexes are stored face-closed with a
codimension-1 coface index and a positive weight per simplex.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from .errors import DomainError

Vertex = Hashable
Simplex = tuple


def simplex(vertices: Iterable[Vertex]) -> Simplex:
    """Canonical form: sorted, duplicate-free vertex tuple."""
    s = tuple(sorted(set(vertices)))
    if not s:
        raise DomainError("a simplex needs at least one vertex")
    return s


def faces_of(s: Simplex) -> list[Simplex]:
    """Codimension-1 faces, obtained by dropping one vertex."""
    if len(s) == 1:
        return []
    return [s[:k] + s[k + 1 :] for k in range(len(s))]


def close_under_faces(simplices: Iterable[Simplex]) -> set[Simplex]:
    out: set[Simplex] = set()
    for s in simplices:
        for k in range(1, len(s) + 1):
            out.update(itertools.combinations(s, k))
    return out


class WeightedComplex:
    """Face-closed simplicial complex with positive simplex weights.

    The constructor expects canonical simplices and verifies face closure;
    use close_under_faces for convenience when only top cells are known.
    """

    def __init__(
        self,
        simplices: Iterable[Simplex],
        weights: Mapping[Simplex, float] | None = None,
    ):
        sset = set(simplices)
        by_dim: dict[int, list[Simplex]] = defaultdict(list)
        for s in sset:
            if not isinstance(s, tuple) or not s:
                raise DomainError(f"not a simplex: {s!r}")
            if tuple(sorted(set(s))) != s:
                raise DomainError(f"simplex not canonical: {s!r}")
            by_dim[len(s) - 1].append(s)
        cofaces: dict[Simplex, list[Simplex]] = {s: [] for s in sset}
        for s in sset:
            for f in faces_of(s):
                if f not in sset:
                    raise DomainError(f"missing face {f!r} of {s!r}")
                cofaces[f].append(s)
        self._set = frozenset(sset)
        self._by_dim = {d: tuple(sorted(v)) for d, v in sorted(by_dim.items())}
        self._cofaces = {s: tuple(sorted(v)) for s, v in cofaces.items()}
        w = {}
        for s in sset:
            ws = 1.0 if weights is None else float(weights.get(s, 1.0))
            if not ws > 0:
                raise DomainError(f"weight of {s!r} must be positive, got {ws}")
            w[s] = ws
        self._weights = w

    # -- structure -------------------------------------------------------

    def __contains__(self, s: Simplex) -> bool:
        return s in self._set

    def __len__(self) -> int:
        return len(self._set)

    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices(self, dim: int | None = None) -> Iterator[Simplex]:
        """Deterministic (dimension, lexicographic) iteration order."""
        if dim is not None:
            yield from self._by_dim.get(dim, ())
            return
        for d in sorted(self._by_dim):
            yield from self._by_dim[d]

    def counts(self) -> dict[int, int]:
        return {d: len(v) for d, v in self._by_dim.items()}

    def faces_of(self, s: Simplex) -> list[Simplex]:
        if s not in self._set:
            raise KeyError(s)
        return faces_of(s)

    def cofaces_of(self, s: Simplex) -> tuple[Simplex, ...]:
        """Codimension-1 cofaces (one dimension up, containing s)."""
        try:
            return self._cofaces[s]
        except KeyError:
            raise KeyError(s) from None

    # -- weights ---------------------------------------------------------

    def weight(self, s: Simplex) -> float:
        try:
            return self._weights[s]
        except KeyError:
            raise KeyError(s) from None

    def weights(self) -> dict[Simplex, float]:
        return dict(self._weights)

    def reweighted(
        self, weights: Mapping[Simplex, float] | Callable[[Simplex], float]
    ) -> "WeightedComplex":
        if callable(weights):
            weights = {s: weights(s) for s in self._set}
        return WeightedComplex(self._set, weights)

    def unit_weighted(self) -> "WeightedComplex":
        return self.reweighted(lambda s: 1.0)

    # -- invariants ------------------------------------------------------

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(v) for d, v in self._by_dim.items())


def euler_of(simplices: Iterable[Simplex]) -> int:
    """Alternating simplex count of a plain simplex set."""
    chi = 0
    for s in simplices:
        chi += -1 if len(s) % 2 == 0 else 1
    return chi


def _bron_kerbosch(adj: dict[Vertex, set[Vertex]]) -> list[set[Vertex]]:
    """Maximal cliques via Bron-Kerbosch with pivoting."""
    cliques: list[set[Vertex]] = []

    def bk(r: set, p: set, x: set):
        if not p and not x:
            cliques.append(r)
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            bk(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    if adj:
        bk(set(), set(adj), set())
    return cliques


def flag_complex(
    edges: Iterable[Simplex],
    max_dim: int | None = None,
    extra_vertices: Iterable[Vertex] = (),
) -> WeightedComplex:
    """Clique complex of the graph with the given edges, all weights 1.

    max_dim, when given, truncates the complex to simplices of at most
    that dimension.
    """
    if max_dim is not None and max_dim < 0:
        raise DomainError(f"max_dim must be >= 0, got {max_dim}")
    adj: dict[Vertex, set[Vertex]] = defaultdict(set)
    for v in extra_vertices:
        adj.setdefault(v, set())
    for e in edges:
        u, v = simplex(e)  # validates 2 distinct vertices
        adj[u].add(v)
        adj[v].add(u)
    simplices: set[Simplex] = set()
    for clique in _bron_kerbosch(dict(adj)):
        cap = len(clique) if max_dim is None else min(len(clique), max_dim + 1)
        ordered = sorted(clique)
        for k in range(1, cap + 1):
            simplices.update(itertools.combinations(ordered, k))
    return WeightedComplex(simplices)


def parallels(cx: WeightedComplex, alpha: Simplex) -> list[Simplex]:
    """Same-dimension neighbors of alpha that count in Forman's curvature.

    Two distinct p-simplices are parallel when exactly one of these holds:
    they share a codimension-1 coface, or they share a codimension-1 face.
    On a simplicial complex with p >= 1 a shared coface forces a shared
    face, so the test reduces to: common face, and the union is not a
    simplex.  For p = 0 there are no codimension-1 faces and only the
    shared-coface clause applies, making vertices parallel to their graph
    neighbors.
    """
    if alpha not in cx:
        raise KeyError(alpha)
    p = len(alpha) - 1
    if p == 0:
        v = alpha[0]
        return sorted((x,) for e in cx.cofaces_of(alpha) for x in e if x != v)
    out: set[Simplex] = set()
    aset = set(alpha)
    for gamma in faces_of(alpha):
        for beta in cx.cofaces_of(gamma):
            if beta == alpha:
                continue
            if tuple(sorted(aset | set(beta))) not in cx:
                out.add(beta)
    return sorted(out)


def parallel_edges(cx: WeightedComplex, e: Simplex) -> list[Simplex]:
    """Edges sharing exactly one endpoint with e and no common triangle."""
    if len(e) != 2 or e not in cx:
        raise KeyError(e)
    out = []
    eset = set(e)
    for v in e:
        for other in cx.cofaces_of((v,)):
            if other == e:
                continue
            if tuple(sorted(eset | set(other))) not in cx:
                out.append(other)
    return sorted(out)


def persistent_complex(a: WeightedComplex, b: WeightedComplex) -> WeightedComplex:
    """Simplices present in both snapshots, compared by node set.

    Both arguments must be single-slice complexes over (node, slice)
    vertices; the result lives on bare node ids with unit weights.
    """

    def strip(cx: WeightedComplex) -> set[Simplex]:
        out = set()
        for s in cx.simplices():
            out.add(tuple(sorted(v[0] for v in s)))
        return out

    return WeightedComplex(strip(a) & strip(b))
