"""Spatiotemporal prism complexes.

Snapshots of a binned contact sequence become clique complexes over
(node, slice) vertices.  Simplices persisting between two nearby slices
are joined by triangulated prisms, yielding one connected-in-time
simplicial complex whose 1-simplices split into three classes:

  spatial   both endpoints in the same slice
  temporal  same node, two slices
  diagonal  different node and different slice

Non-spatial edges are weighted by a decreasing function of their slice
gap; higher simplices take the geometric mean of their edge weights.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .complexes import Simplex, WeightedComplex, flag_complex, simplex
from .contacts import ContactSequence
from .errors import DomainError


class EdgeClass(str, Enum):
    SPATIAL = "spatial"
    TEMPORAL = "temporal"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class WeightConfig:
    """Weighting rule for non-spatial edges.

    g: "unit", "reciprocal" (1 / (1 + gap)) or "exp" (exp(-rate * gap)).
    Diagonal edges are additionally damped by diagonal_factor.
    """

    g: str = "reciprocal"
    exp_rate: float = 1.0
    diagonal_factor: float = 0.5

    def __post_init__(self):
        if self.g not in ("unit", "reciprocal", "exp"):
            raise DomainError(f"unknown gap weighting {self.g!r}")
        if not (0 < self.diagonal_factor <= 1):
            raise DomainError(
                f"diagonal factor must be in (0, 1], got {self.diagonal_factor}"
            )
        if self.g == "exp" and not self.exp_rate >= 0:
            raise DomainError(f"exp rate must be >= 0, got {self.exp_rate}")

    def g_value(self, gap: int) -> float:
        if gap < 0:
            raise DomainError(f"gap must be >= 0, got {gap}")
        if self.g == "unit":
            return 1.0
        if self.g == "reciprocal":
            return 1.0 / (1.0 + gap)
        return math.exp(-self.exp_rate * gap)

    @classmethod
    def parse(cls, spec: str, diagonal_factor: float = 0.5) -> "WeightConfig":
        """Parse "unit", "reciprocal" or "exp:RATE"."""
        if spec.startswith("exp:"):
            try:
                rate = float(spec.split(":", 1)[1])
            except ValueError:
                raise DomainError(f"bad exp rate in {spec!r}") from None
            return cls(g="exp", exp_rate=rate, diagonal_factor=diagonal_factor)
        return cls(g=spec, diagonal_factor=diagonal_factor)


UNIT_WEIGHTS = WeightConfig(g="unit", diagonal_factor=1.0)


def prism_simplices(nodes: Iterable[int], t: int, t2: int) -> set[Simplex]:
    """All faces of the triangulated prism over a node simplex.

    With nodes v_0 < ... < v_n, bottom copies b_i = (v_i, t) and top
    copies w_i = (v_i, t2), the top cells are
    {b_0, ..., b_i, w_i, ..., w_n} for i = 0..n; every cell contains
    either b_i or w_i for each i, and the whole prism is a cone with
    apex b_0.
    """
    if t >= t2:
        raise DomainError(f"prism needs t < t2, got {t} >= {t2}")
    vs = sorted(set(nodes))
    if not vs:
        raise DomainError("prism over an empty vertex set")
    bottom = [(v, t) for v in vs]
    top = [(v, t2) for v in vs]
    out: set[Simplex] = set()
    for i in range(len(vs)):
        cell = sorted(bottom[: i + 1] + top[i:])
        for k in range(1, len(cell) + 1):
            out.update(itertools.combinations(cell, k))
    return out


def prism(nodes: Iterable[int], t: int, t2: int) -> WeightedComplex:
    """Triangulated prism as a unit-weighted complex; Euler number 1."""
    return WeightedComplex(prism_simplices(nodes, t, t2))


def classify_edge(e: Simplex) -> tuple[EdgeClass, int]:
    """Class and absolute slice gap of a 1-simplex over (node, slice) vertices."""
    (u, su), (v, sv) = e
    gap = abs(su - sv)
    if su == sv:
        return EdgeClass.SPATIAL, 0
    if u == v:
        return EdgeClass.TEMPORAL, gap
    return EdgeClass.DIAGONAL, gap


@dataclass(frozen=True)
class PrismComplex:
    """A spatiotemporal complex with its construction data.

    snapshots maps slice -> clique complex of that slice; pairs lists the
    slice pairs joined by prisms; prisms records every generated
    (node simplex, t, t2) prism for verification.
    """

    complex: WeightedComplex
    snapshots: dict[int, WeightedComplex]
    edge_class: dict[Simplex, EdgeClass]
    time_gap: dict[Simplex, int]
    slice_gap: int
    weights: WeightConfig
    pairs: tuple[tuple[int, int], ...]
    prisms: tuple[tuple[Simplex, int, int], ...]

    @property
    def active_slices(self) -> list[int]:
        return sorted(self.snapshots)

    def classify(self, e: Simplex) -> tuple[EdgeClass, int]:
        try:
            return self.edge_class[e], self.time_gap[e]
        except KeyError:
            raise KeyError(e) from None


def _edge_weight(cls: EdgeClass, gap: int, cfg: WeightConfig) -> float:
    if cls is EdgeClass.SPATIAL:
        return 1.0
    if cls is EdgeClass.TEMPORAL:
        return cfg.g_value(gap)
    return cfg.diagonal_factor * cfg.g_value(gap)


def _compute_weights(
    simplices: Iterable[Simplex],
    edge_class: Mapping[Simplex, EdgeClass],
    time_gap: Mapping[Simplex, int],
    cfg: WeightConfig,
) -> dict[Simplex, float]:
    weights: dict[Simplex, float] = {}
    higher: list[Simplex] = []
    for s in simplices:
        if len(s) == 1:
            weights[s] = 1.0
        elif len(s) == 2:
            weights[s] = _edge_weight(edge_class[s], time_gap[s], cfg)
        else:
            higher.append(s)
    # geometric mean over all constituent 1-faces
    for s in higher:
        ews = [weights[e] for e in itertools.combinations(s, 2)]
        weights[s] = math.prod(ews) ** (1.0 / len(ews))
    return weights


def assign_weights(pc: "PrismComplex", cfg: WeightConfig) -> "PrismComplex":
    """The same complex re-weighted under a different rule."""
    weights = _compute_weights(
        pc.complex.simplices(), pc.edge_class, pc.time_gap, cfg
    )
    return PrismComplex(
        complex=pc.complex.reweighted(weights),
        snapshots=pc.snapshots,
        edge_class=pc.edge_class,
        time_gap=pc.time_gap,
        slice_gap=pc.slice_gap,
        weights=cfg,
        pairs=pc.pairs,
        prisms=pc.prisms,
    )


def unit_weighted(pc: "PrismComplex") -> "PrismComplex":
    return assign_weights(pc, UNIT_WEIGHTS)


def _node_sets(cx: WeightedComplex) -> set[Simplex]:
    return {tuple(sorted(v[0] for v in s)) for s in cx.simplices()}


def build_kst(
    seq: ContactSequence,
    slice_gap: int = 3,
    weights: WeightConfig | None = None,
    max_dim: int | None = None,
    consecutive_only: bool = False,
) -> PrismComplex:
    """Assemble the spatiotemporal prism complex of a binned sequence.

    Every pair of active slices at most slice_gap apart (or only
    consecutive active slices when consecutive_only is set) contributes
    one prism per simplex present in both snapshots.  Times must already
    be integer slices; run ContactSequence.bin first.
    """
    if not isinstance(slice_gap, int) or slice_gap < 1:
        raise DomainError(f"slice gap must be a positive integer, got {slice_gap!r}")
    for e in seq.events:
        if not isinstance(e.t, int):
            raise DomainError(
                f"times must be integer slices (bin the sequence first), got {e.t!r}"
            )
    cfg = WeightConfig() if weights is None else weights

    by_slice: dict[int, list[Simplex]] = {}
    for ev in seq.events:
        by_slice.setdefault(ev.t, []).append(((ev.i, ev.t), (ev.j, ev.t)))
    snapshots = {
        t: flag_complex(edges, max_dim=max_dim) for t, edges in by_slice.items()
    }

    actives = sorted(snapshots)
    if consecutive_only:
        candidates = list(zip(actives, actives[1:]))
    else:
        candidates = [p for p in itertools.combinations(actives, 2)]
    pairs = tuple((t, t2) for t, t2 in candidates if 0 < t2 - t <= slice_gap)

    all_simplices: set[Simplex] = set()
    for cx in snapshots.values():
        all_simplices.update(cx.simplices())
    node_sets = {t: _node_sets(snapshots[t]) for t in actives}
    prisms: list[tuple[Simplex, int, int]] = []
    for t, t2 in pairs:
        for sigma in sorted(node_sets[t] & node_sets[t2]):
            prisms.append((sigma, t, t2))
            all_simplices.update(prism_simplices(sigma, t, t2))

    edge_class: dict[Simplex, EdgeClass] = {}
    time_gap: dict[Simplex, int] = {}
    for s in all_simplices:
        if len(s) == 2:
            cls, gap = classify_edge(s)
            edge_class[s] = cls
            time_gap[s] = gap

    weights_map = _compute_weights(all_simplices, edge_class, time_gap, cfg)
    return PrismComplex(
        complex=WeightedComplex(all_simplices, weights_map),
        snapshots=snapshots,
        edge_class=edge_class,
        time_gap=time_gap,
        slice_gap=slice_gap,
        weights=cfg,
        pairs=pairs,
        prisms=tuple(prisms),
    )
