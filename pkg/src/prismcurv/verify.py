"""Verification suite for a built spatiotemporal complex.

Each check re-derives a closed-form identity from first principles and
compares it against direct evaluation.  Hard checks gate the run; the
Euler-number comparison of the alternating curvature sum is report-only
because the literal vertex normalization does not satisfy it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .complexes import euler_of, parallel_edges, persistent_complex
from .curvature import (
    TOL_EXACT,
    TOL_WEIGHTED,
    alternating_forman_sum,
    coupling_decomposition,
    discrepancy_bound,
    discrepancy_closed_form,
    forman_augmented,
    forman_curvature,
    forman_edge,
)
from .prisms import EdgeClass, PrismComplex, prism_simplices, unit_weighted

ORACLE_SIZE_CAP = 5000


@dataclass(frozen=True)
class CheckResult:
    name: str
    hard: bool
    population: int
    violations: int
    max_error: float
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "hard": self.hard,
            "population": self.population,
            "violations": self.violations,
            "max_error": self.max_error,
            "notes": self.notes,
        }


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]
    gauss_bonnet: dict = field(default_factory=dict)

    @property
    def hard_failures(self) -> int:
        return sum(1 for c in self.checks if c.hard and not c.passed)

    @property
    def passed(self) -> bool:
        return self.hard_failures == 0

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "hard_failures": self.hard_failures,
            "checks": [c.to_dict() for c in self.checks],
            "gauss_bonnet": self.gauss_bonnet,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def summary_lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            kind = "hard" if c.hard else "report"
            out.append(
                f"{status} [{kind}] {c.name}: {c.violations}/{c.population} "
                f"violations, max error {c.max_error:.3g}"
                + (f" ({c.notes})" if c.notes else "")
            )
        return out


def _node_pair_sets(pc: PrismComplex) -> dict[int, set]:
    """Per slice, the simplices of the snapshot as bare node tuples."""
    out = {}
    for t, snap in pc.snapshots.items():
        out[t] = {tuple(sorted(v[0] for v in s)) for s in snap.simplices()}
    return out


def monotonicity_qualifies(
    pc: PrismComplex, e, node_sets: dict[int, set] | None = None
) -> bool:
    """Persistence conditions under which the prism contribution to a
    spatial edge cannot be negative (unit weights).

    (A1) the node pair is present in the neighboring active slices on
    both sides; (A2) every prism-borne parallel edge comes from a
    persistent simplex containing both endpoints of e plus the far node.
    """
    if node_sets is None:
        node_sets = _node_pair_sets(pc)
    cx = pc.complex
    t = e[0][1]
    actives = pc.active_slices
    k = actives.index(t)
    (u, _), (v, _) = e
    pair = tuple(sorted((u, v)))
    if k == 0 or k == len(actives) - 1:
        return False
    if pair not in node_sets[actives[k - 1]] or pair not in node_sets[actives[k + 1]]:
        return False
    snap = pc.snapshots[t]
    for ehat in parallel_edges(cx, e):
        if ehat in snap:
            continue
        far = next(x for x in ehat if x[1] != t)
        y, tl = far
        tri = tuple(sorted({u, v, y}))
        if tri not in node_sets[t] or tri not in node_sets[tl]:
            return False
    return True


def inclusion_exclusion_euler(
    pc: PrismComplex, size_cap: int = ORACLE_SIZE_CAP
) -> int | None:
    """Euler number via inclusion-exclusion over snapshots and prism stacks.

    The cover consists of every snapshot and, per joined slice pair, the
    union of its prisms.  Empty intersections prune the subset walk, so
    only slice-sharing families contribute.  Returns None above the size
    cap.
    """
    cx = pc.complex
    if len(cx) > size_cap:
        return None
    cover = [frozenset(pc.snapshots[t].simplices()) for t in pc.active_slices]
    stacks: dict[tuple[int, int], set] = {}
    for sigma, t, t2 in pc.prisms:
        stacks.setdefault((t, t2), set()).update(prism_simplices(sigma, t, t2))
    for key in sorted(stacks):
        cover.append(frozenset(stacks[key]))
    union: set = set()
    for part in cover:
        union |= part
    if union != set(cx.simplices()):
        raise RuntimeError("cover does not reconstruct the complex")
    total = 0

    def rec(start: int, inter: frozenset | None, sign: int):
        nonlocal total
        for a in range(start, len(cover)):
            nxt = cover[a] if inter is None else inter & cover[a]
            if not nxt:
                continue
            total += sign * euler_of(nxt)
            rec(a + 1, nxt, -sign)

    rec(0, None, 1)
    return total


def gauss_bonnet_report(
    pc: PrismComplex, oracle_cap: int = ORACLE_SIZE_CAP
) -> dict:
    """Alternating curvature sum against Euler-number bookkeeping.

    residual_c1 and residual_c2 are the remainders implied by pairing
    chi with the snapshot sum minus 1x or 2x the persistent-pair sum;
    neither is asserted, both are reported.
    """
    unit = unit_weighted(pc)
    forman_sum = alternating_forman_sum(unit.complex)
    chi = pc.complex.euler_characteristic()
    chi_snapshots = sum(
        pc.snapshots[t].euler_characteristic() for t in pc.active_slices
    )
    chi_pairs = sum(
        persistent_complex(pc.snapshots[t], pc.snapshots[t2]).euler_characteristic()
        for t, t2 in pc.pairs
    )
    oracle = inclusion_exclusion_euler(pc, oracle_cap)
    return {
        "forman_alternating_sum": forman_sum,
        "chi_kst": chi,
        "sum_chi_snapshots": chi_snapshots,
        "sum_chi_pair_intersections": chi_pairs,
        "residual_c1": chi - chi_snapshots + chi_pairs,
        "residual_c2": chi - chi_snapshots + 2 * chi_pairs,
        "oracle_chi": oracle,
        "oracle_note": "" if oracle is not None else "skipped: complex above size cap",
    }


def run_suite(pc: PrismComplex, oracle_cap: int = ORACLE_SIZE_CAP) -> VerificationReport:
    """Run every identity check on the complex and its unit re-weighting."""
    checks: list[CheckResult] = []
    unit = unit_weighted(pc)
    cx, ucx = pc.complex, unit.complex
    edges = list(cx.simplices(1))
    node_sets = _node_pair_sets(pc)

    # reduced edge form against literal evaluation, both weightings
    worst = 0.0
    bad = 0
    for c in (cx, ucx):
        for e in edges:
            err = abs(forman_edge(c, e) - forman_curvature(c, e))
            worst = max(worst, err)
            if err > TOL_EXACT:
                bad += 1
    checks.append(
        CheckResult("reduced_matches_literal", True, 2 * len(edges), bad, worst)
    )

    # unit weights: original and augmented collapse to 2 + triangles - parallels
    worst = 0.0
    bad = 0
    for e in edges:
        f = forman_edge(ucx, e)
        f_aug = forman_augmented(ucx, e)
        formula = 2.0 + len(ucx.cofaces_of(e)) - len(parallel_edges(ucx, e))
        err = max(abs(f - f_aug), abs(f - formula))
        worst = max(worst, err)
        if err > TOL_EXACT:
            bad += 1
    checks.append(CheckResult("uniform_agreement", True, len(edges), bad, worst))

    # per-edge evaluations under the configured weights
    diffs = {}
    for e in edges:
        diffs[e] = forman_edge(cx, e) - forman_augmented(cx, e)

    spatial = [e for e in edges if pc.edge_class[e] is EdgeClass.SPATIAL]
    worst = max((abs(diffs[e]) for e in spatial), default=0.0)
    bad = sum(1 for e in spatial if abs(diffs[e]) > TOL_WEIGHTED)
    checks.append(CheckResult("spatial_agreement", True, len(spatial), bad, worst))

    disagree = [e for e in edges if abs(diffs[e]) > TOL_WEIGHTED]
    bad = sum(1 for e in disagree if pc.edge_class[e] is EdgeClass.SPATIAL)
    checks.append(
        CheckResult(
            "disagreement_class",
            True,
            len(disagree),
            bad,
            0.0,
            notes="disagreeing edges must be temporal or diagonal",
        )
    )

    worst = 0.0
    bad = 0
    for e in edges:
        err = abs(abs(diffs[e]) - abs(discrepancy_closed_form(cx, e)))
        worst = max(worst, err)
        if err > TOL_WEIGHTED:
            bad += 1
    checks.append(CheckResult("closed_form_magnitude", True, len(edges), bad, worst))

    worst = 0.0
    bad = 0
    for e in edges:
        slack = abs(diffs[e]) - discrepancy_bound(cx, e)
        worst = max(worst, slack)
        if slack > TOL_WEIGHTED:
            bad += 1
    checks.append(CheckResult("bound_inequality", True, len(edges), bad, worst))

    nonspatial_disagree = [
        e for e in disagree if pc.edge_class[e] is not EdgeClass.SPATIAL
    ]
    signs = {1 if diffs[e] > 0 else -1 for e in nonspatial_disagree}
    sign_note = {
        frozenset(): "no disagreeing edges",
        frozenset({-1}): "original runs below augmented (diff < 0)",
        frozenset({1}): "original runs above augmented (diff > 0)",
    }.get(frozenset(signs), "mixed signs")
    checks.append(
        CheckResult(
            "sign_uniformity",
            True,
            len(nonspatial_disagree),
            0 if len(signs) <= 1 else len(nonspatial_disagree),
            0.0,
            notes=sign_note,
        )
    )

    # spatial curvature = snapshot part + prism part, both weightings
    for label, variant in (("coupling_default", pc), ("coupling_unit", unit)):
        vcx = variant.complex
        worst = 0.0
        bad = 0
        for e in spatial:
            f_static, delta, _ = coupling_decomposition(variant, e)
            err = abs(forman_edge(vcx, e) - (f_static + delta))
            worst = max(worst, err)
            if err > TOL_WEIGHTED:
                bad += 1
        checks.append(CheckResult(label, True, len(spatial), bad, worst))

    # unit weights: prism contribution is an integer census, and never
    # negative once the persistence conditions hold
    worst = 0.0
    bad = 0
    deltas = {}
    for e in spatial:
        t = e[0][1]
        snap = pc.snapshots[t]
        gain = forman_edge(ucx, e) - forman_curvature(snap, e)
        census = float(
            sum(1 for T in ucx.cofaces_of(e) if T not in snap)
            - sum(1 for ehat in parallel_edges(ucx, e) if ehat not in snap)
        )
        deltas[e] = gain
        err = abs(gain - census)
        worst = max(worst, err)
        if gain != census:
            bad += 1
    checks.append(CheckResult("monotonicity_identity", True, len(spatial), bad, worst))

    qualifying = [e for e in spatial if monotonicity_qualifies(pc, e, node_sets)]
    bad = sum(1 for e in qualifying if deltas[e] < 0)
    worst = max((-deltas[e] for e in qualifying), default=0.0)
    worst = max(worst, 0.0)
    checks.append(
        CheckResult(
            "monotonicity_nonneg",
            True,
            len(qualifying),
            bad,
            worst,
            notes=f"{len(spatial) - len(qualifying)} spatial edges outside the "
            "persistence conditions",
        )
    )

    # every prism is contractible, and meets a snapshot only at its ends
    bad = 0
    pop = 0
    for sigma, t, t2 in pc.prisms:
        pop += 1
        if euler_of(prism_simplices(sigma, t, t2)) != 1:
            bad += 1
    checks.append(CheckResult("prism_euler", True, pop, bad, 0.0))

    bad = 0
    pop = 0
    snap_sets = {t: set(pc.snapshots[t].simplices()) for t in pc.active_slices}
    for sigma, t, t2 in pc.prisms:
        cells = prism_simplices(sigma, t, t2)
        for s in pc.active_slices:
            pop += 1
            chi = euler_of(cells & snap_sets[s])
            if chi != (1 if s in (t, t2) else 0):
                bad += 1
    checks.append(CheckResult("prism_snapshot_euler", True, pop, bad, 0.0))

    gb = gauss_bonnet_report(pc, oracle_cap)

    oracle = gb["oracle_chi"]
    if oracle is None:
        checks.append(
            CheckResult(
                "inclusion_exclusion_oracle", True, 0, 0, 0.0, notes=gb["oracle_note"]
            )
        )
    else:
        mismatch = 0 if oracle == gb["chi_kst"] else 1
        checks.append(
            CheckResult(
                "inclusion_exclusion_oracle",
                True,
                1,
                mismatch,
                float(abs(oracle - gb["chi_kst"])),
            )
        )

    match = abs(gb["forman_alternating_sum"] - gb["chi_kst"]) <= TOL_WEIGHTED
    checks.append(
        CheckResult(
            "forman_sum_equals_chi",
            False,
            1,
            0 if match else 1,
            abs(gb["forman_alternating_sum"] - gb["chi_kst"]),
            notes="report-only: literal vertex normalization breaks this identity",
        )
    )

    return VerificationReport(checks=tuple(checks), gauss_bonnet=gb)
