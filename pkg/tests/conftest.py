"""Shared fixtures: hand-built toy complexes and cached synthetic runs."""

from __future__ import annotations

import itertools

import pytest

from prismcurv import (
    build_kst,
    curvature_records,
    flag_complex,
    gen_ad,
    gen_bursty,
    gen_er,
    parse_contacts,
)

# desk-scale protocol: 25 nodes, horizon 50, 5-unit bins for the two
# continuous-time models (the activity model already emits integer steps),
# slice gap 3, default reciprocal weights with half-damped diagonals
DESK_N = 25
DESK_T = 50
DESK_BIN = 5
DESK_K = 3
MODELS = ("er", "ad", "bursty")


def desk_sequence(model: str, seed: int):
    if model == "er":
        return gen_er(DESK_N, DESK_T, 0.01, seed).bin(DESK_BIN)
    if model == "ad":
        return gen_ad(DESK_N, DESK_T, seed=seed)
    if model == "bursty":
        return gen_bursty(DESK_N, DESK_T, 0.5, 50.0, seed).bin(DESK_BIN)
    raise ValueError(model)


@pytest.fixture(scope="session")
def desk_run():
    """Factory returning (complex, records) per (model, seed), cached."""
    cache = {}

    def get(model: str, seed: int):
        key = (model, seed)
        if key not in cache:
            pc = build_kst(desk_sequence(model, seed), slice_gap=DESK_K)
            cache[key] = (pc, curvature_records(pc))
        return cache[key]

    return get


# -- static toys ---------------------------------------------------------


@pytest.fixture(scope="session")
def triangle():
    return flag_complex([(1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def path():
    return flag_complex([(1, 2), (2, 3)])


@pytest.fixture(scope="session")
def weighted_path(path):
    # edge {1,2} at half weight, everything else 1
    return path.reweighted({(1, 2): 0.5})


@pytest.fixture(scope="session")
def k4():
    return flag_complex(itertools.combinations(range(4), 2))


@pytest.fixture(scope="session")
def two_triangles():
    return flag_complex([(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)])


# -- spatiotemporal toys -------------------------------------------------


@pytest.fixture(scope="session")
def single_contact():
    return build_kst(parse_contacts("0 1 2"), slice_gap=3)


@pytest.fixture(scope="session")
def persistent_edge():
    """One pair active in two adjacent slices, K=1: a single prism."""
    return build_kst(parse_contacts("0 1 2\n1 1 2"), slice_gap=1)


@pytest.fixture(scope="session")
def persistent_pair_3():
    """One pair active in slices 0..2, K=3."""
    return build_kst(parse_contacts("0 1 2\n1 1 2\n2 1 2"), slice_gap=3)


@pytest.fixture(scope="session")
def persistent_triangle_3():
    """Triangle {1,2,3} active in slices 0..2, K=3.

    The adversarial instance for the monotonicity sign check: the middle
    spatial edges satisfy the persistence conditions, yet one of them
    gains more prism-borne parallels than triangles.
    """
    lines = [f"{t} {i} {j}" for t in (0, 1, 2) for i, j in ((1, 2), (1, 3), (2, 3))]
    return build_kst(parse_contacts("\n".join(lines)), slice_gap=3)
