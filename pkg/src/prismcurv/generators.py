"""Synthetic temporal-network generators.

All three models draw from per-pair (or per-node) random streams keyed by
(master seed, stream tag, ids), so output is reproducible and independent
of iteration order.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .contacts import ContactEvent, ContactSequence
from .errors import DomainError

# stream tags keep per-entity substreams of one master seed disjoint
_TAG_ER = 0
_TAG_AD_ACTIVITY = 1
_TAG_AD_STEPS = 2
_TAG_AD_PARTNERS = 3
_TAG_BURSTY = 4


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, *key]))


def _check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise DomainError(f"seed must be a non-negative integer, got {seed!r}")
    return seed


def _check_n(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"need at least 2 nodes, got {n!r}")
    return n


def gen_er(n: int, T: float, rate: float, seed: int) -> ContactSequence:
    """Stationary Poisson contacts: each pair fires at the given rate on [0, T)."""
    _check_n(n)
    _check_seed(seed)
    if not (isinstance(T, (int, float)) and math.isfinite(T) and T > 0):
        raise DomainError(f"horizon must be positive, got {T!r}")
    if not (isinstance(rate, (int, float)) and math.isfinite(rate) and rate >= 0):
        raise DomainError(f"rate must be non-negative, got {rate!r}")
    events = []
    if rate > 0:
        for i, j in itertools.combinations(range(n), 2):
            rng = _rng(seed, _TAG_ER, i, j)
            t = rng.exponential(1.0 / rate)
            while t < T:
                events.append(ContactEvent(float(t), i, j))
                t += rng.exponential(1.0 / rate)
    return ContactSequence.from_events(events)


def sample_activities(
    n: int, a_min: float, a_max: float, alpha: float, seed: int
) -> np.ndarray:
    """Per-node activities from a power law p(a) ~ a^-alpha truncated to [a_min, a_max].

    Inverse-CDF sampling; one independent draw per node.
    """
    _check_n(n)
    _check_seed(seed)
    if not (0 < a_min <= a_max <= 1):
        raise DomainError(f"need 0 < a_min <= a_max <= 1, got [{a_min}, {a_max}]")
    if not alpha > 1:
        raise DomainError(f"exponent must exceed 1, got {alpha!r}")
    lo, hi = a_min ** (1.0 - alpha), a_max ** (1.0 - alpha)
    out = np.empty(n)
    for i in range(n):
        u = _rng(seed, _TAG_AD_ACTIVITY, i).random()
        out[i] = (lo + u * (hi - lo)) ** (1.0 / (1.0 - alpha))
    return out


def _activation_steps(node: int, T_steps: int, a: float, seed: int) -> list[int]:
    """Integer steps at which the node activates (one coin flip per step)."""
    rng = _rng(seed, _TAG_AD_STEPS, node)
    return [t for t in range(T_steps) if rng.random() < a]


def gen_ad(
    n: int,
    T_steps: int,
    a_min: float = 0.05,
    a_max: float = 0.5,
    alpha: float = 2.5,
    m: int = 2,
    seed: int = 0,
) -> ContactSequence:
    """Activity-driven contacts at integer steps.

    Each step, node i activates with probability a_i and contacts m distinct
    uniformly chosen partners.  Repeated (pair, step) contacts collapse.
    """
    _check_n(n)
    _check_seed(seed)
    if not isinstance(T_steps, int) or T_steps < 0:
        raise DomainError(f"step count must be a non-negative integer, got {T_steps!r}")
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"contacts per activation must be >= 1, got {m!r}")
    if m >= n:
        raise DomainError(f"cannot pick {m} distinct partners among {n - 1} others")
    activities = sample_activities(n, a_min, a_max, alpha, seed)
    events = []
    for i in range(n):
        partner_rng = _rng(seed, _TAG_AD_PARTNERS, i)
        for t in _activation_steps(i, T_steps, float(activities[i]), seed):
            partners = partner_rng.choice(n - 1, size=m, replace=False)
            for p in partners:
                p = int(p)
                if p >= i:
                    p += 1  # skip self in the 0..n-2 index range
                events.append(ContactEvent(t, i, p))
    return ContactSequence.from_events(events)


def weibull_interevent(rng: np.random.Generator, shape: float, scale: float) -> float:
    """One Weibull waiting time, scale * (-ln u)^(1/shape) with u uniform in (0, 1)."""
    u = rng.random()
    while u <= 0.0:
        u = rng.random()
    return scale * (-math.log(u)) ** (1.0 / shape)


def gen_bursty(
    n: int, T: float, shape: float = 0.5, scale: float = 50.0, seed: int = 0
) -> ContactSequence:
    """Per-pair Weibull renewal contacts on [0, T).

    shape < 1 gives heavy-tailed, bursty inter-event times; shape = 1 is
    Poisson with mean waiting time equal to scale.
    """
    _check_n(n)
    _check_seed(seed)
    if not (isinstance(T, (int, float)) and math.isfinite(T) and T >= 0):
        raise DomainError(f"horizon must be non-negative, got {T!r}")
    if not shape > 0:
        raise DomainError(f"shape must be positive, got {shape!r}")
    if not scale > 0:
        raise DomainError(f"scale must be positive, got {scale!r}")
    events = []
    for i, j in itertools.combinations(range(n), 2):
        rng = _rng(seed, _TAG_BURSTY, i, j)
        t = weibull_interevent(rng, shape, scale)
        while t < T:
            events.append(ContactEvent(float(t), i, j))
            t += weibull_interevent(rng, shape, scale)
    return ContactSequence.from_events(events)
