"""Random walks on the symmetric group driven by a sequence of positions.

One *k-step* applied to w with parameter q in (0, 1]: on an ascent
(w_k < w_{k+1}) swap with probability [k]/(1+[k]) else stay; on a descent
swap with probability q[k]/(1+[k]), stay with probability q^k/(1+[k]),
and otherwise the attempt fails and the whole sequence restarts from the
identity.  Here [k] is the q-integer evaluated at q.

The exact law of the walk-with-restarts is computed by a dynamic program
over a single attempt (propagating sub-probabilities and accumulating the
failure mass f), then renormalizing by 1 - f: attempts are independent and
identically distributed, so conditioning on the first success is exact.
The resulting law equals the expansion coefficients evaluated at q and
normalized by their sum; at q = 1 nothing can fail and the walk is a plain
convolution of (1 + k s_k)/(1 + k) factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .perm import Perm, apply_adjacent, check_perm, identity
from .qpoly import q_int
from .seq import GenSequence, check_sequence
from . import _walk_core_py

try:
    from . import _walk_core
except ImportError:  # extension not built; pure-Python sampler takes over
    _walk_core = None

KERNEL_COMPILED = _walk_core is not None

EXACT = "exact"
EMPIRICAL = "empirical"

_EMPIRICAL_SUM_TOL = 1e-12

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class Distribution:
    """Probability map over permutations of one degree.

    Exact mode stores Fractions summing to exactly 1; empirical mode stores
    floats (counts over sample size) summing to 1 within float error.
    """

    degree: int
    probs: dict
    mode: str = EXACT

    def __post_init__(self):
        if self.mode not in (EXACT, EMPIRICAL):
            raise ValueError(f"unknown mode {self.mode!r}")
        total = sum(self.probs.values())
        if any(p < 0 for p in self.probs.values()):
            raise ValueError("negative probability")
        if self.mode == EXACT:
            if total != 1:
                raise ValueError(f"exact probabilities sum to {total}, not 1")
        elif abs(total - 1) > _EMPIRICAL_SUM_TOL:
            raise ValueError(f"empirical probabilities sum to {total}")

    def prob(self, w: Perm):
        zero = Fraction(0) if self.mode == EXACT else 0.0
        return self.probs.get(tuple(w), zero)

    def support(self) -> set[Perm]:
        return {w for w, p in self.probs.items() if p}

    def to_json(self) -> dict:
        from .qpoly import rational_to_json

        entries = []
        for w in sorted(self.probs):
            p = self.probs[w]
            if self.mode == EXACT:
                entries.append({"perm": list(w), "prob": rational_to_json(p)})
            else:
                entries.append({"perm": list(w), "prob": p})
        return {"degree": self.degree, "mode": self.mode, "probs": entries}


@dataclass(frozen=True)
class WalkConfig:
    """Simulation parameters; q must lie in (0, 1].

    q = 0 is rejected: every descent would restart with probability 1 and
    the walk would never finish.
    """

    q: Rat
    samples: int
    seed: int
    max_restarts_per_sample: int = 10**6

    def __post_init__(self):
        q = Fraction(self.q)
        if not 0 < q <= 1:
            raise ValueError(f"q must be in (0, 1], got {self.q}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if self.max_restarts_per_sample < 1:
            raise ValueError("max_restarts_per_sample must be >= 1")


def _check_q(q: Rat) -> Fraction:
    q = Fraction(q)
    if not 0 < q <= 1:
        raise ValueError(f"q must be in (0, 1], got {q}")
    return q


def _degree_for(r: GenSequence, n: Optional[int]) -> int:
    least = (max(r) + 1) if r else 1
    if n is None:
        return least
    if n < least:
        raise ValueError(f"degree {n} too small for letters up to {least - 1}")
    return n


def step_probs(w: Perm, k: int, q: Rat) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (swap, stay, restart) probabilities of one k-step from w."""
    w = check_perm(w)
    q = _check_q(q)
    if not 1 <= k <= len(w) - 1:
        raise ValueError(f"position {k} out of range for degree {len(w)}")
    qk = q_int(k).eval(q)
    denom = 1 + qk
    if w[k - 1] < w[k]:
        return qk / denom, 1 / denom, Fraction(0)
    swap = q * qk / denom
    stay = q**k / denom
    return swap, stay, 1 - swap - stay


def _acc(dist: dict, w: Perm, p: Fraction) -> None:
    dist[w] = dist.get(w, 0) + p


def exact_distribution_q1(r: GenSequence, n: Optional[int] = None) -> Distribution:
    """Exact law at q = 1: convolution of the (1 + k s_k)/(1 + k) factors.

    No restart branch exists at q = 1, so this is a straight fold over
    exact rationals starting from the point mass at the identity.
    """
    r = check_sequence(r)
    n = _degree_for(r, n)
    dist: dict[Perm, Fraction] = {identity(n): Fraction(1)}
    for k in r:
        stay = Fraction(1, k + 1)
        move = Fraction(k, k + 1)
        nxt: dict[Perm, Fraction] = {}
        for w, p in dist.items():
            _acc(nxt, w, p * stay)
            _acc(nxt, apply_adjacent(w, k), p * move)
        dist = nxt
    return Distribution(n, {w: p for w, p in dist.items() if p}, EXACT)


def exact_distribution(r: GenSequence, q: Rat, n: Optional[int] = None) -> Distribution:
    """Exact law of the walk with restarts, by single-attempt DP plus
    geometric renormalization p_v / (1 - f)."""
    r = check_sequence(r)
    q = _check_q(q)
    n = _degree_for(r, n)
    sub: dict[Perm, Fraction] = {identity(n): Fraction(1)}
    fail = Fraction(0)
    for k in r:
        qk = q_int(k).eval(q)
        denom = 1 + qk
        asc_swap = qk / denom
        asc_stay = 1 / denom
        desc_swap = q * qk / denom
        desc_stay = q**k / denom
        restart = 1 - desc_swap - desc_stay
        nxt: dict[Perm, Fraction] = {}
        for w, p in sub.items():
            ws = apply_adjacent(w, k)
            if w[k - 1] < w[k]:
                _acc(nxt, w, p * asc_stay)
                _acc(nxt, ws, p * asc_swap)
            else:
                _acc(nxt, w, p * desc_stay)
                _acc(nxt, ws, p * desc_swap)
                fail += p * restart
        sub = nxt
    success = 1 - fail
    if success == 0:  # unreachable for q > 0; guarded anyway
        raise ArithmeticError("attempt never succeeds; cannot renormalize")
    return Distribution(n, {w: p / success for w, p in sub.items() if p}, EXACT)


def _step_thresholds(r: GenSequence, q: float, n: int):
    """Per-step cumulative double thresholds shared by both sampling kernels."""
    ks, asc, d1, d2 = [], [], [], []
    for k in r:
        if k > n - 1:
            raise ValueError(f"letter {k} out of range for degree {n}")
        qk = 0.0
        power = 1.0
        for _ in range(k):
            qk += power
            power *= q
        denom = 1.0 + qk
        ks.append(k - 1)
        asc.append(qk / denom)
        swap = q * qk / denom
        d1.append(swap)
        d2.append(swap + power / denom)  # power is q**k after the loop
    return ks, asc, d1, d2


def _select_sampler(n: int):
    if _walk_core is not None and n <= _walk_core.MAX_DEGREE:
        return _walk_core.run_samples
    return _walk_core_py.run_samples


def simulate(r: GenSequence, config: WalkConfig, n: Optional[int] = None) -> Distribution:
    """Monte Carlo estimate of the walk law; deterministic for a fixed seed.

    Every sample replays the whole sequence from the identity on restart.
    Sample i draws from its own SplitMix64 stream derived from (seed, i),
    so results do not depend on sample execution order.
    """
    r = check_sequence(r)
    n = _degree_for(r, n)
    ks, asc, d1, d2 = _step_thresholds(r, float(Fraction(config.q)), n)
    counts = _select_sampler(n)(n, ks, asc, d1, d2, config.seed,
                                config.samples, config.max_restarts_per_sample)
    probs = {w: c / config.samples for w, c in counts.items()}
    return Distribution(n, probs, EMPIRICAL)


def total_variation(d1: Distribution, d2: Distribution):
    """Half the L1 distance; exact Fraction when both sides are exact."""
    if d1.degree != d2.degree:
        raise ValueError(f"degree mismatch: {d1.degree} vs {d2.degree}")
    keys = set(d1.probs) | set(d2.probs)
    return sum(abs(d1.prob(w) - d2.prob(w)) for w in keys) / 2
