"""Closed-form expansion coefficients for covered sequences, with a
brute-force cross-check.

For a covered sequence r and a permutation w in its downset, the
coefficient is a product of q-integer powers

    prod_{i=2..n} [i] ** max(a(i-1) - 1, inv_v(i)),    inv_v(n) := 0,

where a(.) are the letter counts of r, n is the degree of w, and v is w
itself or w^-1 depending on the classification (reversed families read
inversions off the inverse).  The product deliberately runs up to i = n,
one factor beyond max(r): with a(n-1) >= 2 the extra factor
[n] ** (a(n-1) - 1) is genuinely needed -- (1,2,1,2) expands to
[2][3] times every basis element of degree 3, not [2] -- while on the
staircase families the extra exponent is 0 and nothing changes.  The
truncated product is pinned as wrong by a regression test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .hecke import expand
from .perm import Perm, check_perm, inv_sequence, inverse
from .qpoly import QPoly, q_int
from .seq import GenSequence, TightClass, check_sequence, classify, counts, downset


def _alpha_poly(cnts: dict[int, int], v: Perm, n: int) -> QPoly:
    invs = inv_sequence(v) + (0,)
    out = QPoly((1,))
    for i in range(2, n + 1):
        e = max(cnts.get(i - 1, 0) - 1, invs[i - 1])
        if e:
            out = out * q_int(i) ** e
    return out


def alpha(r: GenSequence, w: Perm, classification: Optional[TightClass] = None) -> QPoly:
    """Closed-form coefficient of T_w in the expansion of r.

    Zero when w is outside the downset of r.  Raises for sequences whose
    classification is not covered by any closed form, and when the degree
    of w cannot host every letter of r.
    """
    r = check_sequence(r)
    w = check_perm(w)
    cls = classification if classification is not None else classify(r)
    if not cls.covered:
        raise ValueError(f"no closed form known for {r}: classification is {cls.tag}")
    n = len(w)
    if r and n < max(r) + 1:
        raise ValueError(f"degree {n} too small for letters up to {max(r)}")
    if w not in downset(r, n):
        return QPoly()
    v = inverse(w) if cls.uses_inverse else w
    return _alpha_poly(counts(r), v, n)


def alpha_table(r: GenSequence, n: Optional[int] = None,
                classification: Optional[TightClass] = None) -> dict[Perm, QPoly]:
    """Closed-form coefficient for every permutation in the downset of r.

    Permutations outside the downset are omitted (their coefficient is
    zero).  Inside the downset every value is a nonempty product of
    q-integers, hence nonzero.
    """
    r = check_sequence(r)
    cls = classification if classification is not None else classify(r)
    if not cls.covered:
        raise ValueError(f"no closed form known for {r}: classification is {cls.tag}")
    if n is None:
        n = (max(r) + 1) if r else 1
    cnts = counts(r)
    table = {}
    for w in downset(r, n):
        v = inverse(w) if cls.uses_inverse else w
        table[w] = _alpha_poly(cnts, v, n)
    return table


class AlphaEntry(NamedTuple):
    closed: QPoly
    oracle: QPoly
    match: bool


@dataclass(frozen=True)
class AlphaReport:
    """Entrywise comparison of the closed form against brute-force expansion.

    Mismatches are data, not errors: the report exists to hunt for boundary
    failures of the formula.  Sequences with no covered classification get
    an empty entry map.
    """

    sequence: GenSequence
    degree: int
    classification: TightClass
    entries: dict[Perm, AlphaEntry]
    all_match: bool

    def mismatches(self) -> dict[Perm, AlphaEntry]:
        return {w: e for w, e in self.entries.items() if not e.match}

    def to_json(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "degree": self.degree,
            "classification": self.classification.to_json(),
            "all_match": self.all_match,
            "entries": [
                {
                    "perm": list(w),
                    "closed": e.closed.to_json(),
                    "oracle": e.oracle.to_json(),
                    "match": e.match,
                }
                for w, e in sorted(self.entries.items())
            ],
        }


def verify(r: GenSequence, n: Optional[int] = None, force: bool = False) -> AlphaReport:
    """Compare the closed form against expand(r) with exact polynomial equality."""
    r = check_sequence(r)
    if n is None:
        n = (max(r) + 1) if r else 1
    cls = classify(r)
    if not cls.covered:
        return AlphaReport(r, n, cls, {}, True)
    oracle = expand(r, n, force=force)
    table = alpha_table(r, n, classification=cls)
    entries: dict[Perm, AlphaEntry] = {}
    for w in set(table) | oracle.support():  # equal sets unless a coefficient cancels
        closed = table.get(w, QPoly())
        actual = oracle.coefficient(w)
        entries[w] = AlphaEntry(closed, actual, closed == actual)
    return AlphaReport(r, n, cls, entries, all(e.match for e in entries.values()))
