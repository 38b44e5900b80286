"""Generator sequences: letter counts, downsets, tightness, normal forms.

A generator sequence is a tuple of positive integers (r1, ..., rl); letter
k stands for the adjacent transposition s_k.  The downset of r is the set
of permutations expressible as a product of a subsequence of r, and a
sequence is *tight* when each appended letter k satisfies the count rule
a(k) <= a(k-1) - 1 on its prefix, with equality forced whenever appending
the letter enlarges the downset.  Appending 1 is always admitted (a(0)
does not exist; this convention reproduces the known six tight sequences
of length 4).
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .perm import Perm, apply_adjacent, identity

GenSequence = tuple[int, ...]

# classification tags
TIGHT = "tight"
STAIRCASE_PREFIX = "staircase-prefix"
REVERSE_TIGHT = "reverse-tight"
STAIRCASE_SUFFIX = "staircase-suffix"
COMM_EQUIV = "comm-equiv"
NOT_COVERED = "not-covered"

_INVERSE_TAGS = frozenset({REVERSE_TIGHT, STAIRCASE_SUFFIX})

# commutation classes can be exponentially large; give up past this many members
COMM_CLASS_CAP = 10**6


def check_sequence(letters: Iterable[int]) -> GenSequence:
    """Validate a sequence of positive integer letters."""
    r = tuple(letters)
    for x in r:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"letters must be positive integers, got {x!r}")
    return r


def counts(r: GenSequence) -> dict[int, int]:
    """Multiplicity of each letter."""
    out: dict[int, int] = {}
    for x in check_sequence(r):
        out[x] = out.get(x, 0) + 1
    return out


def staircase(n: int) -> GenSequence:
    """The sequence (1, 2,1, 3,2,1, ..., n-1,...,1) of length n(n-1)/2.

    It is tight, and also a reduced word for the longest element of degree n.
    """
    if n < 2:
        raise ValueError(f"staircase requires degree >= 2, got {n}")
    out: list[int] = []
    for block in range(1, n):
        out.extend(range(block, 0, -1))
    return tuple(out)


def downset(r: GenSequence, n: Optional[int] = None) -> set[Perm]:
    """All permutations of degree n reachable as subsequence products of r."""
    r = check_sequence(r)
    least = (max(r) + 1) if r else 1
    if n is None:
        n = least
    if n < least:
        raise ValueError(f"degree {n} too small for letters up to {least - 1}")
    cur = {identity(n)}
    for k in r:
        cur |= {apply_adjacent(w, k) for w in cur}
    return cur


# -- tightness ----------------------------------------------------------

# incremental prefix state: (counts, downset, degree of the downset's perms)
_State = tuple[dict[int, int], frozenset[Perm], int]

_INITIAL: _State = ({1: 1}, frozenset({(1, 2), (2, 1)}), 2)


def _extend(state: _State, k: int) -> Optional[_State]:
    """State after appending letter k to a tight prefix, or None if not admitted."""
    cnts, dset, deg = state
    strict = False
    if k > 1:
        slack = (cnts.get(k - 1, 0) - 1) - cnts.get(k, 0)
        if slack < 0:
            return None
        strict = slack > 0
    if k + 1 > deg:
        pad_tail = tuple(range(deg + 1, k + 2))
        dset = frozenset(w + pad_tail for w in dset)
        deg = k + 1
    moved = {apply_adjacent(w, k) for w in dset}
    if strict and not moved <= dset:
        return None  # strict inequality is only allowed when the downset stands still
    new_counts = dict(cnts)
    new_counts[k] = new_counts.get(k, 0) + 1
    return new_counts, dset | moved, deg


def is_tight(r: GenSequence) -> bool:
    """Whether r is tight; the empty sequence is not (the first letter must be 1)."""
    r = check_sequence(r)
    if not r or r[0] != 1:
        return False
    state = _INITIAL
    for k in r[1:]:
        nxt = _extend(state, k)
        if nxt is None:
            return False
        state = nxt
    return True


def enumerate_tight(l: int) -> list[GenSequence]:
    """All tight sequences of length l, lexicographically sorted.

    Tightness is prefix-closed, so the frontier of tight prefixes is grown
    one letter at a time; a prefix with maximum letter m only admits letters
    1..m+1.
    """
    if l < 1:
        raise ValueError(f"length must be >= 1, got {l}")
    frontier: list[tuple[GenSequence, _State]] = [((1,), _INITIAL)]
    for _ in range(l - 1):
        grown = []
        for seq, state in frontier:
            top = max(state[0])
            for k in range(1, top + 2):
                nxt = _extend(state, k)
                if nxt is not None:
                    grown.append((seq + (k,), nxt))
        frontier = grown
    return sorted(seq for seq, _ in frontier)


# -- commutation classes --------------------------------------------------

def foata_normal_form(r: GenSequence) -> GenSequence:
    """Lexicographically smallest word reachable by swapping adjacent letters
    that differ by at least 2 (such letters commute as transpositions).

    Greedy: repeatedly emit the smallest letter with no earlier non-commuting
    letter still pending.  Two sequences are commutation-equivalent exactly
    when their normal forms agree.
    """
    rest = list(check_sequence(r))
    out = []
    while rest:
        pick = 0
        for j in range(1, len(rest)):
            if rest[j] < rest[pick] and all(abs(rest[i] - rest[j]) >= 2 for i in range(j)):
                pick = j
        out.append(rest.pop(pick))
    return tuple(out)


def _comm_neighbors(r: GenSequence) -> Iterator[GenSequence]:
    for j in range(len(r) - 1):
        if abs(r[j] - r[j + 1]) >= 2:
            yield r[:j] + (r[j + 1], r[j]) + r[j + 2 :]


# -- classification -------------------------------------------------------

@dataclass(frozen=True)
class TightClass:
    """Which family of sequences (if any) covers r with a closed coefficient form.

    ``uses_inverse`` signals that coefficient formulas must read inversion
    statistics off w^-1 rather than w.  For COMM_EQUIV, ``witness`` is a
    commutation-equivalent sequence passing one of the direct checks and
    ``inner`` is that check's tag.
    """

    tag: str
    uses_inverse: bool = False
    witness: Optional[GenSequence] = None
    inner: Optional[str] = None

    @property
    def covered(self) -> bool:
        return self.tag != NOT_COVERED

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "uses_inverse": self.uses_inverse,
            "witness": list(self.witness) if self.witness is not None else None,
            "inner": self.inner,
        }


def _starts_with_staircase(r: GenSequence) -> bool:
    prefix = staircase(max(r) + 1)
    return len(r) >= len(prefix) and r[: len(prefix)] == prefix


def _ends_with_staircase(r: GenSequence) -> bool:
    suffix = staircase(max(r) + 1)
    return len(r) >= len(suffix) and r[-len(suffix) :] == suffix


def _direct_tag(r: GenSequence) -> Optional[str]:
    if is_tight(r):
        return TIGHT
    if r and _starts_with_staircase(r):
        return STAIRCASE_PREFIX
    if r and is_tight(r[::-1]):
        return REVERSE_TIGHT
    if r and _ends_with_staircase(r):
        return STAIRCASE_SUFFIX
    return None


def classify(r: GenSequence) -> TightClass:
    """Fixed-priority classification: tight, staircase prefix, reverse-tight,
    staircase suffix, then a breadth-first search of the commutation class
    for a member passing any direct check; otherwise not covered."""
    r = check_sequence(r)
    tag = _direct_tag(r)
    if tag is not None:
        return TightClass(tag, uses_inverse=tag in _INVERSE_TAGS)
    seen = {r}
    queue = deque([r])
    while queue:
        for nb in _comm_neighbors(queue.popleft()):
            if nb in seen:
                continue
            tag = _direct_tag(nb)
            if tag is not None:
                return TightClass(COMM_EQUIV, uses_inverse=tag in _INVERSE_TAGS,
                                  witness=nb, inner=tag)
            seen.add(nb)
            queue.append(nb)
            if len(seen) > COMM_CLASS_CAP:
                warnings.warn(f"commutation class of {r} exceeds {COMM_CLASS_CAP} "
                              "members; giving up the search", RuntimeWarning)
                return TightClass(NOT_COVERED)
    return TightClass(NOT_COVERED)
