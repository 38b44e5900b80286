"""Permutations of {1..n} in one-line notation.

A permutation is a plain tuple ``(w1, ..., wn)`` whose entries are exactly
1..n.  Right multiplication by the adjacent transposition s_k swaps
POSITIONS k and k+1 of the one-line word (because (w s_k)(i) = w(s_k(i)));
this left/right convention is the classic source of bugs, so every action
in this package goes through :func:`apply_adjacent`.
"""

from __future__ import annotations

from typing import Iterable

Perm = tuple[int, ...]


def check_perm(word: Iterable[int]) -> Perm:
    """Validate one-line notation: entries must be exactly {1..n}."""
    w = tuple(word)
    n = len(w)
    if n < 1 or sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {w!r}")
    return w


def identity(n: int) -> Perm:
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """The reversal n, n-1, ..., 1."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    return tuple(range(n, 0, -1))


def apply_adjacent(w: Perm, k: int) -> Perm:
    """Right-multiply by s_k: swap positions k and k+1 (1-based)."""
    if not 1 <= k <= len(w) - 1:
        raise ValueError(f"position {k} out of range for degree {len(w)}")
    return w[: k - 1] + (w[k], w[k - 1]) + w[k + 1 :]


def length(w: Perm) -> int:
    """Number of inversion pairs i < j with w_i > w_j (the Coxeter length)."""
    return sum(inv_sequence(w))


def inv_sequence(w: Perm) -> tuple[int, ...]:
    """For each position i < n, the number of later positions holding a smaller value."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n - 1))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, v in enumerate(w):
        out[v - 1] = i + 1
    return tuple(out)


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A deterministic reduced word for w: replaying s_k's reproduces w.

    Sorts w to the identity by moving the largest out-of-place value to its
    home position; each swap removes one inversion, so the word length is
    exactly length(w).
    """
    cur = list(w)
    n = len(cur)
    applied = []
    for target in range(n, 0, -1):
        j = cur.index(target)  # 0-based
        for pos in range(j, target - 1):
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
            applied.append(pos + 1)
    return tuple(reversed(applied))


def pad(w: Perm, m: int) -> Perm:
    """Embed into degree m by appending fixed points; length is unchanged."""
    n = len(w)
    if m < n:
        raise ValueError(f"cannot pad degree {n} down to {m}")
    return w + tuple(range(n + 1, m + 1))
