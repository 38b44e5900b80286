"""Sparse Hecke-algebra elements and the brute-force product expansion.

An element of H_n(q) is a finite map from permutations of degree n to
nonzero coefficient polynomials.  Right multiplication by a generator T_k
follows the two-case rule: T_w T_k = T_{w s_k} when the length goes up,
and q T_{w s_k} + (q - 1) T_w when it goes down.  The expansion of
(1 + [r1] T_{r1}) ... (1 + [rl] T_{rl}) is a left fold of the affine
factors over that rule; its support stays inside the downset of r, so a
sparse map beats dense n!-vectors until the product fills the group.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .perm import Perm, apply_adjacent, check_perm, identity, reduced_word
from .qpoly import QPoly
from .seq import GenSequence, check_sequence

_Q = QPoly((0, 1))
_Q_MINUS_ONE = QPoly((-1, 1))

# n! terms with big-integer coefficients get expensive quickly; past this
# degree the caller must opt in explicitly
MAX_DEFAULT_DEGREE = 9


def _q_int(i: int) -> QPoly:
    return QPoly((1,) * i)


def _bump(terms: dict[Perm, QPoly], w: Perm, p: QPoly) -> None:
    cur = terms.get(w)
    terms[w] = p if cur is None else cur + p


class HeckeElt:
    """Element of H_n(q): degree plus a sparse {perm: coefficient} map."""

    __slots__ = ("degree", "terms")

    degree: int
    terms: dict[Perm, QPoly]

    def __init__(self, degree: int, terms: Mapping[Perm, QPoly] = ()) -> None:
        if degree < 1:
            raise ValueError(f"degree must be >= 1, got {degree}")
        clean: dict[Perm, QPoly] = {}
        for w, p in dict(terms).items():
            w = check_perm(w)
            if len(w) != degree:
                raise ValueError(f"term {w} does not have degree {degree}")
            if not isinstance(p, QPoly):
                raise TypeError("coefficients must be QPoly")
            if p:
                clean[w] = p
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HeckeElt is immutable")

    @classmethod
    def _raw(cls, degree: int, terms: dict[Perm, QPoly]) -> "HeckeElt":
        # internal fast path: terms already validated, zeros already dropped
        self = object.__new__(cls)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", terms)
        return self

    # -- algebra ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    def add(self, other: "HeckeElt") -> "HeckeElt":
        self._check_degree(other)
        out = dict(self.terms)
        for w, p in other.terms.items():
            _bump(out, w, p)
        return HeckeElt._raw(self.degree, {w: p for w, p in out.items() if p})

    def scale(self, factor: QPoly) -> "HeckeElt":
        if not factor:
            return HeckeElt._raw(self.degree, {})
        return HeckeElt._raw(self.degree, {w: p * factor for w, p in self.terms.items()})

    def mul_gen(self, k: int) -> "HeckeElt":
        """Right-multiply by the generator T_k."""
        self._check_pos(k)
        out: dict[Perm, QPoly] = {}
        for w, c in self.terms.items():
            ws = apply_adjacent(w, k)
            if w[k - 1] < w[k]:  # length goes up
                _bump(out, ws, c)
            else:  # length goes down: q T_{ws} + (q-1) T_w
                _bump(out, ws, c * _Q)
                _bump(out, w, c * _Q_MINUS_ONE)
        return HeckeElt._raw(self.degree, {w: p for w, p in out.items() if p})

    def mul_affine_gen(self, k: int) -> "HeckeElt":
        """Right-multiply by (1 + [k] T_k).

        Folding the generator rule through gives, per term, either
        c T_w + c[k] T_{ws_k} (ascent at k) or c q^k T_w + c q[k] T_{ws_k}
        (descent at k); both agree with add(scale(mul_gen)) but keep the
        intermediate polynomials smaller.
        """
        self._check_pos(k)
        qk = _q_int(k)
        q_qk = qk * _Q
        q_pow_k = QPoly((0,) * k + (1,))
        out: dict[Perm, QPoly] = {}
        for w, c in self.terms.items():
            ws = apply_adjacent(w, k)
            if w[k - 1] < w[k]:
                _bump(out, w, c)
                _bump(out, ws, c * qk)
            else:
                _bump(out, w, c * q_pow_k)
                _bump(out, ws, c * q_qk)
        return HeckeElt._raw(self.degree, {w: p for w, p in out.items() if p})

    def mul(self, other: "HeckeElt") -> "HeckeElt":
        """General product: decompose each T_w of the right factor into
        generators and fold mul_gen."""
        self._check_degree(other)
        acc = HeckeElt._raw(self.degree, {})
        for w, c in other.terms.items():
            part = self
            for k in reduced_word(w):
                part = part.mul_gen(k)
            acc = acc.add(part.scale(c))
        return acc

    def coefficient(self, w: Perm) -> QPoly:
        w = check_perm(w)
        if len(w) != self.degree:
            raise ValueError(f"degree mismatch: element {self.degree}, perm {len(w)}")
        return self.terms.get(w, QPoly())

    def support(self) -> set[Perm]:
        return set(self.terms)

    def _check_degree(self, other: "HeckeElt") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def _check_pos(self, k: int) -> None:
        if not 1 <= k <= self.degree - 1:
            raise ValueError(f"generator index {k} out of range for degree {self.degree}")

    # -- presentation ------------------------------------------------------

    def __repr__(self) -> str:
        return f"HeckeElt(degree={self.degree}, terms={len(self.terms)})"

    def to_json(self) -> dict:
        """Terms sorted lexicographically by permutation."""
        return {
            "degree": self.degree,
            "terms": [{"perm": list(w), "coeff": self.terms[w].to_json()}
                      for w in sorted(self.terms)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HeckeElt":
        terms = {tuple(t["perm"]): QPoly.from_json(t["coeff"]) for t in data["terms"]}
        return cls(int(data["degree"]), terms)


def one(n: int) -> HeckeElt:
    """The identity element T_e of degree n."""
    return HeckeElt._raw(n, {identity(n): QPoly((1,))})  # identity() validates n


def generator(n: int, k: int) -> HeckeElt:
    """The basis element T_{s_k} of degree n."""
    return one(n).mul_gen(k)


def expand(r: GenSequence, n: Optional[int] = None, force: bool = False) -> HeckeElt:
    """Expand the product of affine factors (1 + [r_i] T_{r_i}) in degree n.

    n defaults to max(r) + 1, the smallest degree containing every letter.
    Degrees above MAX_DEFAULT_DEGREE are refused unless force is given
    (the support can reach n! terms).
    """
    r = check_sequence(r)
    least = (max(r) + 1) if r else 1
    if n is None:
        n = least
    if n < least:
        raise ValueError(f"degree {n} too small for letters up to {least - 1}")
    if n > MAX_DEFAULT_DEGREE and not force:
        raise ValueError(f"degree {n} > {MAX_DEFAULT_DEGREE}: pass force=True to expand anyway")
    acc = one(n)
    for k in r:
        acc = acc.mul_affine_gen(k)
    return acc
