"""Symmetric Laurent polynomials in n variables with QScalar coefficients.

A :class:`SymPoly` stores only dominant (weakly decreasing) exponent
vectors; the represented polynomial is the sum over each key's full
S_n-orbit.  Multiplication expands orbits on demand -- correctness over
speed, which is fine at desk scale (n <= 8, low degree).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .partitions import (
    as_partition,
    dominant,
    is_weakly_decreasing,
    orbit,
    partitions,
    ssyt_tableaux,
    ssyt_weight,
)
from .scalars import QScalar, Rational

__all__ = [
    "SymPoly",
    "monomial_sym",
    "elementary",
    "powersum",
    "schur",
    "complete_homogeneous",
]

Coeffish = QScalar | Rational


def _as_scalar(c: Coeffish) -> QScalar:
    return c if isinstance(c, QScalar) else QScalar(c)


class SymPoly:
    """An S_n-invariant Laurent polynomial, keyed by dominant exponent vectors."""

    __slots__ = ("nvars", "terms", "_expansion")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Coeffish] = ()):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        self.nvars = nvars
        clean: dict[tuple[int, ...], QScalar] = {}
        for key, coeff in dict(terms).items():
            key = tuple(key)
            if len(key) != nvars:
                raise ValueError(f"key {key} has length != {nvars}")
            if not is_weakly_decreasing(key):
                raise ValueError(f"key {key} is not dominant")
            c = _as_scalar(coeff)
            if not c.is_zero():
                clean[key] = c
        self.terms = clean
        self._expansion: dict[tuple[int, ...], QScalar] | None = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SymPoly":
        return cls(nvars)

    @classmethod
    def from_expansion(cls, nvars: int,
                       expansion: Mapping[tuple[int, ...], Coeffish]) -> "SymPoly":
        """Fold a full monomial expansion into dominant keys.

        Asserts S_n-invariance: within each orbit every monomial must be
        present with the same coefficient.  This is the invariance check
        that transfer images rely on.
        """
        groups: dict[tuple[int, ...], dict[tuple[int, ...], QScalar]] = {}
        for key, coeff in expansion.items():
            c = _as_scalar(coeff)
            if c.is_zero():
                continue
            groups.setdefault(dominant(key), {})[tuple(key)] = c
        terms = {}
        for dom, members in groups.items():
            orb = orbit(dom)
            if len(members) != len(orb):
                raise ValueError(f"expansion is not symmetric at orbit of {dom}")
            vals = set(members.values())
            if len(vals) != 1:
                raise ValueError(f"unequal coefficients on orbit of {dom}")
            terms[dom] = members[dom]
        return cls(nvars, terms)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, QScalar(0)) + c
        return SymPoly(self.nvars, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {k: -c for k, c in self.terms.items()})

    def scale(self, c: Coeffish) -> "SymPoly":
        c = _as_scalar(c)
        return SymPoly(self.nvars, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            self._check_compatible(other)
            prod: dict[tuple[int, ...], QScalar] = {}
            for u, cu in self.expand().items():
                for w, cw in other.expand().items():
                    key = tuple(x + y for x, y in zip(u, w))
                    # only dominant representatives are recorded; the rest of
                    # each orbit is implied by symmetry of the product
                    if is_weakly_decreasing(key):
                        prod[key] = prod.get(key, QScalar(0)) + cu * cw
            return SymPoly(self.nvars, prod)
        if isinstance(other, (QScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (QScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "SymPoly":
        if e < 0:
            raise ValueError("negative powers of SymPoly are not defined")
        out = SymPoly(self.nvars, {(0,) * self.nvars: QScalar(1)})
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "SymPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"mixed variable counts: {self.nvars} vs {other.nvars}")

    # -- expansion and evaluation -----------------------------------------

    def expand(self) -> dict[tuple[int, ...], QScalar]:
        """Full monomial expansion over all orbit members (cached)."""
        if self._expansion is None:
            full: dict[tuple[int, ...], QScalar] = {}
            for key, c in self.terms.items():
                for mono in orbit(key):
                    full[mono] = c
            self._expansion = full
        return self._expansion

    def evaluate(self, point: Sequence[Coeffish]) -> QScalar:
        """Substitute QScalar values for the variables and sum."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)} != {self.nvars}")
        vals = [_as_scalar(x) for x in point]
        total = QScalar(0)
        for mono, c in self.expand().items():
            term = c
            for x, e in zip(vals, mono):
                if e:
                    term = term * x ** e
            total = total + term
        return total

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], QScalar]]:
        """Deterministic term order: reverse lexicographic on exponent vectors."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            parts.append(f"({c})*m[{','.join(map(str, key))}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SymPoly({self.nvars}, {self})"


def monomial_sym(n: int, w: Sequence[int]) -> SymPoly:
    """Monomial symmetric function m_w: the orbit sum of z**w.

    Shorter vectors are padded with zeros before sorting, so negative
    entries land in the right place.
    """
    if len(w) > n:
        raise ValueError(f"exponent vector longer than nvars: {w}")
    key = dominant(tuple(w) + (0,) * (n - len(w)))
    return SymPoly(n, {key: QScalar(1)})


def elementary(n: int, k: int) -> SymPoly:
    """Elementary symmetric polynomial e_k in n variables."""
    if not 1 <= k <= n:
        raise ValueError(f"elementary: need 1 <= k <= n, got k={k}, n={n}")
    return SymPoly(n, {(1,) * k + (0,) * (n - k): QScalar(1)})


def powersum(n: int, k: int) -> SymPoly:
    """Power sum p_k = sum z_i**k in n variables."""
    if k < 1:
        raise ValueError("powersum: need k >= 1")
    return SymPoly(n, {(k,) + (0,) * (n - 1): QScalar(1)})


def schur(n: int, mu: Sequence[int]) -> SymPoly:
    """Schur polynomial s_mu in n variables, from SSYT enumeration.

    With more than n parts there is no column-strict filling and the zero
    polynomial is returned.
    """
    mu = as_partition(mu) if mu else ()
    if len(mu) > n:
        return SymPoly.zero(n)
    counts: dict[tuple[int, ...], int] = {}
    for tab in ssyt_tableaux(mu, n):
        w = ssyt_weight(tab, n)
        counts[w] = counts.get(w, 0) + 1
    # the weight multiset of SSYT is S_n-stable; from_expansion re-checks it
    return SymPoly.from_expansion(n, {w: QScalar(c) for w, c in counts.items()})


def complete_homogeneous(n: int, k: int) -> SymPoly:
    """h_k in n variables: sum of all monomials of degree k."""
    if k < 0:
        raise ValueError("complete_homogeneous: need k >= 0")
    if k == 0:
        return SymPoly(n, {(0,) * n: QScalar(1)})
    terms = {}
    for lam in partitions(k, max_length=n):
        terms[lam + (0,) * (n - len(lam))] = QScalar(1)
    return SymPoly(n, terms)
