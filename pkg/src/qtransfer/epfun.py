"""Explicit matching-function combinations over parahoric types.

A :class:`ParahoricCombo` is a formal QScalar-linear combination of
standard-parahoric types of GL_n(F), each type recorded by the partition
of n giving its reductive quotient.  Two normalizations are carried: the
e-basis (e_J = [K:J] 1_J, the unit of mass 1 for the Haar measure giving
the maximal compact volume 1) and the one-basis (bare characteristic
functions 1_J).

Built here: the Euler-Poincare function f^EP of GL_n, the d^r product
expansion supported on refinements of (d^r), the Iwahori-biinvariant
combination attached to an arbitrary parahoric of GL_r(D), and the finite
shadow sending e_J to the induced trivial character of the corresponding
parabolic of GL_n(F_q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Mapping, Sequence

from .algebra.partitions import (
    as_composition,
    as_partition,
    composition_count,
    partitions,
    render_partition,
    sn_class_size,
)
from .algebra.qcount import parahoric_index
from .algebra.scalars import QScalar
from .finitegl import ClassFunction, cached_group, dl_character, parabolic_trivial_ind
from .finitegl.classfun import zero_class_function
from .weylcomb import block_composition

__all__ = [
    "ParahoricCombo",
    "DParahoricType",
    "ep_function",
    "ep_function_from_partitions",
    "product_ep",
    "f_J",
    "levi_scalar",
    "to_one_basis",
    "to_e_basis",
    "shadow",
    "weyl_averaged_dl",
    "fj_shadow_report",
]

Coeffish = QScalar | int | Fraction


def _scalar(c: Coeffish) -> QScalar:
    return c if isinstance(c, QScalar) else QScalar(c)


@dataclass(frozen=True)
class DParahoricType:
    """A standard parahoric of GL_r(D) up to conjugacy: division-algebra
    index d and the partition (r_1, .., r_k) of r giving the reductive
    quotient prod GL_{r_i}(F_{q^d})."""

    d: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        object.__setattr__(self, "parts", as_partition(self.parts))

    @property
    def r(self) -> int:
        return sum(self.parts)

    @property
    def n(self) -> int:
        return self.d * self.r


class ParahoricCombo:
    """Formal QScalar-linear combination of parahoric types of GL_n."""

    __slots__ = ("n", "basis", "terms")

    def __init__(self, n: int, basis: str = "e",
                 terms: Mapping[tuple[int, ...], Coeffish] = ()):
        if basis not in ("e", "one"):
            raise ValueError("basis must be 'e' or 'one'")
        self.n = n
        self.basis = basis
        clean: dict[tuple[int, ...], QScalar] = {}
        for key, coeff in dict(terms).items():
            lam = as_partition(key)
            if sum(lam) != n:
                raise ValueError(f"type {lam} is not a partition of {n}")
            c = _scalar(coeff)
            if not c.is_zero():
                clean[lam] = c
        self.terms = clean

    def _check(self, other: "ParahoricCombo") -> None:
        if self.n != other.n or self.basis != other.basis:
            raise ValueError("combos have mismatched n or basis")

    def __add__(self, other: "ParahoricCombo") -> "ParahoricCombo":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, QScalar(0)) + c
        return ParahoricCombo(self.n, self.basis, out)

    def __sub__(self, other: "ParahoricCombo") -> "ParahoricCombo":
        return self + other.scale(-1)

    def scale(self, c: Coeffish) -> "ParahoricCombo":
        c = _scalar(c)
        return ParahoricCombo(self.n, self.basis,
                              {k: c * v for k, v in self.terms.items()})

    def tensor(self, other: "ParahoricCombo") -> "ParahoricCombo":
        """Concatenation product: types merge as partitions of n1 + n2,
        coefficients multiply.  Both sides must be in the e-basis."""
        if self.basis != "e" or other.basis != "e":
            raise ValueError("tensor is defined on e-basis combos")
        out: dict[tuple[int, ...], QScalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(sorted(k1 + k2, reverse=True))
                c = c1 * c2
                acc = out.get(key)
                out[key] = c if acc is None else acc + c
        return ParahoricCombo(self.n + other.n, "e", out)

    def coefficient(self, lam: Sequence[int]) -> QScalar:
        return self.terms.get(as_partition(lam), QScalar(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], QScalar]]:
        """Reverse lexicographic on partitions: deterministic rendering order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParahoricCombo):
            return NotImplemented
        return (self.n, self.basis, self.terms) == (other.n, other.basis, other.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = "e" if self.basis == "e" else "1"
        return " + ".join(f"({c})*{sym}[{render_partition(k)}]"
                          for k, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"ParahoricCombo({self.n}, {self.basis!r}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis,
            "terms": [{"type": render_partition(k), "coeff": str(c)}
                      for k, c in self.sorted_terms()],
        }


def _subsets(upper: int) -> Iterator[frozenset]:
    for bits in itertools.product((0, 1), repeat=upper):
        yield frozenset(i + 1 for i, b in enumerate(bits) if b)


def ep_function(n: int) -> ParahoricCombo:
    """The Euler-Poincare function of GL_n in the e-basis:

        sum over I in {1, .., n-1} of (-1)^(n-1-|I|)/(n-|I|) e_{J_I},

    collapsed onto partitions (each partition collects all compositions
    with that multiset of parts)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    terms: dict[tuple[int, ...], QScalar] = {}
    for I in _subsets(n - 1):
        comp = block_composition(I, n)
        key = tuple(sorted(comp, reverse=True))
        coeff = QScalar(Fraction((-1) ** (n - 1 - len(I)), n - len(I)))
        acc = terms.get(key)
        terms[key] = coeff if acc is None else acc + coeff
    return ParahoricCombo(n, "e", terms)


def ep_function_from_partitions(n: int) -> ParahoricCombo:
    """Same combination built over partitions with multiplicity, as a
    cross-check of the subset-sum construction: a partition with l parts
    carries (-1)^(l-1)/l times its composition count."""
    terms = {
        lam: QScalar(Fraction((-1) ** (len(lam) - 1) * composition_count(lam),
                              len(lam)))
        for lam in partitions(n)
    }
    return ParahoricCombo(n, "e", terms)


def product_ep(d: int, r: int) -> ParahoricCombo:
    """The d^r-scaled r-fold product of EP functions of GL_d: supported on
    parahoric types refining (d^r), with the Iwahori coefficient
    (-1)^(r(d-1)) and the (d^r) coefficient d^r."""
    if d < 1 or r < 1:
        raise ValueError("d and r must be >= 1")
    factor = ep_function(d).scale(d)
    out = factor
    for _ in range(r - 1):
        out = out.tensor(factor)
    return out


def levi_scalar(comp: Sequence[int]) -> int:
    """|M / M^1 Z(M)| for the Levi M = prod GL_{n_i}(F): the product of the
    block sizes.  Equals d^r on the type (d^r)."""
    return _prod(as_composition(comp))


def _prod(xs: Sequence[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def _cycle_type_tuples(parts: Sequence[int]
                       ) -> Iterator[tuple[tuple[tuple[int, ...], ...], Fraction]]:
    """Cycle-type tuples of W_L = prod S_{r_i} with their relative weights
    (product of class sizes over |W_L|)."""
    w_order = _prod([factorial(p) for p in parts])
    per_factor = [list(partitions(p)) for p in parts]
    for combo in itertools.product(*per_factor):
        count = _prod([sn_class_size(rho) for rho in combo])
        yield combo, Fraction(count, w_order)


def f_J(t: DParahoricType) -> ParahoricCombo:
    """Iwahori-biinvariant combination attached to the parahoric of type t
    in GL_r(D), expanded in the e-basis of GL_n(F), n = r*d:

        (1/|W_L|) sum over w in W_L, grouped by cycle type, of the
        concatenation product over the parts m of w of
        (d*m) * f^EP_{GL_{d*m}}.
    """
    out = ParahoricCombo(t.n, "e")
    for combo, weight in _cycle_type_tuples(t.parts):
        term: ParahoricCombo | None = None
        for rho in combo:
            for m in rho:
                factor = ep_function(t.d * m).scale(t.d * m)
                term = factor if term is None else term.tensor(factor)
        assert term is not None and term.n == t.n
        out = out + term.scale(Fraction(weight))
    return out


def to_one_basis(x: ParahoricCombo) -> ParahoricCombo:
    """Rewrite an e-basis combo on bare characteristic functions:
    e_J = [K:J] 1_J, so each coefficient picks up the symbolic index."""
    if x.basis != "e":
        raise ValueError("expected an e-basis combo")
    return ParahoricCombo(
        x.n, "one",
        {k: c * parahoric_index(k) for k, c in x.terms.items()},
    )


def to_e_basis(x: ParahoricCombo) -> ParahoricCombo:
    if x.basis != "one":
        raise ValueError("expected a one-basis combo")
    return ParahoricCombo(
        x.n, "e",
        {k: c / parahoric_index(k) for k, c in x.terms.items()},
    )


def shadow(x: ParahoricCombo, q: int) -> ClassFunction:
    """The orbital-integral-faithful finite image: e_{J_c} maps to the
    induced trivial character Ind_{P_c}^{GL_n(F_q)}(1), coefficients
    specialized at q."""
    if x.basis == "one":
        x = to_e_basis(x)
    group = cached_group(x.n, q)
    total = zero_class_function(group)
    for lam, coeff in x.sorted_terms():
        c = coeff.specialize_q(q)
        total = total + parabolic_trivial_ind(group, lam).scale(c)
    return total


def weyl_averaged_dl(t: DParahoricType, q: int) -> ClassFunction:
    """(1/|W_L|) sum over w in W_L of the Deligne-Lusztig character of
    GL_n(F_q) whose torus type concatenates the parts d*m of w."""
    group = cached_group(t.n, q)
    total = zero_class_function(group)
    for combo, weight in _cycle_type_tuples(t.parts):
        torus = tuple(sorted((t.d * m for rho in combo for m in rho), reverse=True))
        total = total + dl_character(group, torus).scale(weight)
    return total


def fj_shadow_report(t: DParahoricType, q: int) -> dict:
    """Compare shadow(f_J(t), q) with the Weyl-averaged DL character; both
    pipelines run independently."""
    lhs = shadow(f_J(t), q)
    rhs = weyl_averaged_dl(t, q)
    return {
        "d": t.d,
        "parts": list(t.parts),
        "n": t.n,
        "q": q,
        "equal": lhs == rhs,
        "shadow": [str(v) for v in lhs.values],
        "weyl_averaged_dl": [str(v) for v in rhs.values],
    }
