"""GL_d(F_q) for small d and prime q: conjugacy classes and parabolic
subgroups.

Conjugacy classes are parametrized by their primary rational canonical
form: an assignment of a partition to each monic irreducible polynomial
(other than x), with total degree d.  For a matrix the partition attached
to an irreducible factor f is read off the kernel-dimension profile of
f(A)^j, which together with the characteristic polynomial is a complete
conjugacy invariant.  Class sizes come from the classical centralizer
order formula; representatives are block-diagonal companion matrices.
The test suite re-derives the classes of every enumerable group by brute
force and checks them against this construction.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from ..algebra.partitions import as_composition, conjugate, partitions
from ..algebra.qcount import gl_order, is_prime, parabolic_order
from .fqmat import (
    Mat,
    Poly,
    block_diag,
    char_poly,
    companion_matrix,
    factor_monic,
    kernel_dim,
    mat_det,
    mat_identity,
    mat_inv,
    mat_mul,
    monic_irreducibles,
    poly_eval_matrix,
    poly_mul,
    poly_pow,
)

__all__ = [
    "GLGroup",
    "GLClass",
    "ParabolicSubgroup",
    "BudgetError",
    "DEFAULT_CLASS_BUDGET",
    "DEFAULT_SCAN_LIMIT",
    "cached_group",
]

DEFAULT_CLASS_BUDGET = 25_000_000
DEFAULT_SCAN_LIMIT = 200_000

# label: sorted tuple of (irreducible poly, partition) pairs
Label = tuple[tuple[Poly, tuple[int, ...]], ...]


class BudgetError(RuntimeError):
    """An enumeration budget was exceeded; the message names the required one."""


@dataclass(frozen=True)
class GLClass:
    """One conjugacy class: canonical label, companion-form representative,
    exact size, characteristic polynomial."""

    label: Label
    rep: Mat
    size: int
    char_poly: Poly

    def describe(self) -> str:
        pieces = [f"{f}:{lam}" for f, lam in self.label]
        return "; ".join(pieces)


def _centralizer_order(label: Label, q: int) -> int:
    """Product over primary components of the unipotent-type centralizer
    order q_f^{sum (lambda'_j)^2} * prod_i phi_{m_i}(q_f^{-1})."""
    total = Fraction(1)
    for f, lam in label:
        qf = q ** (len(f) - 1)
        e = sum(c * c for c in conjugate(lam))
        val = Fraction(qf) ** e
        for m in Counter(lam).values():
            for l in range(1, m + 1):
                val *= 1 - Fraction(1, qf ** l)
        total *= val
    assert total.denominator == 1 and total > 0
    return int(total)


def _label_char_poly(label: Label, q: int) -> Poly:
    cp: Poly = (1,)
    for f, lam in label:
        cp = poly_mul(cp, poly_pow(f, sum(lam), q), q)
    return cp


def _label_rep(label: Label, q: int) -> Mat:
    blocks = []
    for f, lam in label:
        for part in lam:
            fm = poly_pow(f, part, q)
            blocks.append((companion_matrix(fm, q), len(fm) - 1))
    mat, _ = block_diag(blocks, q)
    return mat


class GLGroup:
    """GL_d(F_q) with exact conjugacy-class data and on-demand elements."""

    def __init__(self, d: int, q: int, class_budget: int = DEFAULT_CLASS_BUDGET):
        if d < 1:
            raise ValueError("d must be >= 1")
        if not is_prime(q):
            raise ValueError(f"q = {q} must be prime")
        self.d = d
        self.q = q
        self.class_budget = class_budget
        self.order = gl_order(d, q)
        self._classes: tuple[GLClass, ...] | None = None
        self._class_lookup: dict[Label, int] | None = None
        self._elements: tuple[Mat, ...] | None = None
        self._gclass_of_element: dict[Mat, int] | None = None
        self._ind_cache: dict[tuple[int, ...], object] = {}
        self._dl_cache: dict[tuple[int, ...], object] = {}

    def __repr__(self) -> str:
        return f"GLGroup(d={self.d}, q={self.q})"

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self) -> tuple[GLClass, ...]:
        if self._classes is None:
            if self.order > self.class_budget:
                raise BudgetError(
                    f"|GL_{self.d}(F_{self.q})| = {self.order} exceeds the class "
                    f"budget {self.class_budget}; pass class_budget >= {self.order}"
                )
            classes = []
            for label in self._all_labels():
                size = self.order // _centralizer_order(label, self.q)
                classes.append(GLClass(
                    label=label,
                    rep=_label_rep(label, self.q),
                    size=size,
                    char_poly=_label_char_poly(label, self.q),
                ))
            classes.sort(key=lambda c: c.label)
            if sum(c.size for c in classes) != self.order:
                raise AssertionError("class sizes do not sum to the group order")
            self._classes = tuple(classes)
            self._class_lookup = {c.label: i for i, c in enumerate(self._classes)}
        return self._classes

    @property
    def classes(self) -> tuple[GLClass, ...]:
        return self.conjugacy_classes()

    def _all_labels(self) -> Iterator[Label]:
        irrs = [f for f in monic_irreducibles(self.q, self.d) if f != (0, 1)]
        irrs.sort(key=lambda f: (len(f), f))

        def rec(idx: int, remaining: int) -> Iterator[Label]:
            if remaining == 0:
                yield ()
                return
            if idx == len(irrs):
                return
            f = irrs[idx]
            deg = len(f) - 1
            yield from rec(idx + 1, remaining)
            for w in range(1, remaining // deg + 1):
                for lam in partitions(w):
                    for rest in rec(idx + 1, remaining - deg * w):
                        yield ((f, lam),) + rest

        for label in rec(0, self.d):
            yield tuple(sorted(label))

    def label_of(self, mat: Mat) -> Label:
        """Complete conjugacy invariant of an invertible matrix."""
        cp = char_poly(mat, self.d, self.q)
        label = []
        for f, mult in factor_monic(cp, self.q):
            deg = len(f) - 1
            B = poly_eval_matrix(f, mat, self.d, self.q)
            power = mat_identity(self.d)
            prev_k = 0
            profile = []
            assigned = 0
            while assigned < mult:
                power = mat_mul(power, B, self.d, self.q)
                k = kernel_dim(power, self.d, self.q)
                parts_ge = (k - prev_k) // deg
                if parts_ge <= 0:
                    raise AssertionError("kernel profile stalled before filling")
                profile.append(parts_ge)
                assigned += parts_ge
                prev_k = k
            lam = conjugate(tuple(profile))
            label.append((f, lam))
        return tuple(sorted(label))

    def class_index_of(self, mat: Mat) -> int:
        self.conjugacy_classes()
        assert self._class_lookup is not None
        return self._class_lookup[self.label_of(mat)]

    def identity(self) -> Mat:
        return mat_identity(self.d)

    def identity_class_index(self) -> int:
        f_x_minus_1 = ((self.q - 1) % self.q, 1)
        label: Label = ((f_x_minus_1, (1,) * self.d),)
        self.conjugacy_classes()
        assert self._class_lookup is not None
        return self._class_lookup[label]

    # -- elements ------------------------------------------------------------

    def scan_space(self) -> int:
        return self.q ** (self.d * self.d)

    def elements(self, scan_limit: int = DEFAULT_SCAN_LIMIT) -> Iterator[Mat]:
        """All invertible matrices, by scanning q^(d^2) candidates."""
        if self.scan_space() > scan_limit:
            raise BudgetError(
                f"element scan space {self.scan_space()} exceeds limit {scan_limit}; "
                f"pass scan_limit >= {self.scan_space()}"
            )
        for flat in itertools.product(range(self.q), repeat=self.d * self.d):
            if mat_det(flat, self.d, self.q):
                yield flat

    def element_list(self, scan_limit: int = DEFAULT_SCAN_LIMIT) -> tuple[Mat, ...]:
        if self._elements is None:
            elems = tuple(self.elements(scan_limit))
            if len(elems) != self.order:
                raise AssertionError("element count does not match group order")
            self._elements = elems
        return self._elements

    def gclass_table(self, scan_limit: int = DEFAULT_SCAN_LIMIT) -> dict[Mat, int]:
        """element -> conjugacy class index, for enumerable groups."""
        if self._gclass_of_element is None:
            self._gclass_of_element = {
                m: self.class_index_of(m) for m in self.element_list(scan_limit)
            }
        return self._gclass_of_element


@lru_cache(maxsize=None)
def cached_group(d: int, q: int) -> GLGroup:
    """Shared GLGroup instances so class data is computed once per (d, q)."""
    return GLGroup(d, q)


class ParabolicSubgroup:
    """Standard block upper-triangular subgroup P_c of GL_d(F_q)."""

    def __init__(self, group: GLGroup, comp: Sequence[int]):
        self.group = group
        self.composition = as_composition(comp)
        if sum(self.composition) != group.d:
            raise ValueError(f"{comp} is not a composition of {group.d}")
        self.order = parabolic_order(self.composition, group.q)
        starts = []
        acc = 0
        for part in self.composition:
            starts.append(acc)
            acc += part
        self._starts = tuple(starts)
        self._elements: tuple[Mat, ...] | None = None
        self._element_set: frozenset[Mat] | None = None
        self._classes: list[tuple[Mat, tuple[Mat, ...]]] | None = None
        self._pclass_of: dict[Mat, int] | None = None

    def _block_of(self, index: int) -> int:
        b = 0
        while b + 1 < len(self._starts) and index >= self._starts[b + 1]:
            b += 1
        return b

    def contains(self, mat: Mat) -> bool:
        """Block upper-triangular pattern test (input assumed invertible)."""
        d = self.group.d
        for i in range(d):
            for j in range(d):
                if mat[i * d + j] and self._block_of(i) > self._block_of(j):
                    return False
        return True

    __contains__ = contains

    def elements(self) -> tuple[Mat, ...]:
        """Direct construction: invertible diagonal blocks, free entries above."""
        if self._elements is not None:
            return self._elements
        d, q = self.group.d, self.group.q
        block_gls = []
        for part in self.composition:
            gl = tuple(
                flat for flat in itertools.product(range(q), repeat=part * part)
                if mat_det(flat, part, q)
            )
            block_gls.append(gl)
        free = [(i, j) for i in range(d) for j in range(d)
                if self._block_of(j) > self._block_of(i)]
        out = []
        for blocks in itertools.product(*block_gls):
            base = [0] * (d * d)
            for b, flat in enumerate(blocks):
                part = self.composition[b]
                s = self._starts[b]
                for i in range(part):
                    for j in range(part):
                        base[(s + i) * d + (s + j)] = flat[i * part + j]
            for values in itertools.product(range(q), repeat=len(free)):
                mat = base[:]
                for (i, j), val in zip(free, values):
                    mat[i * d + j] = val
                out.append(tuple(mat))
        if len(out) != self.order:
            raise AssertionError("parabolic element count mismatch")
        out.sort()
        self._elements = tuple(out)
        return self._elements

    def element_set(self) -> frozenset[Mat]:
        if self._element_set is None:
            self._element_set = frozenset(self.elements())
        return self._element_set

    def conjugacy_classes(self) -> list[tuple[Mat, tuple[Mat, ...]]]:
        """P-conjugacy classes as (representative, all elements) pairs,
        by orbit partition."""
        if self._classes is not None:
            return self._classes
        d, q = self.group.d, self.group.q
        if len(self.composition) == 1:
            # P = G: reuse the group's class data instead of orbit crawls
            table = self.group.gclass_table()
            members: list[list[Mat]] = [[] for _ in self.group.classes]
            for m, idx in table.items():
                members[idx].append(m)
            self._classes = [
                (cls.rep, tuple(sorted(ms)))
                for cls, ms in zip(self.group.classes, members)
            ]
            self._pclass_of = dict(table)
            return self._classes
        elems = self.elements()
        inverses = {p: mat_inv(p, d, q) for p in elems}
        assigned: dict[Mat, int] = {}
        classes: list[tuple[Mat, tuple[Mat, ...]]] = []
        for x in elems:
            if x in assigned:
                continue
            orbit = {mat_mul(mat_mul(p, x, d, q), inverses[p], d, q) for p in elems}
            idx = len(classes)
            for y in orbit:
                assigned[y] = idx
            classes.append((x, tuple(sorted(orbit))))
        self._classes = classes
        self._pclass_of = assigned
        return classes

    def class_index_of(self, mat: Mat) -> int:
        self.conjugacy_classes()
        assert self._pclass_of is not None
        return self._pclass_of[mat]
