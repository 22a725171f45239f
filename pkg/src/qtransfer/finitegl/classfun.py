"""Class functions on GL_d(F_q): parabolic induction, Deligne-Lusztig
virtual characters by inversion of the Weyl-averaging identity, and the
finite-group identity checks.

All values are exact rationals.  Induced-from-trivial characters are
computed by counting stable flags, which needs no group enumeration and so
works for every group whose classes fit the budget; the coset-sum
definition of induction is also implemented for enumerable groups and the
two are compared in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from ..algebra.partitions import as_composition, as_partition, partitions
from ..weylcomb import block_composition, composition_class_counts
from .fqmat import Mat, in_rowspace, mat_inv, mat_mul, mat_vec, rref_subspaces
from .group import DEFAULT_SCAN_LIMIT, GLGroup, ParabolicSubgroup

__all__ = [
    "ClassFunction",
    "trivial_character",
    "zero_class_function",
    "induce_class_function",
    "induced_values_averaged",
    "parabolic_trivial_ind",
    "dl_character",
    "comb_prop_check",
    "ind_conjugate_identity_check",
    "ind_conjugate_identity_exhaustive",
]

LITERAL_CONJUGATION_LIMIT = 2_500


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Exact class function: one Fraction per conjugacy class of the group."""

    group: GLGroup
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise ValueError("value count does not match class count")

    def _same_group(self, other: "ClassFunction") -> None:
        if (self.group.d, self.group.q) != (other.group.d, other.group.q):
            raise ValueError("class functions live on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group,
                             tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.group,
                             tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(-a for a in self.values))

    def scale(self, c) -> "ClassFunction":
        c = Fraction(c)
        return ClassFunction(self.group, tuple(c * a for a in self.values))

    __rmul__ = scale
    __mul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return ((self.group.d, self.group.q) == (other.group.d, other.group.q)
                and self.values == other.values)

    def degree(self) -> Fraction:
        return self.values[self.group.identity_class_index()]

    def inner_with_trivial(self) -> Fraction:
        """<f, 1> = (1/|G|) sum over classes of size * value."""
        total = sum(Fraction(c.size) * v
                    for c, v in zip(self.group.classes, self.values))
        return total / self.group.order


def trivial_character(group: GLGroup) -> ClassFunction:
    return ClassFunction(group, (Fraction(1),) * len(group.classes))


def zero_class_function(group: GLGroup) -> ClassFunction:
    return ClassFunction(group, (Fraction(0),) * len(group.classes))


# -- induction ---------------------------------------------------------------


def induce_class_function(group: GLGroup, subgroup_elements: Sequence[Mat],
                          f: Mapping[Mat, Fraction],
                          scan_limit: int = DEFAULT_SCAN_LIMIT) -> ClassFunction:
    """Coset-sum induction: x -> sum over left-coset representatives s of
    f(s^-1 x s), with f extended by zero off the subgroup.

    Needs the whole group enumerated, so this is the small-group path.
    """
    d, q = group.d, group.q
    sub = list(subgroup_elements)
    sub_set = set(sub)
    reps: list[Mat] = []
    assigned: set[Mat] = set()
    for g in group.element_list(scan_limit):
        if g in assigned:
            continue
        reps.append(g)
        for h in sub:
            assigned.add(mat_mul(g, h, d, q))
    if len(reps) * len(sub) != group.order:
        raise AssertionError("coset decomposition failed")
    rep_invs = [mat_inv(s, d, q) for s in reps]
    values = []
    for cls in group.classes:
        total = Fraction(0)
        for s, s_inv in zip(reps, rep_invs):
            y = mat_mul(mat_mul(s_inv, cls.rep, d, q), s, d, q)
            if y in sub_set:
                total += f.get(y, Fraction(0))
        values.append(total)
    return ClassFunction(group, tuple(values))


def induced_values_averaged(group: GLGroup, sub_order: int,
                            f: Mapping[Mat, Fraction], x: Mat,
                            scan_limit: int = DEFAULT_SCAN_LIMIT) -> Fraction:
    """The representative-free form (1/|H|) sum over t in G of f(t^-1 x t)."""
    d, q = group.d, group.q
    total = Fraction(0)
    for t in group.element_list(scan_limit):
        y = mat_mul(mat_mul(mat_inv(t, d, q), x, d, q), t, d, q)
        if y in f:
            total += f[y]
    return total / sub_order


# -- stable-flag induction of the trivial character --------------------------


@lru_cache(maxsize=None)
def _flag_env(d: int, q: int):
    subs = rref_subspaces(d, q)
    pivots = tuple(
        tuple(tuple(next(j for j, x in enumerate(row) if x) for row in basis)
              for basis in subs[dim])
        for dim in range(d + 1)
    )
    return subs, pivots


@lru_cache(maxsize=None)
def _containments(d: int, q: int, dim_small: int, dim_big: int
                  ) -> tuple[tuple[int, ...], ...]:
    """For each dim_big subspace, the indices of dim_small subspaces in it."""
    subs, pivots = _flag_env(d, q)
    out = []
    for bi, big in enumerate(subs[dim_big]):
        bp = pivots[dim_big][bi]
        contained = tuple(
            si for si, small in enumerate(subs[dim_small])
            if all(in_rowspace(row, big, bp, q) for row in small)
        )
        out.append(contained)
    return tuple(out)


def _stable_subspaces(group: GLGroup, mat: Mat, dim: int) -> set[int]:
    d, q = group.d, group.q
    subs, pivots = _flag_env(d, q)
    stable = set()
    for idx, basis in enumerate(subs[dim]):
        piv = pivots[dim][idx]
        if all(in_rowspace(mat_vec(mat, row, d, q), basis, piv, q)
               for row in basis):
            stable.add(idx)
    return stable


def parabolic_trivial_ind(group: GLGroup, comp: Sequence[int]) -> ClassFunction:
    """Ind_{P_c}^{G}(1): the permutation character of G on flags of type c,
    computed by counting stable flags per class representative."""
    comp = as_composition(comp)
    if sum(comp) != group.d:
        raise ValueError(f"{comp} is not a composition of {group.d}")
    cached = group._ind_cache.get(comp)
    if cached is not None:
        return cached  # type: ignore[return-value]
    d, q = group.d, group.q
    dims = list(itertools.accumulate(comp))[:-1]  # proper intermediate dims
    values = []
    for cls in group.classes:
        if not dims:
            values.append(Fraction(1))
            continue
        stable_per_dim = [_stable_subspaces(group, cls.rep, dim) for dim in dims]
        counts = {idx: 1 for idx in stable_per_dim[0]}
        for level in range(1, len(dims)):
            inside = _containments(d, q, dims[level - 1], dims[level])
            nxt = {}
            for big in stable_per_dim[level]:
                total = sum(counts.get(small, 0) for small in inside[big])
                if total:
                    nxt[big] = total
            counts = nxt
        values.append(Fraction(sum(counts.values())))
    out = ClassFunction(group, tuple(values))
    group._ind_cache[comp] = out
    return out


# -- Deligne-Lusztig characters by inversion ---------------------------------


def dl_character(group: GLGroup, rho: Sequence[int]) -> ClassFunction:
    """The virtual character R_rho attached to the torus of type rho,
    defined by inverting the averaging identity

        Ind_{P_mu}(1) = (1/|W_mu|) sum over w in W_mu of R_{type(w)}

    over all partitions mu of d.  The system is triangular with nonzero
    diagonal in any order extending dominance; a singular system would be
    an implementation bug and raises.
    """
    rho = as_partition(rho)
    if sum(rho) != group.d:
        raise ValueError(f"{rho} is not a partition of {group.d}")
    cached = group._dl_cache.get(rho)
    if cached is not None:
        return cached  # type: ignore[return-value]
    parts = sorted(partitions(group.d), reverse=True)  # descending lex
    counts = {mu: composition_class_counts(mu) for mu in parts}
    orders = {mu: sum(counts[mu].values()) for mu in parts}
    solved: dict[tuple[int, ...], ClassFunction] = {}
    for mu in reversed(parts):  # from (1^d) upward
        row = counts[mu]
        for tau in parts:
            if tau > mu and row.get(tau, 0):
                raise AssertionError("averaging system is not triangular")
        diag = row.get(mu, 0)
        if diag == 0:
            raise AssertionError("singular averaging system (implementation bug)")
        rhs = parabolic_trivial_ind(group, mu).scale(orders[mu])
        for tau, count in row.items():
            if tau != mu:
                rhs = rhs - solved[tau].scale(count)
        solved[mu] = rhs.scale(Fraction(1, diag))
    group._dl_cache.update(solved)
    return solved[rho]


def comb_prop_check(group: GLGroup) -> dict:
    """Both sides of the d-cycle Deligne-Lusztig identity

        R_(d) = d * sum_I (-1)^(d-1-|I|)/(d-|I|) Ind_{J_I}(1),

    as exact class functions, with the equality verdict."""
    d = group.d
    lhs = dl_character(group, (d,))
    rhs = zero_class_function(group)
    for bits in itertools.product((0, 1), repeat=d - 1):
        I = frozenset(i + 1 for i, b in enumerate(bits) if b)
        comp = block_composition(I, d)
        coeff = Fraction((-1) ** (d - 1 - len(I)), d - len(I))
        rhs = rhs + parabolic_trivial_ind(group, comp).scale(coeff)
    rhs = rhs.scale(d)
    return {
        "d": group.d,
        "q": group.q,
        "equal": lhs == rhs,
        "lhs": [str(v) for v in lhs.values],
        "rhs": [str(v) for v in rhs.values],
    }


# -- the induced-class-function core identity --------------------------------


def _conjugation_counts_literal(group: GLGroup, x: Mat,
                                parabolic: ParabolicSubgroup) -> dict[int, int]:
    """For each P-class index c: #{t in G : t x t^-1 in class c} by a
    literal pass over the group."""
    d, q = group.d, group.q
    parabolic.conjugacy_classes()
    counts: dict[int, int] = {}
    pset = parabolic.element_set()
    for t in group.element_list():
        y = mat_mul(mat_mul(t, x, d, q), mat_inv(t, d, q), d, q)
        if y in pset:
            idx = parabolic.class_index_of(y)
            counts[idx] = counts.get(idx, 0) + 1
    return counts


def _conjugation_counts_grouped(group: GLGroup, class_index: int,
                                parabolic: ParabolicSubgroup) -> dict[int, int]:
    """Same counts via orbit-stabilizer: #{t : t x t^-1 in C} equals
    |Z_G(x)| times |C intersect class_G(x)|.  Exact, and cheap enough for
    GL_3(F_3); asserted against the literal pass on small groups."""
    table = group.gclass_table()
    x_class = group.classes[class_index]
    centralizer = group.order // x_class.size
    counts: dict[int, int] = {}
    for pidx, (_, members) in enumerate(parabolic.conjugacy_classes()):
        inter = sum(1 for y in members if table[y] == class_index)
        if inter:
            counts[pidx] = centralizer * inter
    return counts


def _coset_reps(group: GLGroup, parabolic: ParabolicSubgroup) -> list[Mat]:
    d, q = group.d, group.q
    reps: list[Mat] = []
    assigned: set[Mat] = set()
    for g in group.element_list():
        if g in assigned:
            continue
        reps.append(g)
        for h in parabolic.elements():
            assigned.add(mat_mul(g, h, d, q))
    return reps


def _coset_sum_counts(group: GLGroup, x: Mat, parabolic: ParabolicSubgroup,
                      reps: Sequence[Mat]) -> dict[int, int]:
    """For each P-class index c: #{s in reps : s^-1 x s in class c}."""
    d, q = group.d, group.q
    pset = parabolic.element_set()
    counts: dict[int, int] = {}
    for s in reps:
        y = mat_mul(mat_mul(mat_inv(s, d, q), x, d, q), s, d, q)
        if y in pset:
            idx = parabolic.class_index_of(y)
            counts[idx] = counts.get(idx, 0) + 1
    return counts


def ind_conjugate_identity_check(group: GLGroup, comp: Sequence[int],
                                 class_rep: Mat | int) -> dict:
    """For the P_c-class C of the given representative, evaluate on every
    class of G the three expressions

        sum_s 1_C(s^-1 x s)   over left-coset representatives s,
        (1/|P|) #{t in G : t x t^-1 in C},
        sum_{s'} 1_{s' C s'^-1}(x)  over a different set of representatives,

    and report whether they agree.
    """
    comp = as_composition(comp)
    parabolic = ParabolicSubgroup(group, comp)
    pclasses = parabolic.conjugacy_classes()
    if isinstance(class_rep, int):
        cidx = class_rep
    else:
        cidx = parabolic.class_index_of(class_rep)
    report = ind_conjugate_identity_exhaustive(group, comp)
    case = report["cases"][cidx]
    return {
        "d": group.d,
        "q": group.q,
        "composition": list(comp),
        "class_index": cidx,
        "class_size": len(pclasses[cidx][1]),
        "equal": case["equal"],
        "values": case["values"],
    }


def ind_conjugate_identity_exhaustive(group: GLGroup,
                                      comp: Sequence[int] | None = None) -> dict:
    """Run the three-expression identity for every parabolic class C (of the
    given composition, or of all compositions of d) against every class of G."""
    if comp is None:
        comps = [c for c in _all_compositions(group.d)]
    else:
        comps = [as_composition(comp)]
    all_ok = True
    cases_out = []
    for c in comps:
        parabolic = ParabolicSubgroup(group, c)
        pclasses = parabolic.conjugacy_classes()
        reps = _coset_reps(group, parabolic)
        # a second, different set of representatives for the third expression
        twists = parabolic.elements()
        reps2 = [mat_mul(s, twists[i % len(twists)], group.d, group.q)
                 for i, s in enumerate(reps)]
        literal_ok = group.order <= LITERAL_CONJUGATION_LIMIT
        per_class_counts = []
        for gidx, cls in enumerate(group.classes):
            a = _coset_sum_counts(group, cls.rep, parabolic, reps)
            b = _conjugation_counts_grouped(group, gidx, parabolic)
            if literal_ok:
                b_lit = _conjugation_counts_literal(group, cls.rep, parabolic)
                if b_lit != b:
                    raise AssertionError(
                        "grouped conjugation count disagrees with literal pass")
            c3 = _coset_sum_counts(group, cls.rep, parabolic, reps2)
            per_class_counts.append((a, b, c3))
        for cidx in range(len(pclasses)):
            values = []
            equal = True
            for gidx in range(len(group.classes)):
                a, b, c3 = per_class_counts[gidx]
                va = Fraction(a.get(cidx, 0))
                vb = Fraction(b.get(cidx, 0), parabolic.order)
                vc = Fraction(c3.get(cidx, 0))
                values.append((va, vb, vc))
                if not va == vb == vc:
                    equal = False
            all_ok = all_ok and equal
            cases_out.append({
                "composition": list(c),
                "class_index": cidx,
                "equal": equal,
                "values": [tuple(str(x) for x in row) for row in values],
            })
    return {"d": group.d, "q": group.q, "ok": all_ok, "cases": cases_out}


def _all_compositions(n: int):
    for bits in itertools.product((0, 1), repeat=n - 1):
        cuts = [0] + [i + 1 for i, b in enumerate(bits) if b] + [n]
        yield tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))
