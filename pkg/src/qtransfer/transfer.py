"""The normalized transfer homomorphism between Iwahori-block centers.

Source: S_n-invariant Laurent polynomials in n = r*d variables z_i.
Target: S_r-invariants in r variables t_k.  On monomials the map is

    z**a  |->  v**(a . x) * t**b,      b_k = sum of the k-th block of a,

where x is the block-repeated shift vector ((d-1, d-3, ..., 1-d) r times,
stored in v-units, i.e. doubled q-exponents).  Equivalently it is the
substitution z_{(k-1)d+j} <- v**(d+1-2j) * t_k.  Both realizations are
implemented -- the monomial map as the main path, the substitution as an
independent oracle -- together with the closed forms of the images of
elementary, power-sum, and Schur polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra.partitions import as_partition, partitions, ssyt_tableaux, ssyt_weight
from .algebra.qcount import qbinom, qint_balanced
from .algebra.scalars import QScalar
from .algebra.sympoly import SymPoly, powersum

__all__ = [
    "TransferParams",
    "GeneralMapParams",
    "shift_vector",
    "transfer_monomial",
    "transfer_sym",
    "substitution_image",
    "image_e",
    "image_p",
    "image_schur",
    "modulus_exponent",
    "general_powersum_map",
    "surjectivity_witness",
]


@dataclass(frozen=True)
class TransferParams:
    """Source GL_n(F) with n = r*d; target the inner form of rank r,
    built from a division algebra of index d."""

    r: int
    d: int

    def __post_init__(self):
        if self.r < 1 or self.d < 1:
            raise ValueError("r and d must be >= 1")

    @property
    def n(self) -> int:
        return self.r * self.d


@dataclass(frozen=True)
class GeneralMapParams:
    """Parameters (k, ell, m, s) of the component-wise power-sum map:
    k blocks, splitting length ell, with s dividing m."""

    k: int
    ell: int
    m: int
    s: int

    def __post_init__(self):
        if min(self.k, self.ell, self.m, self.s) < 1:
            raise ValueError("all parameters must be >= 1")
        if self.m % self.s:
            raise ValueError(f"s = {self.s} must divide m = {self.m}")


def shift_vector(p: TransferParams) -> tuple[int, ...]:
    """The vector x in v-units: (d-1, d-3, ..., 1-d) repeated r times.

    Each block sums to 0 and decreases in steps of 2.
    """
    block = tuple(p.d - 1 - 2 * j for j in range(p.d))
    return block * p.r


def _block_sums(p: TransferParams, a: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a[k * p.d:(k + 1) * p.d]) for k in range(p.r))


def transfer_monomial(p: TransferParams, a: Sequence[int]
                      ) -> tuple[QScalar, tuple[int, ...]]:
    """Image of the monomial z**a: coefficient v**(a.x) and exponent vector b."""
    if len(a) != p.n:
        raise ValueError(f"exponent vector has length {len(a)} != n = {p.n}")
    x = shift_vector(p)
    dot = sum(ai * xi for ai, xi in zip(a, x))
    return QScalar.v_power(dot), _block_sums(p, a)


def transfer_sym(p: TransferParams, f: SymPoly) -> SymPoly:
    """Linear extension of the monomial map over the full orbit expansion.

    The result is S_r-invariant; SymPoly.from_expansion asserts it.
    """
    if f.nvars != p.n:
        raise ValueError(f"input has {f.nvars} variables, expected n = {p.n}")
    image: dict[tuple[int, ...], QScalar] = {}
    for mono, c in f.expand().items():
        coeff, b = transfer_monomial(p, mono)
        acc = image.get(b)
        image[b] = c * coeff if acc is None else acc + c * coeff
    return SymPoly.from_expansion(p.r, image)


def substitution_image(p: TransferParams, f: SymPoly) -> SymPoly:
    """Oracle: literally substitute z_{(k-1)d+j} <- v**(d+1-2j) * t_k and collect.

    Avoids the shift-vector inner product on purpose; coefficients come from
    per-variable QScalar powers, so this is an independent computation path.
    """
    if f.nvars != p.n:
        raise ValueError(f"input has {f.nvars} variables, expected n = {p.n}")
    var_scalar = [QScalar.v_power(p.d + 1 - 2 * j) for j in range(1, p.d + 1)] * p.r
    image: dict[tuple[int, ...], QScalar] = {}
    for mono, c in f.expand().items():
        coeff = c
        b = [0] * p.r
        for i, e in enumerate(mono):
            if e:
                coeff = coeff * var_scalar[i] ** e
                b[i // p.d] += e
        key = tuple(b)
        acc = image.get(key)
        image[key] = coeff if acc is None else acc + coeff
    return SymPoly.from_expansion(p.r, image)


def image_e(p: TransferParams, k: int) -> SymPoly:
    """Closed form of the image of e_k: a q-binomial-weighted sum of
    monomial functions over partitions of k.

    Each partition alpha is padded with zeros to exactly k entries; the
    exponent sum_{i=1}^{k} (alpha_i**2 - d)/2 runs over all k entries,
    zeros included.  Parts larger than d contribute a vanishing q-binomial
    and are skipped; monomial functions with more than r parts are zero.
    """
    if not 1 <= k <= p.n:
        raise ValueError(f"image_e: need 1 <= k <= n = {p.n}, got {k}")
    out = SymPoly.zero(p.r)
    for alpha in partitions(k, max_part=p.d):
        if len(alpha) > p.r:
            continue
        coeff = QScalar(1)
        for part in alpha:
            coeff = coeff * qbinom(p.d, part)
        # v-exponent: sum over the k padded entries of (alpha_i^2 - d)
        vexp = sum(part * part for part in alpha) - p.d * k
        coeff = coeff * QScalar.v_power(vexp)
        key = alpha + (0,) * (p.r - len(alpha))
        out = out + SymPoly(p.r, {key: coeff})
    return out


def image_p(p: TransferParams, k: int) -> SymPoly:
    """Closed form of the image of p_k: the balanced q-integer times p_k."""
    if k < 1:
        raise ValueError("image_p: need k >= 1")
    return powersum(p.r, k).scale(qint_balanced(p.d, k))


def image_schur(p: TransferParams, mu: Sequence[int]) -> SymPoly:
    """Image of the Schur polynomial s_mu via SSYT enumeration.

    Every tableau of shape mu with entries in 1..n contributes the transfer
    of its weight monomial.
    """
    mu = as_partition(mu) if mu else ()
    if len(mu) > p.n:
        return SymPoly.zero(p.r)
    image: dict[tuple[int, ...], QScalar] = {}
    for tab in ssyt_tableaux(mu, p.n):
        coeff, b = transfer_monomial(p, ssyt_weight(tab, p.n))
        acc = image.get(b)
        image[b] = coeff if acc is None else acc + coeff
    return SymPoly.from_expansion(p.r, image)


def modulus_exponent(p: TransferParams, a: Sequence[int], b: Sequence[int]) -> int:
    """The modulus-character exponent in v-units (doubled q-exponents):

        sum_i (n+1-2i) a_i  -  d * sum_k (r+1-2k) b_k.

    Requires b to be the block-sum vector of a; equals a . x identically.
    """
    if len(a) != p.n or len(b) != p.r:
        raise ValueError("wrong vector lengths")
    if tuple(b) != _block_sums(p, a):
        raise ValueError("b is not the block-sum vector of a")
    first = sum((p.n + 1 - 2 * (i + 1)) * ai for i, ai in enumerate(a))
    second = p.d * sum((p.r + 1 - 2 * (k + 1)) * bk for k, bk in enumerate(b))
    return first - second


def general_powersum_map(g: GeneralMapParams, i: int) -> QScalar:
    """Coefficient (1 - q^{-i k ell m/s}) / (1 - q^{-i m/s}) on the i-th
    power sum, expanded as the geometric sum so no denominator remains."""
    if i < 1:
        raise ValueError("need i >= 1")
    step = i * (g.m // g.s)
    terms: dict[int, int] = {}
    for j in range(g.k * g.ell):
        terms[-2 * j * step] = terms.get(-2 * j * step, 0) + 1
    return QScalar.from_v_terms(terms)


def _rank_of_rows(rows: list[list[QScalar]]) -> int:
    """Exact rank by Gaussian elimination over the rational-function field."""
    mat = [row[:] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if not mat[i][col].is_zero()),
                     None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and not mat[i][col].is_zero():
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def surjectivity_witness(p: TransferParams, maxdeg: int) -> dict:
    """Check that the power-sum images triangularly generate the polynomial
    part of the target invariants up to the given degree.

    The leading coefficients are the balanced q-integers qint(d, k); they are
    nonzero over the rational-function field, so monomials in the images span
    each graded piece.  The report records the coefficients and, per degree,
    the exact rank of the products' expansion against the monomial basis.
    """
    if maxdeg < 1:
        raise ValueError("need maxdeg >= 1")
    leading = {}
    for k in range(1, maxdeg + 1):
        c = qint_balanced(p.d, k)
        if c.is_zero():
            raise AssertionError(f"vanishing leading coefficient at k = {k}")
        leading[k] = c
    images = {k: image_p(p, k) for k in range(1, maxdeg + 1)}
    degree_checks = []
    for m in range(1, maxdeg + 1):
        targets = [lam + (0,) * (p.r - len(lam))
                   for lam in partitions(m, max_length=p.r)]
        index = {key: i for i, key in enumerate(targets)}
        rows = []
        for lam in partitions(m):
            prod = SymPoly(p.r, {(0,) * p.r: QScalar(1)})
            for part in lam:
                prod = prod * images[part]
            row = [QScalar(0)] * len(targets)
            for key, c in prod.terms.items():
                row[index[key]] = c
            rows.append(row)
        rank = _rank_of_rows(rows)
        degree_checks.append({
            "degree": m,
            "target_dimension": len(targets),
            "rank": rank,
            "ok": rank == len(targets),
        })
    return {
        "r": p.r,
        "d": p.d,
        "maxdeg": maxdeg,
        "leading_coefficients": {k: str(c) for k, c in leading.items()},
        "degree_checks": degree_checks,
        "ok": all(ch["ok"] for ch in degree_checks),
    }
