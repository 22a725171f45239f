"""Exact coefficient arithmetic, q-combinatorics, and symmetric polynomials."""

from .partitions import (
    as_composition,
    as_partition,
    composition_count,
    compositions,
    conjugate,
    dominant,
    is_weakly_decreasing,
    orbit,
    parse_partition,
    partitions,
    render_partition,
    sn_class_size,
    ssyt_tableaux,
    ssyt_weight,
    z_order,
)
from .qcount import (
    gl_order,
    is_prime,
    parabolic_order,
    parahoric_index,
    qbinom,
    qint_balanced,
)
from .scalars import ONE, Q, V, ZERO, PoleError, QScalar, specialize_q
from .sympoly import (
    SymPoly,
    complete_homogeneous,
    elementary,
    monomial_sym,
    powersum,
    schur,
)

__all__ = [
    "QScalar", "PoleError", "specialize_q", "ZERO", "ONE", "V", "Q",
    "partitions", "compositions", "composition_count", "conjugate",
    "as_partition", "as_composition", "is_weakly_decreasing", "dominant",
    "orbit", "z_order", "sn_class_size", "ssyt_tableaux", "ssyt_weight",
    "render_partition", "parse_partition",
    "qint_balanced", "qbinom", "gl_order", "parabolic_order",
    "parahoric_index", "is_prime",
    "SymPoly", "monomial_sym", "elementary", "powersum", "schur",
    "complete_homogeneous",
]
