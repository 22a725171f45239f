"""Class-function computations in GL_d(F_q) for small d and prime q."""

from .classfun import (
    ClassFunction,
    comb_prop_check,
    dl_character,
    ind_conjugate_identity_check,
    ind_conjugate_identity_exhaustive,
    induce_class_function,
    induced_values_averaged,
    parabolic_trivial_ind,
    trivial_character,
    zero_class_function,
)
from .group import (
    DEFAULT_CLASS_BUDGET,
    DEFAULT_SCAN_LIMIT,
    BudgetError,
    GLClass,
    GLGroup,
    ParabolicSubgroup,
    cached_group,
)

__all__ = [
    "GLGroup", "GLClass", "ParabolicSubgroup", "BudgetError",
    "DEFAULT_CLASS_BUDGET", "DEFAULT_SCAN_LIMIT", "cached_group",
    "ClassFunction", "trivial_character", "zero_class_function",
    "induce_class_function", "induced_values_averaged",
    "parabolic_trivial_ind", "dl_character", "comb_prop_check",
    "ind_conjugate_identity_check", "ind_conjugate_identity_exhaustive",
]
