from fractions import Fraction

import pytest

from qtransfer.algebra import QScalar, partitions
from qtransfer.epfun import (
    DParahoricType,
    ParahoricCombo,
    ep_function,
    ep_function_from_partitions,
    f_J,
    fj_shadow_report,
    levi_scalar,
    product_ep,
    shadow,
    to_e_basis,
    to_one_basis,
    weyl_averaged_dl,
)
from qtransfer.finitegl import cached_group, dl_character, parabolic_trivial_ind


def all_types(nmax):
    for n in range(1, nmax + 1):
        for d in range(1, n + 1):
            if n % d == 0:
                for parts in partitions(n // d):
                    yield DParahoricType(d, parts)


def test_combo_validation_and_arithmetic():
    with pytest.raises(ValueError):
        ParahoricCombo(3, "e", {(2,): 1})  # not a partition of 3
    with pytest.raises(ValueError):
        ParahoricCombo(2, "x", {})
    a = ParahoricCombo(2, "e", {(2,): 1})
    b = ParahoricCombo(2, "e", {(1, 1): Fraction(1, 2)})
    assert (a + b).coefficient((2,)) == QScalar(1)
    assert (a.tensor(b)).n == 4
    assert a.tensor(b).coefficient((2, 1, 1)) == QScalar(Fraction(1, 2))


def test_ep_function_hand_values():
    assert ep_function(1) == ParahoricCombo(1, "e", {(1,): 1})
    e2 = ep_function(2)
    assert e2.coefficient((2,)) == QScalar(1)
    assert e2.coefficient((1, 1)) == QScalar(Fraction(-1, 2))
    e3 = ep_function(3)
    assert e3.coefficient((3,)) == QScalar(1)
    assert e3.coefficient((2, 1)) == QScalar(-1)
    assert e3.coefficient((1, 1, 1)) == QScalar(Fraction(1, 3))


def test_ep_collapse_correctness():
    for n in range(1, 8):
        assert ep_function(n) == ep_function_from_partitions(n)


def test_ep_iwahori_coefficient():
    # composition-level coefficient of the Iwahori term is (-1)^(n-1)/n;
    # the partition (1^n) collects (n-1)! compositions... exactly one
    # composition (1,..,1), so the collapsed coefficient is the same
    for n in range(1, 7):
        assert ep_function(n).coefficient((1,) * n) == QScalar(
            Fraction((-1) ** (n - 1), n))


def test_product_ep_coefficients():
    for d in range(1, 6):
        for r in range(1, 6):
            combo = product_ep(d, r)
            assert combo.coefficient((1,) * (d * r)) == QScalar(
                (-1) ** (r * (d - 1)))
            assert combo.coefficient((d,) * r) == QScalar(d ** r)
            # supported on refinements of (d^r): every part is <= d
            assert all(max(lam) <= d for lam in combo.terms)


def test_product_ep_r1():
    for d in range(1, 6):
        assert product_ep(d, 1) == ep_function(d).scale(d)


def test_levi_scalar():
    assert levi_scalar((5,)) == 5
    assert levi_scalar((2, 2, 2)) == 8
    assert levi_scalar((1, 1, 1)) == 1
    assert levi_scalar((3, 1)) == 3


def test_basis_conversion():
    combo = ep_function(2)
    one = to_one_basis(combo)
    assert one.coefficient((2,)) == QScalar(1)
    q = QScalar.q_power(1)
    assert one.coefficient((1, 1)) == (q + 1) * Fraction(-1, 2)
    for n in range(1, 6):
        assert to_e_basis(to_one_basis(ep_function(n))) == ep_function(n)
    with pytest.raises(ValueError):
        to_one_basis(one)


def test_coefficients_are_rational_until_one_basis():
    for n in range(1, 6):
        for c in ep_function(n).terms.values():
            c.as_fraction()  # raises if q-dependent
    for c in product_ep(2, 3).terms.values():
        c.as_fraction()


def test_f_J_special_cases():
    # torus quotient: trivial Weyl group, pure product
    for d, r in [(2, 2), (3, 1), (2, 3)]:
        assert f_J(DParahoricType(d, (1,) * r)) == product_ep(d, r)
    # single GL_1(F_{q^n}) block: n times the EP function
    for n in range(1, 6):
        assert f_J(DParahoricType(n, (1,))) == ep_function(n).scale(n)


def test_f_J_d1_collapses_to_single_type():
    # at d = 1 the Weyl-averaged expansion telescopes to the single
    # parahoric of the type itself (e.g. the Iwahori for type (1^r))
    for parts in [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2)]:
        t = DParahoricType(1, parts)
        expected = ParahoricCombo(t.n, "e", {tuple(sorted(parts, reverse=True)): 1})
        assert f_J(t) == expected


def test_shadow_of_full_type_is_trivial_character():
    for n, q in [(2, 2), (3, 2), (2, 3)]:
        combo = ParahoricCombo(n, "e", {(n,): 1})
        assert shadow(combo, q) == parabolic_trivial_ind(cached_group(n, q), (n,))


def test_shadow_accepts_one_basis():
    combo = ep_function(2)
    assert shadow(to_one_basis(combo), 3) == shadow(combo, 3)


def test_shadow_of_scaled_ep_is_coxeter_dl():
    # d * f^EP shadows to R_(d): the finite Euler-Poincare identity
    for d, q in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
        lhs = shadow(ep_function(d).scale(d), q)
        assert lhs == dl_character(cached_group(d, q), (d,))


@pytest.mark.parametrize("q", [2, 3])
def test_fj_shadow_identity_everywhere(q):
    for t in all_types(4):
        report = fj_shadow_report(t, q)
        assert report["equal"], report


def test_weyl_averaged_dl_iwahori_case():
    # type (1^r), d=1: W_L trivial, average is R of the split torus = Ind_B(1)
    group = cached_group(3, 2)
    avg = weyl_averaged_dl(DParahoricType(1, (1, 1, 1)), 2)
    assert avg == parabolic_trivial_ind(group, (1, 1, 1))


def test_serialization_order():
    combo = product_ep(2, 2)
    types = [t["type"] for t in combo.to_json()["terms"]]
    assert types == ["2,2", "2,1,1", "1,1,1,1"]  # reverse lexicographic
