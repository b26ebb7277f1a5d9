"""Construction and certification of the four supported equation classes."""

from __future__ import annotations

from fractions import Fraction

import pytest

from realpv import (
    GaussRat,
    LinearODE,
    ModeError,
    NotPV,
    SolutionSpace,
    UnsupportedEquation,
    build_pv,
    complexify_pv,
    realify,
    verify_pv,
)

I = GaussRat(Fraction(0), Fraction(1))


def _ode(base, *texts):
    return LinearODE.from_texts(base, list(texts))


# -- the four classes certify --------------------------------------------------


def test_circle_build(circle_pv):
    assert circle_pv.eq_class == "CIRCLE"
    assert [str(s) for s in circle_pv.solutions] == ["s", "c"]
    assert circle_pv.meta["omega"] == "1"
    assert circle_pv.certificates.ok
    names = [c.name for c in circle_pv.certificates.checks]
    assert names == [
        "solutions_satisfy_equation",
        "wronskian_invertible",
        "no_new_constants_in_window",
        "companion_matrix_consistent",
    ]


def test_exp_build(exp_pv):
    e = exp_pv.extension.var("e")
    assert e.derive() == e
    assert exp_pv.companion == ((exp_pv.base.one(),),)
    assert verify_pv(exp_pv).ok


def test_radical_build(sqrt_pv):
    g = sqrt_pv.extension.var("g")
    t = sqrt_pv.extension.var("t")
    assert (g * g) == t
    assert sqrt_pv.meta["radical"] == {"p": 1, "q": 2, "f": "t"}
    assert verify_pv(sqrt_pv).ok


def test_radical_cube_of_square(base):
    # Y' = (2/3)(1/t) Y encodes g^3 = t^2
    pv = build_pv(base, _ode(base, "-2/3 * 1/t"), "RADICAL")
    assert pv.meta["radical"] == {"p": 2, "q": 3, "f": "t"}
    g = pv.extension.var("g")
    t = pv.extension.var("t")
    assert g ** 3 == t * t


def test_constcoeff2_distinct_roots(base):
    pv = build_pv(base, _ode(base, "2", "-3"), "CONSTCOEFF2")
    assert pv.meta["roots"] == "distinct rational 2, 1"
    assert [str(s) for s in pv.solutions] == ["e1", "e2"]
    e1, e2 = pv.solutions
    assert e1.derive() == e1 + e1
    assert e2.derive() == e2


def test_constcoeff2_zero_root(base):
    pv = build_pv(base, _ode(base, "0", "-1"), "CONSTCOEFF2")
    assert pv.meta["roots"] == "distinct rational 0, 1"
    assert [str(s) for s in pv.solutions] == ["1", "e"]


def test_constcoeff2_double_root(base):
    pv = build_pv(base, _ode(base, "1", "-2"), "CONSTCOEFF2")
    assert pv.meta["roots"] == "double root 1"
    e, u = pv.solutions
    assert u.derive() == u + e


def test_constcoeff2_t_solutions(base):
    pv = build_pv(base, _ode(base, "0", "0"), "CONSTCOEFF2")
    assert pv.meta["roots"] == "double root 0"
    assert pv.extension is pv.base
    assert [str(s) for s in pv.solutions] == ["1", "t"]


def test_constcoeff2_conjugate_pair(base):
    pv = build_pv(base, _ode(base, "2", "2"), "CONSTCOEFF2")
    assert pv.meta["roots"] == "conjugate pair -1 +/- 1 i"
    assert [str(s) for s in pv.solutions] == ["c*e", "s*e"]
    for s in pv.solutions:
        assert pv.ode.apply(pv.extension.lift(s)).is_zero()


# -- refusals are honest -------------------------------------------------------


def test_trivial_rate_is_not_pv(base):
    # Y' = 0 adjoins a new constant, the certificate must catch it
    with pytest.raises(NotPV) as exc:
        build_pv(base, _ode(base, "0"), "EXP")
    failed = [c.name for c in exc.value.report.failures()]
    assert failed == ["no_new_constants_in_window"]


def test_unknown_class(base):
    with pytest.raises(UnsupportedEquation):
        build_pv(base, _ode(base, "-1"), "AIRY")


def test_circle_rejects_wrong_shape(base):
    with pytest.raises(UnsupportedEquation):
        build_pv(base, _ode(base, "-1"), "CIRCLE")
    with pytest.raises(UnsupportedEquation):
        build_pv(base, _ode(base, "-1", "0"), "CIRCLE")  # Y'' = Y
    with pytest.raises(UnsupportedEquation):
        build_pv(base, _ode(base, "2", "0"), "CIRCLE")  # w^2 = 2 irrational


def test_radical_rejects_nonlogarithmic_rate(base):
    with pytest.raises(UnsupportedEquation):
        build_pv(base, _ode(base, "t"), "RADICAL")


def test_radical_rejects_negative_exponent(base):
    with pytest.raises(UnsupportedEquation):
        build_pv(base, _ode(base, "1/2 * 1/t"), "RADICAL")


def test_constcoeff2_rejects_irrational_roots(base):
    with pytest.raises(UnsupportedEquation):
        build_pv(base, _ode(base, "-2", "0"), "CONSTCOEFF2")


def test_foreign_base_rejected(base, circle_pv):
    ode = _ode(circle_pv.extension, "1", "0")
    with pytest.raises(UnsupportedEquation):
        build_pv(base, ode, "CIRCLE")


# -- complexification and realification ----------------------------------------


def test_complexify_circle(circle_pv):
    cx = complexify_pv(circle_pv)
    assert cx.extension.mode == "complexified"
    assert cx.certificates.ok
    # the original solutions reread verbatim
    assert [str(s) for s in cx.solutions] == ["s", "c"]


def test_realify_restores_real_presentation(circle_pv):
    cx = complexify_pv(circle_pv)
    out = realify(cx)
    assert out.extension.mode == "real"
    assert {str(s) for s in out.solutions} == {"s", "c"}
    assert out.extension.signature() == circle_pv.extension.signature()


def test_realify_from_eigenbasis(circle_pv):
    cx = complexify_pv(circle_pv)
    ext = cx.extension
    s, c = (ext.lift(x) for x in cx.solutions)
    # c + i s and c - i s span the same space over complexified constants
    plus = c + s.scale(I)
    minus = c - s.scale(I)
    out = realify(cx, SolutionSpace(ext, (plus, minus), "complexified"))
    assert {str(x) for x in out.solutions} == {"s", "c"}


def test_realify_from_skewed_basis(circle_pv):
    cx = complexify_pv(circle_pv)
    ext = cx.extension
    s, c = (ext.lift(x) for x in cx.solutions)
    skew = (s.scale(GaussRat.of(2)), s + c.scale(GaussRat.of(3)))
    out = realify(cx, SolutionSpace(ext, skew, "complexified"))
    # the fixed part is the same span, presented monic; certificates hold,
    # including consistency of the recomputed first-order system
    assert {str(x) for x in out.solutions} == {"s", "s + 3*c"}
    assert out.certificates.ok
    real_c = out.extension.var("c")
    rels = out.extension.linear_relations(list(out.solutions) + [real_c])
    assert any(v[-1] for v in rels)


def test_realify_requires_complexified_input(circle_pv):
    with pytest.raises(ModeError):
        realify(circle_pv)


def test_realify_exp_roundtrip(exp_pv):
    out = realify(complexify_pv(exp_pv))
    assert [str(s) for s in out.solutions] == ["e"]
    assert out.extension.signature() == exp_pv.extension.signature()


def test_realify_radical_roundtrip(sqrt_pv):
    out = realify(complexify_pv(sqrt_pv))
    assert [str(s) for s in out.solutions] == ["g"]
