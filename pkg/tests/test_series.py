from fractions import Fraction
from math import comb, factorial

import pytest
import sympy as sp

from dgoperads.series import (CONJECTURAL, EXPONENTIAL, KOSZUL_INVERSE_FORMS, TABLE_ENTRIES, Series,
                              SeriesTruncation, associahedron_face_count, closed_form_coefficients,
                              closed_form_series, coefficient_formula, desuspension_series,
                              koszul_inverse_holds, series_substitute, series_truncate,
                              suspension_series)
from dgoperads.tables import (distributive_law_check, koszul_inverse_check, table_report)
from dgoperads.tables import series_truncate as computed_truncation

x, t = sp.symbols("x t")

SYMPY_FORMS = {
    "zin": x / (1 - x),
    "dend": ((1 - 2 * x) - sp.sqrt(1 - 4 * x)) / (2 * x),
    "prelie": -sp.LambertW(-x),
    "pi": (sp.exp(t * x) - 1) / (1 + (t - 1) * sp.exp(t * x)),
    "k": ((1 - 2 * x + x * t) - sp.sqrt(1 - 4 * x + 2 * x * t + x ** 2 * t ** 2)) / (2 * x * (1 - t)),
    "com": sp.exp(x) - 1,
    "as": x / (1 - x),
    "lie": -sp.log(1 - x),
    "pasc": (sp.exp(x) - sp.exp((1 - t) * x)) / t,
    "trias": (x / (1 - x) - (1 - t) * x / (1 + (t - 1) * x)) / t,
    "coprod": (-sp.log(1 - x) + sp.log(1 + (t - 1) * x)) / t,
    "perm": x * sp.exp(x),
    "dias": x / (1 - x) ** 2,
    "leib": x / (1 - x),
}

N = 6


def sympy_dims(name):
    expr = sp.series(SYMPY_FORMS[name], x, 0, N + 1).removeO()
    out = {}
    for n in range(1, N + 1):
        c = sp.expand(sp.simplify(expr.coeff(x, n)))
        poly = sp.Poly(c, t)
        for (k,), v in poly.terms():
            val = v * (-1) ** k * (factorial(n) if EXPONENTIAL[name] else 1)
            assert val == int(val)
            out[(n, k)] = int(val)
    return {key: v for key, v in out.items() if v}


@pytest.mark.parametrize("name", sorted(SYMPY_FORMS))
def test_closed_forms_match_sympy_expansion(name):
    assert closed_form_coefficients(name, N).dims == sympy_dims(name)


@pytest.mark.parametrize("name", TABLE_ENTRIES)
def test_closed_forms_match_coefficient_column(name):
    s = closed_form_coefficients(name, N)
    for n in range(1, N + 1):
        assert s.row(n) == {k: v for k, v in coefficient_formula(name, n).items() if v}


def test_known_coefficients():
    assert closed_form_coefficients("lambda", 3).row(3) == {0: 9, 1: 9, 2: 2}
    assert closed_form_coefficients("dias", 5).row(5) == {0: 5}
    assert closed_form_coefficients("pi", 4).row(4) == {0: 24, 1: 36, 2: 14, 3: 1}
    assert closed_form_coefficients("k", 4).row(4) == {0: 14, 1: 21, 2: 9, 3: 1}
    assert [associahedron_face_count(5, k) for k in range(5)] == [42, 84, 56, 14, 1]


def test_series_arithmetic():
    X = Series.x(5)
    one = Series.const(5, {0: 1})
    geo = (one - X).reciprocal()
    assert geo * (one - X) == one
    e = X.exp()
    assert e.c[3] == {0: Fraction(1, 6)}
    assert (e - one).compose(-(-X).log1p()) == X * (one - X).reciprocal()
    s = (one + X).sqrt()
    assert s * s == one + X
    # the top coefficient is lost by differentiating
    assert e.derivative().c[:5] == e.c[:5]
    assert not e.derivative().c[5]


def test_series_exact_rejections():
    with pytest.raises(ValueError):
        SeriesTruncation("bad", 2, True, {(1, 0): -1})
    with pytest.raises(KeyError):
        closed_form_coefficients("nope", 3)


def test_suspension_of_com():
    scom = suspension_series(closed_form_coefficients("com", 6))
    assert scom.dims == {(n, n - 1): 1 for n in range(1, 7)}
    assert scom.row(2) == {1: 1}


@pytest.mark.parametrize("name", TABLE_ENTRIES)
def test_suspension_roundtrip(name):
    s = closed_form_coefficients(name, 6)
    assert desuspension_series(suspension_series(s)).dims == s.dims


def test_substitute_identity():
    ident = SeriesTruncation("x", 5, True, {(1, 0): 1})
    s = closed_form_coefficients("pi", 5)
    assert series_substitute(s, ident).dims == s.dims
    assert series_substitute(ident, s).dims == s.dims


def test_distributive_law_order():
    rep = distributive_law_check(6)
    assert rep.zin_outer
    assert not rep.zin_inner


def test_koszul_inverse_forms():
    rep = koszul_inverse_check(5)
    assert rep.holds("f(-g(-x,t),t)")
    assert "f(g(x,t),t)" not in rep.forms_holding()
    f, g = closed_form_series("pi", 5), closed_form_series("coprod", 5)
    assert koszul_inverse_holds(f, g, "f(-g(-x,t),t)")
    assert set(KOSZUL_INVERSE_FORMS) >= set(rep.forms_holding())


def test_computed_truncations():
    assert computed_truncation("pi", 4).row(4) == {0: 24, 1: 36, 2: 14, 3: 1}
    assert computed_truncation("pasc", 5).row(5) == {k: comb(5, k + 1) for k in range(5)}
    assert computed_truncation("k", 4).row(4) == {0: 14, 1: 21, 2: 9, 3: 1}
    assert computed_truncation("as", 4).row(4) == {0: 1}
    packed = series_truncate("demo", {1: {0: 1}, 2: {0: 2, 1: 1}}, True)
    assert packed.N == 2 and packed.row(2) == {0: 2, 1: 1}


def test_table_report_small():
    rep = table_report(3)
    assert rep.passed
    assert {c.entry for c in rep.cells} == set(TABLE_ENTRIES)
    assert all(c.conjectural == (c.entry in CONJECTURAL) for c in rep.cells)
    rows = list(rep.rows())
    assert ("pi", 3, 2, 1) in rows
