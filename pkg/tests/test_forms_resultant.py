"""Binary forms, dual numbers, and the bivariate resultant stack.

The resultant route is load bearing for the smoothness and discriminant
certificates, so it is checked against sympy on small instances and
against the product-over-roots identity on split inputs.
"""

import random

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hbn.exact.field import DEFAULT_PRIME
from hbn.exact.forms import BinaryForm, DualForm
from hbn.exact.poly import pmul, ptrim
from hbn.exact.poly2 import BiPoly, resultant, resultant_v, resultant_univariate, sylvester

P = DEFAULT_PRIME
rng = random.Random(20240817)


def rand_form(deg):
    return BinaryForm.random(deg, P, rng)


def test_mul_degrees_add_and_eval_is_multiplicative():
    for _ in range(20):
        f, g = rand_form(rng.randrange(5)), rand_form(rng.randrange(5))
        h = f.mul(g)
        assert h.degree == f.degree + g.degree
        s0, t0 = rng.randrange(P), rng.randrange(P)
        assert h.eval(s0, t0) == f.eval(s0, t0) * g.eval(s0, t0) % P


def test_add_requires_matching_degree_and_eval_is_additive():
    f, g = rand_form(4), rand_form(4)
    h = f.add(g)
    s0, t0 = 3, 11
    assert h.eval(s0, t0) == (f.eval(s0, t0) + g.eval(s0, t0)) % P


def test_homogenize_dehomogenize_round_trip():
    coeffs = [5, 0, 3, 2]
    f = BinaryForm.homogenize(coeffs, 6, P)
    assert f.degree == 6
    assert f.dehomogenize_s() == ptrim(coeffs)
    # s = 1 slice evaluates like the underlying poly in t
    for t0 in (0, 1, 17):
        acc = sum(c * pow(t0, i, P) for i, c in enumerate(coeffs)) % P
        assert f.eval(1, t0) == acc


def test_zero_and_constant():
    z = BinaryForm.zero(3, P)
    assert z.is_zero()
    c = BinaryForm.constant(9, P)
    assert c.degree == 0 and c.eval(1, 1) == 9


def test_dual_form_product_rule():
    # (f + eps f')(g + eps g') = fg + eps (f g' + f' g)
    for _ in range(10):
        d1, d2 = rng.randrange(4), rng.randrange(4)
        f, fp_ = rand_form(d1), rand_form(d1)
        g, gp = rand_form(d2), rand_form(d2)
        prod = DualForm(f, fp_).mul(DualForm(g, gp))
        assert prod.base.coeffs == f.mul(g).coeffs
        want = f.mul(gp).add(fp_.mul(g))
        assert prod.epsilon_part.coeffs == want.coeffs


def test_resultant_univariate_matches_sylvester_and_sympy():
    x = sympy.symbols("x")
    for _ in range(8):
        f = [rng.randrange(P) for _ in range(rng.randrange(2, 5))]
        g = [rng.randrange(P) for _ in range(rng.randrange(2, 5))]
        f, g = ptrim(f), ptrim(g)
        if len(f) < 2 or len(g) < 2:
            continue
        r = resultant_univariate(f, g, P)
        fs = sum(c * x**i for i, c in enumerate(f))
        gs = sum(c * x**i for i, c in enumerate(g))
        assert r == int(sympy.resultant(fs, gs, x)) % P
        syl = sylvester(f, g)
        assert syl.shape == (len(f) + len(g) - 2, len(f) + len(g) - 2)


def test_resultant_product_over_roots():
    # res(f, g) = lc(f)^deg g * prod g(alpha_i) over the roots of f
    roots = [2, 5, 11]
    lc = 7
    f = [lc]
    for a in roots:
        f = pmul(f, [(-a) % P, 1], P)
    f = [c * pow(lc, P - 2, P) % P for c in f]
    f = [c * lc % P for c in f]  # keep lc as leading coeff
    g = [3, 0, 1, 2]
    want = pow(lc, len(g) - 1, P)
    for a in roots:
        want = want * sum(c * pow(a, i, P) for i, c in enumerate(g)) % P
    assert resultant_univariate(f, g, P) == want


def test_resultant_v_linear_case():
    # res_v(v - a(u), v - b(u)) = +-(a - b)(u)
    a = [1, 2, 3]
    b = [4, 0, 0, 5]
    f = [[(P - c) % P for c in a], [1]]
    g = [[(P - c) % P for c in b], [1]]
    r = ptrim(resultant_v(f, g, P))
    diff = ptrim([(x - y) % P for x, y in zip(a + [0] * 4, b + [0] * 4)])
    neg = ptrim([(-c) % P for c in diff])
    assert r in (diff, neg)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, P - 1), st.integers(0, P - 1))
def test_bipoly_resultant_matches_sympy(u0, v0):
    u, v, w = sympy.symbols("u v w")
    # fixed small pair of bivariate polys in (u, w), resultant in w
    f_s = 3 + u + (2 + u**2) * w + 5 * w**2
    g_s = 1 + 4 * u + (7 + u) * w
    f = [
        BiPoly.from_univariate([3, 1], 0, P),
        BiPoly.from_univariate([2, 0, 1], 0, P),
        BiPoly.from_univariate([5], 0, P),
    ]
    g = [BiPoly.from_univariate([1, 4], 0, P), BiPoly.from_univariate([7, 1], 0, P)]
    r = resultant(f, g, P)
    want = sympy.Poly(sympy.resultant(f_s, g_s, w), u).eval(u0)
    assert r.eval(u0, v0) == int(want) % P
