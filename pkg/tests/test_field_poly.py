"""Field and dense-polynomial layer, checked against naive reference code."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from hbn.exact.field import (
    DEFAULT_PRIME,
    Fp2,
    fp2_inv,
    fp2_is_zero,
    fp2_mul,
    inv_mod,
    is_prime,
    legendre,
    quadratic_nonresidue,
    sqrt_mod,
)
from hbn.exact.poly import (
    irreducible_factors,
    pdeg,
    pdivmod,
    peval,
    pgcd,
    pinterp,
    pmod,
    pmonic,
    pmul,
    ppowmod,
    pscale,
    psub,
    ptrim,
    roots_fp,
    squarefree_part,
)

P = DEFAULT_PRIME
PRIMES = [2, 3, 5, 7, 101, 997, 10007]


def _trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_matches_trial_division():
    for n in range(200):
        assert is_prime(n) == _trial_division(n), n
    for n in (10007, 10006, 32003, 1 << 16):
        assert is_prime(n) == _trial_division(n), n


@given(st.integers(1, P - 1))
def test_inv_mod(a):
    assert a * inv_mod(a, P) % P == 1


@given(st.integers(0, P - 1))
def test_sqrt_of_square(a):
    r = sqrt_mod(a * a % P, P)
    assert r is not None and r * r % P == a * a % P


def test_nonresidue_has_no_root():
    for p in (7, 101, 10007):
        nr = quadratic_nonresidue(p)
        assert legendre(nr, p) == -1
        assert sqrt_mod(nr, p) is None


@given(
    st.integers(0, P - 1), st.integers(0, P - 1),
    st.integers(0, P - 1), st.integers(0, P - 1),
)
def test_fp2_inverse(a, b, c, d):
    nr = quadratic_nonresidue(P)
    x: Fp2 = (a, b)
    y: Fp2 = (c, d)
    if not fp2_is_zero(x):
        prod = fp2_mul(x, fp2_inv(x, P, nr), P, nr)
        assert prod == (1, 0)
    # associativity spot
    left = fp2_mul(fp2_mul(x, y, P, nr), (2, 3), P, nr)
    right = fp2_mul(x, fp2_mul(y, (2, 3), P, nr), P, nr)
    assert left == right


coeffs = st.lists(st.integers(0, P - 1), min_size=0, max_size=8)


@given(coeffs, coeffs)
@settings(max_examples=60)
def test_pdivmod_reconstructs(f, g):
    g = ptrim(g)
    if pdeg(g) < 0:
        return
    q, r = pdivmod(f, g, P)
    assert pdeg(r) < pdeg(g)
    back = [(x + y) % P for x, y in zip(pmul(q, g, P) + [0] * 20, r + [0] * 20)]
    assert ptrim(back) == ptrim([x % P for x in f])


@given(coeffs, coeffs)
@settings(max_examples=60)
def test_pgcd_divides_both(f, g):
    f, g = ptrim(f), ptrim(g)
    d = pgcd(f, g, P)
    if pdeg(d) < 0:
        assert pdeg(ptrim(f)) < 0 and pdeg(ptrim(g)) < 0
        return
    assert pdeg(pmod(f, d, P)) < 0
    assert pdeg(pmod(g, d, P)) < 0
    # monic normalization
    assert d[-1] == 1


def test_roots_of_split_polynomial():
    rng = random.Random(5)
    pts = rng.sample(range(P), 6)
    f = [1]
    for a in pts:
        f = pmul(f, [(-a) % P, 1], P)
    assert sorted(roots_fp(f, P, rng)) == sorted(pts)
    for a in pts:
        assert peval(f, a, P) == 0


def test_roots_with_multiplicity_and_irreducible_part():
    rng = random.Random(7)
    # (x - 2)^2 * (x^2 - nr) has the double root once in the root list
    nr = quadratic_nonresidue(P)
    f = pmul(pmul([P - 2, 1], [P - 2, 1], P), [(-nr) % P, 0, 1], P)
    assert set(roots_fp(f, P, rng)) == {2}


def test_irreducible_factors_reconstruct():
    rng = random.Random(11)
    f = [3, 1, 4, 1, 5, 9, 2, 6]
    fac = irreducible_factors(f, P, rng)
    prod = [1]
    for g, mult in fac:
        assert g[-1] == 1
        for _ in range(mult):
            prod = pmul(prod, g, P)
    assert ptrim(prod) == pmonic(f, P)


def test_squarefree_part_kills_multiplicity():
    g = [1, 2, 3, 1]
    f = pmul(pmul(g, g, P), [5, 1], P)
    sf = squarefree_part(f, P)
    assert pdeg(pmod(sf, pmonic(g, P), P)) < 0
    assert pdeg(sf) == pdeg(g) + 1


def test_pinterp_round_trip():
    rng = random.Random(3)
    f = [rng.randrange(P) for _ in range(6)]
    xs = rng.sample(range(P), 9)
    ys = [peval(f, x, P) for x in xs]
    assert ptrim(pinterp(xs, ys, P)) == ptrim(f)


def test_ppowmod_matches_naive():
    base, mod = [2, 3, 1], [1, 0, 0, 1]
    acc = [1]
    for _ in range(13):
        acc = pmod(pmul(acc, base, P), mod, P)
    assert ppowmod(base, 13, mod, P) == acc


@given(coeffs, st.integers(0, P - 1), st.integers(0, P - 1))
@settings(max_examples=40)
def test_eval_is_ring_hom(f, c, x):
    scaled = pscale(f, c, P)
    assert peval(scaled, x, P) == c * peval(f, x, P) % P
    assert peval(psub(f, f, P), x, P) == 0
