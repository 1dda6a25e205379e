"""Dense univariate polynomials over F_p, with factorization and roots.

A polynomial is a python list of ints in [0, p), coefficient of t^i at
index i; the zero polynomial is [].  Leading zeros are trimmed.  Long
products go through numpy int64 convolution, which is exact here since
(p-1)^2 * length stays far below 2^63 for the word-sized primes in use.

Also provides a quotient-field engine F_p[x]/(q) for q irreducible, so
callers can run gcds of polynomials whose coefficients live in an
extension field of arbitrary degree.
"""

from __future__ import annotations

import random

import numpy as np

from hbn.exact.field import inv_mod, sqrt_mod

Poly = list[int]


def ptrim(f: Poly) -> Poly:
    n = len(f)
    while n > 0 and f[n - 1] == 0:
        n -= 1
    return f[:n]


def pdeg(f: Poly) -> int:
    return len(f) - 1


def padd(f: Poly, g: Poly, p: int) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = f[:]
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return ptrim(out)


def psub(f: Poly, g: Poly, p: int) -> Poly:
    out = f[:] + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return ptrim(out)


def pscale(f: Poly, c: int, p: int) -> Poly:
    c %= p
    if c == 0:
        return []
    return [a * c % p for a in f]


def pmul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return []
    if len(f) + len(g) < 16:
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    out[i + j] = (out[i + j] + a * b) % p
        return ptrim(out)
    conv = np.convolve(np.asarray(f, dtype=np.int64), np.asarray(g, dtype=np.int64))
    return ptrim([int(c) for c in conv % p])


def pdivmod(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    """Quotient and remainder of f by g; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = f[:]
    dg = pdeg(g)
    lead_inv = inv_mod(g[-1], p)
    q = [0] * max(0, len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c == 0:
            continue
        c = c * lead_inv % p
        q[i - dg] = c
        for j, b in enumerate(g):
            f[i - dg + j] = (f[i - dg + j] - c * b) % p
    return ptrim(q), ptrim(f)


def pmod(f: Poly, g: Poly, p: int) -> Poly:
    return pdivmod(f, g, p)[1]


def pmonic(f: Poly, p: int) -> Poly:
    if not f or f[-1] == 1:
        return f[:]
    return pscale(f, inv_mod(f[-1], p), p)


def pgcd(f: Poly, g: Poly, p: int) -> Poly:
    """Monic gcd; gcd with the zero polynomial is the other argument."""
    while g:
        f, g = g, pmod(f, g, p)
    return pmonic(f, p)


def peval(f: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def peval_batch(f: Poly, xs: np.ndarray, p: int) -> np.ndarray:
    """Horner over a whole int64 array of evaluation points."""
    acc = np.zeros_like(xs)
    for c in reversed(f):
        acc = (acc * xs + c) % p
    return acc


def pderiv(f: Poly, p: int) -> Poly:
    return ptrim([i * c % p for i, c in enumerate(f)][1:])


def pinterp(xs: list[int], ys: list[int], p: int) -> Poly:
    """Newton interpolation through distinct nodes xs."""
    n = len(xs)
    coef = [y % p for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = (coef[i] - coef[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            coef[i] = num * inv_mod(den, p) % p
    # expand Newton form back to the monomial basis
    out: Poly = []
    for i in range(n - 1, -1, -1):
        out = padd(pmul(out, [-xs[i] % p, 1], p), [coef[i]], p)
    return out


def ppowmod(base: Poly, e: int, mod: Poly, p: int) -> Poly:
    result: Poly = [1]
    base = pmod(base, mod, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), mod, p)
        base = pmod(pmul(base, base, p), mod, p)
        e >>= 1
    return result


def squarefree_part(f: Poly, p: int) -> Poly:
    """f / gcd(f, f').  Valid since p always exceeds the degrees here."""
    if pdeg(f) < 1:
        return pmonic(f, p)
    g = pgcd(f, pderiv(f, p), p)
    return pmonic(pdivmod(f, g, p)[0], p)


def roots_fp(f: Poly, p: int, rng: random.Random) -> list[int]:
    """Distinct roots of f in F_p, sorted.  f = 0 is rejected."""
    if not f:
        raise ValueError("zero polynomial has every root")
    if pdeg(f) == 0:
        return []
    # keep only the F_p-rational part: gcd(f, x^p - x)
    xp = ppowmod([0, 1], p, f, p)
    g = pgcd(psub(xp, [0, 1], p), f, p)
    return sorted(_split_linear(g, p, rng))


def _split_linear(g: Poly, p: int, rng: random.Random) -> list[int]:
    # g is monic, squarefree, splits into distinct linear factors
    d = pdeg(g)
    if d <= 0:
        return []
    if d == 1:
        return [(-g[0]) % p]
    if g[0] == 0:
        rest = ptrim(g[1:])
        return [0] + _split_linear(pmonic(rest, p), p, rng)
    while True:
        a = rng.randrange(p)
        # gcd with (x+a)^((p-1)/2) - 1 separates roots by quadratic character
        h = ppowmod([a, 1], (p - 1) // 2, g, p)
        h = pgcd(psub(h, [1], p), g, p)
        if 0 < pdeg(h) < d:
            other = pmonic(pdivmod(g, h, p)[0], p)
            return _split_linear(h, p, rng) + _split_linear(other, p, rng)


def distinct_degree_factor(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split monic squarefree f into (product of degree-d irreducibles, d)."""
    out = []
    h = [0, 1]
    v = pmonic(f, p)
    d = 0
    while pdeg(v) > 0:
        d += 1
        if 2 * d > pdeg(v):
            out.append((v, pdeg(v)))
            break
        h = ppowmod(h, p, v, p)
        g = pgcd(psub(h, [0, 1], p), v, p)
        if pdeg(g) > 0:
            out.append((g, d))
            v = pmonic(pdivmod(v, g, p)[0], p)
            h = pmod(h, v, p)
    return out


def _equal_degree_split(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    # Cantor-Zassenhaus on a monic product of distinct degree-d irreducibles
    n = pdeg(f)
    if n == d:
        return [f]
    exponent = (p**d - 1) // 2
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        r = ptrim(r)
        if pdeg(r) < 1:
            continue
        h = ppowmod(r, exponent, f, p)
        g = pgcd(psub(h, [1], p), f, p)
        if 0 < pdeg(g) < n:
            rest = pmonic(pdivmod(f, g, p)[0], p)
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(rest, d, p, rng)


def irreducible_factors(f: Poly, p: int, rng: random.Random) -> list[tuple[Poly, int]]:
    """Monic irreducible factors of f with multiplicities, sorted by degree.

    Requires p > deg f so the classical squarefree recursion applies.
    """
    f = ptrim(f)
    if pdeg(f) < 1:
        return []
    if p <= pdeg(f):
        raise ValueError("factorization requires p > deg f")
    sf = squarefree_part(f, p)
    factors: list[Poly] = []
    for block, d in distinct_degree_factor(sf, p):
        factors.extend(_equal_degree_split(block, d, p, rng))
    out = []
    for q in sorted(factors, key=lambda h: (pdeg(h), h)):
        mult = 0
        while True:
            quo, rem = pdivmod(f, q, p)
            if rem:
                break
            f, mult = quo, mult + 1
        out.append((q, mult))
    return out


def quadratic_roots_fp2(f: Poly, p: int, nr: int) -> list[tuple[int, int]]:
    """Roots of a monic irreducible quadratic in F_p^2 = F_p[w]/(w^2 - nr)."""
    if pdeg(f) != 2:
        raise ValueError("expected a quadratic")
    b, c = f[1], f[0]
    disc = (b * b - 4 * c) % p
    # disc is a nonresidue, so disc/nr is a residue
    s = sqrt_mod(disc * inv_mod(nr, p) % p, p)
    assert s is not None, "quadratic was not irreducible"
    half = inv_mod(2, p)
    re = (-b) * half % p
    im = s * half % p
    return [(re, im), (re, (-im) % p)]


class QuotientField:
    """The field F_p[x]/(q) for monic irreducible q.

    Elements are int tuples of length deg q (coefficients of 1, x, ...).
    Degree 1 collapses to arithmetic in F_p itself, with x identified
    with the root -q[0].
    """

    def __init__(self, q: Poly, p: int):
        self.q = pmonic(q, p)
        self.p = p
        self.deg = pdeg(q)
        if self.deg < 1:
            raise ValueError("modulus must be nonconstant")
        self.zero = (0,) * self.deg
        self.one = (1,) + (0,) * (self.deg - 1)

    def embed(self, a: int) -> tuple[int, ...]:
        return (a % self.p,) + (0,) * (self.deg - 1)

    def generator(self) -> tuple[int, ...]:
        """The class of x."""
        if self.deg == 1:
            return ((-self.q[0]) % self.p,)
        return (0, 1) + (0,) * (self.deg - 2)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        prod = pmul(list(a), list(b), self.p)
        r = pmod(prod, self.q, self.p)
        return tuple(r) + (0,) * (self.deg - len(r))

    def inv(self, a):
        # extended euclid in F_p[x]
        p = self.p
        r0, r1 = self.q[:], ptrim(list(a))
        if not r1:
            raise ZeroDivisionError("inverse of zero in quotient field")
        s0: Poly = []
        s1: Poly = [1]
        while r1:
            quo, rem = pdivmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, psub(s0, pmul(quo, s1, p), p)
        inv_lead = inv_mod(r0[-1], p)
        s0 = pscale(s0, inv_lead, p)
        s0 = pmod(s0, self.q, p)
        return tuple(s0) + (0,) * (self.deg - len(s0))

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)


# ---------------------------------------------------------------------------
# polynomials in one variable with coefficients in an arbitrary field object
# (anything with zero/one/add/sub/mul/inv/is_zero, e.g. QuotientField)
# ---------------------------------------------------------------------------


def qtrim(f: list, K) -> list:
    n = len(f)
    while n > 0 and K.is_zero(f[n - 1]):
        n -= 1
    return f[:n]


def qmul(f: list, g: list, K) -> list:
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return qtrim(out, K)


def qdivmod(f: list, g: list, K) -> tuple[list, list]:
    g = qtrim(g, K)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = qtrim(f, K)[:]
    dg = len(g) - 1
    lead_inv = K.inv(g[-1])
    q = [K.zero] * max(0, len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if K.is_zero(c):
            continue
        c = K.mul(c, lead_inv)
        q[i - dg] = c
        for j, b in enumerate(g):
            f[i - dg + j] = K.sub(f[i - dg + j], K.mul(c, b))
    return qtrim(q, K), qtrim(f, K)


def qgcd(f: list, g: list, K) -> list:
    f, g = qtrim(f, K), qtrim(g, K)
    while g:
        f, g = g, qdivmod(f, g, K)[1]
    if f:
        lead_inv = K.inv(f[-1])
        f = [K.mul(c, lead_inv) for c in f]
    return f
