"""Prime field arithmetic: primality, inverses, square roots, F_p^2.

All elements of F_p are plain python ints in [0, p).  Elements of the
quadratic extension F_p^2 = F_p[w]/(w^2 - nonresidue) are pairs (a, b)
meaning a + b*w.  No classes wrap single field elements; hot loops stay
on ints and numpy arrays.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

DEFAULT_PRIME = 10007

# small witnesses make Miller-Rabin deterministic below 3.3 * 10^24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the word-sized moduli used here."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(a: int, p: int) -> int:
    """Inverse of a mod p.  Raises ZeroDivisionError on a = 0 mod p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"inverse of 0 mod {p}")
    return pow(a, p - 2, p)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for odd prime p."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod p, or None if a is a non-residue.

    Tonelli-Shanks; p must be an odd prime.  Deterministic: the needed
    non-residue is found by scanning 2, 3, 4, ...
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = quadratic_nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t * t % p, 1
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def quadratic_nonresidue(p: int) -> int:
    """Smallest quadratic non-residue mod odd prime p."""
    for z in range(2, p):
        if legendre(z, p) == -1:
            return z
    raise ValueError(f"no nonresidue mod {p}")  # unreachable for p > 2


@dataclass(frozen=True)
class PrimeFieldConfig:
    """Field of definition for all finite-field computation.

    Attributes:
        p: an odd prime.  Default 10007.
        nonresidue: a fixed quadratic non-residue mod p, used to present
            F_p^2 as F_p[w]/(w^2 - nonresidue).
    """

    p: int = DEFAULT_PRIME
    nonresidue: int = field(default=-1)

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"p = {self.p} is not an odd prime")
        if self.nonresidue == -1:
            object.__setattr__(self, "nonresidue", quadratic_nonresidue(self.p))
        elif legendre(self.nonresidue, self.p) != -1:
            raise ValueError(f"{self.nonresidue} is a residue mod {self.p}")

    def rng(self, seed: int) -> random.Random:
        return random.Random(seed)


# ---------------------------------------------------------------------------
# F_p^2 as pairs (a, b) = a + b*w, w^2 = nr
# ---------------------------------------------------------------------------

Fp2 = tuple[int, int]


def fp2_add(x: Fp2, y: Fp2, p: int) -> Fp2:
    return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)


def fp2_sub(x: Fp2, y: Fp2, p: int) -> Fp2:
    return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)


def fp2_mul(x: Fp2, y: Fp2, p: int, nr: int) -> Fp2:
    a, b = x
    c, d = y
    return ((a * c + b * d % p * nr) % p, (a * d + b * c) % p)


def fp2_inv(x: Fp2, p: int, nr: int) -> Fp2:
    a, b = x
    # norm = a^2 - nr*b^2, multiplicative; zero only at (0, 0)
    n = (a * a - nr * b * b % p) % p
    ni = inv_mod(n, p)
    return (a * ni % p, -b * ni % p)


def fp2_pow(x: Fp2, e: int, p: int, nr: int) -> Fp2:
    r: Fp2 = (1, 0)
    while e:
        if e & 1:
            r = fp2_mul(r, x, p, nr)
        x = fp2_mul(x, x, p, nr)
        e >>= 1
    return r


def fp2_is_zero(x: Fp2) -> bool:
    return x[0] == 0 and x[1] == 0
