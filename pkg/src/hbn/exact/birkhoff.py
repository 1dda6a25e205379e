"""Splitting types of vector bundles on P^1 from transition matrices.

A bundle glued over the two standard charts by a Laurent polynomial
matrix T (new frame = T * old frame) splits as a direct sum of line
bundles; diag(t^d) corresponds to the degree-d line bundle.  This module
extracts the multiset of degrees by exact column reduction:

    repeat:
        m_j   = minimal exponent in column j
        BC    = matrix of coefficients of t^(m_j), column by column
        if BC is invertible over F_p: the type is sorted(m)
        else: a kernel vector of BC combines columns (using only
              nonpositive shifts t^(m_j* - m_j)) so that the valuation of
              the cheapest involved column strictly increases

Each combination is a column operation with entries in F_p[1/t] and
constant determinant, so it changes neither the bundle nor det(T) up to
a scalar.  The column minima sum is bounded by the t-power of det(T),
which forces termination; when BC is invertible, T * (ops) factors as
(matrix of t-polynomials with unit determinant) * diag(t^(m_j)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from hbn.exact.linalg import nullspace_vector

Laurent = dict[int, int]


def lp_normal(f: Laurent, p: int) -> Laurent:
    return {e: c % p for e, c in f.items() if c % p}


def lp_add(f: Laurent, g: Laurent, p: int) -> Laurent:
    out = dict(f)
    for e, c in g.items():
        out[e] = (out.get(e, 0) + c) % p
    return {e: c for e, c in out.items() if c}


def lp_mul(f: Laurent, g: Laurent, p: int) -> Laurent:
    out: Laurent = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            out[e] = (out.get(e, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def lp_scale_shift(f: Laurent, c: int, shift: int, p: int) -> Laurent:
    c %= p
    if c == 0:
        return {}
    return {e + shift: c * v % p for e, v in f.items() if c * v % p}


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class TransitionMatrix:
    """Square matrix of Laurent polynomials over F_p."""

    entries: tuple[tuple[Laurent, ...], ...]
    p: int

    def __post_init__(self):
        n = len(self.entries)
        norm = tuple(
            tuple(lp_normal(dict(self.entries[i][j]), self.p) for j in range(n))
            for i in range(n)
        )
        for row in norm:
            if len(row) != n:
                raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", norm)

    @property
    def size(self) -> int:
        return len(self.entries)

    def det(self) -> Laurent:
        n = self.size
        out: Laurent = {}
        for perm in permutations(range(n)):
            term: Laurent = {0: 1}
            for i in range(n):
                term = lp_mul(term, self.entries[i][perm[i]], self.p)
                if not term:
                    break
            if _perm_sign(perm) == -1:
                term = lp_scale_shift(term, -1, 0, self.p)
            out = lp_add(out, term, self.p)
        return out

    def mul(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if self.size != other.size or self.p != other.p:
            raise ValueError("size/field mismatch")
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: Laurent = {}
                for l in range(n):
                    acc = lp_add(acc, lp_mul(self.entries[i][l], other.entries[l][j], self.p), self.p)
                row.append(acc)
            rows.append(tuple(row))
        return TransitionMatrix(tuple(rows), self.p)

    @classmethod
    def diagonal(cls, exps: list[int], p: int) -> "TransitionMatrix":
        n = len(exps)
        rows = tuple(
            tuple(({exps[i]: 1} if i == j else {}) for j in range(n)) for i in range(n)
        )
        return cls(rows, p)

    @classmethod
    def random_unimodular(cls, n: int, p: int, rng: random.Random, at_infinity: bool = False) -> "TransitionMatrix":
        """Product of elementary operations, invertible at 0 (or at ∞)."""
        sign = -1 if at_infinity else 1
        mat = cls.diagonal([0] * n, p)
        for _ in range(3 * n):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            poly: Laurent = {}
            for e in range(0, rng.randrange(1, 4)):
                c = rng.randrange(p)
                if c:
                    poly[sign * e] = c
            if not poly:
                continue
            elem_rows = [
                [({0: 1} if r == s else {}) for s in range(n)] for r in range(n)
            ]
            elem_rows[i][j] = poly
            mat = mat.mul(cls(tuple(tuple(r) for r in elem_rows), p))
        # sprinkle nonzero scalar scalings
        scal_rows = [
            [({0: rng.randrange(1, p)} if r == s else {}) for s in range(n)] for r in range(n)
        ]
        return mat.mul(cls(tuple(tuple(r) for r in scal_rows), p))


def birkhoff_splitting(T: TransitionMatrix) -> tuple[int, ...]:
    """Weakly increasing degree tuple of the bundle glued by T.

    Raises ValueError when det(T) is not a unit times a power of the
    variable (the matrix is then not an allowed gluing).
    """
    d = T.det()
    if not d:
        raise ValueError("transition matrix is singular")
    if len(d) != 1:
        raise ValueError("det must be a unit times a power of the variable")
    p = T.p
    n = T.size
    cols: list[list[Laurent]] = [[dict(T.entries[i][j]) for i in range(n)] for j in range(n)]
    while True:
        mins = []
        for j in range(n):
            exps = [min(ent) for ent in cols[j] if ent]
            if not exps:
                raise ValueError("zero column in invertible matrix")
            mins.append(min(exps))
        bc = [[cols[j][i].get(mins[j], 0) for j in range(n)] for i in range(n)]
        kernel = nullspace_vector(bc, p)
        if kernel is None:
            return tuple(sorted(mins))
        support = [j for j in range(n) if kernel[j] % p]
        jstar = min(support, key=lambda j: mins[j])
        newcol = [dict() for _ in range(n)]
        for j in support:
            shift = mins[jstar] - mins[j]
            for i in range(n):
                newcol[i] = lp_add(
                    newcol[i], lp_scale_shift(cols[j][i], int(kernel[j]), shift, p), p
                )
        cols[jstar] = newcol
