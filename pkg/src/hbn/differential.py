"""Exact differential of the determinant map and its rank certificates.

The differential of (A, B) -> det(Ax + By) at a pair sends a tangent
direction (A', B') to the coefficient of eps in
det((A + eps A')x + (B + eps B')y) mod eps^2.  That coefficient equals
sum_{r,c} C_rc (A'_rc x + B'_rc y) where C_rc is the signed cofactor of
Ax + By at (r, c), so one cofactor pass per pair yields every column of
the differential; a literal dual-number determinant per column is kept
as a slow cross-check.

Tangent subspaces are named selectors over an ambient entry pattern.
FULL_PRIME takes every coordinate the pattern and degree grid admit.
T_PRIME kills the anti-diagonal of A' and the super-anti-diagonal of B';
T_DOUBLE_PRIME additionally kills the lower-right A' entry; T_CORNER
keeps only the surviving first-column/bottom-row coordinates, and
T_INDUCTIVE kills the first column and bottom row entirely, so
T_DOUBLE_PRIME splits as T_CORNER plus T_INDUCTIVE.

Coefficient conventions: block i of the target is the coefficient vector
of P_i (ascending powers of t, length delta + (k - i)m + 1); a matrix
over F_p stacks blocks 1..k, with block 0 prepended for full-target rank
reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from hbn.determinantal import (
    DegreeGrid,
    MatrixPair,
    degree_grid,
    det_xy,
    pattern_allows,
    sample_is_point,
    sample_pair,
)
from hbn.exact.birkhoff import _perm_sign
from hbn.exact.field import DEFAULT_PRIME
from hbn.exact.forms import BinaryForm, DualForm
from hbn.exact.linalg import matrix_rank
from hbn.exact.poly import pdeg, pdivmod, ptrim
from hbn.seeds import derive_seed
from hbn.splitting import HirzebruchClass

SELECTORS = ("FULL_PRIME", "T_PRIME", "T_DOUBLE_PRIME", "T_CORNER", "T_INDUCTIVE")


# ---------------------------------------------------------------------------
# tangent coordinates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TangentBasis:
    """Ordered coordinates (matrix, row, col, t-power) of a tangent subspace.

    One coordinate per monomial of each admitted entry, so the cardinality
    is the sum of (degree + 1) over admitted entries.
    """

    coords: tuple[tuple[str, int, int, int], ...]
    selector: str
    pattern: str

    @property
    def cardinality(self) -> int:
        return len(self.coords)


def _selector_admits(selector: str, k: int, mat: str, i: int, j: int) -> bool:
    # 0-based: anti-diagonal is i + j == k - 1, super-anti-diagonal i + j == k - 2
    anti = mat == "A" and i + j == k - 1
    super_anti = mat == "B" and i + j == k - 2
    corner_entry = mat == "A" and i == k - 1 and j == k - 1
    if selector == "FULL_PRIME":
        return True
    if selector == "T_PRIME":
        return not (anti or super_anti)
    if selector == "T_DOUBLE_PRIME":
        return not (anti or super_anti or corner_entry)
    if selector == "T_CORNER":
        # first column / bottom row survivors inside T_DOUBLE_PRIME
        return (mat == "A" and i == k - 1 and 1 <= j <= k - 2) or (
            mat == "B" and j == 0 and i <= k - 3
        )
    if selector == "T_INDUCTIVE":
        edge = i == k - 1 or j == 0
        return not (anti or super_anti or corner_entry or edge)
    raise ValueError(f"unknown selector {selector!r}")


def tangent_basis(grid: DegreeGrid, selector: str, pattern: str | None = None) -> TangentBasis:
    """Coordinates of a tangent subspace over an ambient entry pattern.

    The ambient defaults to FULL for FULL_PRIME and SUT otherwise; the
    triangular selectors only make sense over SUT.
    """
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}")
    if pattern is None:
        pattern = "FULL" if selector == "FULL_PRIME" else "SUT"
    if pattern == "IS_POINT":
        pattern = "SUT"
    if selector != "FULL_PRIME" and pattern != "SUT":
        raise ValueError("triangular selectors need the SUT pattern")
    k = grid.k
    coords = []
    for mat, degs in (("A", grid.a), ("B", grid.b)):
        for i in range(k):
            for j in range(k):
                d = degs[i][j]
                if d < 0:
                    continue
                if not pattern_allows(pattern, k, mat, i, j):
                    continue
                if not _selector_admits(selector, k, mat, i, j):
                    continue
                coords.extend((mat, i, j, jj) for jj in range(d + 1))
    return TangentBasis(coords=tuple(coords), selector=selector, pattern=pattern)


# ---------------------------------------------------------------------------
# the differential as a matrix
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DifferentialMatrix:
    """Matrix of the differential from a tangent basis to P-coefficient blocks."""

    entries: np.ndarray
    basis: TangentBasis
    blocks: tuple[int, ...]
    sizes: tuple[int, ...]
    p: int

    def rank(self) -> int:
        return matrix_rank(self.entries, self.p)

    def block_rows(self, i: int) -> np.ndarray:
        off = 0
        for blk, size in zip(self.blocks, self.sizes):
            if blk == i:
                return self.entries[off : off + size]
            off += size
        raise ValueError(f"block {i} not in matrix")


def _block_layout(grid: DegreeGrid, include_p0: bool) -> tuple[tuple[int, ...], tuple[int, ...]]:
    blocks = tuple(range(0 if include_p0 else 1, grid.k + 1))
    sizes = tuple(grid.delta + (grid.k - i) * grid.m + 1 for i in blocks)
    return blocks, sizes


def cofactor_forms(pair: MatrixPair) -> tuple:
    """Signed cofactors of Ax + By, each graded by x-power (k forms apiece)."""
    k = pair.k
    if k == 1:
        return (((BinaryForm.constant(1, pair.p),),),)
    out = []
    for r in range(k):
        rows = [i for i in range(k) if i != r]
        out_row = []
        for c in range(k):
            cols = [j for j in range(k) if j != c]
            dets = det_xy(pair, rows, cols)
            if (r + c) % 2:
                dets = [q.neg() for q in dets]
            out_row.append(tuple(dets))
        out.append(tuple(out_row))
    return tuple(out)


def dphi_matrix(pair: MatrixPair, selector: str, include_p0: bool = False) -> DifferentialMatrix:
    """One column per tangent coordinate; rows stack P-blocks 1..k (plus 0).

    A coordinate t^j in entry (r, c) of A' contributes the cofactor's
    x-power-i part, shifted by j, to block i + 1; the same coordinate of
    B' feeds block i.
    """
    grid = pair.grid
    p = pair.p
    basis = tangent_basis(grid, selector, pattern=pair.pattern)
    blocks, sizes = _block_layout(grid, include_p0)
    offsets = {}
    total = 0
    for blk, size in zip(blocks, sizes):
        offsets[blk] = total
        total += size
    mat = np.zeros((total, basis.cardinality), dtype=np.int64)
    cof = cofactor_forms(pair)
    for col, (mname, r, c, jj) in enumerate(basis.coords):
        for xpow, form in enumerate(cof[r][c]):
            blk = xpow + 1 if mname == "A" else xpow
            if blk not in offsets or form.is_zero():
                continue
            off = offsets[blk] + jj
            for idx, coeff in enumerate(form.coeffs):
                if coeff:
                    mat[off + idx, col] = coeff
    return DifferentialMatrix(entries=mat, basis=basis, blocks=blocks, sizes=sizes, p=p)


def dphi_column_dual(pair: MatrixPair, coord: tuple, include_p0: bool = False) -> np.ndarray:
    """Slow route for one column: dual-number determinant with a single eps.

    Expands det((A + eps A')x + (B + eps B')y) by permutations with
    DualForm arithmetic, no cofactors anywhere, and reads off the eps
    part.  Cross-check for dphi_matrix.
    """
    mname, r0, c0, jj = coord
    grid = pair.grid
    k = grid.k
    p = pair.p
    deg = (grid.a if mname == "A" else grid.b)[r0][c0]
    mono = BinaryForm.homogenize([0] * jj + [1], deg, p)
    blocks, sizes = _block_layout(grid, include_p0)
    offsets = {}
    total = 0
    for blk, size in zip(blocks, sizes):
        offsets[blk] = total
        total += size
    vec = np.zeros(total, dtype=np.int64)
    slots: dict[int, DualForm] = {}
    for perm in permutations(range(k)):
        sign = _perm_sign(perm)
        acc = {0: DualForm.lift(BinaryForm.constant(sign, p))}
        for step in range(k):
            r, c = step, perm[step]
            fa = DualForm(
                pair.A[r][c],
                mono if (mname, r, c) == ("A", r0, c0) else BinaryForm.zero(grid.a[r][c], p),
            )
            fb = DualForm(
                pair.B[r][c],
                mono if (mname, r, c) == ("B", r0, c0) else BinaryForm.zero(grid.b[r][c], p),
            )
            nxt: dict[int, DualForm] = {}
            for i, q in acc.items():
                if not (fb.base.is_zero() and fb.epsilon_part.is_zero()):
                    _dual_slot_add(nxt, i, q.mul(fb))
                if not (fa.base.is_zero() and fa.epsilon_part.is_zero()):
                    _dual_slot_add(nxt, i + 1, q.mul(fa))
            acc = nxt
            if not acc:
                break
        for i, q in acc.items():
            _dual_slot_add(slots, i, q)
    for i, q in slots.items():
        eps = q.epsilon_part
        if i not in offsets or eps.is_zero():
            continue
        for idx, coeff in enumerate(eps.coeffs):
            vec[offsets[i] + idx] = coeff
    return vec


def _dual_slot_add(d: dict[int, DualForm], i: int, q: DualForm) -> None:
    cur = d.get(i)
    d[i] = q if cur is None else cur.add(q)


# ---------------------------------------------------------------------------
# dominance certification
# ---------------------------------------------------------------------------


def dominance_rank(
    e,
    f,
    cls: HirzebruchClass,
    trials: int = 5,
    rng: random.Random | None = None,
    p: int = DEFAULT_PRIME,
) -> dict:
    """Empirical rank certificate for the determinant map on a stratum.

    Samples FULL pairs and computes the rank of the differential onto the
    full coefficient space including the P_0 block.  Reaching the target
    rank at any sample certifies dominance (rank is lower semicontinuous,
    so a general pair does at least as well); otherwise the verdict stays
    NOT_ACHIEVED and the max rank seen is reported as evidence.  No
    stratum conditions are checked here: on a forced-reducible grid the
    report simply never reaches the target.
    """
    e, f = tuple(e), tuple(f)
    grid = degree_grid(e, f, cls.m)
    if grid.delta != cls.delta:
        raise ValueError("sum of f minus sum of e must equal delta")
    if rng is None:
        rng = random.Random(derive_seed("dominance", e, f, (cls.m, cls.k, cls.delta), p))
    target = sum(cls.delta + (cls.k - i) * cls.m + 1 for i in range(cls.k + 1))
    source = tangent_basis(grid, "FULL_PRIME", pattern="FULL").cardinality
    max_rank = 0
    used = 0
    for _ in range(trials):
        used += 1
        pair = sample_pair(grid, "FULL", p, rng)
        rank = dphi_matrix(pair, "FULL_PRIME", include_p0=True).rank()
        max_rank = max(max_rank, rank)
        if max_rank == target:
            break
    verdict = "DOMINANT" if max_rank == target else "NOT_ACHIEVED"
    return {
        "target_dim": target,
        "source_dim": source,
        "max_rank": max_rank,
        "trials": used,
        "verdict": verdict,
    }


# ---------------------------------------------------------------------------
# the three rank lemmas behind the dominance proof
# ---------------------------------------------------------------------------


def product_rule_rank(degrees, rng: random.Random | None = None, p: int = DEFAULT_PRIME) -> bool:
    """Surjectivity of the differential of (Q_1, ..., Q_n) -> prod Q_i.

    Checked at the witness (t^d1, s^d2) when n = 2 and at random points;
    any success certifies the general statement by semicontinuity.
    """
    degrees = [int(d) for d in degrees]
    if any(d < 0 for d in degrees):
        raise ValueError("degrees must be nonnegative")
    if rng is None:
        rng = random.Random(derive_seed("product-rule", tuple(degrees), p))

    def surjective_at(qs: list[BinaryForm]) -> bool:
        total = sum(degrees) + 1
        cols = []
        for i, d in enumerate(degrees):
            rest = BinaryForm.constant(1, p)
            for l, ql in enumerate(qs):
                if l != i:
                    rest = rest.mul(ql)
            for jj in range(d + 1):
                col = [0] * total
                if not rest.is_zero():
                    for idx, coeff in enumerate(rest.coeffs):
                        col[jj + idx] = coeff
                cols.append(col)
        if not cols:
            return False
        return matrix_rank(np.array(cols, dtype=np.int64).T, p) == total

    if len(degrees) == 2:
        d1, d2 = degrees
        witness = [
            BinaryForm.homogenize([0] * d1 + [1], d1, p),
            BinaryForm.homogenize([1], d2, p),
        ]
        if surjective_at(witness):
            return True
    for _ in range(3):
        if surjective_at([BinaryForm.random(d, p, rng) for d in degrees]):
            return True
    return False


def _require_triangular(pair: MatrixPair) -> None:
    if pair.pattern not in ("SUT", "IS_POINT"):
        raise ValueError("pair must follow the SUT pattern")


def super_anti_product(pair: MatrixPair) -> BinaryForm:
    """Product of B entries on the super-anti-diagonal (divides P_1 on SUT)."""
    k = pair.k
    prod = BinaryForm.constant(1, pair.p)
    for i in range(1, k):
        prod = prod.mul(pair.B[k - i - 1][i - 1])
    return prod


def lemma_sq_check(pair: MatrixPair, rng: random.Random | None = None) -> bool:
    """Joint surjectivity onto the outer blocks (P_1, P_k) from the full
    triangular tangent space.  Deterministic given the pair; rng unused."""
    del rng
    _require_triangular(pair)
    grid = pair.grid
    k = grid.k
    M = dphi_matrix(pair, "FULL_PRIME")
    outer = np.vstack([M.block_rows(1), M.block_rows(k)])
    want = (grid.delta + (k - 1) * grid.m + 1) + (grid.delta + 1)
    return matrix_rank(outer, pair.p) == want


def lemma_main_containment(pair: MatrixPair) -> bool:
    """Image of the T_PRIME restriction always lands in the subspace where
    the super-anti-diagonal product divides P_1 and P_k vanishes."""
    _require_triangular(pair)
    grid = pair.grid
    k = grid.k
    p = pair.p
    prod = super_anti_product(pair)
    if prod.is_zero():
        return False
    M = dphi_matrix(pair, "T_PRIME")
    if np.any(M.block_rows(k) % p):
        return False
    g = prod.dehomogenize_s()
    bound = grid.delta + (k - 1) * grid.m - prod.degree
    block1 = M.block_rows(1)
    for col in range(block1.shape[1]):
        fcol = ptrim([int(x) % p for x in block1[:, col]])
        if not fcol:
            continue
        q, rem = pdivmod(fcol, g, p)
        if ptrim(rem) or pdeg(q) > bound:
            return False
    return True


def lemma_main_check(pair: MatrixPair, rng: random.Random | None = None) -> bool:
    """Image of the T_PRIME restriction equals the subspace where the
    super-anti-diagonal product divides P_1 and P_k = 0: containment
    column by column plus a dimension count.  rng unused."""
    del rng
    _require_triangular(pair)
    grid = pair.grid
    k = grid.k
    if not lemma_main_containment(pair):
        return False
    dim_w = grid.a[k - 1][k - 1] + 1
    dim_w += sum(grid.delta + (k - i) * grid.m + 1 for i in range(2, k))
    return dphi_matrix(pair, "T_PRIME").rank() == dim_w


def lemma_is_check(
    k: int,
    e,
    f,
    m: int,
    rng: random.Random | None = None,
    p: int = DEFAULT_PRIME,
    tries: int = 3,
) -> bool:
    """Surjectivity of the evaluation-composed differential at the special
    inductive point.

    Builds the point with split pairwise-coprime entries, restricts the
    differential to the corner subspace, then evaluates: the P_2 block at
    every root of F = prod of the fixed super-anti-diagonal entries, and
    each middle block P_2..P_{k-1} at every root of the corner entry G.
    Surjective means the evaluation rows are independent.  Surjectivity
    is an open condition, so one good draw certifies it; an unlucky draw
    proves nothing and is retried up to `tries` times.
    """
    e, f = tuple(e), tuple(f)
    if len(e) != k or len(f) != k:
        raise ValueError("types must have length k")
    if rng is None:
        rng = random.Random(derive_seed("lemma-is", e, f, m, p))
    grid = degree_grid(e, f, m)
    for _ in range(max(1, tries)):
        pair, meta = sample_is_point(grid, p, rng)
        M = dphi_matrix(pair, "T_CORNER")
        rows = []
        f_roots = [root for i in sorted(meta["F_roots"]) for root in meta["F_roots"][i]]
        for root in f_roots:
            rows.append(_eval_row(M, 2, root, p))
        for i in range(2, k):
            for root in meta["G_roots"]:
                rows.append(_eval_row(M, i, root, p))
        if not rows:
            return True
        if matrix_rank(np.array(rows, dtype=np.int64), p) == len(rows):
            return True
    return False


def _eval_row(M: DifferentialMatrix, block: int, t0: int, p: int) -> np.ndarray:
    sub = M.block_rows(block) % p
    weights = np.array([pow(t0, idx, p) for idx in range(sub.shape[0])], dtype=np.int64)
    return (sub * weights[:, None] % p).sum(axis=0) % p


# ---------------------------------------------------------------------------
# degeneration family for the flat-limit step
# ---------------------------------------------------------------------------


def bottom_row_scale(pair: MatrixPair, h: int) -> MatrixPair:
    """Scale the bottom-row A entries outside the first column by h.

    At h = 1 this is the pair itself; at h = 0 the bottom row degenerates
    and the inductive-subspace image drops, which is what the rank
    semicontinuity harness measures.
    """
    k = pair.k
    A = [list(row) for row in pair.A]
    for j in range(1, k):
        A[k - 1][j] = A[k - 1][j].scale(h)
    return MatrixPair(
        A=tuple(tuple(row) for row in A),
        B=pair.B,
        grid=pair.grid,
        pattern=pair.pattern,
        p=pair.p,
    )
