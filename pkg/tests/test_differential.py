"""Differential of the determinant map and the rank certificates.

The central invariant: every column of the fast cofactor-assembled
differential must equal the epsilon part of a literal dual-number
determinant expansion (dphi_column_dual).  The two routes share no code
beyond the form arithmetic.
"""

import random

import numpy as np
import pytest

from hbn.determinantal import degree_grid, sample_pair
from hbn.differential import (
    SELECTORS,
    bottom_row_scale,
    cofactor_forms,
    dominance_rank,
    dphi_column_dual,
    dphi_matrix,
    lemma_is_check,
    lemma_main_check,
    lemma_main_containment,
    lemma_sq_check,
    product_rule_rank,
    super_anti_product,
    tangent_basis,
)
from hbn.exact.field import DEFAULT_PRIME
from hbn.exact.forms import BinaryForm
from hbn.splitting import HirzebruchClass

P = DEFAULT_PRIME

CONFIGS = [
    ((-8, -4, -1), (-7, -4, 0), 3, 2),
    ((-3, -2, 0), (-3, -1, 0), 1, 0),
    ((-2, -1), (-2, 0), 2, 1),
    ((-5, -3, -2, -1), (-5, -3, -2, 0), 1, 1),
]


def _pair(e, f, m, pattern, seed):
    grid = degree_grid(e, f, m)
    return sample_pair(grid, pattern, P, random.Random(seed))


def test_selector_cardinalities_k3():
    grid = degree_grid((-8, -4, -1), (-7, -4, 0), 3)
    full = tangent_basis(grid, "FULL_PRIME").cardinality
    tp_basis = tangent_basis(grid, "T_PRIME")
    tpp_basis = tangent_basis(grid, "T_DOUBLE_PRIME")
    corner = tangent_basis(grid, "T_CORNER").cardinality
    inductive = tangent_basis(grid, "T_INDUCTIVE").cardinality
    assert full > tp_basis.cardinality > tpp_basis.cardinality
    assert tpp_basis.cardinality == corner + inductive
    # the corner entry (k, k) of A is the only entry dropped from T' to T''
    tp_entries = {(c[0], c[1], c[2]) for c in tp_basis.coords}
    tpp_entries = {(c[0], c[1], c[2]) for c in tpp_basis.coords}
    assert tp_entries - tpp_entries == {("A", 2, 2)}


def test_t_double_prime_is_corner_plus_inductive():
    for e, f, m, _ in CONFIGS:
        grid = degree_grid(e, f, m)
        tpp = set(tangent_basis(grid, "T_DOUBLE_PRIME").coords)
        corner = set(tangent_basis(grid, "T_CORNER").coords)
        inductive = set(tangent_basis(grid, "T_INDUCTIVE").coords)
        assert corner | inductive == tpp
        assert not (corner & inductive)


@pytest.mark.parametrize("selector", SELECTORS)
@pytest.mark.parametrize("include_p0", [False, True])
def test_fast_differential_matches_dual_number_oracle(selector, include_p0):
    for idx, (e, f, m, _) in enumerate(CONFIGS[:3]):
        pattern = "SUT" if selector != "FULL_PRIME" else "FULL"
        pair = _pair(e, f, m, pattern, seed=idx)
        M = dphi_matrix(pair, selector, include_p0=include_p0)
        for c, coord in enumerate(M.basis.coords):
            want = dphi_column_dual(pair, coord, include_p0=include_p0)
            assert np.array_equal(M.entries[:, c] % P, np.asarray(want) % P), (
                selector,
                coord,
            )


def test_dominance_rank_trigonal_report():
    cls = HirzebruchClass(m=3, k=3, delta=2)
    rep = dominance_rank((-8, -4, -1), (-7, -4, 0), cls)
    assert rep == {
        "target_dim": 30,
        "source_dim": 68,
        "max_rank": 30,
        "trials": 1,
        "verdict": "DOMINANT",
    }


def test_dominance_rank_requires_delta_budget():
    cls = HirzebruchClass(m=3, k=3, delta=2)
    with pytest.raises(ValueError):
        dominance_rank((-8, -4, -1), (-8, -4, -1), cls)


def test_dominance_not_achieved_on_violating_stratum():
    cls = HirzebruchClass(m=3, k=3, delta=2)
    rep = dominance_rank((-8, -4, -1), (-8, -2, -1), cls)
    assert rep["verdict"] == "NOT_ACHIEVED"
    assert rep["max_rank"] < rep["target_dim"]


def test_super_anti_product_degree():
    pair = _pair((-8, -4, -1), (-6, -4, -1), 3, "SUT", seed=0)
    prod = super_anti_product(pair)
    # b_{1,2} + b_{2,1} with the trigonal grid: degree 1 here
    assert prod.degree == 1 and not prod.is_zero()


def test_lemma_sq_and_planted_failure():
    # needs a stratum where the super-anti-diagonal product has a root,
    # otherwise the last block alone spans the first one
    grid = degree_grid((-8, -4, -1), (-6, -4, -1), 3)
    pair = sample_pair(grid, "SUT", P, random.Random(1))
    assert lemma_sq_check(pair)
    k = pair.k
    planted = type(pair)(
        A=tuple(
            tuple(
                BinaryForm.zero(pair.A[i][j].degree, P) if (i, j) == (k - 1, k - 1) else pair.A[i][j]
                for j in range(k)
            )
            for i in range(k)
        ),
        B=pair.B,
        grid=grid,
        pattern=pair.pattern,
        p=P,
    )
    assert not lemma_sq_check(planted)


def test_lemma_main_on_spot_strata():
    for e, f, m, _ in CONFIGS[:3]:
        pair = _pair(e, f, m, "SUT", seed=2)
        assert lemma_main_containment(pair)
        assert lemma_main_check(pair)


def test_lemma_main_requires_triangular_pattern():
    pair = _pair((-8, -4, -1), (-7, -4, 0), 3, "FULL", seed=3)
    with pytest.raises(ValueError):
        lemma_main_containment(pair)


def test_lemma_main_containment_fails_on_violating_stratum():
    # condition (2) fails, the super-anti-diagonal product vanishes, and
    # the divisibility description of the image breaks down
    pair = _pair((-8, -4, -1), (-8, -2, -1), 3, "SUT", seed=3)
    assert super_anti_product(pair).is_zero()
    assert not lemma_main_containment(pair)


def test_lemma_is_on_spot_strata():
    assert lemma_is_check(3, (-8, -4, -1), (-7, -4, 0), 3, rng=random.Random(4))
    assert lemma_is_check(4, (-8, -6, -3, -1), (-7, -5, -3, 0), 3, rng=random.Random(4))


def test_lemma_is_validates_lengths():
    with pytest.raises(ValueError):
        lemma_is_check(3, (-8, -4), (-7, -4, 0), 3)


def test_product_rule_witness_small():
    for d1 in range(4):
        for d2 in range(4):
            assert product_rule_rank((d1, d2))


def test_bottom_row_scale_semicontinuity():
    # rank at the degenerate limit h=0 never exceeds the generic rank
    pair = _pair((-8, -4, -1), (-7, -4, 0), 3, "SUT", seed=5)
    limit = dphi_matrix(bottom_row_scale(pair, 0), "T_INDUCTIVE").rank()
    generic = max(
        dphi_matrix(bottom_row_scale(pair, h), "T_INDUCTIVE").rank() for h in (1, 2, 3)
    )
    assert limit <= generic


def test_cofactor_forms_k1():
    pair = _pair((-1,), (0,), 2, "FULL", seed=6)
    forms = cofactor_forms(pair)
    assert len(forms) == 1 and len(forms[0]) == 1
