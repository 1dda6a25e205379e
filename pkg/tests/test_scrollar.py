"""Scrollar invariants and the bound polytopes.

Dual routes: the invariants of a split cover are recomputed from the
structure sheaf splitting type, polytope membership is recomputed from
the defining inequalities, and every non-abundance witness is re-tested
against the realizability criterion it is supposed to fail.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hbn.scrollar import (
    ScrollarInvariants,
    abundance_verdict,
    balanced_scrollar,
    general_bound_check,
    general_cover_not_abundant,
    imprimitive_double_cover_scrollar,
    ol_admits,
    ol_polytope,
    oo_admits,
    oo_polytope,
    scrollar_from_class,
)
from hbn.splitting import (
    HirzebruchClass,
    check_conditions,
    corollary_check,
    genus,
    odelta_type,
    structure_sheaf_type,
    u,
)


def test_scrollar_from_class_arithmetic_progression():
    cls = HirzebruchClass(m=2, k=4, delta=1)
    assert scrollar_from_class(cls).a == (3, 5, 7)
    with pytest.raises(ValueError):
        scrollar_from_class(HirzebruchClass(m=0, k=3, delta=0))


@given(st.integers(0, 3), st.integers(2, 6), st.integers(0, 3))
def test_scrollar_bridges_to_structure_sheaf_type(m, k, delta):
    if m == 0 and delta == 0:
        return
    cls = HirzebruchClass(m=m, k=k, delta=delta)
    a = scrollar_from_class(cls).a
    sst = structure_sheaf_type(cls)
    # invariants are the negated nontrivial pushforward degrees, reversed
    assert a == tuple(-sst[k - 1 - i] for i in range(1, k))
    # degree bookkeeping: sum a = g + k - 1
    assert sum(a) == genus(cls) + cls.k - 1


@given(st.integers(2, 7), st.integers(1, 40))
def test_balanced_scrollar_degree_sum(k, g):
    a = balanced_scrollar(k, g).a
    assert sum(a) == g + k - 1
    assert max(a) - min(a) <= 1
    assert all(x >= 1 for x in a)


def test_oo_polytope_matches_inequalities():
    def brute(k, bound):
        def rec(prefix):
            i = len(prefix)
            if i == k:
                yield tuple(prefix[1:])
                return
            lo = prefix[-1] if i > 1 else 1
            for v in range(lo, bound + 1):
                ok = all(
                    prefix[a] + v >= prefix[a + i] if a + i < len(prefix) else True
                    for a in range(len(prefix))
                )
                yield from rec(prefix + [v])

        out = []
        for cand in rec([0]):
            full = (0,) + cand
            if all(
                full[i + j] <= full[i] + full[j]
                for i in range(1, k)
                for j in range(1, k)
                if i + j < k
            ):
                out.append(cand)
        return sorted(set(out))

    for k, bound in [(3, 4), (4, 3), (5, 2)]:
        got = sorted(a.a for a in oo_polytope(k, bound))
        assert got == brute(k, bound)
        for a in got:
            assert oo_admits(a)


def test_ol_polytope_entries_satisfy_bounds():
    a = ScrollarInvariants((2, 3, 4))
    es = ol_polytope(a, 6)
    assert es
    full_a = (0,) + a.a
    for e in es:
        assert e[0] == 0
        assert ol_admits(a, e)
        k = len(e)
        for i in range(1, k):
            for j in range(k):
                if i + j < k:
                    assert e[i + j] <= full_a[i] + e[j]
    # a type violating the first bound is rejected
    assert not ol_admits(a, (0, 3, 3, 3))


def test_abundance_banner_cases():
    for k in range(2, 6):
        for delta in (1, 2, 3):
            assert abundance_verdict(HirzebruchClass(0, k, delta))["verdict"] == "ABUNDANT"
        for m in (1, 2):
            assert abundance_verdict(HirzebruchClass(m, k, 0))["verdict"] == "ABUNDANT"


def test_abundance_corner_witnesses():
    for m, delta in [(1, 1), (1, 2), (2, 1)]:
        for k in (4, 5):
            cls = HirzebruchClass(m, k, delta)
            res = abundance_verdict(cls)
            assert res["verdict"] == "NOT_ABUNDANT"
            corner = (0, m + delta, m + delta) + (2 * m + delta + 1,) * (k - 3)
            assert tuple(res["witness"]) == corner
            # the witness is honestly conjectured and honestly unrealizable
            assert ol_admits(scrollar_from_class(cls), res["witness"])
            assert not corollary_check(res["witness"], cls)


def test_abundance_small_k_trivial():
    res = abundance_verdict(HirzebruchClass(1, 2, 1))
    assert res["verdict"] == "ABUNDANT"


def test_general_cover_witness_bounds():
    for k in (4, 5, 6):
        for g in range(2 * (k - 1), 25):
            wit = general_cover_not_abundant(k, g)
            assert wit is not None, (k, g)
            a = balanced_scrollar(k, g)
            assert ol_admits(a, wit)
            assert u(wit) > g, (k, g, wit)
    assert general_cover_not_abundant(3, 10) is None
    assert general_cover_not_abundant(4, 3) is None


def test_imprimitive_double_cover_threshold():
    for g1 in range(0, 4):
        for g2 in range(g1, 5 * g1 + 6):
            a = imprimitive_double_cover_scrollar(g1, g2)
            assert a == (g1 + 1, g2 + 1, g1 + g2 + 2)
            assert oo_admits(a) == (g2 <= 2 * g1 + 1)


def test_general_bound_check_recovers_conditions():
    # with d = odelta type and e = f-side data, the i = k-1 and i = k rows
    # of the triple constraint are the two stratum inequalities
    cls = HirzebruchClass(m=3, k=3, delta=2)
    e = (-8, -4, -1)
    for f in [(-7, -4, 0), (-8, -2, -1), (-9, -1, -1)]:
        c1, c2, _ = check_conditions(e, f, cls)
        rep = general_bound_check(odelta_type(cls), e, f, g=genus(cls))
        viol_i = {i for i, _ in rep.violations}
        assert (cls.k not in viol_i) == c1
        assert (cls.k - 1 not in viol_i) == c2


def test_general_bound_degree_budget():
    cls = HirzebruchClass(m=3, k=3, delta=2)
    rep = general_bound_check(
        odelta_type(cls), (-8, -4, -1), (-7, -4, 0), g=genus(cls)
    )
    assert rep.degree_ok is True
    rep2 = general_bound_check(odelta_type(cls), (-8, -4, -1), (-7, -4, 0))
    assert rep2.degree_ok is None
