from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from finring import (
    FiniteRing,
    InternalConsistencyError,
    analysis,
    bt,
    center,
    gf,
    group_ring,
    ideal_closure,
    idempotents,
    in_jacobson,
    in_sqrt_jacobson,
    is_unit_closed_subring,
    jacobson,
    matrix_ring,
    nilpotents,
    product,
    sqrt_jacobson,
    subring_closure,
    trivial_extension,
    unit_inverses,
    units,
    upper_triangular,
    zmod,
)
from finring.groups import cyclic, symmetric_3

from helpers import (
    brute_center,
    brute_idempotents,
    brute_jacobson,
    brute_nilpotents,
    brute_sqrt_jacobson,
    brute_units,
    radical,
    zn_jacobson,
)

SAMPLE_RINGS = [
    zmod(4), zmod(6), zmod(12), zmod(27),
    gf(2, 2), gf(3, 2),
    matrix_ring(2, zmod(2)), matrix_ring(2, zmod(3)),
    upper_triangular(2, zmod(3)),
    trivial_extension(zmod(4)),
    group_ring(zmod(2), cyclic(4)),
    group_ring(zmod(3), cyclic(2)),
    product(zmod(4), zmod(3)),
    bt(zmod(2)),
    # lazy mode exercises the orbit-based unit detection
    group_ring(zmod(2), symmetric_3(), materialize=False),
    zmod(40, materialize=False),
]


@pytest.mark.parametrize("ring", SAMPLE_RINGS, ids=lambda r: f"{r.label}[{r.mode}]")
def test_sets_match_brute_force(ring):
    oracle_units = brute_units(ring)
    assert units(ring).members == set(oracle_units)
    inv = unit_inverses(ring)
    for u, ui in inv.items():
        assert ring.mul(u, ui) == ring.one
        assert ring.mul(ui, u) == ring.one
    assert jacobson(ring).members == brute_jacobson(ring)
    assert sqrt_jacobson(ring).members == brute_sqrt_jacobson(ring)
    assert nilpotents(ring).members == brute_nilpotents(ring)
    assert idempotents(ring).members == brute_idempotents(ring)
    assert center(ring).members == brute_center(ring)


def test_specific_values():
    assert units(zmod(4)).indices() == [1, 3]
    assert jacobson(zmod(12)).indices() == [0, 6]
    assert units(group_ring(zmod(2), cyclic(2))).indices() == [1, 2]
    m2 = matrix_ring(2, zmod(2))
    assert jacobson(m2).indices() == [0]
    assert len(sqrt_jacobson(m2)) == 4
    assert len(units(m2)) == 6
    ut = upper_triangular(2, zmod(2))
    assert jacobson(ut).indices() == [0, 2]
    assert units(ut).indices() == [5, 7]
    assert idempotents(zmod(6)).indices() == [0, 1, 3, 4]
    assert center(m2).indices() == [0, 9]
    assert nilpotents(gf(2, 2)).indices() == [0]


def test_in_jacobson_queries():
    assert in_jacobson(zmod(4), 2)
    assert not in_jacobson(zmod(6), 2)
    assert in_jacobson(zmod(6), 0)
    m2 = matrix_ring(2, zmod(2))
    assert in_sqrt_jacobson(m2, 2)      # E12 is nilpotent
    assert not in_sqrt_jacobson(m2, 6)  # E12 + E21 is a unit


def test_sqrtj_not_closed_under_addition():
    m2 = matrix_ring(2, zmod(2))
    sj = sqrt_jacobson(m2).members
    assert 2 in sj and 4 in sj
    assert m2.add(2, 4) == 6
    assert 6 in units(m2).members


def test_jacobson_zn_cross_oracles():
    for n in range(2, 65):
        ring = zmod(n)
        expected = {x for x in range(n) if x % radical(n) == 0}
        assert jacobson(ring).members == expected == zn_jacobson(n)


def test_units_plus_radical_stay_units():
    # u + j is a unit for every unit u and radical element j; exhaustive
    # over every default-corpus ring of order <= 256
    from finring import default_corpus

    rings = [r for r in SAMPLE_RINGS] + [r for _, r in default_corpus().rings()]
    checked = 0
    for ring in rings:
        if ring.order > 256:
            continue
        u = units(ring).members
        for x in u:
            for j in jacobson(ring).members:
                assert ring.add(x, j) in u
                checked += 1
    assert checked > 5_000  # the loop really ran, across dozens of rings


def test_ideal_closure():
    assert ideal_closure(zmod(12), [4]).indices() == [0, 4, 8]
    assert ideal_closure(zmod(12), []).indices() == [0]
    assert len(ideal_closure(matrix_ring(2, zmod(2)), [2])) == 16
    ut = upper_triangular(2, zmod(2))
    assert ideal_closure(ut, [2]).indices() == [0, 2]
    # lazy path agrees with the vectorized path
    lazy = group_ring(zmod(2), cyclic(2), materialize=False)
    table = group_ring(zmod(2), cyclic(2), materialize=True)
    assert ideal_closure(lazy, [3]).members == ideal_closure(table, [3]).members


def test_unit_closed_subrings():
    m2 = matrix_ring(2, zmod(2))
    s = subring_closure(m2, [2])
    assert is_unit_closed_subring(s)
    whole = subring_closure(zmod(6), [3])
    assert is_unit_closed_subring(whole)
    # diagonal copy of Z/4 inside TE(Z/4) is unit closed
    te = trivial_extension(zmod(4))
    diag = subring_closure(te, [])
    assert diag.ring.order == 4
    assert is_unit_closed_subring(diag)


def test_cache_is_once_only_under_concurrency():
    ring = matrix_ring(2, zmod(3))
    cache = analysis(ring)
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: units(ring).members, range(32)))
    assert all(r == results[0] for r in results)
    assert cache.compute_counts["units"] == 1


def test_inconsistent_table_is_reported_loudly():
    # a deliberately non-associative "ring" whose one-sided inverses are
    # not two-sided; the unit scan must refuse it rather than mislabel
    add = zmod(4).add_table
    mul = np.array([
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 2, 2],
    ])
    broken = FiniteRing(4, 1, "broken", add_table=add, mul_table=mul)
    with pytest.raises(InternalConsistencyError):
        units(broken)


def test_elementset_reports_sorted_indices():
    s = sqrt_jacobson(matrix_ring(2, zmod(2)))
    assert s.indices() == sorted(s.indices())
    assert 2 in s and 6 not in s
    assert len(s) == 4
