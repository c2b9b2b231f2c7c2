import pytest

from slword import (
    GF,
    SLMatrix,
    brute_force_elements,
    delta,
    elementary,
    enumerate_group,
    norm_ball_table,
    normally_generates,
    norms_by_fixed_point,
    transvection_diameter,
)
from slword.oracle import GroupSizeCapExceeded, _letters


@pytest.mark.parametrize("n,p,order", [(2, 3, 24), (2, 5, 120), (3, 2, 168)])
def test_enumeration_agrees_with_brute_force(n, p, order):
    table = enumerate_group(n, p)
    direct = brute_force_elements(n, p)
    assert table.order == order == len(direct)
    assert set(table.elements) == direct


def test_known_order_formula():
    # |SL_2(F_q)| = q(q^2 - 1)
    assert enumerate_group(2, 7).order == 7 * 48
    assert enumerate_group(2, 11).order == 11 * 120


def test_cap_is_enforced():
    with pytest.raises(GroupSizeCapExceeded):
        enumerate_group(2, 5, cap=50)


def test_table_structure(rng):
    table = enumerate_group(2, 5)
    # inverse map
    for _ in range(30):
        i = rng.randrange(table.order)
        assert table.mul(i, table.inverse[i]) == 0
    # conjugates land in the same class
    for _ in range(30):
        i = rng.randrange(table.order)
        c = rng.randrange(table.order)
        ci = table.inverse[c]
        conj = table.mul(table.mul(c, i), ci)
        assert table.class_of[conj] == table.class_of[i]
    # class_inverse really is the class of the inverses
    for cid, cls in enumerate(table.classes):
        for i in cls[:3]:
            assert table.class_of[table.inverse[i]] == table.class_inverse[cid]


def test_central_classes_of_sl2_f3():
    table = enumerate_group(2, 3)
    assert len(table.classes) == 7
    assert table.central_class_indices() == (0, 6)
    assert table.matrix(table.classes[6][0]) == SLMatrix.diagonal(GF(3), [2, 2])


def test_normally_generates():
    table = enumerate_group(2, 3)
    assert not normally_generates(table, (0,))  # identity class
    assert normally_generates(table, tuple(range(len(table.classes))))
    # the order-4 elements close up to the quaternion subgroup, not the group
    assert len(table.classes[3]) == 6
    assert not normally_generates(table, (3,))
    # a unipotent class does normally generate
    assert normally_generates(table, (1,))


def test_normally_generates_transvection_class_sl2_f5():
    table = enumerate_group(2, 5)
    cls = table.class_of[table.index_of(elementary(GF(5), 2, 1, 2, 1))]
    assert normally_generates(table, (cls,))


def test_norm_axioms_exhaustive_sl2_f3():
    table = enumerate_group(2, 3)
    nt = norm_ball_table(table, (1,))
    norms = nt.norms
    assert norms[0] == 0
    assert all(v > 0 for i, v in enumerate(norms) if i != 0)
    # letters have norm exactly 1
    for i in _letters(table, (1,)):
        assert norms[i] == 1
    # symmetry and conjugation invariance
    for i in range(table.order):
        assert norms[table.inverse[i]] == norms[i]
        for c in range(table.order):
            conj = table.mul(table.mul(c, i), table.inverse[c])
            assert norms[conj] == norms[i]
    # subadditivity over every pair
    for i in range(table.order):
        for j in range(table.order):
            assert norms[table.mul(i, j)] <= norms[i] + norms[j]


def test_bfs_agrees_with_fixed_point():
    table = enumerate_group(2, 3)
    for class_ids in [(1,), (2,), (1, 4), (1, 2, 3)]:
        if not normally_generates(table, class_ids):
            continue
        assert norm_ball_table(table, class_ids).norms == norms_by_fixed_point(table, class_ids)


def test_norm_table_rejects_non_generating_classes():
    table = enumerate_group(2, 3)
    with pytest.raises(ValueError):
        norm_ball_table(table, (3,))
    with pytest.raises(ValueError):
        norm_ball_table(table, (17,))


def test_norms_depend_only_on_class_closure():
    # adding the inverse class changes nothing: it is already a free letter
    # (mod 7, E_12(1) and E_12(-1) lie in distinct classes since -1 is not a square)
    table = enumerate_group(2, 7)
    cls = table.class_of[table.index_of(elementary(GF(7), 2, 1, 2, 1))]
    inv = table.class_inverse[cls]
    assert cls != inv
    assert norm_ball_table(table, (cls,)).norms == norm_ball_table(table, (cls, inv)).norms


def test_delta_sl2_f3():
    table = enumerate_group(2, 3)
    rep = delta(table)
    assert rep.delta == 3
    assert rep.delta_k[0] == 3  # a single class already achieves it
    assert rep.delta_k == sorted(rep.delta_k)  # non-decreasing in k
    assert all(d <= rep.delta for d in rep.delta_k)
    assert all(len(w) >= 1 for w in rep.witnesses)
    # every result is consistent: non-generating subsets have no diameter
    for r in rep.results:
        assert r.generates == (r.diameter is not None)


def test_delta_monotone_under_class_inclusion():
    table = enumerate_group(2, 3)
    rep = delta(table)
    diam = {tuple(r.class_ids): r.diameter for r in rep.results}
    for small, d_small in diam.items():
        if d_small is None:
            continue
        for big, d_big in diam.items():
            if d_big is None or not set(small) <= set(big):
                continue
            assert d_big <= d_small


def test_ball_composition_bound_exhaustive_sl2_f3():
    # if every Y-letter has X-norm <= m, then norm_X <= m * norm_Y everywhere
    table = enumerate_group(2, 3)
    x_ids, y_ids = (1,), (1, 2, 4)
    nx = norm_ball_table(table, x_ids).norms
    ny = norm_ball_table(table, y_ids).norms
    m = max(nx[i] for i in _letters(table, y_ids))
    for g in range(table.order):
        assert nx[g] <= m * ny[g]


def test_delta_subset_cap():
    table = enumerate_group(2, 3)
    with pytest.raises(GroupSizeCapExceeded):
        delta(table, subset_cap=4)


def test_transvection_diameter_values():
    rep = transvection_diameter(2, 5)
    assert rep["diameter"] == 3  # frozen from the double-checked search
    assert rep["generates"] and rep["diameter"] >= 1
    assert rep["half_rank"] == 0.5
    assert "finite-field" in rep["note"]

    rep32 = transvection_diameter(3, 2)
    assert rep32["order"] == 168
    assert rep32["diameter"] == 3
    assert rep32["half_rank"] == 1.0


def test_transvection_diameter_sl3_f3():
    rep = transvection_diameter(3, 3)
    assert rep["order"] == 5616
    assert rep["diameter"] == 3
