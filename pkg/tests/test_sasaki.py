from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from flaghodge.errors import PreconditionViolated
from flaghodge.flagcoh import compute_flag_cohomology
from flaghodge.rootsys import LeviSpec, build_root_system
from flaghodge.sasaki import (
    HodgeDiamond,
    SasakiStructureRecord,
    betti_from_diamond,
    builtin_fixtures,
    carrell_lieberman_check,
    check_finite_closed_leaves_vanishing,
    check_positivity_vanishing,
    closed_leaf_count_from_flag,
    diamond_from_flag,
    points_diamond,
    record_from_json,
    record_to_json,
    sphere_diamond,
    validate_diamond,
)

K3 = HodgeDiamond.from_matrix([[1, 0, 1], [0, 20, 0], [1, 0, 1]])


def flag(t, r, nodes):
    return compute_flag_cohomology(build_root_system(t, r), LeviSpec(nodes))


def fixtures():
    return {rec.name: rec for rec in builtin_fixtures()}


def test_diamond_from_flag_examples():
    assert diamond_from_flag(flag("A", 1, ())) == HodgeDiamond.diagonal([1, 1])
    d = diamond_from_flag(flag("A", 3, (1, 3)))
    assert d.n == 4 and d.diagonal_entries() == (1, 1, 2, 1, 1)
    assert sum(diamond_from_flag(flag("E", 7, (1, 2, 3, 4, 5, 6))).diagonal_entries()) == 56


def test_sphere_diamond():
    assert sphere_diamond(2) == HodgeDiamond.diagonal([1, 1, 1])
    assert sphere_diamond(1) == HodgeDiamond.diagonal([1, 1])
    assert sphere_diamond(10).diagonal_entries() == (1,) * 11
    assert sphere_diamond(10).off_diagonal_support() == []
    with pytest.raises(ValueError):
        sphere_diamond(0)


def test_betti_from_diamond():
    assert betti_from_diamond(HodgeDiamond.diagonal([1, 1, 1])) == (1, 0, 1, 0, 1)
    assert betti_from_diamond(K3)[2] == 22
    f = flag("A", 3, (1, 3))
    assert betti_from_diamond(diamond_from_flag(f)) == f.betti


def test_validate_diamond():
    assert validate_diamond(sphere_diamond(3), lefschetz=True).ok
    bad = HodgeDiamond.from_matrix([[2, 0], [0, 1]])
    report = validate_diamond(bad)
    assert not report.rule("corner").passed
    assert report.rule("corner").witnesses == ((0, 0),)
    assert validate_diamond(K3, lefschetz=True).ok


def test_each_rule_can_fail():
    asym = HodgeDiamond.from_matrix([[1, 1, 0], [0, 5, 0], [0, 0, 1]])
    r = validate_diamond(asym)
    assert not r.rule("conjugation").passed
    assert not r.rule("duality").passed
    neg = HodgeDiamond.from_matrix([[1, -1, 0], [-1, 5, -1], [0, -1, 1]])
    assert not validate_diamond(neg).rule("nonnegative").passed
    dip = HodgeDiamond.diagonal([1, 0, 0, 1])
    assert validate_diamond(dip).ok
    lef = validate_diamond(dip, lefschetz=True).rule("lefschetz")
    assert not lef.passed and lef.witnesses == ((0, 0),)


def test_diamond_shape_is_enforced():
    with pytest.raises(ValueError):
        HodgeDiamond(2, ((1, 0), (0, 1)))


def test_finite_leaves_check():
    f = flag("B", 3, (2,))
    rec = SasakiStructureRecord("b3", diamond_from_flag(f), 5)
    assert check_finite_closed_leaves_vanishing(rec).ok
    claimed = SasakiStructureRecord("k3", K3, 3)
    rep = check_finite_closed_leaves_vanishing(claimed)
    assert not rep.ok and (2, 0) in rep.results[0].witnesses
    sphere = SasakiStructureRecord("s7", sphere_diamond(3), 4)
    assert check_finite_closed_leaves_vanishing(sphere).ok
    with pytest.raises(PreconditionViolated):
        check_finite_closed_leaves_vanishing(fixtures()["k3_bundle"])
    assert not check_finite_closed_leaves_vanishing(fixtures()["k3_bundle"], assume_finite=True).ok


def test_positivity_check():
    fx = fixtures()
    assert check_positivity_vanishing(fx["positive_link"]).ok
    labeled = SasakiStructureRecord("k3", K3, "infinite", "positive")
    rep = check_positivity_vanishing(labeled)
    assert not rep.ok and rep.results[0].witnesses == ((0, 2), (2, 0))
    assert check_positivity_vanishing(fx["sphere_5"]).ok
    with pytest.raises(PreconditionViolated):
        check_positivity_vanishing(fx["k3_bundle"])


def test_carrell_lieberman():
    d = diamond_from_flag(flag("C", 3, (1,)))
    assert carrell_lieberman_check(d, d, d.n).ok
    assert carrell_lieberman_check(d, points_diamond(sum(d.diagonal_entries())), 0).ok
    rep = carrell_lieberman_check(K3, points_diamond(24), 0)
    failed = {r.rule for r in rep.failed()}
    assert {"offset-sum[s=2]", "offset-sum[s=-2]", "offset-vanishing[s=2]", "offset-vanishing[s=-2]"} <= failed
    # dim C = 2 leaves no vanishing constraint for n = 2
    assert not any(r.rule.startswith("offset-vanishing") for r in carrell_lieberman_check(K3, K3, 2).results)


def test_closed_leaf_count():
    for n in range(2, 7):
        for p in range(1, n):
            from math import comb
            f = flag("A", n - 1, tuple(k for k in range(1, n) if k != p))
            assert closed_leaf_count_from_flag(f) == comb(n, p)
    assert closed_leaf_count_from_flag(flag("E", 7, (1, 2, 3, 4, 5, 6))) == 56
    assert closed_leaf_count_from_flag(flag("G", 2, (1, 2))) == 1


def test_fixtures():
    fx = fixtures()
    assert set(fx) == {"k3_bundle", "positive_link"} | {f"sphere_{2 * n + 1}" for n in range(1, 6)}
    for rec in fx.values():
        assert validate_diamond(rec.diamond, lefschetz=True).ok
    k3, link = fx["k3_bundle"], fx["positive_link"]
    assert betti_from_diamond(k3.diamond) == (1, 0, 22, 0, 1)
    assert betti_from_diamond(link.diamond)[2] == 22
    assert betti_from_diamond(k3.diamond) == betti_from_diamond(link.diamond)
    assert k3.diamond != link.diamond
    assert sum(betti_from_diamond(k3.diamond)) == 24


def test_json_round_trip():
    for rec in builtin_fixtures():
        assert record_from_json(record_to_json(rec)) == rec
    with pytest.raises(ValueError):
        record_from_json({"n": 1})
    with pytest.raises(ValueError):
        record_from_json({"n": 1, "h": [[1, 0], [0, 1.5]]})
    with pytest.raises(ValueError):
        record_from_json({"n": 1, "h": [[1, 0], [0, 1]], "closed_leaves": "many"})
    with pytest.raises(ValueError):
        record_from_json({"n": 1, "h": [[1, 0], [0, 1]], "positivity": "very"})


@pytest.mark.parametrize("t,r", [("A", 4), ("B", 3), ("D", 4), ("G", 2)])
def test_flag_diamonds_are_valid(t, r):
    rs = build_root_system(t, r)
    for k in range(r + 1):
        for nodes in combinations(rs.nodes(), k):
            f = compute_flag_cohomology(rs, LeviSpec(nodes))
            d = diamond_from_flag(f)
            assert validate_diamond(d, lefschetz=True).ok
            assert closed_leaf_count_from_flag(f) == sum(betti_from_diamond(d))
            b = betti_from_diamond(d)
            assert b[1::2] == (0,) * (len(b) // 2)


@given(st.lists(st.integers(0, 50), min_size=1, max_size=6))
def test_diagonal_diamonds_localize_to_points(inner):
    diag = [1] + sorted(inner) + [1] if len(inner) > 1 else [1, 1]
    d = HodgeDiamond.diagonal(diag)
    assert carrell_lieberman_check(d, points_diamond(sum(diag)), 0).ok
    assert betti_from_diamond(d)[::2] == tuple(diag)


@given(st.integers(1, 12))
def test_sphere_render_has_one_row_per_degree(n):
    assert len(sphere_diamond(n).render().splitlines()) == 2 * n + 1
