"""Brute-force census engine vs a literal whole-matrix-space oracle.

The engine enumerates groups column by column with pruning; the oracle here
scans every matrix of the right size and applies the membership test, so the
two share no code path beyond the form itself.
"""
import itertools

import pytest

from degsums.census import (CensusQuery, enumerate_group, expected_buckets,
                            run_census, verify_counts, wall_class_size)
from degsums.errors import DomainError, EnvelopeError
from degsums.fp import MatrixFp
from degsums.groups import (FORM_FAMILIES, Family, GroupSpec,
                            group_order_formula, is_member, standard_form)


def brute_census(spec: GroupSpec):
    """Scan all dim x dim matrices over F_p: order, involution buckets, twists."""
    p, dim = spec.q, spec.matrix_dim
    form = standard_form(spec.family, spec.n, p) if spec.family in FORM_FAMILIES else None
    eye = MatrixFp.identity(dim, p)
    order = 0
    buckets = {}
    tw = {1: 0, -1: 0}
    for entries in itertools.product(range(p), repeat=dim * dim):
        g = MatrixFp([entries[i * dim:(i + 1) * dim] for i in range(dim)], p)
        ok, mu = is_member(g, spec, form)
        if not ok:
            continue
        order += 1
        g2 = g @ g
        if g2 == eye.scalar_mul(mu):
            tw[1] += 1
        elif g2 == eye.scalar_mul(-mu):
            tw[-1] += 1
        if g2 == eye:
            sign = 1 if mu == 1 else -1  # g^2 = I forces mu = +-1
            j = dim - (g - eye).rank()
            buckets[(sign, j)] = buckets.get((sign, j), 0) + 1
    return order, buckets, tw


BATTERY = [
    GroupSpec(Family.GL, 1, 3),
    GroupSpec(Family.GL, 2, 3),
    GroupSpec(Family.GL, 2, 5),
    GroupSpec(Family.SP, 1, 3),
    GroupSpec(Family.SP, 1, 5),
    GroupSpec(Family.GSP, 1, 3),
    GroupSpec(Family.GSP, 1, 5),
    GroupSpec(Family.O_ODD, 1, 3),
    GroupSpec(Family.SO_ODD, 1, 3),
    GroupSpec(Family.O_PLUS, 1, 3),
    GroupSpec(Family.O_MINUS, 1, 3),
    GroupSpec(Family.SO_PLUS, 1, 3),
    GroupSpec(Family.SO_MINUS, 1, 3),
    GroupSpec(Family.GO_PLUS, 1, 3),
    GroupSpec(Family.GO_MINUS, 1, 3),
    GroupSpec(Family.GO_PLUS_CONN, 1, 3),
    GroupSpec(Family.GO_MINUS_CONN, 1, 3),
    GroupSpec(Family.GO_PLUS, 1, 5),
]


@pytest.mark.parametrize("spec", BATTERY, ids=lambda s: f"{s.family}-n{s.n}-p{s.q}")
def test_census_against_whole_space_scan(spec):
    order, buckets, tw = brute_census(spec)
    report = run_census(spec, jobs=1)
    assert report.order == order
    assert {(b.mu, b.j): b.count for b in report.buckets} == buckets
    assert report.twisted[1] == tw[1]
    assert report.twisted[-1] == tw[-1]
    assert order == group_order_formula(spec)


def test_enumerate_group_is_the_group():
    for spec in (GroupSpec(Family.GL, 2, 3), GroupSpec(Family.SP, 1, 5),
                 GroupSpec(Family.O_PLUS, 1, 3), GroupSpec(Family.GO_MINUS, 1, 3),
                 GroupSpec(Family.SO_ODD, 1, 3)):
        form = (standard_form(spec.family, spec.n, spec.q)
                if spec.family in FORM_FAMILIES else None)
        seen = set()
        for g in enumerate_group(spec):
            ok, _ = is_member(g, spec, form)
            assert ok, f"{spec}: enumerated non-member {g!r}"
            seen.add(g)
        assert len(seen) == group_order_formula(spec)


def test_wall_class_sizes():
    # fixed-space dimension j walls inside the involution locus
    assert wall_class_size(GroupSpec(Family.SP, 2, 3), 1, 2) == 90
    assert wall_class_size(GroupSpec(Family.GL, 2, 3), 1, 1) == 12
    # skew wall in GSp(2,q): |Sp(2,q)| / |GL(1,q)|
    assert wall_class_size(GroupSpec(Family.GSP, 1, 3), -1, 1) == 24 // 2
    assert wall_class_size(GroupSpec(Family.GSP, 2, 3), -1, 2) == 51840 // 48


def test_expected_buckets_match_census():
    for spec in (GroupSpec(Family.O_ODD, 1, 5), GroupSpec(Family.GSP, 2, 3),
                 GroupSpec(Family.SO_MINUS, 2, 3), GroupSpec(Family.GO_PLUS, 1, 7)):
        report = run_census(spec, jobs=1)
        assert {(b.mu, b.j): b.count for b in report.buckets} == expected_buckets(spec)


def test_jobs_do_not_change_output():
    spec = GroupSpec(Family.GSP, 1, 5)
    a = run_census(spec, jobs=1)
    b = run_census(spec, jobs=2)
    c = run_census(spec, jobs=5)
    assert a == b == c
    assert a.to_json_dict() == b.to_json_dict()


def test_jobs_validation():
    with pytest.raises(DomainError):
        run_census(GroupSpec(Family.GL, 1, 3), jobs=0)


def test_envelope_refusals():
    with pytest.raises(DomainError):
        run_census(GroupSpec(Family.U, 2, 3))
    with pytest.raises(DomainError):
        run_census(GroupSpec(Family.GL, 2, 4))  # not a prime
    with pytest.raises(DomainError):
        run_census(GroupSpec(Family.GL, 2, 2))  # even characteristic
    with pytest.raises(EnvelopeError) as exc:
        run_census(GroupSpec(Family.SP, 3, 3))  # dimension 6 is out of scope
    assert "estimated order" in str(exc.value)
    with pytest.raises(EnvelopeError):
        run_census(GroupSpec(Family.GL, 4, 11))  # dim 4 capped at p <= 7
    # boundary cases are allowed: build the query objects without running
    run_census(GroupSpec(Family.GL, 1, 31), jobs=1)


def test_twist_constants_are_validated():
    with pytest.raises(DomainError):
        run_census(CensusQuery(GroupSpec(Family.GL, 1, 3), twist_constants=(2,)), jobs=1)
    report = run_census(CensusQuery(GroupSpec(Family.GL, 1, 3), twist_constants=(-1,)), jobs=1)
    assert list(report.twisted) == [-1]


def test_verify_counts_passes_and_reports():
    record = verify_counts(GroupSpec(Family.GSP, 1, 5), jobs=1)
    assert record.ok
    names = [c.name for c in record.claims]
    assert any("order" in n for n in names)
    assert any("mu=-1" in n for n in names)
    d = record.to_json_dict()
    assert d["ok"] is True
    assert all(isinstance(c["expected"], (str, dict)) for c in d["claims"])


def test_census_json_counts_are_decimal_strings():
    d = run_census(GroupSpec(Family.SP, 1, 3), jobs=1).to_json_dict()
    assert d["order"] == "24"
    assert d["involutions"]["total"] == "2"  # only +-I square to I inside SL(2,3)
    assert all(b["count"].isdigit() for b in d["involutions"]["buckets"])
    assert set(d["twisted"]) == {"+1", "-1"}
