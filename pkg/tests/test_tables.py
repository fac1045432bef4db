from fractions import Fraction as F

import pytest

from curvtess import errors
from curvtess.tables import (
    enumerate_families,
    family_curvature,
    golden_table,
    match_pattern,
    render_table,
)

# Table 1 as printed, with unbounded ranges written hi=None.
PAPER_TABLE1 = [
    ((3, 3), 3, None, F(1, 6)), ((3, 4), 4, None, F(1, 12)), ((3, 5), 5, None, F(1, 30)),
    ((3, 6), 6, None, F(0)), ((3, 7), 7, 41, F(-1, 42)), ((3, 8), 8, 23, F(-1, 24)),
    ((3, 9), 9, 17, F(-1, 18)), ((3, 10), 10, 14, F(-1, 15)), ((3, 11), 11, 13, F(-5, 66)),
    ((4, 4), 4, None, F(0)), ((4, 5), 5, 19, F(-1, 20)), ((4, 6), 6, 11, F(-1, 12)),
    ((4, 7), 7, 9, F(-3, 28)), ((5, 5), 5, 9, F(-1, 10)), ((5, 6), 6, 7, F(-2, 15)),
    ((3, 3, 3), 3, None, F(0)), ((3, 3, 4), 4, 11, F(-1, 12)), ((3, 3, 5), 5, 7, F(-2, 15)),
    ((3, 4, 4), 4, 5, F(-1, 6)), ((3, 3, 3, 3), 3, 5, F(-1, 6)),
]

PAPER_TABLE2 = {
    (3, 7, 42), (3, 8, 24), (3, 9, 18), (3, 10, 15), (3, 12, 12), (4, 5, 20), (4, 6, 12),
    (4, 8, 8), (5, 5, 10), (6, 6, 6), (3, 3, 4, 12), (3, 3, 6, 6), (3, 4, 4, 6), (4, 4, 4, 4),
    (3, 3, 3, 3, 6), (3, 3, 3, 4, 4), (3, 3, 3, 3, 3, 3),
}


def phi(p):
    return 1 - F(len(p), 2) + sum(F(1, d) for d in p)


def test_positive_families_match_paper():
    got = [(f.fixed, f.lo, f.hi, f.constant) for f in enumerate_families("positive")]
    assert got == PAPER_TABLE1


def test_zero_patterns_match_paper():
    got = [f.fixed for f in enumerate_families("zero")]
    assert len(got) == 17 and set(got) == PAPER_TABLE2


def test_no_long_positive_families():
    assert enumerate_families("positive", 6) == ()
    assert all(f.length <= 5 for f in enumerate_families("positive"))
    assert all(f.length <= 6 for f in enumerate_families("zero"))


def test_rendering_matches_golden_files():
    assert render_table("positive") == golden_table("positive")
    assert render_table("zero") == golden_table("zero")


def test_row_format():
    rows = render_table("positive").splitlines()
    assert rows[0] == "(3,3,k)\tk≥3\t1/6+1/k"
    assert "(3,10,k)\t10≤k≤14\t1/k-1/15" in rows
    assert "(3,11,k)\t11≤k≤13\t1/k-5/66" in rows


def test_json_rendering():
    import json

    rows = json.loads(render_table("zero", "json"))
    assert len(rows) == 17 and rows[0]["curvature"] == "0"


@pytest.mark.parametrize("fixed,k,value", [
    ((3, 11), 13, F(1, 858)),
    ((3, 3), 3, F(1, 2)),
    ((4, 4), 43, F(1, 43)),
])
def test_family_curvature(fixed, k, value):
    fam = match_pattern(fixed + (k,))
    assert family_curvature(fam, k) == value


def test_family_out_of_range():
    fam = match_pattern((3, 7, 10))
    with pytest.raises(errors.InvalidArgument):
        family_curvature(fam, 42)
    with pytest.raises(errors.InvalidArgument):
        fam.pattern(6)


def test_match_examples():
    fam = match_pattern((3, 3, 4, 11))
    assert fam.fixed == (3, 3, 4) and (fam.lo, fam.hi) == (4, 11)
    assert match_pattern((3, 7, 43)) is None
    z = match_pattern((4, 8, 8))
    assert z is not None and not z.parametric
    assert match_pattern((11, 3, 13)).fixed == (3, 11)


def test_bad_sign():
    with pytest.raises(errors.InvalidArgument):
        enumerate_families("negative")


def test_instantiation_consistency():
    for fam in enumerate_families("positive"):
        hi = fam.hi if fam.hi is not None else fam.lo + 300
        for k in range(fam.lo, hi + 1):
            assert family_curvature(fam, k) == phi(fam.pattern(k)) > 0
        if fam.hi is not None:
            assert phi(fam.fixed + (fam.hi + 1,)) <= 0
