"""Regression and property tests for the three-stage triple sieve."""
from fractions import Fraction

import pytest

from arithklein.errors import OutOfRange
from arithklein.reference_data import (
    ASPIRING_LIST,
    DISCRIMINANT_LIST,
    GOLDEN_SURVIVORS,
    NORM_LIST,
)
from arithklein.sieve import (
    dn_lower,
    grouped_rows,
    norm_degree_cap,
    run_sieves,
    schur_M,
)


@pytest.fixture(scope="module")
def sieves():
    return run_sieves()


def test_schur_exact_values():
    assert schur_M(3) == 4
    assert schur_M(4) == Fraction(110592, 84375)
    assert schur_M(5) == Fraction(2985984, 22235661)


def test_dn_lower_table():
    assert dn_lower(2) == 3
    assert dn_lower(6) == 92779
    assert dn_lower(8) == 68856875
    assert dn_lower(20) == 11812357000000000000000000
    vals = [dn_lower(n) for n in range(2, 21)]
    assert vals == sorted(vals) and len(set(vals)) == len(vals)
    with pytest.raises(OutOfRange):
        dn_lower(21)


def test_norm_list_exact(sieves):
    norm, _, _ = sieves
    got = tuple((r.p, r.q, r.r) for r in norm)
    assert len(got) == 86
    assert (6, 6, 5) in got
    assert (7, 7, 33) in got
    assert got == NORM_LIST


def test_norm_cap_spots():
    # the degree cap divided by mu floors to the tabulated r_max
    assert int(norm_degree_cap(6, 6)) == 5
    assert int(norm_degree_cap(7, 7) // 3) == 33


def test_discriminant_list_exact(sieves):
    _, disc, _ = sieves
    assert tuple(grouped_rows(disc)) == DISCRIMINANT_LIST


def test_aspiring_list_exact(sieves):
    _, _, aspiring = sieves
    rows = tuple(grouped_rows(aspiring))
    assert len(rows) == 34
    assert rows == ASPIRING_LIST
    by_pair = {(p, q): rs for p, q, rs in rows}
    assert by_pair[(8, 8)] == (2, 3, 4, 5)
    assert by_pair[(9, 9)] == (2, 3)  # r = 4 does not survive the balance


def test_stage_chain_is_nested(sieves):
    norm, disc, aspiring = sieves
    norm_caps = {(r.p, r.q): r.r for r in norm}
    disc_triples = {(r.p, r.q, r.r) for r in disc}
    for rec in disc:
        assert 3 <= rec.r <= norm_caps[(rec.p, rec.q)]
    for rec in aspiring:
        if rec.r == 2:
            assert (rec.p, rec.q) in norm_caps
        else:
            assert (rec.p, rec.q, rec.r) in disc_triples


def test_golden_triples_survive(sieves):
    _, _, aspiring = sieves
    triples = {(r.p, r.q, r.r) for r in aspiring}
    golden_r = {1: 3, 2: 2, 3: 2, 4: 2, 13: 2, 14: 2, 15: 2, 16: 2, 17: 2}
    for row, p, q, _gamma in GOLDEN_SURVIVORS:
        if row == 18:
            continue  # the real survivor has r = 1, below the sieve floor
        r = golden_r.get(row, 3)  # rows 5-12 are the degree-3 rational cases
        assert (p, q, r) in triples


def test_sieves_deterministic(sieves):
    again = run_sieves()
    assert again == sieves
