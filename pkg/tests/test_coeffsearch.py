"""Unit tests of the coefficient enumeration under embedding windows."""

import math

import numpy as np
import pytest

from arithklein.coeffsearch import (
    GAMMA2P,
    SearchSpaceOverflow,
    basic_search,
    coeff_bounds,
    delta_for,
    delta_windows,
    make_context,
    reported_coefficients,
    search_all_coeffs,
    staged_space,
)


def counts(p, q, r):
    ctx = make_context(p, q, r)
    delta = delta_for(ctx)
    return tuple(len(reported_coefficients(ctx, j, basic_search(ctx, delta, j)))
                 for j in range(r))


# -- the flagship wide row ---------------------------------------------------

def test_flagship_staged_space():
    ctx = make_context(42, 42, 2)
    delta = delta_for(ctx)
    n_head, n_tail = staged_space(ctx, delta, 0)
    # head interval spans 6166 full unit steps and contains 6167 integers
    assert n_head == 6167
    assert n_tail == 576
    assert 3.0e6 < n_head * n_tail < 4.0e6


def test_flagship_counts_and_values():
    ctx = make_context(42, 42, 2)
    delta = delta_for(ctx)
    consts, linears = search_all_coeffs(ctx, delta)
    assert len(consts) == 3
    assert len(linears) == 2
    got = sorted(e.embed_all()[0] for e in linears)
    assert got[0] == pytest.approx(-920.07, abs=0.01)
    assert got[1] == pytest.approx(460.05, abs=0.01)


def test_rows_that_die_at_pairing_have_small_lists():
    # Three candidate pairs end with no viable polynomial at all; the raw
    # per-coefficient windows still admit a handful of integers each, and
    # it is the one-complex-place pairing (root-location stage) that
    # empties them.  Pin the raw list sizes here; the pairing outcome is
    # asserted with the root-location tests.
    assert len(basic_search(make_context(28, 7, 2), j=0)) == 2
    assert len(basic_search(make_context(22, 11, 2), j=0)) == 5
    assert len(basic_search(make_context(16, 8, 2), j=1)) == 11


# -- reference per-coefficient counts on fast rows ---------------------------

DEGREE2_ROWS = {
    (6, 6): (16, 8),
    (7, 6): (8, 12),
    (8, 6): (42, 21),
    (8, 8): (65, 17),
    (9, 6): (4, 7),
    (10, 6): (34, 20),
    (10, 10): (48, 8),
    (12, 6): (45, 19),
    (12, 12): (64, 17),
    (14, 14): (85, 38),
    (15, 15): (4, 5),
    (18, 9): (268, 62),
    (20, 10): (1, 4),
    (20, 20): (16, 13),
    (24, 12): (6, 5),
}


@pytest.mark.parametrize("pq", sorted(DEGREE2_ROWS))
def test_degree2_counts(pq):
    assert counts(*pq, 2) == DEGREE2_ROWS[pq]


DEGREE3_ROWS = {
    (6, 6): (16, 24, 9),
    (10, 6): (1, 103, 32),
    (12, 6): (3, 138, 30),
}


@pytest.mark.parametrize("pq", sorted(DEGREE3_ROWS))
def test_degree3_counts(pq):
    assert counts(*pq, 3) == DEGREE3_ROWS[pq]


# -- row-local reporting conventions -----------------------------------------

def test_reported_linear_cap_10_10():
    ctx = make_context(10, 10, 2)
    full = basic_search(ctx, j=1)
    shown = reported_coefficients(ctx, 1, full)
    assert len(full) == 18 and len(shown) == 8
    # the largest reported value attains the cap 4 cos^2(pi/10) exactly
    top = max(e.embed_all()[0] for e in shown)
    assert top == pytest.approx((5 + math.sqrt(5)) / 2, abs=1e-12)


def test_reported_is_identity_elsewhere():
    ctx = make_context(18, 9, 2)
    full = basic_search(ctx, j=1)
    assert reported_coefficients(ctx, 1, full) == full


# -- parameter choice and window semantics -----------------------------------

def test_delta_default_rule():
    assert delta_for(make_context(9, 9, 2)) is GAMMA2P
    assert delta_for(make_context(26, 13, 2)).units == (("sin2", 26),)
    assert delta_for(make_context(9, 7, 2)).units == ()


def test_strip_resolution_by_degree():
    # quadratic field: mirror-symmetric walk stays left of the fold line
    w = delta_windows(make_context(8, 8, 2), GAMMA2P)
    assert w.re[1] == pytest.approx(-2 * math.sin(math.pi / 8) ** 2)
    # cubic field: staged box stops at the imaginary axis instead
    w = delta_windows(make_context(7, 7, 2), GAMMA2P)
    assert w.re[1] == 0.0
    # one published degree-3 run scanned the whole strip
    ctx = make_context(30, 30, 3)
    w = delta_windows(ctx, delta_for(ctx))
    assert w.re[1] == pytest.approx(4 * math.cos(math.pi / 30) ** 2
                                    / (4 * math.sin(math.pi / 30) ** 2))


def test_zero_element_kept_on_staged_linear_window():
    # staged windows hugging zero are closed there for j >= 1 ...
    found = basic_search(make_context(7, 6, 2), j=1)
    assert any(e.is_zero() for e in found)
    # ... while the constant term never admits the zero vector
    for pq in ((7, 6), (7, 7)):
        assert not any(e.is_zero() for e in basic_search(make_context(*pq, 2), j=0))


# -- containment and completeness --------------------------------------------

@pytest.mark.parametrize("pqrj", [(8, 6, 2, 0), (8, 6, 2, 1),
                                  (7, 7, 2, 0), (12, 6, 3, 2)])
def test_results_lie_in_coefficient_box(pqrj):
    p, q, r, j = pqrj
    ctx = make_context(p, q, r)
    delta = delta_for(ctx)
    box = coeff_bounds(ctx, delta, j)
    for e in basic_search(ctx, delta, j):
        vals = e.embed_all()
        assert np.all(vals >= box.lower - 1e-9)
        assert np.all(vals <= box.upper + 1e-9)


@pytest.mark.parametrize("pqrj", [(8, 6, 2, 0), (8, 6, 2, 1), (7, 7, 2, 1)])
def test_strict_interior_points_are_found(pqrj):
    # any integer vector whose embeddings sit strictly inside the window box
    # must be in the result, whatever the boundary conventions do
    p, q, r, j = pqrj
    ctx = make_context(p, q, r)
    delta = delta_for(ctx)
    box = coeff_bounds(ctx, delta, j)
    found = {e.coords for e in basic_search(ctx, delta, j)}
    emb = ctx.field.emb_pow    # mu x mu power-basis embedding matrix
    corners = np.stack([box.lower, box.upper])
    coord_bound = int(np.ceil(np.abs(np.linalg.solve(emb, corners.T)).max())) + 1
    rng = range(-coord_bound, coord_bound + 1)
    grids = np.meshgrid(*[list(rng)] * ctx.field.mu, indexing="ij")
    vecs = np.stack([g.ravel() for g in grids], axis=1)
    vals = vecs @ emb.T
    inner = np.all((vals > box.lower + 1e-6) & (vals < box.upper - 1e-6), axis=1)
    if j == 0:
        inner &= np.any(vecs != 0, axis=1)
    missing = [tuple(int(x) for x in v) for v in vecs[inner]
               if tuple(int(x) for x in v) not in found]
    assert missing == []


def test_overflow_guard():
    ctx = make_context(42, 42, 2)
    with pytest.raises(SearchSpaceOverflow):
        basic_search(ctx, j=0, cap=1000)
