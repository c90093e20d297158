"""Candidate order-triples (p, q, r) from closed-form arithmetic inequalities.

Three nested stages narrow the space of generator orders p >= q and
relative degrees r = [Q(gamma) : L].  A norm inequality caps r*mu for each
order pair; a discriminant inequality on the power basis of gamma trims
the r >= 3 cases; and a balance inequality couples the two bounds, which
no gamma can saturate simultaneously, cutting the survivors to the final
candidate list (the r = 2 cases rejoin at this last stage).

All comparisons run in log space: the raw products carry exponents in the
thousands and underflow doubles.  Borderline triples always get the
benefit of the doubt (KEEP_SLACK in the keep direction) - a false keep is
cleaned up downstream, a false drop is unrecoverable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import OutOfRange
from .geometry import _boundary_array, _refine_extremum, bounds_for
from .realfield import delta_pq, field_degree, field_discriminant

ORDER_CAP = 120    # imported finiteness bound on the generator orders
MIN_ORDER = 6      # search floor: both orders at least 6
KEEP_SLACK = 1e-9  # benefit of the doubt for >= comparisons

# minimum |discriminant| of a degree-n field with exactly one complex
# place, for total degrees up to 20.  The n = 8 value is sharp only among
# imprimitive fields, which covers every way the sieves can reach total
# degree 8 here.
_DISC_FLOOR = {
    2: 3,
    3: 27,
    4: 275,
    5: 4511,
    6: 92779,
    7: 2306599,
    8: 68856875,
    9: 1106389400,
    10: 31503776000,
    11: 903150260000,
    12: 25891511000000,
    13: 742257850000000,
    14: 21279048000000000,
    15: 610027750000000000,
    16: 17488275000000000000,
    17: 501353880000000000000,
    18: 14372813000000000000000,
    19: 412039810000000000000000,
    20: 11812357000000000000000000,
}


@dataclass(frozen=True, order=True)
class TripleRecord:
    p: int
    q: int
    r: int          # r_max for the norm stage, an individual degree after
    mu: int
    stage: str      # "norm" | "discriminant" | "aspiring"


# ---------------------------------------------------------------------------
# exact Vandermonde maximum
# ---------------------------------------------------------------------------

def _schur(r):
    """Max of the squared Vandermonde over r points in [-1,1], any r >= 1."""
    num = 1
    for k in range(2, r + 1):
        num *= k ** k
    for k in range(2, r - 1):
        num *= k ** k
    den = 1
    for k in range(3, 2 * r - 2, 2):
        den *= k ** k
    return Fraction(num, den)


def schur_M(r):
    """Exact rational Vandermonde-square maximum; attained at Fekete points."""
    assert r >= 3, "the bound is used for r >= 3"
    return _schur(r)


def _log_schur(r):
    """log of the Vandermonde maximum, stable for large r."""
    if r <= 1:
        return 0.0
    out = 0.0
    for k in range(2, r + 1):
        out += k * math.log(k)
    for k in range(2, r - 1):
        out += k * math.log(k)
    for k in range(3, 2 * r - 2, 2):
        out -= k * math.log(k)
    return out


# ---------------------------------------------------------------------------
# tabulated discriminant floors
# ---------------------------------------------------------------------------

def dn_lower(n):
    """Discriminant floor for total degree n; OutOfRange past the table.

    Raising (rather than returning 1) makes the two-phase application
    explicit at the call site: beyond the table the floor falls back to 1.
    """
    if n > max(_DISC_FLOOR):
        raise OutOfRange(f"no tabulated discriminant floor for degree {n}")
    return _DISC_FLOOR[n]


def _log_disc_floor_ratio(p, q, r, mu):
    """log Max{1, D_{r mu} / Delta_L^r}, with floor 1 beyond the table."""
    try:
        dn = dn_lower(r * mu)
    except OutOfRange:
        return 0.0
    return max(0.0, math.log(dn) - r * math.log(field_discriminant(p, q)))


# ---------------------------------------------------------------------------
# contour-dependent constants
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _balance_weight_max(p, q, r):
    """Max over the boundary curve of |2 Im(W) W^2 (W + 4s^2)^(2(r-2))|."""
    s2 = (math.sin(math.pi / p) * math.sin(math.pi / q)) ** 2

    def weight(ts):
        om = _boundary_array(p, q, np.asarray(ts, dtype=float))
        w = np.abs(2.0 * om.imag) * np.abs(om) ** 2
        if r > 2:
            w = w * np.abs(om + 4 * s2) ** (2 * (r - 2))
        return w

    ts = np.linspace(0.0, 1.0, 100_001)
    vals = weight(ts)
    i = int(np.argmax(vals))
    refined = -_refine_extremum(lambda t: -float(weight([t])[0]), ts[i])
    return max(refined, float(vals[i]))


# ---------------------------------------------------------------------------
# stage 1: norm inequality
# ---------------------------------------------------------------------------

def norm_degree_cap(p, q):
    """Largest admissible total degree r*mu from the norm inequality."""
    cp, cq = math.cos(math.pi / p), math.cos(math.pi / q)
    sp, sq = math.sin(math.pi / p), math.sin(math.pi / q)
    return 4 * math.log((cp + cq) / (sp * sq)) / math.log(4 / delta_pq(p, q))


def norm_sieve():
    """All (p, q, r_max) rows admitted by the norm inequality."""
    out = []
    for p in range(MIN_ORDER, ORDER_CAP + 1):
        for q in range(MIN_ORDER, p + 1):
            mu = field_degree(p, q)
            r_max = int((norm_degree_cap(p, q) + KEEP_SLACK) // mu)
            if r_max >= 2:
                out.append(TripleRecord(p, q, r_max, mu, "norm"))
    return out


# ---------------------------------------------------------------------------
# stage 2: power-basis discriminant inequality (r >= 3)
# ---------------------------------------------------------------------------

def discriminant_keep(p, q, r, mu=None):
    """Does (p, q, r) satisfy the discriminant inequality?"""
    if mu is None:
        mu = field_degree(p, q)
    s2 = (math.sin(math.pi / p) * math.sin(math.pi / q)) ** 2
    c = math.cos(math.pi / p) * math.cos(math.pi / q)
    log_k1 = (
        math.log(4)
        + _log_schur(r - 2)
        + 4 * (r - 2) * math.log(4 * (1 + c) ** 2)
        + (r - 2) * (r - 3) * math.log(2 * s2)
        + 2 * math.log(bounds_for(p, q).im_max)
    )
    lhs = (
        log_k1
        - r * (r - 1) * math.log(2 * s2)
        + mu * r * (r - 1) * math.log(delta_pq(p, q) / 8)
        + (mu - 1) * _log_schur(r)
    )
    return lhs >= _log_disc_floor_ratio(p, q, r, mu) - KEEP_SLACK


def discriminant_sieve(norm_list):
    """Expand norm rows to individual r >= 3 triples and keep survivors."""
    out = []
    for rec in norm_list:
        for r in range(3, rec.r + 1):
            if discriminant_keep(rec.p, rec.q, r, rec.mu):
                out.append(TripleRecord(rec.p, rec.q, r, rec.mu, "discriminant"))
    return out


# ---------------------------------------------------------------------------
# stage 3: norm/discriminant balance
# ---------------------------------------------------------------------------

def balance_keep(p, q, r, mu=None):
    """Does (p, q, r) satisfy the balance inequality?"""
    if mu is None:
        mu = field_degree(p, q)
    s2 = (math.sin(math.pi / p) * math.sin(math.pi / q)) ** 2
    log_R = 2 * mu * math.log(delta_pq(p, q) / 4) - 2 * math.log(4 * s2)
    log_k2 = math.log(_balance_weight_max(p, q, r))
    if r > 2:
        log_k2 += 0.5 * _log_schur(r - 1) + ((r - 1) * (r - 2) / 2) * math.log(2 * s2)
    lhs = (
        log_k2
        + (r * (r + 1) / 4) * log_R
        + ((mu - 1) / 2) * (_log_schur(r + 1) - r * (r + 1) * math.log(2))
    )
    return lhs >= 0.5 * _log_disc_floor_ratio(p, q, r, mu) - KEEP_SLACK


def balance_sieve(disc_list, norm_list):
    """Final stage: r >= 3 survivors plus an r = 2 row per norm pair."""
    triples = {(rec.p, rec.q, rec.r, rec.mu) for rec in disc_list}
    triples |= {(rec.p, rec.q, 2, rec.mu) for rec in norm_list}
    return [
        TripleRecord(p, q, r, mu, "aspiring")
        for (p, q, r, mu) in sorted(triples)
        if balance_keep(p, q, r, mu)
    ]


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

def run_sieves():
    """(norm, discriminant, aspiring) record lists, deterministically sorted."""
    norm = norm_sieve()
    disc = discriminant_sieve(norm)
    aspiring = balance_sieve(disc, norm)
    return norm, disc, aspiring


def grouped_rows(records):
    """Aggregate records to [(p, q, (r, ...))] rows, sorted, r ascending."""
    rows = {}
    for rec in records:
        rows.setdefault((rec.p, rec.q), set()).add(rec.r)
    return [(p, q, tuple(sorted(rs))) for (p, q), rs in sorted(rows.items())]


__all__ = [
    "KEEP_SLACK",
    "MIN_ORDER",
    "ORDER_CAP",
    "TripleRecord",
    "balance_keep",
    "balance_sieve",
    "discriminant_keep",
    "discriminant_sieve",
    "dn_lower",
    "grouped_rows",
    "norm_degree_cap",
    "norm_sieve",
    "run_sieves",
    "schur_M",
]
