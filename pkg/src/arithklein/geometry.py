"""Geometry of the commutator-trace plane for two elliptic generators.

For orders (p, q) the non-free values of gamma = tr[f,g] - 2 are confined to
a closed region whose boundary curve is swept analytically.  This module
computes that curve and its extremal bounds, normalizes the generator pair
to explicit Moebius matrices, and runs sound freeness certificates built
from isometric-circle separation (ping-pong on unions of disks).
"""

from __future__ import annotations

import cmath
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DegenerateGamma, ParabolicFixedForm

CONTOUR_SAMPLES = 4096       # boundary polyline resolution
T_GRID = 100_000             # dense grid for extremal bound search
INCLUSION_MARGIN = 1e-6      # borderline points count as inside (keep them)
CERT_MARGIN = 1e-9           # safety margin: geometry must beat this to prove
NEST_SLACK = 1e-11           # containment tolerance, kept well under the margin
SEED_SHRINKS = (1.0, 0.9, 0.8, 0.7)  # seed-disk scalings tried per level
_DEPTH_CAPS = {2: 1, 3: 3}   # pattern generations allowed at each level
_MAX_REGIONS = 4000          # growth bound: larger systems are inconclusive
_POLE_EPS = 1e-12


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self):
        assert self.radius > 0


@dataclass(frozen=True)
class MobiusPair:
    matA: np.ndarray
    matB: np.ndarray
    w: complex
    gamma: complex


@dataclass(frozen=True)
class TraceRegionBounds:
    p: int
    q: int
    re_max: float
    re_min: float
    abs_max: float
    im_max: float
    shift_max: float
    contour: np.ndarray  # complex samples, t ascending


# ---------------------------------------------------------------------------
# the boundary curve
# ---------------------------------------------------------------------------

def boundary_point(p, q, t):
    """Point of the extremal trace curve at parameter t in [0, 1]."""
    c = math.cos(math.pi / p) * math.cos(math.pi / q)
    s = math.sin(math.pi / p) * math.sin(math.pi / q)
    tc1 = 1 + t * c
    re = 4 * (2 * t * t - 1) * tc1 * tc1 - 4 * t * t * s * s
    rad = tc1 * tc1 - s * s
    im = -8 * t * math.sqrt(max(0.0, 1 - t * t)) * tc1 * math.sqrt(max(0.0, rad))
    return complex(re, im)


def _boundary_array(p, q, ts):
    c = math.cos(math.pi / p) * math.cos(math.pi / q)
    s = math.sin(math.pi / p) * math.sin(math.pi / q)
    tc1 = 1 + ts * c
    re = 4 * (2 * ts * ts - 1) * tc1 * tc1 - 4 * ts * ts * s * s
    rad = np.maximum(tc1 * tc1 - s * s, 0.0)
    im = -8 * ts * np.sqrt(np.maximum(1 - ts * ts, 0.0)) * tc1 * np.sqrt(rad)
    return re + 1j * im


def contour_samples(p, q, n=CONTOUR_SAMPLES):
    """Boundary polyline, cosine-spaced so both endpoints are refined."""
    k = np.arange(n)
    ts = (1 - np.cos(np.pi * k / (n - 1))) / 2
    return _boundary_array(p, q, ts)


def _refine_extremum(fun, t0, span=2e-5):
    lo, hi = max(0.0, t0 - span), min(1.0, t0 + span)
    res = minimize_scalar(fun, bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-14})
    return min(fun(res.x), fun(t0))


@lru_cache(maxsize=None)
def bounds_for(p, q, t_grid=T_GRID):
    """Extremal bounds of the trace region, cached per order pair."""
    ts = np.linspace(0.0, 1.0, t_grid + 1)
    vals = _boundary_array(p, q, ts)
    re_max = 4 * (math.cos(math.pi / p) + math.cos(math.pi / q)) ** 2
    shift_max = 4 * (1 + math.cos(math.pi / p) * math.cos(math.pi / q)) ** 2

    i_min = int(np.argmin(vals.real))
    re_min = _refine_extremum(lambda t: boundary_point(p, q, t).real, ts[i_min])

    i_im = int(np.argmax(-vals.imag))
    im_max = -_refine_extremum(lambda t: boundary_point(p, q, t).imag, ts[i_im])

    if p >= 6 and q >= 6:
        abs_max = re_max
    elif q == 2:
        abs_max = 4.0
    else:
        i_abs = int(np.argmax(np.abs(vals)))
        abs_max = -_refine_extremum(lambda t: -abs(boundary_point(p, q, t)), ts[i_abs])

    return TraceRegionBounds(
        p=p, q=q, re_max=re_max, re_min=re_min, abs_max=abs_max,
        im_max=im_max, shift_max=shift_max, contour=contour_samples(p, q),
    )


def inside_contour(p, q, gamma):
    """True when gamma lies in the closed trace region (with keep-margin).

    The region is bounded by the sampled curve and its conjugate mirror; a
    point within INCLUSION_MARGIN of the boundary counts as inside, since
    outside means provably free and must only be claimed with room to spare.
    """
    gamma = complex(gamma)
    lower = bounds_for(p, q).contour
    poly = np.concatenate([lower, np.conj(lower[::-1])])
    xs, ys = poly.real, poly.imag
    x, y = gamma.real, gamma.imag

    x1, y1 = xs, ys
    x2, y2 = np.roll(xs, -1), np.roll(ys, -1)
    crosses = (y1 > y) != (y2 > y)
    with np.errstate(divide="ignore", invalid="ignore"):
        xint = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
    hits = crosses & (xint > x)
    if int(hits.sum()) % 2 == 1:
        return True

    # distance to the polyline: borderline points are kept
    dx, dy = x2 - x1, y2 - y1
    seg2 = dx * dx + dy * dy
    tproj = np.clip(((x - x1) * dx + (y - y1) * dy) / np.where(seg2 == 0, 1, seg2), 0, 1)
    dist2 = (x1 + tproj * dx - x) ** 2 + (y1 + tproj * dy - y) ** 2
    return bool(math.sqrt(float(dist2.min())) <= INCLUSION_MARGIN)


# ---------------------------------------------------------------------------
# normalized generators
# ---------------------------------------------------------------------------

def solve_w(p, q, gamma):
    """The |w| <= 1, Re w >= 0 normalization parameter for gamma."""
    sp, sq = math.sin(math.pi / p), math.sin(math.pi / q)
    V = cmath.sqrt(complex(gamma)) / (sp * sq)
    best = None
    for Vs in (V, -V):
        disc = cmath.sqrt(Vs * Vs + 4)
        for sgn in (1, -1):
            w = (Vs + sgn * disc) / 2
            if abs(w) > 1 + 1e-12 or w.real < -1e-12:
                continue
            if best is None or abs(w) < abs(best) - 1e-15 or (
                abs(abs(w) - abs(best)) <= 1e-15 and w.imag > best.imag
            ):
                best = w
    assert best is not None, "no admissible normalization root"
    return best


def normalize_generators(p, q, gamma):
    """Explicit Moebius matrices (A fixing +-1, B fixing +-w) realizing gamma."""
    gamma = complex(gamma)
    if gamma == 0 or abs(gamma) < 1e-15:
        raise DegenerateGamma("gamma = 0 gives a reducible pair")
    w = solve_w(p, q, gamma)
    cp, sp = math.cos(math.pi / p), math.sin(math.pi / p)
    cq, sq = math.cos(math.pi / q), math.sin(math.pi / q)
    matA = np.array([[cp, 1j * sp], [1j * sp, cp]], dtype=complex)
    matB = np.array([[cq, 1j * w * sq], [1j * sq / w, cq]], dtype=complex)
    return MobiusPair(matA=matA, matB=matB, w=w, gamma=gamma)


def gamma_of_pair(pair):
    """tr[A,B] - 2, for round-trip validation."""
    A, B = pair.matA, pair.matB
    comm = A @ B @ np.linalg.inv(A) @ np.linalg.inv(B)
    return complex(np.trace(comm)) - 2


def isometric_circles(mat):
    """The isometric circle of the map and of its inverse."""
    c, d = complex(mat[1, 0]), complex(mat[1, 1])
    a = complex(mat[0, 0])
    if abs(c) < 1e-14:
        raise ParabolicFixedForm("map fixes infinity; no isometric circle")
    r = 1 / abs(c)
    return Circle(-d / c, r), Circle(a / c, r)


# ---------------------------------------------------------------------------
# freeness certificates
# ---------------------------------------------------------------------------

def _apply(mat, z):
    a, b, c, d = complex(mat[0, 0]), complex(mat[0, 1]), complex(mat[1, 0]), complex(mat[1, 1])
    return (a * z + b) / (c * z + d)


def _map_disk(mat, circle):
    """Image of a closed disk: (Circle, True) for a disk, (Circle, False)
    for the closed exterior of a circle, or None when degenerate."""
    a, b, c, d = complex(mat[0, 0]), complex(mat[0, 1]), complex(mat[1, 0]), complex(mat[1, 1])
    c0, r = circle.center, circle.radius
    if abs(c) < _POLE_EPS * max(1.0, abs(a), abs(d)):
        # affine map: disks go to disks by a similarity
        scale = a / d
        return Circle(scale * c0 + b / d, abs(scale) * r), True
    pole = -d / c
    dist = abs(pole - c0)
    if abs(dist - r) < 1e-11 * max(1.0, r):
        return None  # pole essentially on the boundary
    if dist < 1e-300:
        center = a / c  # image of the symmetric point at infinity
        bpt = c0 + r
    else:
        z_sym = c0 + r * r / (pole - c0).conjugate()
        center = _apply(mat, z_sym)
        if dist > r:
            bpt = c0 - r * (pole - c0) / dist  # boundary point farthest from pole
        else:
            bpt = c0 + r * (c0 - pole) / dist
    radius = abs(_apply(mat, bpt) - center)
    if radius <= 0 or not math.isfinite(radius) or not cmath.isfinite(center):
        return None
    return Circle(center, radius), dist > r


def _map_region(mat, region):
    """Image of a typed region ((Circle, is_disk)); None when degenerate.

    A region is either a closed disk (is_disk=True) or the closed exterior
    of a circle.  Since a Moebius map carries the complement of a disk to
    the complement of its image, mapping an exterior just flips the flag
    returned by the disk computation.
    """
    circ, is_disk = region
    im = _map_disk(mat, circ)
    if im is None:
        return None
    imc, im_disk = im
    return (imc, im_disk) if is_disk else (imc, not im_disk)


def _region_nests(inner, outer, slack=NEST_SLACK):
    """Containment inner <= outer between typed regions.

    The slack admits containments that hold up to floating-point noise;
    it is kept two orders below CERT_MARGIN so that a sliver admitted here
    can never flip a disjointness decision (pad every region by the slack:
    all strict inequalities survive with margin CERT_MARGIN - 2*slack).
    """
    (c1, d1), (c2, d2) = inner, outer
    s = slack * max(1.0, c2.radius)
    dist = abs(c1.center - c2.center)
    if d1 and d2:
        return dist + c1.radius <= c2.radius + s
    if d1 and not d2:
        return dist >= c2.radius + c1.radius - s
    if not d1 and not d2:
        return dist + c2.radius <= c1.radius + s
    return False  # an exterior never fits inside a disk


def _regions_meet(r1, r2, margin=CERT_MARGIN):
    """Conservative intersection test between typed regions."""
    (c1, d1), (c2, d2) = r1, r2
    dist = abs(c1.center - c2.center)
    if d1 and d2:
        return dist < c1.radius + c2.radius + margin
    if d1 and not d2:
        return dist + c1.radius > c2.radius - margin
    if d2 and not d1:
        return dist + c2.radius > c1.radius - margin
    return True  # two exteriors always share points


def _pattern_closure(F, p_ord, G, q_ord, shrink, depth_cap,
                     margin=CERT_MARGIN, max_regions=_MAX_REGIONS):
    """Grow a two-sided system of circle patterns to a verified closure.

    Seeds: the isometric disks of the nontrivial powers of G, scaled by
    `shrink` about their centers.  Every region is transported by all
    nontrivial powers of the other generator; an image must either nest
    inside an already-drawn region on its own side or be drawn as a new
    pattern generation, staying disjoint from the whole other side.  If
    the system closes, the two unions U_f, U_g are nonempty, disjoint,
    and satisfy F^k(U_g) <= U_f and G^j(U_f) <= U_g for all nontrivial
    powers, which forces every reduced word to move U_g off itself: the
    pair generates the free product of the two cyclic groups.

    `depth_cap` bounds how many generations may be drawn (seeds are
    generation 0); needing a deeper pattern fails the certificate at
    this level.  Requires one factor of order >= 3.
    """
    if max(p_ord, q_ord) < 3:
        return False
    Fpows, Gpows = [], []
    acc = np.eye(2, dtype=complex)
    for _ in range(1, p_ord):
        acc = acc @ F
        Fpows.append(acc)
    acc = np.eye(2, dtype=complex)
    for _ in range(1, q_ord):
        acc = acc @ G
        Gpows.append(acc)
    try:
        seeds = [isometric_circles(M)[0] for M in Gpows]
    except ParabolicFixedForm:
        return False
    U_g = [(Circle(c.center, c.radius * shrink), True) for c in seeds]
    U_f = []
    frontier = deque(("g", reg, 0) for reg in U_g)
    while frontier:
        if len(U_f) + len(U_g) > max_regions:
            return False
        side, reg, depth = frontier.popleft()
        mats = Fpows if side == "g" else Gpows
        target, cross = (U_f, U_g) if side == "g" else (U_g, U_f)
        for M in mats:
            img = _map_region(M, reg)
            if img is None:
                return False
            if any(_region_nests(img, drawn) for drawn in target):
                continue
            if depth + 1 > depth_cap:
                return False  # pattern would need another generation
            if any(_regions_meet(img, other, margin) for other in cross):
                return False
            target.append(img)
            frontier.append(("f" if side == "g" else "g", img, depth + 1))
    return True


def _level1(p, q, w, margin=CERT_MARGIN):
    """Direct two-circle separation test on the normalization parameter."""
    lhs = abs(1j * w / math.tan(math.pi / q) + 1j / math.tan(math.pi / p))
    lhs += abs(w) / math.sin(math.pi / q)
    return lhs <= 1 / math.sin(math.pi / p) - margin


def free_test(p, q, gamma, level=1):
    """Freeness verdict at the given certificate level (1-3).

    Level 1 tests the primitive isometric circles directly.  Levels 2 and
    3 search for a closed system of circle patterns (ping-pong on unions
    of isometric disks of all nontrivial powers and their word images),
    allowing one and three pattern generations respectively, over a fixed
    grid of seed scalings and both generator orderings.

    Returns "ProvedFree" when any certificate at or below the level holds;
    otherwise "Inconclusive".  Certificates only accumulate with level, so
    the verdict is monotone.  Geometric degeneracies never raise.
    """
    if level not in (1, 2, 3):
        raise ValueError(f"level must be 1, 2 or 3, got {level!r}")
    pair = normalize_generators(p, q, gamma)
    A, B = pair.matA, pair.matB

    if _level1(p, q, pair.w) or _level1(q, p, solve_w(q, p, gamma)):
        return "ProvedFree"
    if level < 2:
        return "Inconclusive"

    cap = _DEPTH_CAPS[level]
    for shrink in SEED_SHRINKS:
        if _pattern_closure(A, p, B, q, shrink, cap):
            return "ProvedFree"
        if _pattern_closure(B, q, A, p, shrink, cap):
            return "ProvedFree"
    return "Inconclusive"


def certificate_gap(p, q, gamma):
    """Signed margin of the level-1 separation (positive = proved free)."""
    w = solve_w(p, q, gamma)
    lhs = abs(1j * w / math.tan(math.pi / q) + 1j / math.tan(math.pi / p))
    lhs += abs(w) / math.sin(math.pi / q)
    return 1 / math.sin(math.pi / p) - lhs


__all__ = [
    "CERT_MARGIN",
    "CONTOUR_SAMPLES",
    "Circle",
    "INCLUSION_MARGIN",
    "MobiusPair",
    "TraceRegionBounds",
    "boundary_point",
    "bounds_for",
    "certificate_gap",
    "contour_samples",
    "free_test",
    "gamma_of_pair",
    "inside_contour",
    "isometric_circles",
    "normalize_generators",
    "solve_w",
]
