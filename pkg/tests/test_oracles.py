"""Independent oracles for every derived constant, frozen before implementation.

Nothing here imports the package: each value is recomputed from first
principles (classical formulas, high-precision numerics, brute force) and
pinned.  The implementation's unit tests then compare against the same pins.
"""

import cmath
import math
from fractions import Fraction

import mpmath as mp
import numpy as np

# ---------------------------------------------------------------------------
# tiny self-contained number theory helpers
# ---------------------------------------------------------------------------


def _phi(n):
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _real_cos_degree(M):
    return 1 if M <= 2 else _phi(M) // 2


def _field_degree(p, q):
    lcm = math.lcm(p, q)
    return _phi(lcm) // 2 if math.gcd(p, q) > 2 else _phi(lcm) // 4


def _prime_power_base(n):
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


def _delta_pq(p, q):
    dp = _prime_power_base(p) or 1
    dq = _prime_power_base(q) or 1
    return dp ** (2.0 / _phi(p)) * dq ** (2.0 / _phi(q))


# ---------------------------------------------------------------------------
# minimal polynomials and power-basis discriminants of 2cos(2pi/M)
# ---------------------------------------------------------------------------


def _cos_conjugates(M, dps=60):
    with mp.workdps(dps):
        return [
            2 * mp.cos(2 * mp.pi * y / M)
            for y in range(1, M // 2 + 1)
            if math.gcd(y, M) == 1
        ]


def test_cos_minpoly_numeric():
    expected = {
        5: (-1, 1, 1),            # x^2 + x - 1
        7: (-1, -2, 1, 1),        # x^3 + x^2 - 2x - 1
        8: (-2, 0, 1),            # x^2 - 2
        9: (1, -3, 0, 1),         # x^3 - 3x + 1
        12: (-3, 0, 1),           # x^2 - 3
    }
    for M, coeffs in expected.items():
        roots = [complex(r) for r in _cos_conjugates(M)]
        poly = np.polynomial.polynomial.polyfromroots(roots)
        rounded = tuple(int(round(c.real)) for c in poly)
        assert max(abs(c - r) for c, r in zip(poly, rounded)) < 1e-10
        assert rounded == coeffs


def test_power_basis_discriminants():
    # prod_{i<j} (u_i - u_j)^2 over the conjugates of u = 2cos(2pi/M)
    expected = {5: 5, 7: 49, 8: 8, 9: 81, 11: 11 ** 4, 12: 12, 36: 2 ** 6 * 3 ** 9}
    for M, want in expected.items():
        with mp.workdps(60):
            us = _cos_conjugates(M)
            v2 = mp.mpf(1)
            for i in range(len(us)):
                for j in range(i + 1, len(us)):
                    v2 *= (us[i] - us[j]) ** 2
            assert abs(v2 - want) < 1e-25 * max(1, want)


def test_field_discriminant_product_rule_spot():
    # gcd(10, 6) = 2: disc L(10,6) = disc(5-cos field)^1 * 1^2 = 5
    assert 5 ** (_phi(6) // 2) * 1 ** (_phi(10) // 2) == 5


def test_degree_and_conductor_spots():
    assert _field_degree(6, 6) == 1
    assert _field_degree(8, 6) == 2
    assert _field_degree(10, 6) == 2
    assert _field_degree(7, 7) == 3
    assert _field_degree(30, 15) == 4
    assert _field_degree(42, 42) == 6

    # smallest conductor M with Z[2cos(2pi/M)] containing both trace values,
    # decided numerically at high precision
    def conductor(p, q):
        mu = _field_degree(p, q)
        for M in _divisors(2 * math.lcm(p, q)):
            if _real_cos_degree(M) != mu:
                continue
            with mp.workdps(60):
                basis = [
                    [u ** k for k in range(mu)]
                    for u in ([mp.mpf(2)] if M <= 2 else _cos_conjugates(M))
                ]
                ok = True
                for n in (p, q):
                    # embedding-coherent targets: lift each residue y to
                    # j = y (mod M) with gcd(j, lcm(M,n)) = 1
                    npq = math.lcm(M, n)
                    ys = [1] if M <= 2 else [
                        y for y in range(1, M // 2 + 1) if math.gcd(y, M) == 1
                    ]
                    targets = []
                    for y in ys:
                        j = next(
                            j for j in range(1, npq + 1)
                            if math.gcd(j, npq) == 1 and (j - y) % M == 0
                        )
                        targets.append(2 * mp.cos(2 * mp.pi * j / n))
                    sol = mp.lu_solve(mp.matrix(basis), mp.matrix(targets))
                    if any(abs(x - mp.nint(x)) > mp.mpf(10) ** -40 for x in sol):
                        ok = False
                        break
                if ok:
                    return M
        raise AssertionError("no conductor found")

    assert conductor(6, 6) == 1
    assert conductor(10, 6) == 5
    assert conductor(8, 6) == 8
    assert conductor(7, 7) == 7
    assert conductor(42, 7) == 21


# ---------------------------------------------------------------------------
# Schur's maximum of the squared Vandermonde on [-1, 1]^r
# ---------------------------------------------------------------------------


def _schur_fraction(r):
    num = Fraction(1)
    for k in range(2, r + 1):
        num *= Fraction(k) ** k
    for k in range(2, r - 1):
        num *= Fraction(k) ** k
    den = Fraction(1)
    for j in range(3, 2 * r - 2, 2):
        den *= Fraction(j) ** j
    return num / den


def _vandermonde_sq(xs):
    v = mp.mpf(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            v *= (xs[i] - xs[j]) ** 2
    return v


def test_schur_values_and_fekete_equality():
    assert _schur_fraction(3) == 4
    assert _schur_fraction(4) == Fraction(110592, 84375)
    assert _schur_fraction(5) == Fraction(2985984, 22235661)
    with mp.workdps(50):
        fekete = {
            3: [mp.mpf(-1), mp.mpf(0), mp.mpf(1)],
            4: [mp.mpf(-1), -1 / mp.sqrt(5), 1 / mp.sqrt(5), mp.mpf(1)],
            5: [mp.mpf(-1), -mp.sqrt(mp.mpf(3) / 7), mp.mpf(0),
                mp.sqrt(mp.mpf(3) / 7), mp.mpf(1)],
        }
        for r, xs in fekete.items():
            want = _schur_fraction(r)
            got = _vandermonde_sq(xs)
            assert abs(got - mp.mpf(want.numerator) / want.denominator) < mp.mpf(10) ** -40


def test_schur_dominates_monte_carlo():
    rng = np.random.default_rng(20260819)
    for r in (3, 4, 5):
        xs = rng.uniform(-1.0, 1.0, size=(200_000, r))
        v2 = np.ones(len(xs))
        for i in range(r):
            for j in range(i + 1, r):
                v2 *= (xs[:, i] - xs[:, j]) ** 2
        bound = float(_schur_fraction(r))
        top = float(v2.max())
        assert top <= bound * (1 + 1e-12)
        assert top >= 0.5 * bound


# ---------------------------------------------------------------------------
# trace-parameter geometry: generators, commutator, extremal curve
# ---------------------------------------------------------------------------


def _generators(p, q, w):
    cp, sp = math.cos(math.pi / p), math.sin(math.pi / p)
    cq, sq = math.cos(math.pi / q), math.sin(math.pi / q)
    A = np.array([[cp, 1j * sp], [1j * sp, cp]], dtype=complex)
    B = np.array([[cq, 1j * w * sq], [1j * sq / w, cq]], dtype=complex)
    return A, B


def _gamma_formula(p, q, w):
    sp, sq = math.sin(math.pi / p), math.sin(math.pi / q)
    return (sp * sq) ** 2 * (w - 1 / w) ** 2


def test_fricke_identity_and_commutator_trace():
    rng = np.random.default_rng(7)
    for p, q in ((6, 6), (8, 6), (7, 7)):
        b = 16 * math.cos(math.pi / p) ** 2 * math.cos(math.pi / q) ** 2
        beta1 = -4 * math.sin(math.pi / p) ** 2
        beta2 = -4 * math.sin(math.pi / q) ** 2
        c = b * (beta1 + beta2 + 4)
        for _ in range(25):
            w = complex(rng.uniform(0.2, 1.0), rng.uniform(-0.8, 0.8))
            A, B = _generators(p, q, w)
            comm = A @ B @ np.linalg.inv(A) @ np.linalg.inv(B)
            gamma = complex(np.trace(comm)) - 2
            assert abs(gamma - _gamma_formula(p, q, w)) < 1e-9
            lam = complex(np.trace(A) * np.trace(B) * np.trace(A @ B))
            assert abs(b * gamma - (lam ** 2 - b * lam + c)) < 1e-7 * max(1, abs(lam) ** 2)


def _omega(p, q, t):
    c = math.cos(math.pi / p) * math.cos(math.pi / q)
    s = math.sin(math.pi / p) * math.sin(math.pi / q)
    re = 4 * (2 * t * t - 1) * (1 + t * c) ** 2 - 4 * t * t * s * s
    rad = (1 + t * c) ** 2 - s * s
    im = -8 * t * math.sqrt(max(0.0, 1 - t * t)) * (1 + t * c) * math.sqrt(max(0.0, rad))
    return complex(re, im)


def _solve_w(p, q, gamma):
    sp, sq = math.sin(math.pi / p), math.sin(math.pi / q)
    V = cmath.sqrt(complex(gamma)) / (sp * sq)
    best = None
    for Vs in (V, -V):
        disc = cmath.sqrt(Vs * Vs + 4)
        for sgn in (1, -1):
            w = (Vs + sgn * disc) / 2
            if abs(w) > 1 + 1e-12 or w.real < -1e-12:
                continue
            if best is None or abs(w) < abs(best):
                best = w
    assert best is not None
    return best


def _tangency_gap(p, q, w):
    # margin of the isometric-circle separation certificate at the pair (f, g)
    lhs = abs(1j * w / math.tan(math.pi / q) + 1j / math.tan(math.pi / p))
    lhs += abs(w) / math.sin(math.pi / q)
    return 1 / math.sin(math.pi / p) - lhs


def test_extremal_curve_endpoints():
    for p, q in ((6, 6), (8, 6), (7, 7), (12, 6)):
        assert abs(_omega(p, q, 0) - (-4)) < 1e-12
        end = 4 * (math.cos(math.pi / p) + math.cos(math.pi / q)) ** 2
        assert abs(_omega(p, q, 1) - end) < 1e-12


def test_extremal_curve_is_certificate_boundary():
    # on the curve the separation certificate is exactly tight; outward of it
    # the certificate holds (group proved free), inward it fails
    for p, q in ((6, 6), (8, 6), (7, 7)):
        anchor = (_omega(p, q, 0) + _omega(p, q, 1)) / 2
        for t in np.linspace(0.05, 0.95, 19):
            g_on = _omega(p, q, t)
            if abs(g_on.imag) < 1e-3:
                continue
            gap_on = _tangency_gap(p, q, _solve_w(p, q, g_on))
            assert abs(gap_on) < 1e-9
            g_out = anchor + 1.03 * (g_on - anchor)
            assert _tangency_gap(p, q, _solve_w(p, q, g_out)) > 0
            g_in = anchor + 0.97 * (g_on - anchor)
            assert _tangency_gap(p, q, _solve_w(p, q, g_in)) < 0


# ---------------------------------------------------------------------------
# norm bound on the degree r of the trace polynomial
# ---------------------------------------------------------------------------


def test_norm_degree_bound_spots():
    def rmax(p, q):
        mu = _field_degree(p, q)
        num = (math.cos(math.pi / p) + math.cos(math.pi / q)) / (
            math.sin(math.pi / p) * math.sin(math.pi / q)
        )
        rhs = 4 * math.log(num) / math.log(4 / _delta_pq(p, q))
        return int(rhs / mu)

    assert rmax(6, 6) == 5
    assert rmax(7, 7) == 33


# ---------------------------------------------------------------------------
# factor-polynomial constants and the half-order composition
# ---------------------------------------------------------------------------


def test_epsilon_variant_constants_12_6():
    b = 16 * math.cos(math.pi / 12) ** 2 * math.cos(math.pi / 6) ** 2
    assert abs(b - 3 * (2 + math.sqrt(3))) < 1e-12
    c = 4 * math.sin(2 * math.pi / 12) * math.sin(2 * math.pi / 6)
    assert abs(c - math.sqrt(3)) < 1e-12
    # same c as a difference of two cosines
    c2 = 2 * math.cos(2 * math.pi * 6 / 72) - 2 * math.cos(2 * math.pi * 18 / 72)
    assert abs(c - c2) < 1e-12


def test_half_order_composition_spot():
    # gamma = y^2 - beta1*y applied to the roots of y^2 - 3y + 1, beta1 = -1
    roots = np.roots([1, -3, 1])
    imgs = [y * y + y for y in roots]
    poly = np.polynomial.polynomial.polyfromroots(imgs)
    rounded = tuple(int(round(c.real)) for c in poly)
    assert rounded == (5, -10, 1)  # x^2 - 10x + 5
    # degenerate spot: roots of y^2 + y + 1 all map to -1
    roots = np.roots([1, 1, 1])
    imgs = [y * y + y for y in roots]
    poly = np.polynomial.polynomial.polyfromroots(imgs)
    assert np.allclose(poly, [1, 2, 1], atol=1e-12)  # (x + 1)^2
