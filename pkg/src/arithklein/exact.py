"""Exact integer arithmetic helpers: polynomials over Z, determinants, resultants.

Polynomials are tuples of Python ints in ascending-power order (index k is
the coefficient of x^k), so every operation here is exact by construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


# ---------------------------------------------------------------------------
# integer polynomials (ascending-power tuples)
# ---------------------------------------------------------------------------

def poly_trim(c):
    """Drop trailing zero coefficients (always keep the constant term)."""
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a, b):
    n = max(len(a), len(b))
    return poly_trim(
        (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)
    )


def poly_sub(a, b):
    n = max(len(a), len(b))
    return poly_trim(
        (a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)
    )


def poly_scale(a, s):
    return poly_trim(s * c for c in a)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return poly_trim(out)


def poly_monic_divmod(a, b):
    """Divide a by a *monic* integer polynomial b; exact (quotient, remainder)."""
    assert b[-1] == 1, "divisor must be monic"
    a = list(a)
    db, qd = len(b) - 1, len(a) - len(b)
    if qd < 0:
        return (0,), poly_trim(a)
    quot = [0] * (qd + 1)
    for k in range(qd, -1, -1):
        coef = a[k + db]
        if coef:
            quot[k] = coef
            for j in range(db + 1):
                a[k + j] -= coef * b[j]
    return poly_trim(quot), poly_trim(a[:db] if db else [0])


def poly_mod(a, modulus):
    return poly_monic_divmod(a, modulus)[1]


def poly_compose_mod(outer, inner, modulus):
    """outer(inner) reduced mod a monic integer polynomial, all exact."""
    acc = (0,)
    for c in reversed(outer):
        acc = poly_mod(poly_add(poly_mul(acc, inner), (c,)), modulus)
    return acc


def poly_eval_fraction(a, x):
    """Evaluate at an exact Fraction/int point."""
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_derivative(a):
    if len(a) == 1:
        return (0,)
    return poly_trim(k * a[k] for k in range(1, len(a)))


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

def factorize(n):
    """Prime factorization as {prime: exponent}; n >= 1."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n):
    if n == 1:
        return 1
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n):
    """All positive divisors of n, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_if_prime_power(n):
    """Return p when n = p^k for a prime p (k >= 1), else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) == 1:
        return next(iter(fac))
    return None


# ---------------------------------------------------------------------------
# cyclotomic machinery
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficients of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    num = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    den = (1,)
    for d in divisors(n)[:-1]:
        den = poly_mul(den, cyclotomic(d))
    quot, rem = poly_monic_divmod(num, den)
    assert rem == (0,), "cyclotomic division must be exact"
    return quot


@lru_cache(maxsize=None)
def halfangle_poly(k):
    """P_k with P_k(2 cos t) = 2 cos(k t); P_0 = 2, P_1 = x."""
    if k == 0:
        return (2,)
    if k == 1:
        return (0, 1)
    return poly_sub(poly_mul((0, 1), halfangle_poly(k - 1)), halfangle_poly(k - 2))


@lru_cache(maxsize=None)
def cos_minpoly(M):
    """Minimal polynomial of 2 cos(2 pi / M) over Q (monic, integer)."""
    if M == 1:
        return (-2, 1)
    if M == 2:
        return (2, 1)
    phi = cyclotomic(M)
    h = (len(phi) - 1) // 2
    # Phi_M is palindromic for M >= 3: fold z^k + z^-k into P_k(x).
    acc = (phi[h],)
    for k in range(1, h + 1):
        acc = poly_add(acc, poly_scale(halfangle_poly(k), phi[h + k]))
    assert acc[-1] == 1 and len(acc) == h + 1
    return acc


def real_cos_degree(M):
    """Degree of Q(2 cos(2 pi / M)) over Q."""
    if M <= 2:
        return 1
    return euler_phi(M) // 2


# ---------------------------------------------------------------------------
# exact linear algebra (Bareiss) and resultants
# ---------------------------------------------------------------------------

def int_det(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def int_solve(rows, vec):
    """Solve an integer system exactly by Cramer's rule; list of Fractions or None."""
    d = int_det(rows)
    if d == 0:
        return None
    n = len(rows)
    out = []
    for j in range(n):
        cols = [[rows[i][k] if k != j else vec[i] for k in range(n)] for i in range(n)]
        out.append(Fraction(int_det(cols), d))
    return out


def resultant(f, g):
    """Resultant of two integer polynomials via the Sylvester matrix."""
    f, g = poly_trim(f), poly_trim(g)
    m, n = len(f) - 1, len(g) - 1
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    fr, gr = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return int_det(rows)


def poly_discriminant(f):
    """Discriminant of a monic integer polynomial (degree-1 convention: 1)."""
    f = poly_trim(f)
    n = len(f) - 1
    assert f[-1] == 1, "expects a monic polynomial"
    if n <= 1:
        return 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, poly_derivative(f))


def perfect_square_part(n):
    """Largest d with d^2 | n (n != 0), computed from the factorization."""
    n = abs(n)
    d = 1
    for p, e in factorize(n).items():
        d *= p ** (e // 2)
    return d


def squarefree_kernel(n):
    """The squarefree part of n, keeping the sign."""
    if n == 0:
        return 0
    s = perfect_square_part(n)
    return n // (s * s)


def is_perfect_square(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


__all__ = [
    "cos_minpoly",
    "cyclotomic",
    "divisors",
    "euler_phi",
    "factorize",
    "gcd",
    "halfangle_poly",
    "int_det",
    "int_solve",
    "is_perfect_square",
    "perfect_square_part",
    "poly_add",
    "poly_compose_mod",
    "poly_derivative",
    "poly_discriminant",
    "poly_eval_fraction",
    "poly_mod",
    "poly_monic_divmod",
    "poly_mul",
    "poly_scale",
    "poly_sub",
    "poly_trim",
    "prime_if_prime_power",
    "real_cos_degree",
    "resultant",
    "squarefree_kernel",
]
