"""Exact arithmetic in the totally real field L = Q(cos 2pi/p, cos 2pi/q).

L is represented through a power integral basis {1, u, ..., u^(mu-1)} with
u = 2 cos(2pi/M) for the smallest workable conductor M.  Elements carry exact
integer coordinates; embeddings are tracked numerically at configurable
precision, and every rounding step is certified (exactly, where an exact
path through the cyclotomic ring exists).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import numpy as np

from .errors import CertificationFailed, IllConditioned, NoPowerBasisFound
from .exact import (
    cos_minpoly,
    divisors,
    euler_phi,
    factorize,
    halfangle_poly,
    int_det,
    int_solve,
    poly_compose_mod,
    poly_mod,
    prime_if_prime_power,
    real_cos_degree,
)

DEFAULT_PREC = 200          # working precision in bits
ROUND_EPS = 2.0 ** -60      # max distance to the nearest integer we accept


class FieldElement:
    """An element of a FieldSpec with exact integer coordinates in powers of u."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(int(c) for c in coords)
        assert len(self.coords) == field.mu

    # -- ring operations (all exact) ------------------------------------

    def __add__(self, other):
        other = self.field.coerce(other)
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        other = self.field.coerce(other)
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.field, [other * a for a in self.coords])
        other = self.field.coerce(other)
        return self.field._mul(self, other)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, n):
        assert n >= 0
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.coerce(other)
        return isinstance(other, FieldElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"FieldElement{self.coords}"

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    # -- embeddings ------------------------------------------------------

    def embed(self, i):
        """Float image under the i-th real embedding (0 = identity)."""
        return float(np.dot(self.field.emb_pow[i], self.coords))

    def embed_all(self):
        """All embedding images as a float64 vector, identity first."""
        return self.field.emb_pow @ np.asarray(self.coords, dtype=float)

    def embed_all_mp(self):
        """All embedding images as mpf values at the field's working precision."""
        field = self.field
        with mp.workprec(field.prec):
            return [
                mp.fsum(c * field.emb_pow_mp[i][k] for k, c in enumerate(self.coords))
                for i in range(field.mu)
            ]

    # -- exact invariants --------------------------------------------------

    def mult_matrix(self):
        """Integer matrix of multiplication by this element on the power basis."""
        field = self.field
        cols = []
        acc = self
        cols.append(acc.coords)
        for _ in range(1, field.mu):
            acc = field._mul_by_u(acc)
            cols.append(acc.coords)
        return [[cols[j][i] for j in range(field.mu)] for i in range(field.mu)]

    def norm(self):
        """Norm over Q, as an exact integer."""
        return int_det(self.mult_matrix())


class FieldSpec:
    """The real field of a generator-order pair, with a power integral basis."""

    def __init__(self, p, q, M, mu, minpoly_u, residues, prec=DEFAULT_PREC):
        self.p = p
        self.q = q
        self.M = M
        self.mu = mu
        self.minpoly_u = tuple(minpoly_u)
        self.residues = tuple(residues)  # Galois labels y, sigma_y(u) = 2cos(2pi y/M)
        self.prec = prec

        with mp.workprec(prec):
            self.embeddings_mp = tuple(
                2 * mp.cos(2 * mp.pi * y / M) for y in self.residues
            )
            self.emb_pow_mp = [
                [self.embeddings_mp[i] ** k for k in range(mu)] for i in range(mu)
            ]
        self.embeddings = tuple(float(e) for e in self.embeddings_mp)
        self.emb_pow = np.array(
            [[float(self.emb_pow_mp[i][k]) for k in range(mu)] for i in range(mu)]
        )

        # power-reduction table: u^k as integer coordinate vectors, k <= 2mu-2
        self._upowers = []
        vec = [0] * mu
        vec[0] = 1
        self._upowers.append(tuple(vec))
        for k in range(1, 2 * mu - 1):
            poly = [0] + list(self._upowers[-1])
            reduced = poly_mod(tuple(poly), self.minpoly_u)
            reduced = list(reduced) + [0] * (mu - len(reduced))
            self._upowers.append(tuple(reduced[:mu]))

        self.zero = FieldElement(self, [0] * mu)
        one = [0] * mu
        one[0] = 1
        self.one = FieldElement(self, one)
        self.u = FieldElement(self, self._upowers[1]) if mu > 1 else self.one * int(
            round(self.embeddings[0])
        )

        # filled in by build_field
        self.beta1 = None
        self.beta2 = None
        self.delta_pq = None
        self.disc_L = None

    # -- construction helpers -------------------------------------------

    def coerce(self, x):
        if isinstance(x, FieldElement):
            assert x.field is self
            return x
        if isinstance(x, int):
            coords = [0] * self.mu
            coords[0] = x
            return FieldElement(self, coords)
        raise TypeError(f"cannot coerce {type(x)} into field")

    def element(self, coords):
        return FieldElement(self, coords)

    def _mul(self, x, y):
        mu = self.mu
        conv = [0] * (2 * mu - 1)
        for i, a in enumerate(x.coords):
            if a == 0:
                continue
            for j, b in enumerate(y.coords):
                conv[i + j] += a * b
        out = [0] * mu
        for k, c in enumerate(conv):
            if c == 0:
                continue
            for t, w in enumerate(self._upowers[k]):
                out[t] += c * w
        return FieldElement(self, out)

    def _mul_by_u(self, x):
        mu = self.mu
        out = [0] * mu
        for k, c in enumerate(x.coords):
            if c == 0:
                continue
            for t, w in enumerate(self._upowers[k + 1]):
                out[t] += c * w
        return FieldElement(self, out)

    # -- batch numeric embedding ------------------------------------------

    def embed_batch(self, coords_array):
        """Embed an (n, mu) integer coordinate array to (n, mu) float values."""
        return np.asarray(coords_array, dtype=float) @ self.emb_pow.T

    # -- recognition -----------------------------------------------------

    def recognize(self, values, tol=1e-10):
        """Round per-embedding real targets to an exact element, or None.

        Raises IllConditioned when the linear solve itself cannot be trusted
        at the working precision.
        """
        with mp.workprec(self.prec):
            amat = mp.matrix([[self.emb_pow_mp[i][k] for k in range(self.mu)]
                              for i in range(self.mu)])
            vvec = mp.matrix([mp.mpf(v) if not isinstance(v, (mp.mpf, mp.mpc)) else v
                              for v in values])
            try:
                sol = mp.lu_solve(amat, vvec)
            except ZeroDivisionError as exc:  # pragma: no cover - degenerate basis
                raise IllConditioned(str(exc)) from exc
            resid = max(abs(x) for x in (amat * sol - vvec))
            if resid > mp.mpf(2) ** (-self.prec // 2) * (1 + mp.norm(vvec)):
                raise IllConditioned(f"solve residual {resid}")
            coords = []
            for x in sol:
                n = int(mp.nint(x))
                coords.append(n)
            cand = FieldElement(self, coords)
            back = cand.embed_all_mp()
            for b, v in zip(back, vvec):
                if abs(b - v) > tol:
                    return None
            return cand

    def _cosine_lifts(self, N):
        """Per-embedding exponents j with j = residue (mod M), gcd(j, N) = 1."""
        lifts = []
        for y in self.residues:
            for j in range(1, N + 1):
                if math.gcd(j, N) == 1 and (j - y) % self.M == 0:
                    lifts.append(j)
                    break
            else:  # pragma: no cover - impossible when M | N
                raise CertificationFailed(f"no unit lift of {y} mod {N}")
        return lifts

    def recognize_cosine(self, a, N):
        """Exact coordinates of 2 cos(2 pi a / N), or None when not in the field.

        The rounding step is verified exactly in Z[2 cos(2 pi / N)], so a
        non-None result is proved, not just numerically plausible.
        """
        if N % self.M != 0:
            N = N * self.M // math.gcd(N, self.M)
        a = a % N
        a = min(a, N - a)
        lifts = self._cosine_lifts(N)
        with mp.workprec(self.prec):
            targets = [2 * mp.cos(2 * mp.pi * a * j / N) for j in lifts]
        cand = self.recognize(targets, tol=mp.mpf(2) ** (-self.prec // 4))
        if cand is None:
            return None
        # exact certificate: sum m_k u^k = 2cos(2 pi a / N) in Z[2cos(2pi/N)]
        modulus = cos_minpoly(N)
        u_in_w = poly_mod(halfangle_poly(N // self.M), modulus)
        lhs = poly_compose_mod(cand.coords, u_in_w, modulus)
        rhs = poly_mod(halfangle_poly(a), modulus)
        if lhs != rhs:
            return None
        return cand

    def divide_exact(self, x, y):
        """x / y when the quotient lies in the ring Z[u]; otherwise None."""
        x = self.coerce(x)
        y = self.coerce(y)
        if y.is_zero():
            raise ZeroDivisionError("division by zero element")
        sol = int_solve(y.mult_matrix(), list(x.coords))
        if sol is None:
            return None
        if any(f.denominator != 1 for f in sol):
            return None
        return FieldElement(self, [int(f) for f in sol])

    def divides(self, y, x):
        """True when y divides x in Z[u]."""
        return self.divide_exact(x, y) is not None

    # -- serialization -----------------------------------------------------

    def to_json(self):
        return {
            "p": self.p,
            "q": self.q,
            "M": self.M,
            "mu": self.mu,
            "minpoly_u": list(self.minpoly_u),
            "beta1": list(self.beta1.coords),
            "beta2": list(self.beta2.coords),
        }

    @classmethod
    def from_json(cls, data, prec=DEFAULT_PREC):
        field = build_field(data["p"], data["q"], prec=prec)
        assert field.M == data["M"] and field.mu == data["mu"]
        assert list(field.minpoly_u) == list(data["minpoly_u"])
        assert list(field.beta1.coords) == list(data["beta1"])
        assert list(field.beta2.coords) == list(data["beta2"])
        return field

    def __repr__(self):
        return f"FieldSpec(p={self.p}, q={self.q}, M={self.M}, mu={self.mu})"


# ---------------------------------------------------------------------------
# constants of the pair (p, q)
# ---------------------------------------------------------------------------

def delta_order(n):
    """The prime p when n is a prime power p^k, else 1."""
    return prime_if_prime_power(n) or 1


def delta_pq(p, q):
    """Geometric-mean norm base of beta1*beta2 across embeddings (a float)."""
    dp, dq = delta_order(p), delta_order(q)
    return dp ** (2.0 / euler_phi(p)) * dq ** (2.0 / euler_phi(q))


def cyclotomic_real_discriminant(M):
    """Discriminant of Q(cos 2pi/M), exactly, via the closed prime-power formula."""
    if M <= 2:
        return 1
    fac = factorize(M)
    phi = euler_phi(M)
    exps = {}
    for pi, a in fac.items():
        exps[pi] = Fraction(phi, 2) * a - Fraction(phi, 2 * pi - 2)
    primes = sorted(fac)
    if len(fac) == 1:
        pi = primes[0]
        if pi == 2:
            if fac[2] >= 2:
                exps[2] -= 1
        else:
            exps[pi] -= Fraction(1, 2)
    elif len(fac) == 2 and fac.get(2) == 1:
        m = next(x for x in primes if x != 2)
        exps[m] -= Fraction(1, 2)
    out = 1
    for pi, e in exps.items():
        assert e.denominator == 1 and e >= 0, f"non-integral exponent for M={M}"
        out *= pi ** int(e)
    return out


def field_discriminant(p, q):
    """Discriminant of L = Q(cos 2pi/p, cos 2pi/q)."""
    if math.gcd(p, q) > 2:
        return cyclotomic_real_discriminant(math.lcm(p, q))
    return (
        cyclotomic_real_discriminant(p) ** (euler_phi(q) // 2)
        * cyclotomic_real_discriminant(q) ** (euler_phi(p) // 2)
    )


def field_degree(p, q):
    """Degree mu of L over Q."""
    lcm = math.lcm(p, q)
    if math.gcd(p, q) > 2:
        return euler_phi(lcm) // 2
    return euler_phi(lcm) // 4


# ---------------------------------------------------------------------------
# field construction
# ---------------------------------------------------------------------------

def _attempt_conductor(p, q, M, mu, prec):
    """Try to realize L on the conductor-M power basis; None when it fails."""
    if M <= 2:
        residues = (1,)
    else:
        others = sorted(
            (y for y in range(2, (M + 1) // 2) if math.gcd(y, M) == 1),
            key=lambda y: 2 * math.cos(2 * math.pi * y / M),
        )
        residues = (1, *others)
    field = FieldSpec(p, q, M, mu, cos_minpoly(M), residues, prec=prec)
    npq = math.lcm(M, p, q)
    x1 = field.recognize_cosine(npq // p, npq)
    if x1 is None:
        return None
    x2 = field.recognize_cosine(npq // q, npq)
    if x2 is None:
        return None
    field.beta1 = x1 - 2
    field.beta2 = x2 - 2
    field.delta_pq = delta_pq(p, q)
    field.disc_L = field_discriminant(p, q)
    return field


@lru_cache(maxsize=None)
def build_field(p, q, prec=DEFAULT_PREC):
    """Construct the FieldSpec of the pair on its natural cosine conductor.

    The generator is named after one of the two orders whenever
    2 cos 2 pi / q (or 2 cos 2 pi / p) already generates the whole field;
    smaller conductors describing the same field are only a fallback.  The
    choice changes nothing algebraically but fixes the power-basis matrix,
    and with it the two-stage box geometry.
    """
    assert 2 <= q <= p <= 120, "orders outside the supported range"
    mu = field_degree(p, q)
    candidates = [m for m in (q, p) if real_cos_degree(m) == mu]
    candidates += [m for m in divisors(2 * math.lcm(p, q))
                   if real_cos_degree(m) == mu and m not in candidates]
    for M in candidates:
        field = _attempt_conductor(p, q, M, mu, prec)
        if field is not None:
            return field
    raise NoPowerBasisFound(f"no power basis conductor for (p, q) = ({p}, {q})")


def unit_scale(field, which="p"):
    """-beta for the chosen order when it is a unit (order not a prime power)."""
    order = field.p if which == "p" else field.q
    if prime_if_prime_power(order) is not None:
        return None
    return -(field.beta1 if which == "p" else field.beta2)


def norm_over_Q(x):
    """Exact integer norm of a field element."""
    return x.norm()


__all__ = [
    "DEFAULT_PREC",
    "FieldElement",
    "FieldSpec",
    "build_field",
    "cyclotomic_real_discriminant",
    "delta_order",
    "delta_pq",
    "field_degree",
    "field_discriminant",
    "norm_over_Q",
    "unit_scale",
]
