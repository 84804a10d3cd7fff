"""The Frey curve Y^2 = X (X - A) (X + B) attached to a pair (x, y).

A = alpha * f_{k1}(x, y), B = beta * f_{k2}(x, y), C = gamma * f_{k3}(x, y)
with (alpha, beta, gamma) the telescoping coefficients from cycfield, so
A + B + C = 0 identically.  The curve is built for arbitrary coprime inputs,
not only for genuine solutions of x^r + y^r = z^p: the algebraic identities
(A + B + C = 0, the invariant formulas, pairwise coprimality of the f_k
outside r) hold for every coprime pair, which is what can be exercised at
desk scale.

Invariants of the model (standard b-invariant expansion of the right side
X^3 + (B - A) X^2 - AB X):

    Delta = 2^4 (ABC)^2
    c4    = 2^4 (A^2 + AB + B^2)   ( = -2^4 (AB + BC + CA) )
    j     = -2^8 (AB + BC + CA)^3 / (ABC)^2

stored with j as an exact numerator/denominator pair and tied together by
the cross-multiplied identity c4^3 * j_den = j_num * Delta.

Valuations are only computed at computationally tame primes: a degree-one
odd prime (q, theta - t) with q not dividing disc(psi_r), or the rational
prime 2 when 2 is inert.  That is enough to check every valuation-shaped
claim without general ideal arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cycfield import CycInt, RealCyclotomicField, alpha_beta_gamma, f_k_eval, reduce_mod
from .errors import (
    DegenerateCurveError,
    NotCoprimeError,
    NotInertError,
    UnfactoredCofactorError,
)
from .ffpoly import ddf_degrees
from .intlinalg import row_lattice_index
from .numutil import is_prime, strip_factor, two_adic_valuation


@dataclass(frozen=True)
class FreyCurve:
    field: RealCyclotomicField
    k: tuple[int, int, int]
    x: CycInt
    y: CycInt
    A: CycInt
    B: CycInt
    C: CycInt


@dataclass(frozen=True)
class FreyInvariants:
    delta: CycInt
    c4: CycInt
    j_num: CycInt
    j_den: CycInt


def frey_curve(field: RealCyclotomicField, x, y, k1: int, k2: int, k3: int) -> FreyCurve:
    x = field.element(x)
    y = field.element(y)
    if x.is_zero() and y.is_zero():
        raise ValueError("x and y cannot both be zero")
    alpha, beta, gamma = alpha_beta_gamma(field, k1, k2, k3)
    a = alpha * f_k_eval(field, k1, x, y)
    b = beta * f_k_eval(field, k2, x, y)
    c = gamma * f_k_eval(field, k3, x, y)
    if not (a + b + c).is_zero():
        raise AssertionError("A + B + C != 0; construction is broken")
    return FreyCurve(field, (k1, k2, k3), x, y, a, b, c)


def invariants(curve: FreyCurve) -> FreyInvariants:
    return invariants_from_abc(curve.field, curve.A, curve.B, curve.C)


def invariants_from_abc(field: RealCyclotomicField, A: CycInt, B: CycInt, C: CycInt) -> FreyInvariants:
    """Invariants from explicit A, B, C with A + B + C = 0."""
    if not (A + B + C).is_zero():
        raise ValueError("A + B + C must vanish")
    abc = A * B * C
    if abc.is_zero():
        raise DegenerateCurveError("ABC = 0: singular model, j undefined")
    s = A * B + B * C + C * A
    delta = 16 * abc * abc
    c4 = -16 * s
    j_num = -256 * s * s * s
    j_den = abc * abc
    if not (c4 * c4 * c4 * j_den == j_num * delta):
        raise AssertionError("c4^3 != j * Delta; invariant computation broken")
    return FreyInvariants(delta=delta, c4=c4, j_num=j_num, j_den=j_den)


# -- valuations ---------------------------------------------------------------


def valuation_at_split_prime(field: RealCyclotomicField, a: CycInt, q: int, root: int) -> int:
    """v at the degree-one prime (q, theta - root) for an odd prime q not
    dividing disc(psi_r), root a simple root of psi_r mod q.

    Evaluates a at the Hensel lift of the root mod q^k, doubling k until the
    value is nonzero mod q^k; the q-adic valuation of that value is exact.
    """
    a = field.element(a)
    if a.is_zero():
        raise ValueError("valuation of 0 is undefined")
    if q == 2 or not is_prime(q):
        raise ValueError(f"q = {q} must be an odd prime")
    root %= q
    if _poly_eval_mod(field.psi, root, q) != 0:
        raise ValueError(f"{root} is not a root of psi_r mod {q}")
    deriv = _poly_eval_mod(_derivative(field.psi), root, q)
    if deriv % q == 0:
        raise ValueError(f"{root} is not a simple root of psi_r mod {q}")
    k = 1
    t = root
    while True:
        qk = q**k
        val = _poly_eval_mod(a.coeffs, t, qk)
        if val != 0:
            v = 0
            while val % q == 0:
                val //= q
                v += 1
            return v
        k *= 2
        t = _hensel_lift_root(field.psi, t, q, k)


def _derivative(poly: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(i * c for i, c in enumerate(poly))[1:]


def _poly_eval_mod(poly, t: int, m: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = (acc * t + c) % m
    return acc


def _hensel_lift_root(poly: tuple[int, ...], t: int, q: int, k: int) -> int:
    """Newton-lift a simple root of poly mod q to mod q^k."""
    prec = 1
    qk = q**k
    while prec < k:
        prec = min(2 * prec, k)
        mod = q**prec
        fv = _poly_eval_mod(poly, t, mod)
        dv = _poly_eval_mod(_derivative(poly), t, mod)
        t = (t - fv * pow(dv, -1, mod)) % mod
    return t % qk


def inert_two_valuation(field: RealCyclotomicField, a: CycInt) -> int:
    """v at the prime (2) when 2 is inert: the minimum 2-adic valuation of
    the power-basis coordinates (the basis is an integral basis)."""
    a = field.element(a)
    if a.is_zero():
        raise ValueError("valuation of 0 is undefined")
    psi_bits = 0
    for i, c in enumerate(field.psi):
        if c & 1:
            psi_bits |= 1 << i
    if ddf_degrees(psi_bits) != [(field.degree, 1)]:
        raise NotInertError(f"2 is not inert for r = {field.r}")
    return min(two_adic_valuation(c) for c in a.coeffs if c)


def make_valuation(field: RealCyclotomicField, prime):
    """Valuation functional from a prime description: the string "2-inert"
    or a ("split", q, root) triple."""
    if prime == "2-inert":
        return lambda a: inert_two_valuation(field, field.element(a))
    if isinstance(prime, tuple) and len(prime) == 3 and prime[0] == "split":
        _, q, root = prime
        return lambda a: valuation_at_split_prime(field, field.element(a), q, root)
    raise ValueError(f"unsupported prime description: {prime!r}")


def j_valuation_identity_values(field, A: CycInt, B: CycInt, C: CycInt, prime) -> tuple[int, int, bool]:
    """(v(j), 8 v(2) - 2 v(A), equal?) at the described prime, which must
    divide A and neither B nor C."""
    val = make_valuation(field, prime)
    inv = invariants_from_abc(field, A, B, C)
    v_a = val(A)
    if v_a <= 0:
        raise ValueError("the prime must divide A")
    if val(B) != 0 or val(C) != 0:
        raise ValueError("the prime must not divide B or C")
    v2 = val(field.element(2)) if prime == "2-inert" else 0
    v_j = val(inv.j_num) - val(inv.j_den)
    rhs = 8 * v2 - 2 * v_a
    return v_j, rhs, v_j == rhs


def j_valuation_identity_check(curve: FreyCurve, prime) -> bool:
    _, _, ok = j_valuation_identity_values(curve.field, curve.A, curve.B, curve.C, prime)
    return ok


# -- coprimality of the quadratic factors ------------------------------------


@dataclass(frozen=True)
class CoprimalityReport:
    r: int
    x: int
    y: int
    # (i, j, ideal norm of (f_i, f_j) with all factors of r removed)
    pairs: tuple[tuple[int, int, int], ...]
    offending: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.offending


def _ideal_norm(field: RealCyclotomicField, gens: list[CycInt]) -> int:
    """|O / (g_1, ..., g_k)| through the row lattice spanned by theta^i*g_j."""
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        cur = g
        for _ in range(field.degree):
            rows.append(list(cur.coeffs))
            cur = cur * field.theta
    if not rows:
        raise ValueError("all generators are zero")
    return row_lattice_index(rows, field.degree)


def coprimality_check(field: RealCyclotomicField, x: int, y: int) -> CoprimalityReport:
    """Certify that the f_k(x, y) are pairwise coprime outside r.

    For each pair i < j the norm of the ideal (f_i(x,y), f_j(x,y)) is
    computed exactly and stripped of its r-part; a leftover > 1 names an
    offending pair.  (Coprimality of ideals is strictly stronger than
    coprimality of element norms: conjugate factors share their norm without
    sharing any prime, so norm gcds would flag false positives.)
    """
    if not isinstance(x, int) or not isinstance(y, int):
        raise TypeError("desk-scale coprimality check takes rational integers")
    if math.gcd(x, y) != 1:
        raise NotCoprimeError(f"gcd({x}, {y}) != 1")
    values = [f_k_eval(field, k, x, y) for k in range(field.degree + 1)]
    pairs = []
    offending = []
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            norm_ij = _ideal_norm(field, [values[i], values[j]])
            outside_r = strip_factor(norm_ij, field.r)
            pairs.append((i, j, outside_r))
            if outside_r != 1:
                offending.append((i, j))
    return CoprimalityReport(field.r, x, y, tuple(pairs), tuple(offending))


# -- conductor support --------------------------------------------------------


def conductor_support_outside_S(curve: FreyCurve, smoothness_bound: int = 100_000) -> tuple[int, ...]:
    """Rational primes q outside {2, r} dividing Norm(ABC): the support of
    the semistable part of the conductor.  Trial division only; a cofactor
    surviving the bound raises instead of passing silently."""
    n = abs(curve.field.norm(curve.A * curve.B * curve.C))
    if n == 0:
        raise DegenerateCurveError("ABC = 0 has no conductor support")
    n = strip_factor(n, 2)
    n = strip_factor(n, curve.field.r)
    support = []
    p = 3
    while p <= smoothness_bound and n > 1:
        if n % p == 0:
            support.append(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        raise UnfactoredCofactorError(
            f"cofactor {n} has no prime factor <= {smoothness_bound}"
        )
    return tuple(support)


def find_k1(field: RealCyclotomicField, x, y) -> int | None:
    """The unique index k with f_k(x, y) = 0 mod the inert prime above 2, or
    None when no single such k exists.  Requires 2 inert."""
    x = field.element(x)
    y = field.element(y)
    psi_bits = 0
    for i, c in enumerate(field.psi):
        if c & 1:
            psi_bits |= 1 << i
    if ddf_degrees(psi_bits) != [(field.degree, 1)]:
        raise NotInertError(f"2 is not inert for r = {field.r}")
    hits = [
        k
        for k in range(field.degree + 1)
        if all(c == 0 for c in reduce_mod(f_k_eval(field, k, x, y), 2))
    ]
    return hits[0] if len(hits) == 1 else None
