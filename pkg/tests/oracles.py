"""Independent oracles for the test suite.

Everything here recomputes expected values through a route different from
the implementation under test: plain integer polynomial arithmetic, sympy
resultants/factorization, exhaustive enumeration, or the analytic class
number formula evaluated exactly over cyclotomic rationals.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

from rrpfermat.cycfield import CycInt, RealCyclotomicField

_x = sp.symbols("x")
_y = sp.symbols("y")


# -- plain integer polynomial helpers (low coefficient first) ----------------


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def poly_pow(a, n):
    out = [1]
    for _ in range(n):
        out = poly_mul(out, a)
    return out


def folded_psi_equals_cyclotomic(field: RealCyclotomicField) -> bool:
    """x^d * psi(x + 1/x) == 1 + x + ... + x^(r-1), as integer polynomials."""
    d = field.degree
    acc = [0]
    for j, c in enumerate(field.psi):
        # c * x^(d-j) * (x^2+1)^j
        term = poly_pow([1, 0, 1], j)
        term = [0] * (d - j) + term
        acc = poly_add(acc, [c * t for t in term])
    return acc == [1] * field.r


# -- sympy-backed oracles -----------------------------------------------------


def psi_poly(field: RealCyclotomicField):
    return sp.Poly(list(reversed(field.psi)), _x)


def sympy_norm(field: RealCyclotomicField, a: CycInt) -> int:
    """Norm as resultant(psi, a(x)); psi is monic so no lc normalization."""
    apoly = sp.Poly(list(reversed(a.coeffs)), _x)
    if apoly.is_zero:
        return 0
    return int(sp.resultant(psi_poly(field), apoly))


def sympy_disc(field: RealCyclotomicField) -> int:
    return int(psi_poly(field).discriminant())


def gf2_factor_shape(coeffs_low_first) -> list[tuple[int, int]]:
    """(degree, count) multiset of the distinct irreducible factors over
    GF(2), via sympy; squarefree inputs only (count is per distinct factor)."""
    poly = sp.Poly(list(reversed([c % 2 for c in coeffs_low_first])), _x, modulus=2)
    shape: dict[int, int] = {}
    for fac, exp in poly.factor_list()[1]:
        assert exp == 1, "oracle expects squarefree input"
        deg = fac.degree()
        shape[deg] = shape.get(deg, 0) + 1
    return sorted(shape.items())


def weierstrass_c4_delta(A: CycInt, B: CycInt) -> tuple[CycInt, CycInt]:
    """c4 and Delta of Y^2 = X(X-A)(X+B) from the generic b-invariant
    formulas (a2 = B - A, a4 = -AB, other a_i = 0)."""
    b2 = 4 * (B - A)
    b4 = -2 * (A * B)
    b8 = -(A * A * B * B)
    c4 = b2 * b2 - 24 * b4
    delta = -(b2 * b2 * b8) - 8 * (b4 * b4 * b4)
    return c4, delta


# -- analytic relative class number -------------------------------------------


def h_minus_analytic(r: int) -> int:
    """h_r^- by the analytic formula 2r * prod_{chi odd} (-B_{1,chi}/2),
    evaluated exactly in Q(zeta_{r-1}) with Fraction arithmetic."""
    m = r - 1
    phi = sp.Poly(sp.cyclotomic_poly(m, _x), _x)
    phic = [Fraction(int(c)) for c in reversed(phi.all_coeffs())]
    deg = len(phic) - 1

    def reduce_mod_phi(vec):
        v = list(vec) + [Fraction(0)] * max(0, deg - len(vec))
        for i in range(len(v) - 1, deg - 1, -1):
            c = v[i]
            if c:
                v[i] = Fraction(0)
                for j in range(deg):
                    v[i - deg + j] -= c * phic[j]
        return v[:deg]

    def mul(a, b):
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return reduce_mod_phi(prod)

    g = int(sp.primitive_root(r))
    ind = {}
    val = 1
    for k in range(m):
        ind[val] = k
        val = val * g % r
    acc = [Fraction(0)] * deg
    acc[0] = Fraction(2 * r)
    for j in range(1, m, 2):  # chi_j odd exactly for odd j
        bern = [Fraction(0)] * m
        for a in range(1, r):
            bern[(j * ind[a]) % m] += Fraction(a, r)
        bern = reduce_mod_phi(bern)
        acc = mul(acc, [-(c / 2) for c in bern])
    assert all(c == 0 for c in acc[1:]), "product did not land in Q"
    assert acc[0].denominator == 1, "h^- came out non-integral"
    return int(acc[0])


# -- global splitting oracle for the quadratic tower --------------------------


def quad_tower_splitting(d: int, r: int) -> list[tuple[int, int]] | None:
    """Splitting of 2 in Q(sqrt(d), theta_r) read from the factorization of
    the minimal polynomial of theta + w mod 2 (w = sqrt(d), or (1+sqrt(d))/2
    when d = 1 mod 4 so that the order has a chance of being 2-maximal),
    certified by Dedekind's criterion at 2.  Returns None when the
    certificate does not apply (reducible minimal polynomial or 2 dividing
    the index)."""
    from rrpfermat.cycfield import build_field

    field = build_field(r)
    psi_y = sp.Poly(list(reversed(field.psi)), _y)
    if d % 4 == 1:
        # w = (1 + sqrt(d))/2 has minimal polynomial z^2 - z + (1-d)/4
        quad = (_x - _y) ** 2 - (_x - _y) + (1 - d) // 4
    else:
        quad = (_x - _y) ** 2 - d
    # P(x) = Res_y(psi(y), quad(x - y)) = prod_i quad evaluated at theta_i
    P = sp.Poly(sp.resultant(psi_y.as_expr(), quad, _y), _x)
    if P.LC() < 0:
        P = -P
    assert P.degree() == r - 1
    if not P.is_irreducible:
        return None
    Pbar = sp.Poly(P, _x, modulus=2)
    factors = Pbar.factor_list()[1]
    # Dedekind at 2: with Pbar = prod gbar_i^e_i, g = prod g_i, h = P/g lifted,
    # F = (g*h - P)/2; 2 does not divide the index iff gcd(Fbar, gbar, hbar) = 1.
    gbar = sp.Poly(1, _x, modulus=2)
    hbar = sp.Poly(1, _x, modulus=2)
    for fac, exp in factors:
        gbar = gbar * fac
        hbar = hbar * fac ** (exp - 1)
    g_lift = sp.Poly(gbar.all_coeffs(), _x)
    h_lift = sp.Poly(hbar.all_coeffs(), _x)
    F2 = g_lift * h_lift - P
    F = sp.Poly([c // 2 for c in F2.all_coeffs()] or [0], _x)
    assert (2 * F - F2).is_zero
    Fbar = sp.Poly(F, _x, modulus=2)
    gcd_all = sp.gcd(sp.gcd(Fbar, gbar), hbar)
    if gcd_all.degree() > 0:
        return None
    return sorted((exp, fac.degree()) for fac, exp in factors)
