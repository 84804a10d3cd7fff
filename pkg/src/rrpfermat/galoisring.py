"""Galois rings GR(2^n, f) = (Z/2^n)[t]/(m(t)), m irreducible mod 2.

These model O/P^n at an unramified prime P above 2 (residue degree f).  The
main operation is the unit square root: in an unramified 2-adic ring a unit
u is a square exactly when two finite obstructions vanish, one mod 4 and one
mod 8 (an Artin-Schreier trace condition); beyond mod 8 Hensel lifting is
unobstructed.  That yields an exact decision procedure for congruences
u = v^2 mod P^n once n >= 3.

For the field Q(zeta_r + 1/zeta_r) with 2 inert, O/2^n O is GR(2^n, (r-1)/2)
with modulus psi_r mod 2^n; this identification uses that Z[theta] is the
full ring of integers (odd discriminant), which holds for every prime r here.
"""

from __future__ import annotations

from .cycfield import RealCyclotomicField
from .errors import ConsistencyError, NonUnitError, NotInertError, PrecisionError
from .ffpoly import F2Field, F2fElem, artin_schreier_solve, ddf_degrees, sqrt_f2f, trace_f2f


class GaloisRing:
    """GR(2^n, f) with a fixed monic modulus, irreducible mod 2."""

    __slots__ = ("n", "f", "modulus", "mask", "residue_field")

    def __init__(self, n: int, modulus_coeffs) -> None:
        if n < 1:
            raise ValueError("precision exponent n must be >= 1")
        mod = [c % (1 << n) for c in modulus_coeffs]
        if not mod or mod[-1] != 1:
            raise ValueError("modulus must be monic")
        f = len(mod) - 1
        if f < 1:
            raise ValueError("modulus must have degree >= 1")
        bits = 0
        for i, c in enumerate(mod):
            if c & 1:
                bits |= 1 << i
        self.residue_field = F2Field(f, bits)  # raises if reducible mod 2
        self.n = n
        self.f = f
        self.modulus = tuple(mod)
        self.mask = 1 << n

    # -- element plumbing --------------------------------------------------

    def elem(self, coeffs) -> "GaloisRingElem":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        vec = [c % self.mask for c in coeffs]
        if len(vec) > self.f:
            vec = self._reduce(vec)
        vec += [0] * (self.f - len(vec))
        return GaloisRingElem(self, tuple(vec))

    @property
    def zero(self) -> "GaloisRingElem":
        return self.elem(0)

    @property
    def one(self) -> "GaloisRingElem":
        return self.elem(1)

    def _reduce(self, vec: list[int]) -> list[int]:
        mod = self.modulus
        f = self.f
        v = [c % self.mask for c in vec]
        for i in range(len(v) - 1, f - 1, -1):
            c = v[i]
            if c:
                v[i] = 0
                base = i - f
                for j in range(f):
                    v[base + j] = (v[base + j] - c * mod[j]) % self.mask
        return v[:f]

    def residue(self, a: "GaloisRingElem") -> F2fElem:
        bits = 0
        for i, c in enumerate(a.coeffs):
            if c & 1:
                bits |= 1 << i
        return F2fElem(self.residue_field, bits)

    def lift(self, b: F2fElem) -> "GaloisRingElem":
        return self.elem([(b.bits >> i) & 1 for i in range(self.f)])

    def exact_div_pow2(self, a: "GaloisRingElem", k: int) -> "GaloisRingElem":
        """Divide every coefficient by 2^k; the division must be exact."""
        out = []
        for c in a.coeffs:
            if c % (1 << k):
                raise ConsistencyError("coefficient not divisible by 2^k")
            out.append(c >> k)
        return self.elem(out)

    def inverse(self, a: "GaloisRingElem") -> "GaloisRingElem":
        """Inverse of a unit by Newton lifting from the residue field."""
        if not a.is_unit():
            raise NonUnitError("inverse of a non-unit in GR(2^n, f)")
        x = self.lift(self.residue(a).inverse())
        # Each step doubles the 2-adic precision of a*x = 1.
        steps = max(1, (self.n - 1).bit_length())
        for _ in range(steps):
            x = x * (self.elem(2) - a * x)
        if not (a * x == self.one):
            raise ConsistencyError("Newton inversion failed to converge")
        return x

    def elements(self):
        """All 2^(n*f) elements; for exhaustive tests at tiny sizes only."""
        def rec(prefix):
            if len(prefix) == self.f:
                yield GaloisRingElem(self, tuple(prefix))
                return
            for c in range(self.mask):
                yield from rec(prefix + [c])

        yield from rec([])

    def units(self):
        for a in self.elements():
            if a.is_unit():
                yield a

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GaloisRing)
            and other.n == self.n
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("GaloisRing", self.n, self.modulus))

    def __repr__(self) -> str:
        return f"GaloisRing(n={self.n}, f={self.f})"


class GaloisRingElem:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs: tuple[int, ...]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("GaloisRingElem is immutable")

    def _coerce(self, other):
        if isinstance(other, GaloisRingElem):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        if isinstance(other, int):
            return self.ring.elem(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.ring.mask
        return GaloisRingElem(
            self.ring, tuple((a + b) % m for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.ring.mask
        return GaloisRingElem(
            self.ring, tuple((a - b) % m for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        if isinstance(other, int):
            m = self.ring.mask
            return GaloisRingElem(self.ring, tuple((a * other) % m for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.ring.f
        prod = [0] * (2 * f - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(o.coeffs):
                    if bj:
                        prod[i + j] += ai * bj
        return GaloisRingElem(self.ring, tuple(self.ring._reduce(prod)))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.elem(other)
        if not isinstance(other, GaloisRingElem):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.n, self.ring.modulus, self.coeffs))

    def is_unit(self) -> bool:
        return any(c & 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"GaloisRingElem({list(self.coeffs)} mod 2^{self.ring.n})"


def gr_sqrt(u: GaloisRingElem) -> GaloisRingElem | None:
    """Some v with v^2 = u in GR(2^n, f), or None exactly when u is not a
    square.  Requires a unit u and precision n >= 3.

    Stages: unique residue-field root; mod-4 obstruction (the square of any
    lift of the residue root is well defined mod 4); mod-8 Artin-Schreier
    obstruction trace((u/s^2 - 1)/4) = 0; then linear Hensel steps, which
    never obstruct once k >= 3.
    """
    ring = u.ring
    if ring.n < 3:
        raise PrecisionError("square obstructions need precision n >= 3")
    if not u.is_unit():
        raise NonUnitError("gr_sqrt needs a unit")

    s = ring.lift(sqrt_f2f(ring.residue(u)))
    diff = u - s * s
    if any(c % 4 for c in diff.coeffs):
        return None

    w = u * ring.inverse(s) * ring.inverse(s)  # = 1 mod 4
    c_elem = ring.residue(ring.exact_div_pow2(w - ring.one, 2))
    if trace_f2f(c_elem) == 1:
        return None
    v = artin_schreier_solve(c_elem)
    if v is None:
        raise ConsistencyError("trace 0 but no Artin-Schreier solution")
    s = s * (ring.one + 2 * ring.lift(v))  # now s^2 = u mod 8

    for k in range(3, ring.n):
        rem = ring.exact_div_pow2(u - s * s, k)
        t = ring.residue(rem) * ring.residue(s).inverse()
        s = s + (1 << (k - 1)) * ring.lift(t)
    if not (s * s == u):
        raise ConsistencyError("lifted root does not square back to u")
    return s


def is_square_pi_r(field: RealCyclotomicField, n: int = 5) -> bool:
    """Whether pi_r = theta - 2 is a square in O/P^n at the inert prime P
    above 2 (default n = 5, the mod-P^(4e+1) level with e = 1).

    Requires 2 inert in Q(theta); when 2 is not inert the quotient at a
    single prime above 2 is not this Galois ring and the caller must fall
    back to the norm-residue criterion instead.
    """
    psi_mod2 = 0
    for i, c in enumerate(field.psi):
        if c & 1:
            psi_mod2 |= 1 << i
    shape = ddf_degrees(psi_mod2)
    if shape != [(field.degree, 1)]:
        raise NotInertError(
            f"2 is not inert for r = {field.r}: factor shape {shape}"
        )
    ring = GaloisRing(n, field.psi)
    u = ring.elem(list(field.pi_r().coeffs))
    return gr_sqrt(u) is not None
