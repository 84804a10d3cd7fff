"""Decomposition of 2 and r in Q+ = Q(theta) and in the compositum
K+ = Q(sqrt(d), theta).

The decomposition of 2 in Q+ is read off the distinct-degree factorization
of psi_r mod 2 (valid because disc(psi_r) is odd, so 2 is unramified and
Z[theta] is 2-maximal).  For quadratic base fields the compositum is never
analyzed through a global integral basis; instead each prime q of Q+ above 2
contributes a fiber computed locally: q has an unramified local field of
residue degree f, and the quadratic x^2 - d splits, stays inert, or ramifies
over it according to the 2-adic square-class of d, decided with the same
mod-4 / mod-8 (trace) obstructions used by the Galois-ring square root.

The tower rule computes the splitting in the degree-(r-1) etale algebra
Q(sqrt(d)) (x) Q+.  That coincides with the field K+ whenever sqrt(d) is not
already in Q+, i.e. except for d = r = 1 mod 4, a case every criterion below
excludes through r not dividing d.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .cycfield import RealCyclotomicField, build_field
from .errors import NotCoprimeError
from .ffpoly import F2Field, ddf_degrees, trace_f2f
from .numutil import is_prime, is_squarefree, legendre_symbol


@dataclass(frozen=True)
class SplittingReport:
    """Splitting type of a rational prime in a field of given degree.

    primes is a tuple of (ramification index e_i, residue degree f_i);
    the fundamental identity sum(e_i * f_i) = field_degree is enforced on
    construction, and the unique/inert flags are derived, not supplied.
    """

    rational_prime: int
    field_degree: int
    primes: tuple[tuple[int, int], ...]
    unique: bool = dc_field(init=False)
    inert: bool = dc_field(init=False)

    def __post_init__(self):
        total = sum(e * f for e, f in self.primes)
        if total != self.field_degree:
            raise ValueError(
                f"sum(e*f) = {total} != field degree {self.field_degree}"
            )
        unique = len(self.primes) == 1
        object.__setattr__(self, "unique", unique)
        object.__setattr__(
            self,
            "inert",
            unique and self.primes[0] == (1, self.field_degree),
        )

    def to_dict(self) -> dict:
        return {
            "rational_prime": self.rational_prime,
            "field_degree": self.field_degree,
            "primes": [list(p) for p in self.primes],
            "unique": self.unique,
            "inert": self.inert,
        }


def _psi_mod2_bits(fld: RealCyclotomicField) -> int:
    bits = 0
    for i, c in enumerate(fld.psi):
        if c & 1:
            bits |= 1 << i
    return bits


def _as_field(r) -> RealCyclotomicField:
    return r if isinstance(r, RealCyclotomicField) else build_field(r)


def split_2_in_Qplus(r) -> SplittingReport:
    """Decomposition of 2 in Q(theta_r): unramified with residue degrees
    given by the distinct-degree shape of psi_r mod 2."""
    fld = _as_field(r)
    shape = ddf_degrees(_psi_mod2_bits(fld))
    primes = []
    for deg, count in shape:
        primes.extend([(1, deg)] * count)
    return SplittingReport(2, fld.degree, tuple(sorted(primes)))


def _check_quadratic_d(d: int):
    if d <= 0 or d == 1:
        raise ValueError(f"d = {d} must be a squarefree integer > 1")
    if not is_squarefree(d):
        raise ValueError(f"d = {d} is not squarefree")


def split_2_in_quadratic(d: int) -> SplittingReport:
    """Decomposition of 2 in Q(sqrt(d)) by the classical residue table."""
    _check_quadratic_d(d)
    if d % 8 == 1:
        primes = ((1, 1), (1, 1))
    elif d % 8 == 5:
        primes = ((1, 2),)
    else:  # d = 2, 3 mod 4
        primes = ((2, 1),)
    return SplittingReport(2, 2, primes)


def _quadratic_fiber(d: int, f: int) -> tuple[tuple[int, int], ...]:
    """Splitting of x^2 - d over the unramified 2-adic field of residue
    degree f, as (e, residue degree) pairs relative to that base."""
    if d % 2 == 0:
        # v(d) = 1: ramified regardless of the residue field.
        return ((2, f),)
    if d % 4 == 3:
        # The square of any lift of sqrt(d mod 2) = 1 is 1 mod 4 != d:
        # mod-4 obstruction fails for d and for every unit multiple of a
        # square, so the extension is ramified.
        return ((2, f),)
    # d = 1 mod 4: unramified extension; square vs inert by the trace of
    # c = (d - 1)/4 mod 2 in GF(2^f).
    gf = F2Field(f)
    c = gf.one if ((d - 1) // 4) & 1 else gf.zero
    if trace_f2f(c) == 0:
        return ((1, f), (1, f))
    return ((1, 2 * f),)


def split_2_in_Kplus(d: int, r) -> SplittingReport:
    """Decomposition of 2 in K+ = Q(sqrt(d), theta_r) by the local tower
    rule: base step in Q+ (unramified, residue degree f per prime), then the
    quadratic fiber over each of those primes."""
    _check_quadratic_d(d)
    fld = _as_field(r)
    base = split_2_in_Qplus(fld)
    primes: list[tuple[int, int]] = []
    for _, f in base.primes:
        primes.extend(_quadratic_fiber(d, f))
    return SplittingReport(2, 2 * fld.degree, tuple(sorted(primes)))


def split_r_in_Qplus(r) -> SplittingReport:
    """r is totally ramified in Q(theta_r) with uniformizer pi_r = theta - 2;
    cross-checked here through |Norm(pi_r)| = |psi_r(2)| = r."""
    fld = _as_field(r)
    norm_pi = 0
    # psi_r(2) evaluated by Horner equals +-Norm(theta - 2).
    for c in reversed(fld.psi):
        norm_pi = norm_pi * 2 + c
    if abs(norm_pi) != fld.r:
        raise AssertionError(f"|psi_r(2)| = {abs(norm_pi)} != r = {fld.r}")
    return SplittingReport(fld.r, fld.degree, ((fld.degree, 1),))


def check_r_inert_in_quadratic(d: int, r: int) -> bool:
    """Whether r stays prime in Q(sqrt(d)): true exactly when d is a
    quadratic non-residue mod r.  r | d is reported as its own failure, not
    folded into the boolean."""
    if not is_prime(r) or r < 3:
        raise ValueError(f"r = {r} must be an odd prime")
    if d % r == 0:
        raise NotCoprimeError(f"r = {r} divides d = {d}")
    return legendre_symbol(d, r) == -1
