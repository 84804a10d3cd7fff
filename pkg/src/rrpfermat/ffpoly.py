"""Polynomials over GF(2) and the fields GF(2^f), as bit-packed integers.

A polynomial is an int whose bit i is the coefficient of x^i.  Only the
distinct-degree stage of factorization is implemented: splitting types need
factor degrees and counts, never the factors themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSquarefreeError

X = 0b10  # the polynomial x


def f2_degree(p: int) -> int:
    """Degree; -1 for the zero polynomial."""
    return p.bit_length() - 1


def f2_mul(a: int, b: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = f2_degree(b)
    q = 0
    while f2_degree(a) >= db:
        shift = f2_degree(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def f2_mod(a: int, b: int) -> int:
    return f2_divmod(a, b)[1]


def f2_mulmod(a: int, b: int, m: int) -> int:
    return f2_mod(f2_mul(a, b), m)


def f2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, f2_mod(a, b)
    return a


def f2_derivative(p: int) -> int:
    """Formal derivative in characteristic 2: only odd-degree terms survive."""
    d = 0
    i = 1
    while p >> i:
        if (p >> i) & 1:
            d |= 1 << (i - 1)
        i += 2
    return d


def f2_powmod(a: int, e: int, m: int) -> int:
    acc = 1
    a = f2_mod(a, m)
    while e:
        if e & 1:
            acc = f2_mulmod(acc, a, m)
        a = f2_mulmod(a, a, m)
        e >>= 1
    return acc


def is_irreducible(p: int) -> bool:
    """Rabin's test: x^(2^n) = x mod p, and x^(2^(n/q)) - x coprime to p for
    each prime q | n."""
    n = f2_degree(p)
    if n <= 0:
        return False
    if n == 1:
        return True
    h = X
    for _ in range(n):
        h = f2_mulmod(h, h, p)
    if h != f2_mod(X, p):
        return False
    for q in _prime_divisors(n):
        h = X
        for _ in range(n // q):
            h = f2_mulmod(h, h, p)
        if f2_gcd(p, h ^ X) != 1:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def least_irreducible(f: int) -> int:
    """The irreducible monic degree-f polynomial with the smallest bit
    encoding; deterministic so residue-field reports are reproducible."""
    if f < 1:
        raise ValueError("degree must be >= 1")
    for cand in range(1 << f, 1 << (f + 1)):
        if is_irreducible(cand):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


def ddf_degrees(p: int) -> list[tuple[int, int]]:
    """Distinct-degree factorization shape of a squarefree p over GF(2).

    Returns a sorted list of (degree, count) pairs: p has `count` distinct
    irreducible factors of each listed degree, and sum(degree * count)
    equals deg p.  Raises NotSquarefreeError when gcd(p, p') != 1.
    """
    if f2_degree(p) < 1:
        raise ValueError("polynomial must have degree >= 1")
    if f2_gcd(p, f2_derivative(p)) != 1:
        raise NotSquarefreeError("input polynomial is not squarefree over GF(2)")
    out = []
    rest = p
    h = f2_mod(X, rest)
    i = 1
    while f2_degree(rest) >= 2 * i:
        h = f2_mulmod(h, h, rest)  # h = x^(2^i) mod rest
        g = f2_gcd(rest, h ^ f2_mod(X, rest))
        if g != 1:
            out.append((i, f2_degree(g) // i))
            rest = f2_divmod(rest, g)[0]
            h = f2_mod(h, rest)
        i += 1
    if f2_degree(rest) > 0:
        out.append((f2_degree(rest), 1))
    return sorted(out)


# -- GF(2^f) -------------------------------------------------------------


class F2Field:
    """GF(2^f) = GF(2)[t]/(m), m irreducible of degree f.

    When no modulus is given the deterministic least_irreducible(f) is used.
    """

    __slots__ = ("f", "modulus")

    def __init__(self, f: int, modulus: int | None = None):
        if modulus is None:
            modulus = least_irreducible(f)
        if f2_degree(modulus) != f:
            raise ValueError("modulus degree mismatch")
        if not is_irreducible(modulus):
            raise ValueError("modulus is reducible over GF(2)")
        self.f = f
        self.modulus = modulus

    def elem(self, bits: int) -> "F2fElem":
        return F2fElem(self, f2_mod(bits, self.modulus))

    @property
    def zero(self) -> "F2fElem":
        return F2fElem(self, 0)

    @property
    def one(self) -> "F2fElem":
        return F2fElem(self, 1)

    def mul_bits(self, a: int, b: int) -> int:
        return f2_mulmod(a, b, self.modulus)

    def inv_bits(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^f)")
        # a^(2^f - 2); f is small so square-and-multiply is plenty.
        return f2_powmod(a, (1 << self.f) - 2, self.modulus)

    def elements(self):
        for bits in range(1 << self.f):
            yield F2fElem(self, bits)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, F2Field)
            and other.f == self.f
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("F2Field", self.f, self.modulus))

    def __repr__(self) -> str:
        return f"F2Field(f={self.f}, modulus={bin(self.modulus)})"


@dataclass(frozen=True)
class F2fElem:
    field: F2Field
    bits: int

    def __add__(self, other: "F2fElem") -> "F2fElem":
        self._check(other)
        return F2fElem(self.field, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "F2fElem") -> "F2fElem":
        self._check(other)
        return F2fElem(self.field, self.field.mul_bits(self.bits, other.bits))

    def __pow__(self, e: int) -> "F2fElem":
        return F2fElem(self.field, f2_powmod(self.bits, e, self.field.modulus))

    def inverse(self) -> "F2fElem":
        return F2fElem(self.field, self.field.inv_bits(self.bits))

    def _check(self, other: "F2fElem"):
        if self.field != other.field:
            raise ValueError("mixed GF(2^f) fields")

    def is_zero(self) -> bool:
        return self.bits == 0


def trace_f2f(a: F2fElem) -> int:
    """Absolute trace of GF(2^f) over GF(2), as 0 or 1.

    v^2 + v = c is solvable in GF(2^f) exactly when trace_f2f(c) = 0.
    """
    fld = a.field
    acc = 0
    cur = a.bits
    for _ in range(fld.f):
        acc ^= cur
        cur = fld.mul_bits(cur, cur)
    if acc not in (0, 1):
        raise AssertionError("trace landed outside the prime field")
    return acc


def sqrt_f2f(a: F2fElem) -> F2fElem:
    """The unique square root: squaring is a bijection in characteristic 2,
    with inverse a -> a^(2^(f-1))."""
    cur = a.bits
    for _ in range(a.field.f - 1):
        cur = a.field.mul_bits(cur, cur)
    return F2fElem(a.field, cur)


def artin_schreier_solve(c: F2fElem) -> F2fElem | None:
    """Some v with v^2 + v = c, or None when there is none (trace 1).

    The map v -> v^2 + v is GF(2)-linear with kernel {0, 1}; solve the f x f
    linear system over GF(2) by elimination on bitmask rows.
    """
    fld = c.field
    f = fld.f
    cols = [fld.mul_bits(1 << i, 1 << i) ^ (1 << i) for i in range(f)]
    # Row j: sum_i cols[i][bit j] * v_i = c[bit j].
    rows = []
    for j in range(f):
        mask = 0
        for i in range(f):
            if (cols[i] >> j) & 1:
                mask |= 1 << i
        rows.append([mask, (c.bits >> j) & 1])
    pivot_of = {}
    for row in rows:
        mask, rhs = row
        while mask:
            low = mask & -mask
            i = low.bit_length() - 1
            if i in pivot_of:
                pmask, prhs = pivot_of[i]
                mask ^= pmask
                rhs ^= prhs
            else:
                pivot_of[i] = (mask, rhs)
                break
        else:
            if rhs:
                return None
    # Back-substitute with free variables set to 0.
    sol = 0
    for i in sorted(pivot_of, reverse=True):
        pmask, prhs = pivot_of[i]
        acc = prhs
        rest = pmask & ~(1 << i)
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            acc ^= (sol >> j) & 1
            rest ^= low
        if acc:
            sol |= 1 << i
    v = F2fElem(fld, sol)
    if v * v + v != c:
        raise AssertionError("linear solve produced a non-solution")
    return v
