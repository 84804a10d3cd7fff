"""Exact arithmetic in the real cyclotomic field Q(theta), theta = zeta_r + 1/zeta_r.

For an odd prime r >= 5, theta = zeta_r + zeta_r^-1 generates the maximal
totally real subfield of the r-th cyclotomic field; its minimal polynomial
psi_r is monic of degree d = (r-1)/2.  Writing V_k for the Chebyshev-style
polynomials with V_k(theta) = zeta_r^k + zeta_r^-k (V_0 = 2, V_1 = x,
V_k = x*V_{k-1} - V_{k-2}), folding the identity zeta^-d * Phi_r(zeta) = 0
gives

    psi_r(x) = 1 + V_1(x) + V_2(x) + ... + V_d(x),

computed exactly over Z.  Elements are integer coefficient vectors on the
power basis 1, theta, ..., theta^(d-1).  Z[theta] is the full ring of
integers here (disc(psi_r) is odd, a power of r), so this basis is an
integral basis and all reductions are canonical.

Everything is immutable after construction and every operation is a pure
function, so values can be shared freely across threads.
"""

from __future__ import annotations

from .intlinalg import bareiss_det
from .numutil import is_prime


class RealCyclotomicField:
    """The field Q(theta) for a fixed odd prime r >= 5.

    Attributes:
        r: the prime.
        degree: d = (r-1)/2.
        psi: minimal polynomial of theta as a tuple of d+1 integers,
             constant term first, leading coefficient 1.
    """

    __slots__ = ("r", "degree", "psi", "_power_sums")

    def __init__(self, r: int):
        if r < 5 or not is_prime(r):
            raise ValueError(f"r = {r} must be a prime >= 5")
        self.r = r
        self.degree = (r - 1) // 2
        self.psi = self._minimal_polynomial(self.degree)
        # zeta^k + zeta^-k in the theta basis, grown on demand (append-only).
        self._power_sums: list[CycInt] = []

    @staticmethod
    def _minimal_polynomial(d: int) -> tuple[int, ...]:
        acc = [1] + [0] * d
        v_prev = [2]
        v_cur = [0, 1]
        for _ in range(d):
            for i, c in enumerate(v_cur):
                acc[i] += c
            v_next = [0] + v_cur  # x * V_k
            for i, c in enumerate(v_prev):
                v_next[i] -= c
            v_prev, v_cur = v_cur, v_next
        return tuple(acc)

    # -- element constructors ------------------------------------------------

    def element(self, coeffs) -> "CycInt":
        """CycInt from an int or any iterable of ints (reduced mod psi if
        longer than the degree)."""
        if isinstance(coeffs, CycInt):
            if coeffs.field != self:
                raise ValueError("element belongs to a different field")
            return coeffs
        if isinstance(coeffs, int):
            vec = [coeffs] + [0] * (self.degree - 1)
            return CycInt(self, tuple(vec))
        vec = list(coeffs)
        if any(not isinstance(c, int) for c in vec):
            raise TypeError("coefficients must be integers")
        if len(vec) > self.degree:
            vec = list(self.reduce(vec))
        vec += [0] * (self.degree - len(vec))
        return CycInt(self, tuple(vec))

    @property
    def zero(self) -> "CycInt":
        return self.element(0)

    @property
    def one(self) -> "CycInt":
        return self.element(1)

    @property
    def theta(self) -> "CycInt":
        return self.element([0, 1])

    def reduce(self, vec) -> tuple[int, ...]:
        """Reduce an integer coefficient vector modulo the monic psi."""
        v = list(vec)
        d = self.degree
        psi = self.psi
        for i in range(len(v) - 1, d - 1, -1):
            c = v[i]
            if c:
                v[i] = 0
                base = i - d
                for j in range(d):
                    v[base + j] -= c * psi[j]
        v = v[:d]
        v += [0] * (d - len(v))
        return tuple(v)

    def theta_power_sum(self, k: int) -> "CycInt":
        """zeta_r^k + zeta_r^-k in the theta basis, 0 <= k <= r-1.

        Uses the three-term recurrence s(k) = theta*s(k-1) - s(k-2) with
        s(0) = 2, s(1) = theta; results are memoized per field.
        """
        if not 0 <= k <= self.r - 1:
            raise ValueError(f"k = {k} out of range 0..{self.r - 1}")
        memo = self._power_sums
        if not memo:
            memo.append(self.element(2))
            if self.degree >= 1:
                memo.append(self.theta)
        while len(memo) <= k:
            memo.append(self.theta * memo[-1] - memo[-2])
        return memo[k]

    def pi_r(self) -> "CycInt":
        """theta - 2, the uniformizer of the unique (totally ramified) prime
        above r."""
        return self.theta - 2

    def norm(self, a) -> int:
        """Norm from Q(theta) down to Q, as the exact determinant of the
        multiplication-by-a matrix on the power basis.  Multiplicative."""
        a = self.element(a)
        if a.is_zero():
            return 0
        rows = []
        cur = a
        for _ in range(self.degree):
            rows.append(list(cur.coeffs))
            cur = cur * self.theta
        return bareiss_det(rows)

    def __repr__(self) -> str:
        return f"RealCyclotomicField(r={self.r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RealCyclotomicField) and other.r == self.r

    def __hash__(self) -> int:
        return hash(("RealCyclotomicField", self.r))


class CycInt:
    """An algebraic integer of Q(theta) as an integer vector on the power
    basis 1, theta, ..., theta^(d-1).  Immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: RealCyclotomicField, coeffs: tuple[int, ...]):
        if len(coeffs) != field.degree:
            raise ValueError("coefficient vector has wrong length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("CycInt is immutable")

    def _coerce(self, other) -> "CycInt | None":
        if isinstance(other, CycInt):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycInt(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        d = self.field.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycInt(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field.element(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.r, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def norm(self) -> int:
        return self.field.norm(self)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            else:
                unit = "theta" if i == 1 else f"theta^{i}"
                if c == 1:
                    terms.append(unit)
                elif c == -1:
                    terms.append(f"-{unit}")
                else:
                    terms.append(f"{c}*{unit}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"CycInt({body})"


# -- module-level operations -------------------------------------------------


def build_field(r: int) -> RealCyclotomicField:
    """Field of theta = zeta_r + zeta_r^-1 for a prime r >= 5."""
    return RealCyclotomicField(r)


def theta_power_sum(field: RealCyclotomicField, k: int) -> CycInt:
    return field.theta_power_sum(k)


def pi_r(field: RealCyclotomicField) -> CycInt:
    return field.pi_r()


def norm(field: RealCyclotomicField, a) -> int:
    return field.norm(a)


def f_k_eval(field: RealCyclotomicField, k: int, x, y) -> CycInt:
    """The quadratic form f_k(x, y) = x^2 + (zeta^k + zeta^-k) x y + y^2 for
    1 <= k <= (r-1)/2, and f_0(x, y) = (x + y)^2.

    These are the degree-two factors of x^r + y^r over Q(theta):
    f_0 * prod_{k>=1} f_k = (x + y) * (x^r + y^r).
    """
    x = field.element(x)
    y = field.element(y)
    if k == 0:
        s = x + y
        return s * s
    if not 1 <= k <= field.degree:
        raise ValueError(f"k = {k} out of range 0..{field.degree}")
    return x * x + field.theta_power_sum(k) * x * y + y * y


def phi_r_eval(field: RealCyclotomicField, x, y) -> CycInt:
    """(x^r + y^r)/(x + y) in polynomial form: the alternating sum
    sum_{i=0}^{r-1} (-1)^i x^(r-1-i) y^i, defined for every x, y."""
    x = field.element(x)
    y = field.element(y)
    # r is small, so the straightforward sum of monomials is fine.
    acc = field.zero
    xp = [field.one]
    yp = [field.one]
    for _ in range(field.r - 1):
        xp.append(xp[-1] * x)
        yp.append(yp[-1] * y)
    for i in range(field.r):
        term = xp[field.r - 1 - i] * yp[i]
        acc = acc - term if i % 2 else acc + term
    return acc


def alpha_beta_gamma(field: RealCyclotomicField, k1: int, k2: int, k3: int):
    """Coefficients (alpha, beta, gamma) with
    alpha*f_{k1} + beta*f_{k2} + gamma*f_{k3} = 0 identically in x, y.

    With s(k) = zeta^k + zeta^-k these are the symmetric differences
    alpha = s(k3) - s(k2), beta = s(k1) - s(k3), gamma = s(k2) - s(k1);
    they telescope to alpha + beta + gamma = 0 and each has norm equal to
    plus or minus a power of r.
    """
    ks = (k1, k2, k3)
    if len(set(ks)) != 3:
        raise ValueError(f"indices {ks} must be distinct")
    for k in ks:
        if not 0 <= k <= field.degree:
            raise ValueError(f"index {k} out of range 0..{field.degree}")
    s1, s2, s3 = (field.theta_power_sum(k) for k in ks)
    return (s3 - s2, s1 - s3, s2 - s1)


def reduce_mod(a: CycInt, m: int) -> tuple[int, ...]:
    """Componentwise reduction of the coefficient vector mod m; the induced
    map is the ring homomorphism onto (Z/m)[x]/(psi_r mod m)."""
    if m < 2:
        raise ValueError(f"modulus m = {m} must be >= 2")
    return tuple(c % m for c in a.coeffs)
