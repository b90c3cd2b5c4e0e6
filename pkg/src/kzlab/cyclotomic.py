"""Exact arithmetic in cyclotomic fields.

A :class:`CyclotomicNumber` is an element of Q(zeta_N) stored as rational
coefficients over the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced mod
the N-th cyclotomic polynomial.  Representations are canonical: every value
is eagerly demoted to the smallest cyclotomic field containing it (conductor
1 or N with N % 4 != 2), so equal values always have identical
(conductor, coeffs) data and hash alike.  That canonical hashing is what
makes exact group enumeration by closure possible.

Only field operations, conjugation, equality/hashing and a float embedding
are provided; no root finding, no symbolic simplification.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import InexactInput

try:  # pragma: no cover - exercised implicitly when gmpy2 is present
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_ZERO = _Q(0)
_ONE = _Q(1)
_RATIONAL_TYPES = (int, Fraction, type(_Q(0)))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_quotient(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact long division of integer polynomials (coefficients low -> high),
    # divisor monic; remainder must vanish.
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - dn, 0, -1):
        c = num[i + dn - 1]
        out[i - 1] = c
        if c:
            for j in range(dn + 1):
                num[i - 1 + j] -= c * den[j]
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low -> high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        poly = _poly_quotient(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    # Row j-deg = integer coefficients of x^j mod Phi_n, for deg <= j < n.
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    base = tuple(-c for c in phi[:deg])  # x^deg mod Phi_n
    rows = [base]
    cur = list(base)
    for _ in range(deg + 1, n):
        top = cur[deg - 1]
        cur = [0] + cur[: deg - 1]
        if top:
            for i in range(deg):
                cur[i] += top * base[i]
        rows.append(tuple(cur))
    return tuple(rows)


def _invert_matrix(rows):
    # Gauss-Jordan inverse of a small exact matrix (list of row tuples).
    size = len(rows)
    aug = [[_Q(x) for x in row] + [_ONE if i == j else _ZERO for j in range(size)]
           for i, row in enumerate(rows)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = _ONE / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[size:]) for row in aug)


@lru_cache(maxsize=None)
def _subfield_solver(n: int, m: int):
    # Data for testing membership of Q(zeta_n) elements in Q(zeta_m), m | n:
    # columns of the embedding matrix B, a set of phi(m) independent rows,
    # and the exact inverse of that square block.
    deg_n, deg_m = _degree(n), _degree(m)
    table = _reduction_table(n)
    step = n // m
    cols = []
    for j in range(deg_m):
        e = (j * step) % n
        if e < deg_n:
            vec = tuple(1 if i == e else 0 for i in range(deg_n))
        else:
            vec = table[e - deg_n]
        cols.append(vec)
    rows_idx: list[int] = []
    pivots: dict[int, list] = {}  # lead index -> fully reduced row
    for i in range(deg_n):
        row = [_Q(cols[j][i]) for j in range(deg_m)]
        for lead, prow in pivots.items():
            if row[lead] != 0:
                f = row[lead]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((k for k, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        inv_l = _ONE / row[lead]
        row = [x * inv_l for x in row]
        for prow in pivots.values():
            if prow[lead] != 0:
                f = prow[lead]
                prow[:] = [x - f * y for x, y in zip(prow, row)]
        pivots[lead] = row
        rows_idx.append(i)
        if len(rows_idx) == deg_m:
            break
    square = [tuple(cols[j][i] for j in range(deg_m)) for i in rows_idx]
    return tuple(rows_idx), _invert_matrix(square), tuple(cols)


def _try_demote(n: int, m: int, coeffs):
    rows_idx, inv, cols = _subfield_solver(n, m)
    deg_m = len(rows_idx)
    picked = [coeffs[i] for i in rows_idx]
    y = [sum((inv[i][k] * picked[k] for k in range(deg_m)), _ZERO)
         for i in range(deg_m)]
    for i in range(len(coeffs)):
        if sum((cols[j][i] * y[j] for j in range(deg_m)), _ZERO) != coeffs[i]:
            return None
    return tuple(y)


def _canonical_divisors(n: int) -> list[int]:
    return [m for m in _divisors(n)[:-1] if m == 1 or m % 4 != 2]


def _canonicalize(n: int, dense) -> tuple[int, tuple]:
    """Reduce a dense exponent vector at conductor n to canonical form."""
    while n % 4 == 2:
        # zeta_{2m} = -zeta_m^((m+1)/2) for odd m: rewrite and halve.
        m = n // 2
        half = (m + 1) // 2
        out = [_ZERO] * m
        for j, c in enumerate(dense):
            if c:
                out[(j * half) % m] += -c if j % 2 else c
        n, dense = m, out
    if n == 1:
        return 1, (dense[0] + _ZERO,)
    deg = _degree(n)
    table = _reduction_table(n)
    out = [dense[i] + _ZERO for i in range(deg)]
    for j in range(deg, n):
        c = dense[j]
        if c:
            row = table[j - deg]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    support = [j for j, c in enumerate(out) if c]
    if not support:
        return 1, (_ZERO,)
    if support == [0]:
        return 1, (out[0],)
    t = gcd(n, *support)
    if t > 1:
        packed = [_ZERO] * (n // t)
        for j in support:
            packed[j // t] = out[j]
        return _canonicalize(n // t, packed)
    for m in _canonical_divisors(n):
        if m == 1:
            continue  # handled by the support check above
        y = _try_demote(n, m, out)
        if y is not None:
            return m, y
    return n, tuple(out)


@lru_cache(maxsize=None)
def _mul_cached(n1, c1, n2, c2):
    L = lcm(n1, n2)
    s1, s2 = L // n1, L // n2
    dense = [_ZERO] * L
    for i, a in enumerate(c1):
        if a:
            for j, b in enumerate(c2):
                if b:
                    dense[(i * s1 + j * s2) % L] += a * b
    return _canonicalize(L, dense)


@lru_cache(maxsize=None)
def _complex_basis(n: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(_degree(n)))


def _poly_ext_gcd(a, b):
    # Extended gcd over rational polynomials (lists, low -> high); returns
    # (g, u, v) with u*a + v*b = g.  Trailing zeros trimmed throughout.
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def polydiv(p, q):
        p = list(p)
        qd, qlead = len(q) - 1, q[-1]
        quot = [_ZERO] * max(len(p) - qd, 0)
        for i in range(len(p) - qd, 0, -1):
            c = p[i + qd - 1] / qlead
            quot[i - 1] = c
            if c:
                for j in range(qd + 1):
                    p[i - 1 + j] -= c * q[j]
        return quot, trim(p)

    r0, r1 = trim(list(a)), trim(list(b))
    u0, u1 = [_ONE], []
    v0, v1 = [], [_ONE]

    def sub_mul(x, q, y):  # x - q*y
        out = list(x) + [_ZERO] * max(len(q) + len(y) - 1 - len(x), 0)
        for i, qc in enumerate(q):
            if qc:
                for j, yc in enumerate(y):
                    out[i + j] -= qc * yc
        return trim(out)

    while r1:
        q, r = polydiv(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub_mul(u0, q, u1)
        v0, v1 = v1, sub_mul(v0, q, v1)
    return r0, u0, v0


def _coerce_rational(value):
    if isinstance(value, bool):
        raise InexactInput("boolean is not a number")
    if isinstance(value, float):
        raise InexactInput("floats are rejected; pass an exact rational")
    if isinstance(value, _RATIONAL_TYPES) or isinstance(value, str):
        return _Q(value)
    raise InexactInput(f"cannot interpret {value!r} as an exact rational")


class CyclotomicNumber:
    """Immutable element of a cyclotomic field in canonical reduced form."""

    __slots__ = ("_n", "_c", "_hash")

    def __init__(self, value=0):
        if isinstance(value, CyclotomicNumber):
            n, c = value._n, value._c
        else:
            n, c = 1, (_coerce_rational(value),)
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_hash", hash((n, c)))

    @classmethod
    def _raw(cls, n: int, coeffs: tuple) -> "CyclotomicNumber":
        self = object.__new__(cls)
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_c", coeffs)
        object.__setattr__(self, "_hash", hash((n, coeffs)))
        return self

    def __setattr__(self, *_):
        raise AttributeError("CyclotomicNumber is immutable")

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple:
        return self._c

    def is_rational(self) -> bool:
        return self._n == 1

    def rational_value(self) -> Fraction:
        if self._n != 1:
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._c[0])

    def is_zero(self) -> bool:
        return self._n == 1 and self._c[0] == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations ------------------------------------------------

    def _dense_at(self, L: int):
        step = L // self._n
        dense = [_ZERO] * L
        for j, c in enumerate(self._c):
            if c:
                dense[(j * step) % L] += c
        return dense

    def __add__(self, other):
        other = _as_cyclotomic(other)
        if other is NotImplemented:
            return other
        if self._n == 1 and other._n == 1:
            return CyclotomicNumber._raw(1, (self._c[0] + other._c[0],))
        if self._n == other._n:
            n = self._n
            dense = [a + b for a, b in zip(self._c, other._c)]
            dense += [_ZERO] * (n - len(dense))
            return CyclotomicNumber._raw(*_canonicalize(n, dense))
        L = lcm(self._n, other._n)
        dense = self._dense_at(L)
        for j, c in enumerate(other._dense_at(L)):
            if c:
                dense[j] += c
        return CyclotomicNumber._raw(*_canonicalize(L, dense))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self._n, tuple(-c for c in self._c))

    def __sub__(self, other):
        other = _as_cyclotomic(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_cyclotomic(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _as_cyclotomic(other)
        if other is NotImplemented:
            return other
        if self._n == 1:
            q = self._c[0]
            if q == 0:
                return CyclotomicNumber._raw(1, (_ZERO,))
            return CyclotomicNumber._raw(other._n, tuple(q * c for c in other._c))
        if other._n == 1:
            q = other._c[0]
            if q == 0:
                return CyclotomicNumber._raw(1, (_ZERO,))
            return CyclotomicNumber._raw(self._n, tuple(q * c for c in self._c))
        return CyclotomicNumber._raw(*_mul_cached(self._n, self._c, other._n, other._c))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self._n == 1:
            if self._c[0] == 0:
                raise ZeroDivisionError("inverse of zero")
            return CyclotomicNumber._raw(1, (_ONE / self._c[0],))
        phi = [_Q(c) for c in cyclotomic_polynomial(self._n)]
        g, u, _ = _poly_ext_gcd(list(self._c), phi)
        assert len(g) == 1  # Phi_n is irreducible, so the gcd is a constant
        scale = _ONE / g[0]
        deg = _degree(self._n)
        coeffs = tuple(u[i] * scale if i < len(u) else _ZERO for i in range(deg))
        # the inverse lives in the same (minimal) field, so no demotion scan
        return CyclotomicNumber._raw(self._n, coeffs)

    def __truediv__(self, other):
        other = _as_cyclotomic(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_cyclotomic(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = CyclotomicNumber._raw(1, (_ONE,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "CyclotomicNumber":
        """Complex conjugate: the Galois map zeta_N -> zeta_N^(N-1)."""
        n = self._n
        if n == 1:
            return self
        dense = [_ZERO] * n
        for j, c in enumerate(self._c):
            if c:
                dense[(n - j) % n] += c
        deg = _degree(n)
        table = _reduction_table(n)
        out = [dense[i] for i in range(deg)]
        for j in range(deg, n):
            c = dense[j]
            if c:
                row = table[j - deg]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        # conjugation preserves the minimal conductor, so skip the demotion scan
        return CyclotomicNumber._raw(n, tuple(out))

    def real_part(self) -> "CyclotomicNumber":
        return (self + self.conj()) * _HALF_CYC

    def imag_part(self) -> "CyclotomicNumber":
        # (x - conj(x)) / (2i), a real cyclotomic number
        return (self - self.conj()) * _NEG_HALF_I

    # -- embeddings and views --------------------------------------------

    def approx_complex(self) -> complex:
        basis = _complex_basis(self._n)
        return sum((float(c) * basis[j] for j, c in enumerate(self._c) if c),
                   complex(0))

    def __complex__(self) -> complex:
        return self.approx_complex()

    def __eq__(self, other):
        other = _as_cyclotomic(other)
        if other is NotImplemented:
            return other
        return self._n == other._n and self._c == other._c

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self._n == 1:
            return f"Cyc({self._c[0]})"
        terms = " ".join(f"{'+' if c > 0 else '-'} {abs(c)}*z^{j}"
                         for j, c in enumerate(self._c) if c)
        return f"Cyc[{self._n}]({terms})"

    def to_json_dict(self) -> dict:
        return {"conductor": self._n, "coeffs": [str(c) for c in self._c]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "CyclotomicNumber":
        n = int(data["conductor"])
        dense = [_ZERO] * max(n, 1)
        for j, s in enumerate(data["coeffs"]):
            dense[j] = _Q(s)
        return cls._raw(*_canonicalize(n, dense))


def _as_cyclotomic(value):
    if isinstance(value, CyclotomicNumber):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        return NotImplemented
    if isinstance(value, _RATIONAL_TYPES):
        return CyclotomicNumber._raw(1, (_Q(value),))
    return NotImplemented


ZERO = CyclotomicNumber(0)
ONE = CyclotomicNumber(1)
_HALF_CYC = CyclotomicNumber._raw(1, (_Q(1, 2),))


def root_of_unity(order: int, power: int = 1) -> CyclotomicNumber:
    """exp(2*pi*i*power/order) as an exact cyclotomic number."""
    if order < 1:
        raise ValueError("order must be positive")
    power %= order
    dense = [_ZERO] * order
    dense[power] = _ONE
    return CyclotomicNumber._raw(*_canonicalize(order, dense))


_I = root_of_unity(4, 1)
_NEG_HALF_I = -_I * _HALF_CYC


def approx_complex(x: CyclotomicNumber) -> complex:
    return x.approx_complex()


@dataclass(frozen=True)
class AlphaParam:
    """A rational angle parameter alpha in (0, 1/2).

    rho = exp(2*pi*i*alpha) and zeta = rho^(-1) are exact roots of unity;
    ``conductor`` is the smallest N with N*alpha integral, i.e. the
    denominator of alpha in lowest terms.
    """

    alpha: Fraction
    conductor: int
    rho: CyclotomicNumber
    zeta: CyclotomicNumber

    @classmethod
    def make(cls, alpha) -> "AlphaParam":
        if isinstance(alpha, AlphaParam):
            return alpha
        if isinstance(alpha, tuple):
            alpha = Fraction(*alpha)
        else:
            alpha = Fraction(_coerce_rational(alpha))
        if not Fraction(0) < alpha < Fraction(1, 2):
            raise ValueError(f"alpha={alpha} outside the open interval (0, 1/2)")
        b = alpha.denominator
        rho = root_of_unity(b, alpha.numerator)
        return cls(alpha=alpha, conductor=b, rho=rho, zeta=rho.conj())

    @classmethod
    def from_rk(cls, r: int, k: int) -> "AlphaParam":
        return cls.make(Fraction(r, 2 * k))

    def __str__(self):
        return f"{self.alpha.numerator}/{self.alpha.denominator}"
