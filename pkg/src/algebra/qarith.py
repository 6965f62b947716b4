# -*- coding: utf-8 -*-
"""
Exact arithmetic in the cyclotomic field Q(e), e a primitive ell-th root of 1,
and the q-combinatorics evaluated at its elements.

An element is stored as its residue modulo the ell-th cyclotomic polynomial:
a tuple of ``Fraction`` coefficients of length phi(ell), lowest degree first.
Canonical residues make equality coefficient-wise.
"""
from fractions import Fraction
from functools import lru_cache

import sympy

from ..errors import DomainError

_X = sympy.Symbol("x")
_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def cyclotomic_coeffs(ell):
    """Integer coefficients of the monic polynomial Phi_ell, lowest degree first."""
    if not isinstance(ell, int) or ell < 1:
        raise DomainError(f"ell must be a positive integer, got {ell!r}")
    poly = sympy.cyclotomic_poly(ell, _X, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _modulus(ell):
    return sympy.Poly(list(reversed(cyclotomic_coeffs(ell))), _X, domain=sympy.QQ)


def _reduce(poly, ell):
    phi = cyclotomic_coeffs(ell)
    deg = len(phi) - 1
    p = list(poly)
    for k in range(len(p) - 1, deg - 1, -1):
        c = p[k]
        if c:
            base = k - deg
            for j in range(deg):
                if phi[j]:
                    p[base + j] -= c * phi[j]
            p[k] = _ZERO
    if len(p) < deg:
        p.extend([_ZERO] * (deg - len(p)))
    return tuple(Fraction(v) for v in p[:deg])


def _check_ell(ell):
    if not isinstance(ell, int) or ell < 3 or ell % 2 == 0:
        raise DomainError(f"ell must be odd and >= 3, got {ell!r}")


class Cyclotomic:
    """Element of Q(e) in canonical reduced form."""

    __slots__ = ("ell", "coeffs")

    def __init__(self, ell, coeffs):
        deg = len(cyclotomic_coeffs(ell)) - 1
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != deg:
            raise DomainError(f"expected {deg} coefficients for ell={ell}, got {len(coeffs)}")
        self.ell = ell
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, ell, coeffs):
        obj = cls.__new__(cls)
        obj.ell = ell
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_int(cls, ell, n):
        deg = len(cyclotomic_coeffs(ell)) - 1
        return cls._raw(ell, (Fraction(n),) + (_ZERO,) * (deg - 1))

    @classmethod
    def zero(cls, ell):
        return cls.from_int(ell, 0)

    @classmethod
    def one(cls, ell):
        return cls.from_int(ell, 1)

    @classmethod
    def from_poly(cls, ell, poly):
        """Reduce an arbitrary coefficient list (lowest degree first) modulo Phi_ell."""
        return cls._raw(ell, _reduce([Fraction(c) for c in poly], ell))

    # ---- coercion ----
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.ell != self.ell:
                raise DomainError(f"mismatched ell: {self.ell} vs {other.ell}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_int(self.ell, other)
        return NotImplemented

    # ---- field operations ----
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic._raw(self.ell, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic._raw(self.ell, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyclotomic._raw(self.ell, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.ell, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [_ZERO] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        return Cyclotomic._raw(self.ell, _reduce(prod, self.ell))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DomainError("division by zero in Q(e)")
        if not any(self.coeffs[1:]):
            c0 = self.coeffs[0]
            return Cyclotomic.from_int(self.ell, _ONE / c0)
        num = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            _X, domain=sympy.QQ,
        )
        inv = num.invert(_modulus(self.ell))
        low_first = [sympy.Rational(c) for c in reversed(inv.all_coeffs())]
        return Cyclotomic.from_poly(self.ell, [Fraction(int(r.p), int(r.q)) for r in low_first])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = Cyclotomic.one(self.ell)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def conjugate(self):
        """Image under the automorphism e -> e^-1."""
        p = [_ZERO] * self.ell
        for k, c in enumerate(self.coeffs):
            p[(-k) % self.ell] += c
        return Cyclotomic.from_poly(self.ell, p)

    # ---- predicates ----
    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ell, self.coeffs))

    # ---- output ----
    def to_json(self):
        return {"ell": self.ell,
                "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["ell"]), [Fraction(c) for c in data["coeffs"]])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise DomainError(f"malformed cyclotomic element: {data!r}") from e

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("e" if k == 1 else f"e^{k}")
            if k and c == 1:
                terms.append(mono)
            elif k and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        return f"Cyclotomic({self.ell}, {self})"


def root_power(ell, k):
    """e^k for the primitive ell-th root e; k is read modulo ell."""
    _check_ell(ell)
    p = [_ZERO] * ell
    p[k % ell] = _ONE
    return Cyclotomic.from_poly(ell, p)


def _powers(u, m):
    """{k: u**k} for |k| <= m."""
    out = {0: Cyclotomic.one(u.ell)}
    inv = u.inverse()
    up, down = out[0], out[0]
    for k in range(1, m + 1):
        up = up * u
        down = down * inv
        out[k], out[-k] = up, down
    return out


def _check_mt(m, t):
    if m < 0 or t < 0:
        raise DomainError(f"q-binomial needs nonnegative arguments, got ({m}, {t})")
    if t > m:
        raise DomainError(f"q-binomial needs t <= m, got t={t} > m={m}")


def q_number(t, u):
    """[t]_u as the telescoped sum u^(t-1) + u^(t-3) + ... + u^(1-t)."""
    if t < 0:
        raise DomainError(f"q-number needs t >= 0, got {t}")
    if u.is_zero():
        raise DomainError("q-number at u = 0")
    acc = Cyclotomic.zero(u.ell)
    if t == 0:
        return acc
    inv = u.inverse()
    step = inv * inv
    term = u ** (t - 1)
    for _ in range(t):
        acc = acc + term
        term = term * step
    return acc


def gaussian_number(t, u):
    """(t)_u = 1 + u + ... + u^(t-1)."""
    if t < 0:
        raise DomainError(f"gaussian number needs t >= 0, got {t}")
    acc = Cyclotomic.zero(u.ell)
    term = Cyclotomic.one(u.ell)
    for _ in range(t):
        acc = acc + term
        term = term * u
    return acc


def q_factorial(t, u):
    acc = Cyclotomic.one(u.ell)
    for j in range(1, t + 1):
        acc = acc * q_number(j, u)
    return acc


def q_binomial(m, t, u):
    """Bracket binomial [m t]_u by the recursion [m t] = u^-t [m-1 t] + u^(m-t) [m-1 t-1]."""
    _check_mt(m, t)
    if u.is_zero():
        raise DomainError("q-binomial at u = 0")
    pw = _powers(u, m)
    zero = Cyclotomic.zero(u.ell)
    row = [Cyclotomic.one(u.ell)]
    for mm in range(1, m + 1):
        new = []
        for tt in range(min(mm, t) + 1):
            left = row[tt] * pw[-tt] if tt < len(row) else zero
            right = row[tt - 1] * pw[mm - tt] if tt >= 1 else zero
            new.append(left + right)
        row = new
    return row[t]


def gaussian_binomial(m, t, u):
    """Parenthesis binomial (m t)_u by (m t) = (m-1 t-1) + u^t (m-1 t)."""
    _check_mt(m, t)
    pw = _powers(u, m) if not u.is_zero() else {k: u ** k for k in range(m + 1)}
    zero = Cyclotomic.zero(u.ell)
    row = [Cyclotomic.one(u.ell)]
    for mm in range(1, m + 1):
        new = []
        for tt in range(min(mm, t) + 1):
            keep = row[tt] * pw[tt] if tt < len(row) else zero
            shift = row[tt - 1] if tt >= 1 else zero
            new.append(shift + keep)
        row = new
    return row[t]


def q_binomial_factorial(m, t, u):
    """[m]! / ([t]! [m-t]!); only defined when the denominator is nonzero."""
    _check_mt(m, t)
    den = q_factorial(t, u) * q_factorial(m - t, u)
    if den.is_zero():
        raise DomainError(f"factorial formula degenerates at m={m}, t={t}")
    return q_factorial(m, u) / den
