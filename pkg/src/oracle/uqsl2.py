# -*- coding: utf-8 -*-
"""
u_e(sl2) over Q(e) on the PBW basis F^a K^b E^c (0 <= a, b, c < l).

Relations: K E K^-1 = e^2 E,  K F K^-1 = e^-2 F,
           E F - F E = (K - K^-1) / (e - e^-1),  E^l = F^l = 0,  K^l = 1.
Hopf structure: D(E) = E x 1 + K x E,  D(F) = F x K^-1 + 1 x F,  D(K) = K x K,
                S(E) = -K^-1 E,  S(F) = -F K,  S(K) = K^-1.

Basis monomials are addressed by idx = (a*l + b)*l + c.  Vectors are sparse
dicts idx -> Cyclotomic, tensors dicts (idx, idx) -> Cyclotomic.  The product
and coproduct tables are memoised on first use and never mutated afterwards.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from ..algebra.linalg import IncrementalSpan
from ..algebra.qarith import Cyclotomic, q_number, root_power
from ..errors import DomainError, QsubError

log = logging.getLogger(__name__)


def _clean(d):
    return {k: v for k, v in d.items() if v}


def _accumulate(acc, vec, coeff):
    for k, v in vec.items():
        acc[k] = acc[k] + v * coeff if k in acc else v * coeff


class SmallQuantumSL2:
    def __init__(self, ell):
        root_power(ell, 1)   # validates ell
        self.ell = ell
        self.dim = ell ** 3
        self.eps = root_power(ell, 1)
        self.zero_c = Cyclotomic.zero(ell)
        self.one_c = Cyclotomic.one(ell)
        self._inv_diff = (self.eps - self.eps.inverse()).inverse()
        self._qnum = [q_number(a, self.eps) for a in range(ell)]
        self._table = {}
        self._coprod = {}
        self._antipode = {}
        self.unit_idx = 0
        self._gen_left = {g: [self._left_generator(g, i) for i in range(self.dim)] for g in "FKE"}
        self._check_antipode_convention()

    # ---- basis bookkeeping ----
    def idx(self, a, b, c):
        ell = self.ell
        return (a * ell + b % ell) * ell + c

    def abc(self, i):
        ell = self.ell
        return i // (ell * ell), (i // ell) % ell, i % ell

    def power(self, k):
        return root_power(self.ell, k)

    # ---- left multiplication by a generator on a basis monomial ----
    def _left_generator(self, g, i):
        ell = self.ell
        a, b, c = self.abc(i)
        out = {}
        if g == "F":
            if a + 1 < ell:
                out[self.idx(a + 1, b, c)] = self.one_c
        elif g == "K":
            out[self.idx(a, b + 1, c)] = self.power(-2 * a)
        elif g == "E":
            if c + 1 < ell:
                out[self.idx(a, b, c + 1)] = self.power(-2 * b)
            if a >= 1:
                coeff = self._qnum[a] * self._inv_diff
                up, down = self.idx(a - 1, b + 1, c), self.idx(a - 1, b - 1, c)
                out[up] = out.get(up, self.zero_c) + coeff * self.power(1 - a)
                out[down] = out.get(down, self.zero_c) - coeff * self.power(a - 1)
        return _clean(out)

    def _split(self, i):
        """Write monomial i as g * m'' with coefficient 1."""
        a, b, c = self.abc(i)
        if a:
            return "F", self.idx(a - 1, b, c)
        if b:
            return "K", self.idx(0, b - 1, c)
        if c:
            return "E", self.idx(0, 0, c - 1)
        return None, None

    def _left_vec(self, g, vec):
        acc = {}
        table = self._gen_left[g]
        for k, v in vec.items():
            _accumulate(acc, table[k], v)
        return _clean(acc)

    # ---- product ----
    def basis_product(self, i, j):
        key = (i, j)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        g, rest = self._split(i)
        if g is None:
            out = {j: self.one_c}
        else:
            out = self._left_vec(g, self.basis_product(rest, j))
        self._table[key] = out
        return out

    def mul_vec(self, x, y):
        acc = {}
        for i, u in x.items():
            for j, v in y.items():
                _accumulate(acc, self.basis_product(i, j), u * v)
        return _clean(acc)

    # ---- coproduct ----
    def _gen_coproduct(self, g):
        ell = self.ell
        if g == "F":
            return {(self.idx(1, 0, 0), self.idx(0, ell - 1, 0)): self.one_c,
                    (self.unit_idx, self.idx(1, 0, 0)): self.one_c}
        if g == "K":
            return {(self.idx(0, 1, 0), self.idx(0, 1, 0)): self.one_c}
        return {(self.idx(0, 0, 1), self.unit_idx): self.one_c,
                (self.idx(0, 1, 0), self.idx(0, 0, 1)): self.one_c}

    def mul_tensor(self, X, Y):
        acc = defaultdict(lambda: self.zero_c)
        for (p, q), u in X.items():
            for (r, s), v in Y.items():
                left, right = self.basis_product(p, r), self.basis_product(q, s)
                uv = u * v
                for k1, c1 in left.items():
                    w = uv * c1
                    for k2, c2 in right.items():
                        acc[(k1, k2)] = acc[(k1, k2)] + w * c2
        return _clean(acc)

    def basis_coproduct(self, i):
        hit = self._coprod.get(i)
        if hit is not None:
            return hit
        g, rest = self._split(i)
        if g is None:
            out = {(self.unit_idx, self.unit_idx): self.one_c}
        else:
            out = self.mul_tensor(self._gen_coproduct(g), self.basis_coproduct(rest))
        self._coprod[i] = out
        return out

    def coproduct_vec(self, x):
        acc = {}
        for i, u in x.items():
            _accumulate(acc, self.basis_coproduct(i), u)
        return _clean(acc)

    # ---- antipode and counit ----
    def _gen_antipode(self, g):
        ell = self.ell
        if g == "F":
            return {self.idx(1, 1, 0): -self.one_c}
        if g == "K":
            return {self.idx(0, ell - 1, 0): self.one_c}
        return {self.idx(0, ell - 1, 1): -self.one_c}

    def basis_antipode(self, i):
        hit = self._antipode.get(i)
        if hit is not None:
            return hit
        g, rest = self._split(i)
        if g is None:
            out = {self.unit_idx: self.one_c}
        else:
            out = self.mul_vec(self.basis_antipode(rest), self._gen_antipode(g))
        self._antipode[i] = out
        return out

    def antipode_vec(self, x):
        acc = {}
        for i, u in x.items():
            _accumulate(acc, self.basis_antipode(i), u)
        return _clean(acc)

    def basis_counit(self, i):
        a, _, c = self.abc(i)
        return self.one_c if a == 0 and c == 0 else self.zero_c

    def counit_vec(self, x):
        acc = self.zero_c
        for i, u in x.items():
            if self.basis_counit(i):
                acc = acc + u
        return acc

    # ---- convolutions used by the axiom checks ----
    def antipode_convolution(self, i, left=True):
        """m (S x id) D (monomial i) if left else m (id x S) D (monomial i)."""
        acc = {}
        for (p, q), u in self.basis_coproduct(i).items():
            if left:
                prod = self.mul_vec(self.basis_antipode(p), {q: self.one_c})
            else:
                prod = self.mul_vec({p: self.one_c}, self.basis_antipode(q))
            _accumulate(acc, prod, u)
        return _clean(acc)

    def _check_antipode_convention(self):
        for g in ("F", "K", "E"):
            i = self._gen_index(g)
            expected = _clean({self.unit_idx: self.basis_counit(i)})
            if self.antipode_convolution(i, True) != expected or self.antipode_convolution(i, False) != expected:
                raise QsubError(f"coproduct convention is inconsistent with the antipode on {g}")

    def _gen_index(self, g):
        return {"F": self.idx(1, 0, 0), "K": self.idx(0, 1, 0), "E": self.idx(0, 0, 1)}[g]

    # ---- element constructors ----
    def element(self, vec):
        return PbwElement(self, vec)

    def monomial(self, a, b, c, coeff=None):
        for x in (a, c):
            if not 0 <= x < self.ell:
                raise DomainError(f"PBW exponent {x} out of range 0..{self.ell - 1}")
        return PbwElement(self, {self.idx(a, b, c): coeff if coeff is not None else self.one_c})

    @property
    def E(self):
        return self.monomial(0, 0, 1)

    @property
    def F(self):
        return self.monomial(1, 0, 0)

    @property
    def K(self):
        return self.monomial(0, 1, 0)

    def one(self):
        return self.monomial(0, 0, 0)

    def scalar(self, c):
        return PbwElement(self, {self.unit_idx: c if isinstance(c, Cyclotomic) else Cyclotomic.from_int(self.ell, c)})


@lru_cache(maxsize=None)
def algebra(ell):
    log.debug("building u_e(sl2) at ell=%d", ell)
    return SmallQuantumSL2(ell)


class PbwElement:
    """sum coeff * F^a K^b E^c."""

    __slots__ = ("algebra", "vec")

    def __init__(self, algebra, vec):
        self.algebra = algebra
        self.vec = _clean(vec)

    @property
    def ell(self):
        return self.algebra.ell

    @property
    def coeffs(self):
        return {self.algebra.abc(i): v for i, v in sorted(self.vec.items())}

    def _same(self, other):
        if not isinstance(other, PbwElement):
            return False
        if other.ell != self.ell:
            raise DomainError(f"mismatched ell: {self.ell} vs {other.ell}")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        acc = dict(self.vec)
        _accumulate(acc, other.vec, self.algebra.one_c)
        return PbwElement(self.algebra, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PbwElement(self.algebra, {k: -v for k, v in self.vec.items()})

    def __mul__(self, other):
        if isinstance(other, (Cyclotomic, int)):
            return PbwElement(self.algebra, {k: v * other for k, v in self.vec.items()})
        if not self._same(other):
            return NotImplemented
        return PbwElement(self.algebra, self.algebra.mul_vec(self.vec, other.vec))

    def __rmul__(self, other):
        if isinstance(other, (Cyclotomic, int)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        acc = self.algebra.one()
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.ell == other.ell and self.vec == other.vec

    def __hash__(self):
        return hash((self.ell, frozenset(self.vec.items())))

    def is_zero(self):
        return not self.vec

    def __repr__(self):
        terms = [f"({v})*F^{a}K^{b}E^{c}" for (a, b, c), v in self.coeffs.items()]
        return " + ".join(terms) or "0"


# ---------------------------------------------------------------- Hopf operations

def multiply(x, y):
    return x * y


def comultiply(x):
    """Sparse map (a, b, c, a', b', c') -> coefficient."""
    alg = x.algebra
    return {alg.abc(p) + alg.abc(q): v for (p, q), v in sorted(alg.coproduct_vec(x.vec).items())}


def antipode(x):
    return PbwElement(x.algebra, x.algebra.antipode_vec(x.vec))


def counit(x):
    return x.algebra.counit_vec(x.vec)


# ---------------------------------------------------------------- subalgebras and duals

@dataclass(frozen=True)
class Subalgebra:
    """PBW span of F^a K^b E^c with a < l only if minus, c < l only if plus, b in torus."""
    ell: int
    plus: bool
    minus: bool
    torus: frozenset

    @classmethod
    def rank_one(cls, ell, plus, minus):
        return cls(ell, bool(plus), bool(minus), frozenset(range(ell)))

    @classmethod
    def from_triple(cls, ell, sigma_members, Iplus, Iminus):
        return cls(ell, 1 in Iplus, 1 in Iminus, frozenset(int(b) % ell for b in sigma_members))

    @property
    def name(self):
        if self.torus != frozenset(range(self.ell)):
            return f"group-algebra{sorted(self.torus)}" if not (self.plus or self.minus) else "partial"
        return {(False, False): "torus", (True, False): "borel+",
                (False, True): "borel-", (True, True): "full"}[(self.plus, self.minus)]

    def basis(self):
        alg = algebra(self.ell)
        a_range = range(self.ell) if self.minus else (0,)
        c_range = range(self.ell) if self.plus else (0,)
        return tuple(alg.idx(a, b, c) for a in a_range for b in sorted(self.torus) for c in c_range)

    @property
    def dim(self):
        return len(self.basis())


def triple_subalgebra(ell, Sigma, Iplus, Iminus):
    """Subalgebra of u_e(sl2) spanned by F^a K^b E^c with K^b in Sigma < Z/l."""
    if Sigma.ambient.invariant_factors != (ell,):
        raise DomainError(f"Sigma must be a subgroup of Z/{ell}")
    return Subalgebra.from_triple(ell, [m.coords[0] for m in Sigma.members()], Iplus, Iminus)


RANK_ONE_SUBALGEBRAS = (("torus", False, False), ("borel+", True, False),
                        ("borel-", False, True), ("full", True, True))


@dataclass(frozen=True)
class DualElement:
    """A linear functional given by its values on the whole PBW basis."""
    ell: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.ell ** 3:
            raise DomainError(f"dual element needs {self.ell ** 3} values")

    def __add__(self, other):
        return DualElement(self.ell, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return DualElement(self.ell, tuple(a - b for a, b in zip(self.values, other.values)))

    def support(self):
        return {i for i, v in enumerate(self.values) if v}

    def restricted(self, sub):
        return [self.values[i] for i in sub.basis()]


def _dual_from(ell, mapping):
    zero = Cyclotomic.zero(ell)
    return DualElement(ell, tuple(mapping.get(i, zero) for i in range(ell ** 3)))


def dual_basis(sub, i):
    return _dual_from(sub.ell, {i: Cyclotomic.one(sub.ell)})


def dual_unit(sub):
    """The counit restricted to the subalgebra: the unit of its dual."""
    alg = algebra(sub.ell)
    return _dual_from(sub.ell, {i: alg.basis_counit(i) for i in sub.basis()})


def torus_character(sub, y):
    """K^b -> e^(y b), E and F -> 0."""
    alg = algebra(sub.ell)
    vals = {}
    for i in sub.basis():
        a, b, c = alg.abc(i)
        if a == 0 and c == 0:
            vals[i] = alg.power(y * b)
    return _dual_from(sub.ell, vals)


def _check_support(sub, *fs):
    basis = set(sub.basis())
    for f in fs:
        if f.ell != sub.ell:
            raise DomainError("dual element and subalgebra have different ell")
        if not f.support() <= basis:
            raise DomainError(f"dual element is not supported on the {sub.name} subalgebra")


def dual_convolution(f, g, sub):
    """(f * g)(x) = sum f(x1) g(x2) for x in the subalgebra."""
    _check_support(sub, f, g)
    alg = algebra(sub.ell)
    out = {}
    for x in sub.basis():
        acc = alg.zero_c
        for (p, q), c in alg.basis_coproduct(x).items():
            fp, gq = f.values[p], g.values[q]
            if fp and gq:
                acc = acc + c * fp * gq
        out[x] = acc
    return _dual_from(sub.ell, out)


def is_multiplicative(f, sub):
    alg = algebra(sub.ell)
    basis = sub.basis()
    if f.values[alg.unit_idx] != alg.one_c:
        return False
    for i in basis:
        for j in basis:
            lhs = alg.zero_c
            for k, c in alg.basis_product(i, j).items():
                if f.values[k]:
                    lhs = lhs + c * f.values[k]
            if lhs != f.values[i] * f.values[j]:
                return False
    return True


def characters(plus, minus, ell=3):
    """All algebra maps u_e(l) -> Q(e) for the rank-one subalgebra selected by the flags.

    K is group-like of order l, so a character sends it to some e^j; E and F
    are nilpotent and go to 0.  Each candidate is kept only if it respects
    every product of basis monomials."""
    sub = Subalgebra.rank_one(ell, plus, minus)
    out = [chi for chi in (torus_character(sub, j) for j in range(ell)) if is_multiplicative(chi, sub)]
    log.debug("%s at ell=%d: %d characters", sub.name, ell, len(out))
    return out


def is_central_dual(f, sub):
    """f * e_i == e_i * f for every dual basis element e_i of the subalgebra."""
    _check_support(sub, f)
    alg = algebra(sub.ell)
    for x in sub.basis():
        left, right = defaultdict(lambda: alg.zero_c), defaultdict(lambda: alg.zero_c)
        for (p, q), c in alg.basis_coproduct(x).items():
            if f.values[p]:
                left[q] = left[q] + c * f.values[p]
            if f.values[q]:
                right[p] = right[p] + c * f.values[q]
        if _clean(left) != _clean(right):
            return False
    return True


def _left_translates(sub, g):
    """Rows e_i * g for every basis index i, restricted to the basis."""
    alg = algebra(sub.ell)
    basis = sub.basis()
    pos = {x: k for k, x in enumerate(basis)}
    rows = {i: [alg.zero_c] * len(basis) for i in basis}
    for x in basis:
        for (p, q), c in alg.basis_coproduct(x).items():
            if g.values[q]:
                rows[p][pos[x]] = rows[p][pos[x]] + c * g.values[q]
    return list(rows.values())


def _right_translates(sub, row):
    alg = algebra(sub.ell)
    basis = sub.basis()
    pos = {x: k for k, x in enumerate(basis)}
    out = {j: [alg.zero_c] * len(basis) for j in basis}
    for x in basis:
        for (p, q), c in alg.basis_coproduct(x).items():
            v = row[pos[p]]
            if v:
                out[q][pos[x]] = out[q][pos[x]] + c * v
    return list(out.values())


def quotient_dim(sub, ideal_gens):
    """dim of the dual of the subalgebra modulo the two-sided ideal spanned by ideal_gens."""
    _check_support(sub, *ideal_gens)
    span = IncrementalSpan()
    for g in ideal_gens:
        rows = _left_translates(sub, g)
        if not is_central_dual(g, sub):
            log.warning("ideal generator is not central in the dual of %s; using the two-sided span", sub.name)
            rows = [r2 for r in rows for r2 in _right_translates(sub, r)]
        for r in rows:
            span.add(r)
    return sub.dim - len(span)


def is_hopf_subalgebra(sub):
    """Closure of the PBW span under product, coproduct and antipode."""
    alg = algebra(sub.ell)
    basis = set(sub.basis())
    if alg.unit_idx not in basis:
        return False
    for i in basis:
        if not set(alg.basis_antipode(i)) <= basis:
            return False
        if any(p not in basis or q not in basis for p, q in alg.basis_coproduct(i)):
            return False
        for j in basis:
            if not set(alg.basis_product(i, j)) <= basis:
                return False
    return True
