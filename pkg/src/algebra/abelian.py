# -*- coding: utf-8 -*-
"""
Finite abelian groups Z/m1 x ... x Z/mk (m1 | m2 | ... | mk), their elements,
subgroups, homomorphisms and characters.

Subgroups are kept in Howell normal form over Z/M, M the exponent, after the
embedding x_i -> x_i * (M / m_i).  Howell forms are unique, so equality of
subgroups is equality of the stored rows.
"""
import itertools
import logging
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

import numpy as np
import sympy
from sympy.core.intfunc import igcdex

from ..config_loader import default_caps
from ..errors import CapExceededError, DomainError

log = logging.getLogger(__name__)


def _cap(cap):
    return default_caps().enumeration_cap if cap is None else cap


# ---------------------------------------------------------------- groups

@dataclass(frozen=True)
class FinAbGroup:
    invariant_factors: tuple = ()

    def __post_init__(self):
        fs = tuple(int(m) for m in self.invariant_factors)
        if any(m < 2 for m in fs):
            raise DomainError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise DomainError(f"invariant factors must form a divisibility chain, got {fs}")
        object.__setattr__(self, "invariant_factors", fs)

    @classmethod
    def from_orders(cls, orders):
        """Normalise a product of cyclic groups of the given orders."""
        by_prime = defaultdict(list)
        for n in orders:
            if int(n) < 1:
                raise DomainError(f"cyclic order must be positive, got {n}")
            for p, e in sympy.factorint(int(n)).items():
                by_prime[p].append(p ** e)
        for powers in by_prime.values():
            powers.sort(reverse=True)
        k = max((len(v) for v in by_prime.values()), default=0)
        largest_first = [prod(v[i] for v in by_prime.values() if i < len(v)) for i in range(k)]
        return cls(tuple(reversed(largest_first)))

    @classmethod
    def torus(cls, ell, s):
        return cls((ell,) * s)

    @classmethod
    def trivial(cls):
        return cls(())

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def order(self):
        return prod(self.invariant_factors)

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def weights(self):
        M = self.exponent
        return tuple(M // m for m in self.invariant_factors)

    def is_homogeneous(self):
        return len(set(self.invariant_factors)) <= 1

    def dual(self):
        return FinAbGroup(self.invariant_factors)

    def element(self, coords):
        return Element(self, tuple(coords))

    def identity(self):
        return Element(self, (0,) * self.rank)

    def generators(self):
        return tuple(Element(self, tuple(int(i == j) for j in range(self.rank)))
                     for i in range(self.rank))

    def __str__(self):
        if not self.invariant_factors:
            return "1"
        return "x".join(f"Z{m}" for m in self.invariant_factors)


def parse_group(text):
    """'1' -> trivial, 'Z4' -> Z/4, 'Z2xZ2' -> Z/2 x Z/2."""
    text = str(text).strip()
    if text in ("1", "", "Z1"):
        return FinAbGroup.trivial()
    try:
        orders = [int(part.strip().lstrip("Zz")) for part in text.lower().split("x")]
    except ValueError as e:
        raise DomainError(f"cannot parse group {text!r}; expected e.g. 1, Z3, Z2xZ4") from e
    return FinAbGroup.from_orders(orders)


@dataclass(frozen=True)
class Element:
    group: FinAbGroup
    coords: tuple

    def __post_init__(self):
        fs = self.group.invariant_factors
        if len(self.coords) != len(fs):
            raise DomainError(f"element {self.coords} does not match group {self.group}")
        object.__setattr__(self, "coords", tuple(int(c) % m for c, m in zip(self.coords, fs)))

    def _same(self, other):
        if not isinstance(other, Element) or other.group != self.group:
            raise DomainError(f"elements of different groups: {self.group} vs {getattr(other, 'group', other)}")

    def __add__(self, other):
        self._same(other)
        return Element(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return Element(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.group, tuple(-a for a in self.coords))

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return Element(self.group, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def order(self):
        return lcm(*(m // gcd(c, m) for c, m in zip(self.coords, self.group.invariant_factors)))


def _coords(x, group):
    if isinstance(x, Element):
        if x.group != group:
            raise DomainError(f"element of {x.group} used in {group}")
        return x.coords
    return Element(group, tuple(int(c) for c in x)).coords


def element_array(G, cap=None):
    """All elements of G as an (order, rank) integer array, lexicographic."""
    cap = _cap(cap)
    if G.order > cap:
        raise CapExceededError("enumeration", cap, G.order)
    if not G.rank:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices(G.invariant_factors).reshape(G.rank, -1).T.astype(np.int64)


def elements(G, cap=None):
    return [Element(G, tuple(int(c) for c in row)) for row in element_array(G, cap)]


def torsion(H, n, cap=None):
    """H[n] = {h : n h = 0}, lexicographic."""
    return [h for h in elements(H, cap) if (n * h).is_zero()]


# ---------------------------------------------------------------- Howell form

def _unit_normalizer(a, M):
    """A unit c mod M with c * a = gcd(a, M) mod M."""
    g = gcd(a, M)
    a1, M1 = a // g, M // g
    c0 = pow(a1, -1, M1) if M1 > 1 else 1
    for k in range(g + 1):
        c = c0 + k * M1
        if gcd(c, M) == 1:
            return c
    raise ArithmeticError(f"no unit normalizer for {a} mod {M}")


def howell_form(rows, M, ncols):
    """Howell normal form of the row span of `rows` in (Z/M)^ncols."""
    work = [[x % M for x in r] for r in rows]
    work = [r for r in work if any(r)]
    result = []
    for col in range(ncols):
        pivot = None
        rest = []
        for r in work:
            if r[col] == 0:
                rest.append(r)
                continue
            if pivot is None:
                pivot = r
                continue
            a, b = pivot[col], r[col]
            s, t, g = igcdex(a, b)
            s, t, g = int(s), int(t), int(g)
            u, v = -b // g, a // g
            new_p = [(s * x + t * y) % M for x, y in zip(pivot, r)]
            new_r = [(u * x + v * y) % M for x, y in zip(pivot, r)]
            pivot = new_p
            if any(new_r):
                rest.append(new_r)
        if pivot is None:
            work = rest
            continue
        c = _unit_normalizer(pivot[col], M)
        pivot = [(c * x) % M for x in pivot]
        g = pivot[col]
        for row in result:
            q = row[col] // g
            if q:
                row[:] = [(x - q * y) % M for x, y in zip(row, pivot)]
        result.append(pivot)
        extra = [((M // g) * x) % M for x in pivot]
        if any(extra):
            rest.append(extra)
        work = rest
    return tuple(tuple(r) for r in result)


def _pivot(row):
    for col, x in enumerate(row):
        if x:
            return col, x
    raise ValueError("zero row in Howell form")


# ---------------------------------------------------------------- subgroups

@dataclass(frozen=True)
class Subgroup:
    ambient: FinAbGroup
    rows: tuple

    @classmethod
    def generated(cls, ambient, gens):
        if not ambient.rank:
            return cls(ambient, ())
        w = ambient.weights
        embedded = [[c * wi for c, wi in zip(_coords(g, ambient), w)] for g in gens]
        return cls(ambient, howell_form(embedded, ambient.exponent, ambient.rank))

    @classmethod
    def trivial(cls, ambient):
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient):
        return cls.generated(ambient, ambient.generators())

    @property
    def order(self):
        M = self.ambient.exponent
        return prod(M // _pivot(r)[1] for r in self.rows)

    @property
    def generators(self):
        """Canonical generators: the Howell rows read back in ambient coordinates."""
        w = self.ambient.weights
        return tuple(Element(self.ambient, tuple(x // wi for x, wi in zip(r, w))) for r in self.rows)

    canonical_generators = generators

    def _embedded_coefficients(self, v):
        M = self.ambient.exponent
        v = [x % M for x in v]
        out = []
        for r in self.rows:
            col, g = _pivot(r)
            if v[col] % g:
                return None
            q = v[col] // g
            out.append(q)
            if q:
                v = [(x - q * y) % M for x, y in zip(v, r)]
        return out if not any(v) else None

    def coefficients(self, x):
        """c with x = sum c_r gen_r and 0 <= c_r < order(gen_r), or None if x is not a member."""
        w = self.ambient.weights
        return self._embedded_coefficients([c * wi for c, wi in zip(_coords(x, self.ambient), w)])

    def contains(self, x):
        return self.coefficients(x) is not None

    __contains__ = contains

    def is_subgroup_of(self, other):
        if other.ambient != self.ambient:
            raise DomainError("subgroups of different ambient groups")
        return all(other.contains(g) for g in self.generators)

    def join(self, other):
        if other.ambient != self.ambient:
            raise DomainError("cannot join subgroups of different ambient groups")
        return Subgroup.generated(self.ambient, self.generators + other.generators)

    def scaled(self, weights):
        """Image under the diagonal endomorphism x_i -> weights_i x_i."""
        return Subgroup.generated(
            self.ambient,
            [tuple(wi * c for wi, c in zip(weights, g.coords)) for g in self.generators],
        )

    def member_array(self, cap=None):
        cap = _cap(cap)
        if self.order > cap:
            raise CapExceededError("enumeration", cap, self.order)
        k = self.ambient.rank
        if not self.rows:
            return np.zeros((1, k), dtype=np.int64)
        M = self.ambient.exponent
        ranges = [M // _pivot(r)[1] for r in self.rows]
        coeffs = np.indices(ranges).reshape(len(ranges), -1).T.astype(np.int64)
        emb = (coeffs @ np.array(self.rows, dtype=np.int64)) % M
        arr = emb // np.array(self.ambient.weights, dtype=np.int64)
        order = np.lexsort(arr.T[::-1])
        return arr[order]

    def members(self, cap=None):
        return [Element(self.ambient, tuple(int(c) for c in row)) for row in self.member_array(cap)]

    def canonical_form(self, member_limit=None):
        limit = default_caps().subgroup_member_limit if member_limit is None else member_limit
        if self.ambient.order <= limit:
            return ("members", tuple(tuple(int(c) for c in row) for row in self.member_array()))
        return ("howell", self.rows)

    def to_json(self):
        return {"gens": [list(g.coords) for g in self.generators]}


def subgroups(G, cap=None):
    """Every subgroup of G exactly once, ordered by (order, canonical rows)."""
    cap = _cap(cap)
    cyclic = list(dict.fromkeys(Subgroup.generated(G, [x]) for x in elements(G, cap)))
    found = dict.fromkeys(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for A in frontier:
            for C in cyclic:
                J = A.join(C)
                if J not in found:
                    found[J] = None
                    nxt.append(J)
        frontier = nxt
    log.debug("%s has %d subgroups", G, len(found))
    return sorted(found, key=lambda S: (S.order, S.rows))


# ---------------------------------------------------------------- homomorphisms

def _source_generators(source):
    return source.generators() if isinstance(source, FinAbGroup) else source.generators


def _source_order(source):
    return source.order


@dataclass(frozen=True)
class Hom:
    """Homomorphism given by the images of the source generators.

    The source is a FinAbGroup (standard generators) or a Subgroup
    (its canonical generators)."""
    source: object
    target: FinAbGroup
    images: tuple

    def __post_init__(self):
        gens = _source_generators(self.source)
        if len(self.images) != len(gens):
            raise DomainError(f"hom needs {len(gens)} images, got {len(self.images)}")
        imgs = tuple(Element(self.target, _coords(y, self.target)) for y in self.images)
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, G):
        return cls(G, G, G.generators())

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, (target.identity(),) * len(_source_generators(source)))

    @classmethod
    def from_matrix(cls, source, target, matrix):
        """matrix[j][i] is coordinate j of the image of generator i."""
        n = len(_source_generators(source))
        if not matrix or not target.rank:
            return cls.zero(source, target)
        if len(matrix) != target.rank or any(len(row) != n for row in matrix):
            raise DomainError(f"hom matrix must be {target.rank}x{n}")
        return cls(source, target, tuple(tuple(matrix[j][i] for j in range(target.rank)) for i in range(n)))

    @classmethod
    def from_generator_images(cls, source, target, gens, images):
        """Hom on a subgroup given by images of arbitrary generators (checked on the Cayley graph)."""
        if not isinstance(source, Subgroup):
            raise DomainError("generator images are only needed for subgroup sources")
        gens = [Element(source.ambient, _coords(g, source.ambient)) for g in gens]
        images = [Element(target, _coords(y, target)) for y in images]
        if len(gens) != len(images):
            raise DomainError("one image per generator required")
        if Subgroup.generated(source.ambient, gens) != source:
            raise DomainError("generators do not generate the source subgroup")
        zero = source.ambient.identity()
        value = {zero: target.identity()}
        queue = deque([zero])
        while queue:
            x = queue.popleft()
            for g, y in zip(gens, images):
                z = x + g
                img = value[x] + y
                if z in value:
                    if value[z] != img:
                        raise DomainError("generator images do not define a homomorphism")
                else:
                    value[z] = img
                    queue.append(z)
        return cls(source, target, tuple(value[g] for g in source.generators))

    @property
    def matrix(self):
        return [[img.coords[j] for img in self.images] for j in range(self.target.rank)]

    def __call__(self, x):
        if isinstance(self.source, FinAbGroup):
            coeffs = _coords(x, self.source)
        else:
            coeffs = self.source.coefficients(x)
            if coeffs is None:
                raise DomainError(f"{x} is not in the source subgroup")
        acc = self.target.identity()
        for c, img in zip(coeffs, self.images):
            if c:
                acc = acc + c * img
        return acc

    def is_well_defined(self):
        if isinstance(self.source, FinAbGroup):
            return all((m * y).is_zero() for m, y in zip(self.source.invariant_factors, self.images))
        M = self.source.ambient.exponent
        for r, y in zip(self.source.rows, self.images):
            k = M // _pivot(r)[1]
            coeffs = self.source._embedded_coefficients([(k * x) % M for x in r])
            rhs = self.target.identity()
            for c, z in zip(coeffs, self.images):
                if c:
                    rhs = rhs + c * z
            if k * y != rhs:
                return False
        return True

    def compose(self, inner):
        """self o inner."""
        if inner.target != self.source:
            raise DomainError("cannot compose: target and source differ")
        return Hom(inner.source, self.target, tuple(self(y) for y in inner.images))

    def image(self):
        return Subgroup.generated(self.target, self.images)

    def kernel(self, cap=None):
        if isinstance(self.source, FinAbGroup):
            ambient, pool = self.source, elements(self.source, cap)
        else:
            ambient, pool = self.source.ambient, self.source.members(cap)
        return Subgroup.generated(ambient, [x for x in pool if self(x).is_zero()])

    def is_injective(self):
        return self.image().order == _source_order(self.source)


def homs(G, H, injective_only=False, cap=None):
    """All homomorphisms G -> H, lexicographic in the generator images."""
    cap = _cap(cap)
    gens = _source_generators(G)
    pools = [torsion(H, g.order(), cap) for g in gens]
    total = prod(len(p) for p in pools)
    if total > cap:
        raise CapExceededError("homs", cap, total)
    out = []
    for combo in itertools.product(*pools):
        f = Hom(G, H, combo)
        if isinstance(G, Subgroup) and not f.is_well_defined():
            continue
        if injective_only and not f.is_injective():
            continue
        out.append(f)
    return out


# ---------------------------------------------------------------- characters and pairing

def dual(G):
    return G.dual()


def character_value(chi, x):
    """chi_c(x) = sum c_i x_i / m_i in Q/Z, returned in [0, 1)."""
    G = x.group
    if chi.group.invariant_factors != G.invariant_factors:
        raise DomainError(f"character of {chi.group} evaluated on {G}")
    total = sum(Fraction(c * a, m) for c, a, m in zip(chi.coords, x.coords, G.invariant_factors))
    return total - (total.numerator // total.denominator)


def pullback(chi, f):
    """The transpose of f on characters: chi -> chi o f."""
    if not isinstance(f.source, FinAbGroup):
        raise DomainError("pullback needs a hom defined on a whole group")
    if chi.group.invariant_factors != f.target.invariant_factors:
        raise DomainError("character does not live on the target of the hom")
    src = f.source
    coords = []
    for m, img in zip(src.invariant_factors, f.images):
        v = character_value(chi, img) * m
        if v.denominator != 1:
            raise DomainError("hom is not well defined")
        coords.append(int(v))
    return Element(src.dual(), tuple(coords))


def pairing(x, y):
    G, H = x.group, y.group
    if G != H or not G.is_homogeneous():
        raise DomainError(f"pairing needs elements of the same (Z/l)^s, got {G} and {H}")
    ell = G.exponent
    return sum(a * b for a, b in zip(x.coords, y.coords)) % ell


def annihilator(N, weights=None, cap=None):
    """{y : sum w_i x_i y_i = 0 mod l for all x in N} for N in (Z/l)^s."""
    A = N.ambient
    if not A.is_homogeneous():
        raise DomainError(f"annihilator needs ambient (Z/l)^s, got {A}")
    if not A.rank:
        return Subgroup.trivial(A)
    ell = A.exponent
    if weights is not None:
        N = N.scaled(weights)
    E = element_array(A, cap)
    gens = np.array([g.coords for g in N.generators], dtype=np.int64).reshape(-1, A.rank)
    vals = (E @ gens.T) % ell
    keep = E[~vals.any(axis=1)]
    return Subgroup.generated(A, [tuple(int(c) for c in row) for row in keep])
