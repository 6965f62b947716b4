# -*- coding: utf-8 -*-
"""
Subgroup data D = (I+, I-, N, Gamma, sigma, delta), their validation, the
Sigma <-> N correspondence, the D^z characters and the dimension formulas.

Conventions
-----------
* simple-root indices are 1-based; I = I+ u I-, I^c = {1..n} \\ I sorted
  ascending as i_1 < ... < i_s.  Coordinate j of (Z/l)^s belongs to i_j.
* D_i(K_{a_i}) = e^{d_i}, so D^z pairs with K^w through
  <z, w> = sum_j d_{i_j} z_j w_j  (mod l).
* sigma is a tuple of n characters of Gamma (elements of dual(Gamma)), the
  coordinates of a torus embedding Gamma -> (C*)^n.
* delta is a Hom from N (canonical generators) to dual(Gamma).
"""
import itertools
import json
import logging
from dataclasses import dataclass

from ..algebra.abelian import (
    Element, FinAbGroup, Hom, Subgroup, annihilator, pairing, subgroups,
)
from ..config_loader import SCHEMA_VERSION
from ..errors import DomainError, InvalidDatumError
from ..lie.rootsys import dim_l, psi

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def to_json(self):
        return {"code": self.code, "message": self.message}


def index_subsets(n):
    """All subsets of {1..n}, by size then lexicographically."""
    return [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)]


def complement(n, I):
    return tuple(i for i in range(1, n + 1) if i not in I)


@dataclass(frozen=True)
class SubgroupDatum:
    root_system: object
    ell: int
    Iplus: frozenset
    Iminus: frozenset
    N: Subgroup
    Gamma: FinAbGroup
    sigma: tuple
    delta: Hom

    def __post_init__(self):
        object.__setattr__(self, "Iplus", frozenset(self.Iplus))
        object.__setattr__(self, "Iminus", frozenset(self.Iminus))
        object.__setattr__(self, "sigma", tuple(self.sigma))

    @property
    def n(self):
        return self.root_system.n

    @property
    def I(self):
        return tuple(sorted(self.Iplus | self.Iminus))

    @property
    def Ic(self):
        return complement(self.n, self.Iplus | self.Iminus)

    @property
    def s(self):
        return len(self.Ic)

    @property
    def ambient_key(self):
        return (self.root_system.letter, self.n, self.ell)

    def Ic_weights(self):
        return tuple(self.root_system.d[i - 1] for i in self.Ic)

    def to_json(self):
        gens = self.N.generators
        matrix = self.delta.matrix if gens and self.Gamma.rank else []
        return {
            "v": SCHEMA_VERSION,
            "type": self.root_system.letter,
            "rank": self.n,
            "ell": self.ell,
            "Iplus": sorted(self.Iplus),
            "Iminus": sorted(self.Iminus),
            "N": self.N.to_json(),
            "Gamma": {"factors": list(self.Gamma.invariant_factors)},
            "sigma": [list(c.coords) for c in self.sigma],
            "delta": {"matrix": matrix},
        }


def canonical_json(obj):
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def make_datum(rs, ell, Iplus, Iminus, N=None, Gamma=None, sigma=None, delta=None):
    """Assemble a datum, filling trivial defaults (N = 0, Gamma = 1, zero sigma and delta)."""
    Iplus, Iminus = frozenset(Iplus), frozenset(Iminus)
    s = len(complement(rs.n, Iplus | Iminus))
    torus_c = FinAbGroup.torus(ell, s)
    if N is None:
        N = Subgroup.trivial(torus_c)
    elif not isinstance(N, Subgroup):
        N = Subgroup.generated(torus_c, N)
    Gamma = Gamma or FinAbGroup.trivial()
    dual_g = Gamma.dual()
    if sigma is None:
        sigma = (dual_g.identity(),) * rs.n
    sigma = tuple(c if isinstance(c, Element) else Element(dual_g, tuple(c)) for c in sigma)
    if delta is None:
        delta = Hom.zero(N, dual_g)
    elif not isinstance(delta, Hom):
        delta = Hom.from_matrix(N, dual_g, delta)
    return SubgroupDatum(rs, ell, Iplus, Iminus, N, Gamma, sigma, delta)


def counit_datum(rs, ell):
    """(0, 0, (Z/l)^n, 1, -, 0): the terminal quotient C."""
    return make_datum(rs, ell, (), (), N=Subgroup.full(FinAbGroup.torus(ell, rs.n)))


def full_datum(rs, ell, Gamma=None, sigma=None):
    everything = range(1, rs.n + 1)
    return make_datum(rs, ell, everything, everything, Gamma=Gamma, sigma=sigma)


# ---------------------------------------------------------------- sigma

def sigma_map(Gamma, sigma):
    """Gamma -> (Z/e)^n, g -> (sigma_1(g), ..., sigma_n(g)) with values scaled by the exponent e."""
    e = Gamma.exponent
    target = FinAbGroup.torus(e, len(sigma))
    images = tuple(
        Element(target, tuple(c.coords[r] * w % e for c in sigma))
        for r, w in enumerate(Gamma.weights)
    )
    return Hom(Gamma, target, images)


def sigma_kernel(Gamma, sigma, cap=None):
    """Joint kernel of the coordinate characters of sigma."""
    if not Gamma.rank:
        return Subgroup.trivial(Gamma)
    return sigma_map(Gamma, sigma).kernel(cap)


def sigma_is_injective(Gamma, sigma, cap=None):
    return sigma_kernel(Gamma, sigma, cap).order == 1


def sigma_order(D):
    return D.Gamma.order // sigma_kernel(D.Gamma, D.sigma).order


# ---------------------------------------------------------------- validation

def validate(D):
    """Structured list of violations; empty when D is a subgroup datum."""
    out = []
    rs = D.root_system
    if not isinstance(D.ell, int) or D.ell < 3 or D.ell % 2 == 0:
        out.append(Violation("ell", f"ell must be odd and >= 3, got {D.ell}"))
    if rs.letter == "G" and isinstance(D.ell, int) and D.ell % 3 == 0:
        out.append(Violation("g2_ell", "3 divides ℓ for G2"))
    bad = sorted(i for i in D.Iplus | D.Iminus if not isinstance(i, int) or not 1 <= i <= rs.n)
    if bad:
        out.append(Violation("index_range", f"simple-root indices out of range 1..{rs.n}: {bad}"))
        return out
    if D.N.ambient != FinAbGroup.torus(D.ell, D.s):
        out.append(Violation("N_ambient", f"N must be a subgroup of (Z/{D.ell})^{D.s}"))
    dual_g = D.Gamma.dual()
    if len(D.sigma) != rs.n or any(c.group != dual_g for c in D.sigma):
        out.append(Violation("sigma_shape", f"sigma must be {rs.n} characters of {D.Gamma}"))
    elif not sigma_is_injective(D.Gamma, D.sigma):
        out.append(Violation("sigma_not_injective", "sigma not injective"))
    if D.delta.source != D.N or D.delta.target != dual_g:
        out.append(Violation("delta_shape", "delta must map N to dual(Gamma)"))
    elif not D.delta.is_well_defined():
        out.append(Violation("delta_not_hom", "delta is not a group homomorphism on N"))
    return out


def require_valid(D):
    problems = validate(D)
    if problems:
        raise InvalidDatumError(problems)
    return D


# ---------------------------------------------------------------- D^z characters

@dataclass(frozen=True)
class DCharacter:
    """D^z = D_{i_1}^{z_1} ... D_{i_s}^{z_s}."""
    z: Element
    Ic: tuple
    weights: tuple
    n: int
    ell: int

    def on_torus(self):
        """The character of T = (Z/l)^n as a dual vector: d_{i_j} z_j at i_j, 0 on I."""
        coords = [0] * self.n
        for i, w, zj in zip(self.Ic, self.weights, self.z.coords):
            coords[i - 1] = w * zj
        return Element(FinAbGroup.torus(self.ell, self.n), tuple(coords))

    def __call__(self, k):
        """Exponent of e in D^z(K^k)."""
        return pairing(self.on_torus(), Element(FinAbGroup.torus(self.ell, self.n), tuple(k)))

    def __mul__(self, other):
        if (self.Ic, self.n, self.ell) != (other.Ic, other.n, other.ell):
            raise DomainError("D-characters of different data")
        return DCharacter(self.z + other.z, self.Ic, self.weights, self.n, self.ell)

    def is_trivial(self):
        return self.z.is_zero()


def d_character(D, z):
    torus_c = FinAbGroup.torus(D.ell, D.s)
    z = z if isinstance(z, Element) else Element(torus_c, tuple(z))
    if z.group != torus_c:
        raise DomainError(f"z must lie in (Z/{D.ell})^{D.s}")
    return DCharacter(z, D.Ic, D.Ic_weights(), D.n, D.ell)


def d_character_vector(D, z):
    """Exponents (d_{i_j} z_j at i_j, 0 on I) of D^z as a plain tuple."""
    return d_character(D, z).on_torus().coords


def omega(D):
    """Omega = {w in T_{I^c} : D^z(K^w) = 1 for z in N}."""
    return annihilator(D.N, weights=D.Ic_weights())


def rho_kernel(D):
    """Kernel of restricting D^z to Omega; equals N for every valid datum."""
    return annihilator(omega(D), weights=D.Ic_weights())


# ---------------------------------------------------------------- triples

@dataclass(frozen=True)
class Triple:
    Sigma: Subgroup
    Iplus: frozenset
    Iminus: frozenset

    def missing_generators(self):
        gens = self.Sigma.ambient.generators()
        return [i for i in sorted(self.Iplus | self.Iminus) if not self.Sigma.contains(gens[i - 1])]

    def to_json(self):
        return {"Sigma": self.Sigma.to_json(), "Iplus": sorted(self.Iplus), "Iminus": sorted(self.Iminus)}


def _embed_Ic(ell, n, Ic, w):
    coords = [0] * n
    for i, x in zip(Ic, w.coords):
        coords[i - 1] = x
    return Element(FinAbGroup.torus(ell, n), tuple(coords))


def sigma_from_omega(ell, n, I, Ic, Om):
    torus = FinAbGroup.torus(ell, n)
    gens = [torus.generators()[i - 1] for i in I]
    gens += [_embed_Ic(ell, n, Ic, w) for w in Om.generators]
    return Subgroup.generated(torus, gens)


def sigma_group(D):
    """Triple (Sigma, I+, I-) with Sigma = T_I x Omega."""
    require_valid(D)
    Sigma = sigma_from_omega(D.ell, D.n, D.I, D.Ic, omega(D))
    return Triple(Sigma, D.Iplus, D.Iminus)


def hopf_subalgebras(rs, ell, cap=None):
    """Every triple (Sigma, I+, I-) parameterising a Hopf subalgebra of u_e(g)."""
    out = []
    for Iplus in index_subsets(rs.n):
        for Iminus in index_subsets(rs.n):
            I = tuple(sorted(Iplus | Iminus))
            Ic = complement(rs.n, Iplus | Iminus)
            for Om in subgroups(FinAbGroup.torus(ell, len(Ic)), cap):
                out.append(Triple(sigma_from_omega(ell, rs.n, I, Ic, Om), Iplus, Iminus))
    log.info("%s, ell=%d: %d Hopf subalgebra triples", rs.cartan_type, ell, len(out))
    return out


# ---------------------------------------------------------------- dimensions

def dim_uel(rs, ell, Iplus, Iminus):
    """ell^(n + |Psi+| + |Psi-|)."""
    return ell ** dim_l(rs, Iplus, Iminus)


def dim_H(D):
    require_valid(D)
    total = dim_uel(D.root_system, D.ell, D.Iplus, D.Iminus)
    q, r = divmod(total, D.N.order)
    if r:
        raise DomainError("|N| does not divide dim u_e(l)")
    return q


def dim_AD(D):
    return D.Gamma.order * dim_H(D)


def dim_A_l_sigma(D):
    """|Gamma| dim u_e(l): the quotient before twisting by delta."""
    require_valid(D)
    return D.Gamma.order * dim_uel(D.root_system, D.ell, D.Iplus, D.Iminus)


def hopf_subalgebra_dim(T, rs, ell):
    missing = T.missing_generators()
    if missing:
        raise DomainError(f"K_a_i not in Sigma for i in {missing}")
    return ell ** (len(psi(rs, T.Iplus)) + len(psi(rs, T.Iminus))) * T.Sigma.order


def dims(D):
    return {
        "dim_uel": dim_uel(D.root_system, D.ell, D.Iplus, D.Iminus),
        "dim_H": dim_H(D),
        "dim_AD": dim_AD(D),
        "dim_A_l_sigma": dim_A_l_sigma(D),
        "sigma_order": sigma_order(D),
    }

