# -*- coding: utf-8 -*-
"""
The order on subgroup data and the Hasse diagram of a family.

D <= D' iff
  (i)   I'+ c I+ and I'- c I-,
  (ii)  eta(N) c N', eta extending by zero from I^c to I'^c,
  (iii) some tau: Gamma' -> Gamma has sigma o tau = sigma',
  (iv)  for that tau, delta'(eta(z)) = delta(z) o tau for the generators z of N.
"""
import logging
from dataclasses import dataclass

import networkx as nx

from ..algebra.abelian import FinAbGroup, Hom, homs, pullback
from ..config_loader import SCHEMA_VERSION
from ..errors import AmbientMismatchError, DomainError, QsubError
from .datum import canonical_json, require_valid

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderWitness:
    tau: Hom
    eta_image_ok: bool
    delta_compat_ok: bool

    def to_json(self):
        return {"tau": {"matrix": self.tau.matrix},
                "eta_image_ok": self.eta_image_ok,
                "delta_compat_ok": self.delta_compat_ok}


def eta(Ic, Ic_prime, ell):
    """Extension by zero (Z/l)^|Ic| -> (Z/l)^|Ic'|; needs Ic c Ic'."""
    Ic, Ic_prime = tuple(Ic), tuple(Ic_prime)
    if not set(Ic) <= set(Ic_prime):
        raise DomainError(f"eta needs I^c c I'^c, got {Ic} and {Ic_prime}")
    target = FinAbGroup.torus(ell, len(Ic_prime))
    gens = target.generators()
    return Hom(FinAbGroup.torus(ell, len(Ic)), target, tuple(gens[Ic_prime.index(i)] for i in Ic))


def restriction(Ic_prime, Ic, ell):
    """Forget the coordinates of I'^c outside I^c."""
    Ic, Ic_prime = tuple(Ic), tuple(Ic_prime)
    target = FinAbGroup.torus(ell, len(Ic))
    gens = target.generators()
    return Hom(FinAbGroup.torus(ell, len(Ic_prime)), target,
               tuple(gens[Ic.index(i)] if i in Ic else target.identity() for i in Ic_prime))


def same_ambient(*data):
    keys = {D.ambient_key for D in data}
    if len(keys) > 1:
        raise AmbientMismatchError(f"data live over different (type, rank, ell): {sorted(keys)}")


def leq(D, Dp, cap=None):
    """An OrderWitness if D <= Dp, else None."""
    same_ambient(D, Dp)
    require_valid(D)
    require_valid(Dp)
    if not (Dp.Iplus <= D.Iplus and Dp.Iminus <= D.Iminus):
        return None
    h = eta(D.Ic, Dp.Ic, D.ell)
    gens = D.N.generators
    moved = [h(z) for z in gens]
    if not all(Dp.N.contains(y) for y in moved):
        return None
    for tau in homs(Dp.Gamma, D.Gamma, cap=cap):
        if any(pullback(c, tau) != cp for c, cp in zip(D.sigma, Dp.sigma)):
            continue
        if all(Dp.delta(y) == pullback(D.delta(z), tau) for z, y in zip(gens, moved)):
            return OrderWitness(tau, True, True)
    return None


def equiv(D, Dp, cap=None):
    return leq(D, Dp, cap) is not None and leq(Dp, D, cap) is not None


def pairwise_leq(family, cap=None):
    return [[leq(a, b, cap) is not None for b in family] for a in family]


@dataclass
class HasseDiagram:
    family: list
    classes: list      # [{"rep": index into family, "members": [indices]}], sorted by rep json
    edges: list        # [(i, j)]: class i <= class j, covering relations only
    graph: object

    def to_json(self):
        return {
            "v": SCHEMA_VERSION,
            "classes": [{"rep": self.family[c["rep"]].to_json(), "members": c["members"]}
                        for c in self.classes],
            "edges": [list(e) for e in self.edges],
        }

    def maxima(self):
        return sorted(n for n in self.graph.nodes if self.graph.out_degree(n) == 0)


def equivalence_classes(family, matrix):
    jsons = [canonical_json(D) for D in family]
    seen = set()
    classes = []
    for i in range(len(family)):
        if i in seen:
            continue
        members = [j for j in range(len(family)) if matrix[i][j] and matrix[j][i]]
        seen.update(members)
        rep = min(members, key=lambda j: jsons[j])
        classes.append({"rep": rep, "members": members})
    classes.sort(key=lambda c: jsons[c["rep"]])
    return classes


def hasse(family, cap=None, matrix=None):
    family = list(family)
    same_ambient(*family)
    matrix = matrix or pairwise_leq(family, cap)
    classes = equivalence_classes(family, matrix)
    G = nx.DiGraph()
    G.add_nodes_from(range(len(classes)))
    for a, ca in enumerate(classes):
        for b, cb in enumerate(classes):
            if a != b and matrix[ca["rep"]][cb["rep"]]:
                G.add_edge(a, b)
    if not nx.is_directed_acyclic_graph(G):
        raise QsubError("order relation has a cycle between distinct classes")
    R = nx.transitive_reduction(G)
    R.add_nodes_from(G.nodes)
    edges = sorted(R.edges())
    log.info("hasse: %d data, %d classes, %d covering edges", len(family), len(classes), len(edges))
    return HasseDiagram(family, classes, edges, R)
