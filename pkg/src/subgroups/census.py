# -*- coding: utf-8 -*-
"""
Census of finite subgroup data for a fixed (type, rank, ell) and a catalog of
groups Gamma, taken modulo equivalence.
"""
import itertools
import logging
from collections import Counter

from ..algebra.abelian import FinAbGroup, elements, homs, subgroups
from ..config_loader import SCHEMA_VERSION, default_caps
from ..errors import CapExceededError, QsubError
from .datum import SubgroupDatum, complement, dim_AD, index_subsets, sigma_is_injective
from .order import hasse, pairwise_leq

log = logging.getLogger(__name__)


def check_caps(rs, ell, gamma_catalog, caps):
    if ell > caps.max_ell:
        raise CapExceededError("ell", caps.max_ell, ell)
    if rs.n > caps.max_rank:
        raise CapExceededError("rank", caps.max_rank, rs.n)
    for Gamma in gamma_catalog:
        if Gamma.order > caps.max_gamma_order:
            raise CapExceededError("gamma_order", caps.max_gamma_order, Gamma.order)


def injective_sigmas(Gamma, n, cap):
    """Every n-tuple of characters of Gamma with trivial joint kernel."""
    chars = elements(Gamma.dual(), cap)
    total = len(chars) ** n
    if total > cap:
        raise CapExceededError("sigma", cap, total)
    return [sig for sig in itertools.product(chars, repeat=n) if sigma_is_injective(Gamma, sig, cap)]


def enumerate_data(rs, ell, gamma_catalog, caps=None):
    """One datum per (I+, I-, N, Gamma, injective sigma, delta)."""
    caps = caps or default_caps()
    gamma_catalog = list(gamma_catalog)
    check_caps(rs, ell, gamma_catalog, caps)
    cap = caps.enumeration_cap
    subsets = index_subsets(rs.n)
    subs = {}
    sigmas = {Gamma: injective_sigmas(Gamma, rs.n, cap) for Gamma in gamma_catalog}
    deltas = {}
    out = []
    for Iplus in subsets:
        for Iminus in subsets:
            s = len(complement(rs.n, Iplus | Iminus))
            if s not in subs:
                subs[s] = subgroups(FinAbGroup.torus(ell, s), cap)
            for N in subs[s]:
                for Gamma in gamma_catalog:
                    key = (N, Gamma)
                    if key not in deltas:
                        deltas[key] = homs(N, Gamma.dual(), cap=cap)
                    for sigma in sigmas[Gamma]:
                        for delta in deltas[key]:
                            out.append(SubgroupDatum(rs, ell, Iplus, Iminus, N, Gamma, sigma, delta))
                            if len(out) > cap:
                                raise CapExceededError("enumeration", cap, len(out))
    log.info("%s, ell=%d, Gamma in {%s}: %d data",
             rs.cartan_type, ell, ", ".join(str(G) for G in gamma_catalog), len(out))
    return out


def census(rs, ell, gamma_catalog, caps=None):
    gamma_catalog = list(gamma_catalog)
    data = enumerate_data(rs, ell, gamma_catalog, caps)
    cap = (caps or default_caps()).enumeration_cap
    matrix = pairwise_leq(data, cap)
    diagram = hasse(data, cap, matrix=matrix) if data else None
    classes = []
    histogram = Counter()
    for c in (diagram.classes if diagram else []):
        dims = {dim_AD(data[j]) for j in c["members"]}
        if len(dims) != 1:
            raise QsubError(f"dim A_D is not constant on a class: {sorted(dims)}")
        dim = dims.pop()
        histogram[dim] += 1
        classes.append({"rep": data[c["rep"]].to_json(), "size": len(c["members"]), "dim_AD": dim})
    log.info("census: %d classes", len(classes))
    return {
        "v": SCHEMA_VERSION,
        "params": {
            "type": rs.letter,
            "rank": rs.n,
            "ell": ell,
            "gammas": [str(G) for G in gamma_catalog],
        },
        "data_count": len(data),
        "class_count": len(classes),
        "classes": classes,
        "dim_histogram": {str(k): histogram[k] for k in sorted(histogram)},
        "hasse": {"edges": [list(e) for e in diagram.edges] if diagram else []},
    }
