# -*- coding: utf-8 -*-
"""
Brute-force verification suites run against u_e(sl2): Hopf axioms, centrality
of the D^z characters, the quotient presentation of H and the Hopf
subalgebras attached to triples.
"""
import itertools
import logging

import numpy as np

from ..algebra.abelian import FinAbGroup, elements, subgroups
from ..config_loader import oracle_settings
from ..lie.rootsys import build
from ..subgroups.datum import (
    complement, d_character_vector, dim_H, hopf_subalgebra_dim, hopf_subalgebras,
    index_subsets, make_datum,
)
from .uqsl2 import (
    RANK_ONE_SUBALGEBRAS, Subalgebra, _clean, algebra, characters, dual_convolution,
    dual_unit, is_central_dual, is_hopf_subalgebra, quotient_dim, torus_character, triple_subalgebra,
)

log = logging.getLogger(__name__)

CHECKS = ("hopf", "characters", "central", "quotient", "subalgebra")


# ---------------------------------------------------------------- Hopf axioms

def check_associativity(alg, triples):
    for i, j, k in triples:
        one = alg.one_c
        if alg.mul_vec(alg.basis_product(i, j), {k: one}) != alg.mul_vec({i: one}, alg.basis_product(j, k)):
            log.error("associativity fails on %s %s %s", alg.abc(i), alg.abc(j), alg.abc(k))
            return False
    return True


def check_coassociativity(alg, indices):
    for x in indices:
        left, right = {}, {}
        for (p, q), c in alg.basis_coproduct(x).items():
            for (p1, p2), c1 in alg.basis_coproduct(p).items():
                key = (p1, p2, q)
                left[key] = left.get(key, alg.zero_c) + c * c1
            for (q1, q2), c2 in alg.basis_coproduct(q).items():
                key = (p, q1, q2)
                right[key] = right.get(key, alg.zero_c) + c * c2
        if _clean(left) != _clean(right):
            log.error("coassociativity fails on %s", alg.abc(x))
            return False
    return True


def check_counit(alg, indices):
    for x in indices:
        left, right = {}, {}
        for (p, q), c in alg.basis_coproduct(x).items():
            if alg.basis_counit(p):
                left[q] = left.get(q, alg.zero_c) + c
            if alg.basis_counit(q):
                right[p] = right.get(p, alg.zero_c) + c
        expected = {x: alg.one_c}
        if _clean(left) != expected or _clean(right) != expected:
            log.error("counit axiom fails on %s", alg.abc(x))
            return False
    return True


def check_antipode(alg, indices):
    for x in indices:
        expected = _clean({alg.unit_idx: alg.basis_counit(x)})
        if alg.antipode_convolution(x, True) != expected or alg.antipode_convolution(x, False) != expected:
            log.error("antipode axiom fails on %s", alg.abc(x))
            return False
    return True


def check_bialgebra(alg, pairs):
    for i, j in pairs:
        if alg.coproduct_vec(alg.basis_product(i, j)) != alg.mul_tensor(alg.basis_coproduct(i), alg.basis_coproduct(j)):
            log.error("coproduct is not multiplicative on %s %s", alg.abc(i), alg.abc(j))
            return False
    return True


def hopf_suite(ell, samples=None, seed=None):
    """Exhaustive at ell = 3, random basis tuples otherwise."""
    alg = algebra(ell)
    default_samples, default_seed = oracle_settings()
    samples = samples or default_samples
    seed = default_seed if seed is None else seed
    basis = range(alg.dim)
    if ell == 3:
        triples = itertools.product(basis, repeat=3)
        pairs = list(itertools.product(basis, repeat=2))
        singles = list(basis)
    else:
        rng = np.random.default_rng(seed)
        triples = [tuple(int(v) for v in row) for row in rng.integers(0, alg.dim, size=(samples, 3))]
        pairs = [t[:2] for t in triples[: max(1, samples // 10)]]
        singles = sorted({t[0] for t in triples})
        log.info("ell=%d: sampling %d triples", ell, samples)
    return {
        "associativity": check_associativity(alg, triples),
        "coassociativity": check_coassociativity(alg, singles),
        "counit": check_counit(alg, singles),
        "antipode": check_antipode(alg, singles),
        "bialgebra": check_bialgebra(alg, pairs),
    }


# ---------------------------------------------------------------- characters and centrality

def _rank_one_shapes():
    return [(Ip, Im) for Ip in index_subsets(1) for Im in index_subsets(1)]


def characters_suite(ell):
    out = {}
    for name, plus, minus in RANK_ONE_SUBALGEBRAS:
        sub = Subalgebra.rank_one(ell, plus, minus)
        chars = characters(plus, minus, ell)
        expected = 1 if (plus and minus) else ell
        closed = all(dual_convolution(a, b, sub) in chars for a in chars for b in chars)
        out[f"characters_{name}"] = len(chars) == expected and closed and dual_unit(sub) in chars
    # the D^z on the torus are exactly its characters
    rs = build("A", 1)
    D = make_datum(rs, ell, (), ())
    sub = Subalgebra.rank_one(ell, False, False)
    dz = {torus_character(sub, d_character_vector(D, z)[0]) for z in elements(FinAbGroup.torus(ell, 1))}
    out["characters_match_dz"] = dz == set(characters(False, False, ell))
    return out


def central_suite(ell):
    rs = build("A", 1)
    out = {}
    for Iplus, Iminus in _rank_one_shapes():
        D = make_datum(rs, ell, Iplus, Iminus)
        sub = Subalgebra.rank_one(ell, 1 in Iplus, 1 in Iminus)
        ok = all(
            is_central_dual(torus_character(sub, d_character_vector(D, z)[0]), sub)
            for z in elements(FinAbGroup.torus(ell, D.s))
        )
        out[f"central_{sub.name}"] = ok
    return out


def quotient_suite(ell):
    rs = build("A", 1)
    results = []
    for Iplus, Iminus in _rank_one_shapes():
        s = len(complement(1, Iplus | Iminus))
        sub = Subalgebra.rank_one(ell, 1 in Iplus, 1 in Iminus)
        unit = dual_unit(sub)
        for N in subgroups(FinAbGroup.torus(ell, s)):
            D = make_datum(rs, ell, Iplus, Iminus, N=N)
            gens = [torus_character(sub, d_character_vector(D, z)[0]) - unit for z in N.generators]
            got, want = quotient_dim(sub, gens), dim_H(D)
            if got != want:
                log.error("quotient of %s by |N|=%d: dim %d, expected %d", sub.name, N.order, got, want)
            results.append(got == want)
    return {"quotient_dim_matches_dim_H": all(results), "quotient_shapes": len(results)}


def subalgebra_suite(ell):
    rs = build("A", 1)
    ok = True
    for T in hopf_subalgebras(rs, ell):
        sub = triple_subalgebra(ell, T.Sigma, T.Iplus, T.Iminus)
        if not is_hopf_subalgebra(sub) or sub.dim != hopf_subalgebra_dim(T, rs, ell):
            log.error("triple %s does not give a Hopf subalgebra of the right dimension", T.to_json())
            ok = False
    # a Borel piece over the trivial group is not closed
    broken = Subalgebra.from_triple(ell, [0], {1}, {1})
    return {"triples_are_hopf_subalgebras": ok, "proper_torus_rejected": not is_hopf_subalgebra(broken)}


def run_checks(ell, which="all", samples=None, seed=None):
    suites = {
        "hopf": lambda: hopf_suite(ell, samples, seed),
        "characters": lambda: characters_suite(ell),
        "central": lambda: central_suite(ell),
        "quotient": lambda: quotient_suite(ell),
        "subalgebra": lambda: subalgebra_suite(ell),
    }
    names = CHECKS if which == "all" else (which,)
    report = {}
    for name in names:
        log.info("oracle ell=%d: %s", ell, name)
        report[name] = suites[name]()
    return report


def passed(report):
    return all(v for suite in report.values() for k, v in suite.items() if isinstance(v, bool))
