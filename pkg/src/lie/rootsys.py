# -*- coding: utf-8 -*-
"""
Root systems of the simple Lie algebras (Bourbaki numbering).

Roots are integer vectors in the basis of simple roots.  The Cartan matrix is
a_ij = (a_i, a_j) / d_i with d_i = (a_i, a_i) / 2, so d_i a_ij = d_j a_ji.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..errors import DomainError, QsubError

log = logging.getLogger(__name__)

RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class CartanType:
    letter: str
    rank: int

    def __post_init__(self):
        letter = str(self.letter).upper()
        object.__setattr__(self, "letter", letter)
        rule = RANK_RULES.get(letter)
        if rule is None:
            raise DomainError(f"unknown Cartan letter {self.letter!r}")
        if not isinstance(self.rank, int) or not rule(self.rank):
            raise DomainError(f"invalid rank {self.rank} for type {letter}")

    def __str__(self):
        return f"{self.letter}{self.rank}"


@dataclass(frozen=True)
class ConvexOrder:
    reduced_word: tuple
    beta: tuple


@dataclass(frozen=True)
class RootSystem:
    cartan_type: CartanType
    cartan: tuple
    d: tuple
    positive_roots: tuple
    convex: ConvexOrder = field(compare=False, repr=False, default=None)

    @property
    def n(self):
        return self.cartan_type.rank

    @property
    def letter(self):
        return self.cartan_type.letter

    @property
    def dim_g(self):
        return self.n + 2 * len(self.positive_roots)

    def simple_root(self, i):
        _check_indices(self, [i])
        return tuple(int(j == i - 1) for j in range(self.n))


def _gram(letter, n):
    B = np.zeros((n, n), dtype=np.int64)

    def link(i, j, val):
        B[i - 1, j - 1] = B[j - 1, i - 1] = val

    if letter == "A":
        np.fill_diagonal(B, 2)
        for i in range(1, n):
            link(i, i + 1, -1)
    elif letter == "B":
        np.fill_diagonal(B, 4)
        B[n - 1, n - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -2)
    elif letter == "C":
        np.fill_diagonal(B, 2)
        B[n - 1, n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif letter == "D":
        np.fill_diagonal(B, 2)
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif letter == "E":
        np.fill_diagonal(B, 2)
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, n):
            link(i, i + 1, -1)
    elif letter == "F":
        B[:] = np.diag([4, 4, 2, 2])
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif letter == "G":
        B[:] = np.diag([2, 6])
        link(1, 2, -3)
    return B


def _root_key(root):
    return (sum(root), tuple(-c for c in root))


def _reflection_matrices(C):
    n = C.shape[0]
    out = []
    for i in range(n):
        R = np.eye(n, dtype=np.int64)
        R[i, :] -= C[i, :]
        out.append(R)
    return out


def _positive_roots(C):
    n = C.shape[0]
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            b = np.array(beta, dtype=np.int64)
            for i in range(n):
                img = b.copy()
                img[i] -= int(C[i] @ b)
                t = tuple(int(x) for x in img)
                if min(t) >= 0 and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return tuple(sorted(seen, key=_root_key))


def _greedy_reduced_word(C, n_pos):
    """Lexicographically first reduced word of w0: always take the smallest ascent."""
    n = C.shape[0]
    R = _reflection_matrices(C)
    w = np.eye(n, dtype=np.int64)
    word, beta = [], []
    while len(word) <= n_pos:
        for i in range(n):
            img = w[:, i]
            if (img >= 0).all():
                break
        else:
            break
        word.append(i + 1)
        beta.append(tuple(int(x) for x in img))
        w = w @ R[i]
    return ConvexOrder(tuple(word), tuple(beta))


def check_convex(order, positive_roots):
    """Raise unless beta enumerates the positive roots once and convexly."""
    beta = order.beta
    if len(beta) != len(positive_roots) or set(beta) != set(positive_roots):
        raise QsubError("reduced word does not enumerate the positive roots bijectively")
    pos = {b: k for k, b in enumerate(beta)}
    for j, bj in enumerate(beta):
        for k in range(j + 1, len(beta)):
            s = tuple(x + y for x, y in zip(bj, beta[k]))
            m = pos.get(s)
            if m is not None and not (j < m < k):
                raise QsubError(f"convexity fails for beta_{j + 1} + beta_{k + 1} = beta_{m + 1}")


@lru_cache(maxsize=None)
def _build(letter, rank):
    ctype = CartanType(letter, rank)
    B = _gram(ctype.letter, rank)
    d = tuple(int(x) // 2 for x in np.diag(B))
    C = B // np.array(d, dtype=np.int64)[:, None]
    roots = _positive_roots(C)
    expected = POSITIVE_ROOT_COUNTS[ctype.letter](rank)
    if len(roots) != expected:
        raise QsubError(f"{ctype}: found {len(roots)} positive roots, expected {expected}")
    order = _greedy_reduced_word(C, len(roots))
    check_convex(order, roots)
    log.debug("built %s: %d positive roots, w0 = %s", ctype, len(roots), order.reduced_word)
    return RootSystem(
        cartan_type=ctype,
        cartan=tuple(tuple(int(x) for x in row) for row in C),
        d=d,
        positive_roots=roots,
        convex=order,
    )


def build(letter, rank=None):
    """build('A', 2) or build(CartanType('A', 2))."""
    if isinstance(letter, CartanType):
        letter, rank = letter.letter, letter.rank
    CartanType(letter, rank)
    return _build(str(letter).upper(), rank)


def _check_indices(rs, indices):
    bad = [i for i in indices if not isinstance(i, int) or not 1 <= i <= rs.n]
    if bad:
        raise DomainError(f"simple-root indices out of range 1..{rs.n}: {bad}")


def support(rs, root):
    root = tuple(int(c) for c in root)
    if root not in rs.positive_roots:
        raise DomainError(f"{root} is not a positive root of {rs.cartan_type}")
    return frozenset(i + 1 for i, c in enumerate(root) if c)


def psi(rs, I):
    """Positive roots supported in I."""
    I = set(I)
    _check_indices(rs, I)
    return [r for r in rs.positive_roots if all(c == 0 or (i + 1) in I for i, c in enumerate(r))]


def dim_l(rs, Iplus, Iminus):
    return rs.n + len(psi(rs, Iplus)) + len(psi(rs, Iminus))


def convex_order(rs):
    return rs.convex


def bilinear_form(rs, lam, mu):
    """(lam, mu) = lam^T diag(d) C mu."""
    DC = np.diag(rs.d) @ np.array(rs.cartan, dtype=np.int64)
    return int(np.array(lam, dtype=np.int64) @ DC @ np.array(mu, dtype=np.int64))


def reflect(rs, i, beta):
    _check_indices(rs, [i])
    b = np.array(beta, dtype=np.int64)
    b[i - 1] -= int(np.array(rs.cartan[i - 1], dtype=np.int64) @ b)
    return tuple(int(x) for x in b)


def highest_root(rs):
    return max(rs.positive_roots, key=sum)


def dim_g(rs):
    return rs.dim_g


def dims(rs):
    return {"rank": rs.n, "positive_roots": len(rs.positive_roots), "dim_g": dim_g(rs)}


def to_json(rs):
    return {
        "type": rs.letter,
        "rank": rs.n,
        "cartan": [list(r) for r in rs.cartan],
        "d": list(rs.d),
        "positive_roots": [list(r) for r in rs.positive_roots],
        "dims": dims(rs),
        "convex_order": {
            "reduced_word": list(rs.convex.reduced_word),
            "beta": [list(b) for b in rs.convex.beta],
        },
    }
