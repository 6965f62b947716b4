# -*- coding: utf-8 -*-
"""
Exact Gaussian elimination over a field whose elements support + - * / and
truth testing (Fraction, Cyclotomic).
"""


class IncrementalSpan:
    """Echelon basis grown one vector at a time; `add` reports whether the span grew."""

    def __init__(self):
        self._basis = {}   # pivot column -> row with leading entry at that column

    def __len__(self):
        return len(self._basis)

    def reduce(self, vec):
        v = list(vec)
        for col in sorted(self._basis):
            c = v[col]
            if not c:
                continue
            row = self._basis[col]
            f = c / row[col]
            for k in range(col, len(v)):
                if row[k]:
                    v[k] = v[k] - row[k] * f
        return v

    def add(self, vec):
        v = self.reduce(vec)
        for col, c in enumerate(v):
            if c:
                self._basis[col] = v
                return True
        return False

    def contains(self, vec):
        return not any(self.reduce(vec))
