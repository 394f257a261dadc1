"""Lookup tables that turn content computations over a small finite ring into
numpy fancy-indexing, so that bounded searches can test thousands of
candidate cofactors per call.

Every element gets an index, every ideal gets an index, and sums/products of
ideals become table lookups.  The tables are built once from the exact ideal
arithmetic in :mod:`ohmrush.ideals` and cached on the ring.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetExceeded
from .ideals import Ideal, ideal_product, ideal_span, ideal_sum

TABLE_ELEMENT_LIMIT = 1024


class FiniteRingTables:
    def __init__(self, ring, limit: int = TABLE_ELEMENT_LIMIT):
        if not ring.is_finite:
            raise BudgetExceeded(f"{ring.text()} is infinite")
        size = ring.size()
        if size > limit:
            raise BudgetExceeded(f"{ring.text()} has {size} elements; tables need <= {limit}")
        self.ring = ring
        self.elements = ring.elements()
        self.index = {x: i for i, x in enumerate(self.elements)}
        q = len(self.elements)
        self.size = q
        add = np.empty((q, q), dtype=np.int32)
        mul = np.empty((q, q), dtype=np.int32)
        els, idx = self.elements, self.index
        for i in range(q):
            x = els[i]
            for j in range(i, q):
                y = els[j]
                add[i, j] = add[j, i] = idx[ring.add(x, y)]
                mul[i, j] = mul[j, i] = idx[ring.mul(x, y)]
        self.add = add
        self.mul = mul
        self.zero = idx[ring.zero]
        self.one = idx[ring.one]

        principal = [ideal_span(ring, [x]) for x in els]
        ideals = {}
        for I in principal:
            ideals.setdefault(I.key, I)
        frontier = list(ideals.values())
        while frontier:
            known = list(ideals.values())
            fresh = []
            for I in frontier:
                for J in known:
                    K = ideal_sum(I, J)
                    if K.key not in ideals:
                        ideals[K.key] = K
                        fresh.append(K)
            frontier = fresh
        self.ideals = sorted(ideals.values(), key=lambda I: (I.dimension, str(I.key)))
        self.ideal_index = {I.key: k for k, I in enumerate(self.ideals)}
        n = len(self.ideals)
        self.principal = np.array([self.ideal_index[I.key] for I in principal], dtype=np.int32)
        isum = np.empty((n, n), dtype=np.int32)
        iprod = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            for b in range(a, n):
                I, J = self.ideals[a], self.ideals[b]
                isum[a, b] = isum[b, a] = self.ideal_index[ideal_sum(I, J).key]
                iprod[a, b] = iprod[b, a] = self.ideal_index[ideal_product(I, J).key]
        self.isum = isum
        self.iprod = iprod
        self.zero_ideal = self.ideal_index[ideal_span(ring, []).key]
        self.unit_ideal = self.ideal_index[ideal_span(ring, [ring.one]).key]

    def ideal(self, k: int) -> Ideal:
        return self.ideals[k]

    def index_of(self, I: Ideal) -> int:
        return self.ideal_index[I.key]

    def content_index(self, coefficient_columns) -> np.ndarray:
        """Ideal index of the span of each row's coefficients."""
        cols = list(coefficient_columns)
        if not cols:
            return np.array([self.zero_ideal])
        cur = self.principal[cols[0]]
        for c in cols[1:]:
            cur = self.isum[cur, self.principal[c]]
        return cur

    def batch_contents(self, f_terms, g_monomials, G):
        """Contents for a batch of cofactors.

        ``f_terms`` is a list of ``(exponent, element index)`` pairs, and row r
        of ``G`` gives the element indices of the coefficients of a cofactor
        g_r on ``g_monomials``.  Returns ``(c(g_r), c(f g_r))`` as arrays of
        ideal indices.
        """
        N = G.shape[0]
        cg = self.content_index(G[:, j] for j in range(G.shape[1])) if G.shape[1] else \
            np.full(N, self.zero_ideal, dtype=np.int32)
        prod = {}
        for e1, a in f_terms:
            row = self.mul[a]
            for j, e2 in enumerate(g_monomials):
                e = tuple(x + y for x, y in zip(e1, e2))
                term = row[G[:, j]]
                prod[e] = self.add[prod[e], term] if e in prod else term
        if prod:
            cfg = self.content_index(prod.values())
        else:
            cfg = np.full(N, self.zero_ideal, dtype=np.int32)
        return np.broadcast_to(cg, (N,)), np.broadcast_to(cfg, (N,))

    def decode_row(self, row):
        return [self.elements[int(i)] for i in row]
