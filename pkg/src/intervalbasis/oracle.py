"""Brute-force barcode from the rank function.

Independent of :mod:`intervalbasis.decompose`: ranks come from explicitly
composed matrices and nothing else.
"""

from __future__ import annotations

from collections import Counter

from . import linalg
from .pmodule import PersistenceModule, PersistencePair


def rank_table(module: PersistenceModule) -> dict[tuple[int, int], int]:
    """``r[i, j] = rank(phi_{i,j})`` for ``1 <= i <= j <= n + 1`` of the truncated module."""
    t = module.truncate_essential()
    table = {}
    for i in range(1, t.n + 1):
        for j in range(i, t.n + 1):
            table[i, j] = t.dims[i - 1] if i == j else linalg.rank(t.compose(i, j), t.field)
    return table


def barcode_oracle(module: PersistenceModule) -> list[PersistencePair]:
    """Sorted list of pairs, each repeated by its multiplicity."""
    r = rank_table(module)
    n1 = module.n + 1

    def rk(i, j):
        return 0 if i == 0 else r[i, j]

    counts: Counter = Counter()
    for b in range(1, n1):
        for d in range(b + 1, n1 + 1):
            mult = (rk(b, d - 1) - rk(b, d)) - (rk(b - 1, d - 1) - rk(b - 1, d))
            if mult < 0:
                raise ArithmeticError(f"negative multiplicity at ({b}, {d})")
            if mult:
                counts[b, d] = mult
    return [PersistencePair(b, d) for (b, d) in sorted(counts) for _ in range(counts[b, d])]
