"""Shared enumeration and comparison helpers for the test suite."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

from catshrink import ContingencyTable, new_table


def rel_close(a: float, b: float, rtol: float) -> bool:
    """Relative closeness with an absolute floor of ``rtol`` near zero."""
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))


def iter_2x2_tables(
    max_n: int, positive_margins: bool = False, discordant: bool = False
) -> Iterator[ContingencyTable]:
    """All 2x2 count tables with total in [1, max_n], optionally filtered."""
    for n in range(1, max_n + 1):
        for a in range(n + 1):
            for b in range(n - a + 1):
                for c in range(n - a - b + 1):
                    d = n - a - b - c
                    if positive_margins and min(a + b, c + d, a + c, b + d) == 0:
                        continue
                    if discordant and b + c == 0:
                        continue
                    yield new_table([[a, b], [c, d]])


def iter_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in iter_compositions(total - head, parts - 1):
            yield (head,) + tail


def iter_tables(n_rows: int, n_cols: int, max_n: int) -> Iterator[ContingencyTable]:
    """All n_rows x n_cols tables with total in [1, max_n]."""
    cells = n_rows * n_cols
    for n in range(1, max_n + 1):
        for flat in iter_compositions(n, cells):
            counts = [list(flat[i * n_cols : (i + 1) * n_cols]) for i in range(n_rows)]
            yield new_table(counts)


def brute_chi_square(table: ContingencyTable) -> float:
    """Pearson chi-square for a 2x2 table from the closed-form count formula."""
    (a, b), (c, d) = table.counts
    n = table.n
    return n * (a * d - b * c) ** 2 / ((a + b) * (c + d) * (a + c) * (b + d))


def exact_chi_square(table: ContingencyTable) -> Fraction:
    """Pearson chi-square as an exact rational, for tie-free comparisons."""
    (a, b), (c, d) = table.counts
    return Fraction(
        table.n * (a * d - b * c) ** 2, (a + b) * (c + d) * (a + c) * (b + d)
    )


def brute_mi(probs: list[list[float]]) -> float:
    """Mutual information of a joint pmf by direct double loop, in nats."""
    n_rows = len(probs)
    n_cols = len(probs[0])
    row = [math.fsum(probs[i]) for i in range(n_rows)]
    col = [math.fsum(probs[i][j] for i in range(n_rows)) for j in range(n_cols)]
    total = 0.0
    for i in range(n_rows):
        for j in range(n_cols):
            p = probs[i][j]
            if p > 0.0:
                total += p * math.log(p / (row[i] * col[j]))
    return total
