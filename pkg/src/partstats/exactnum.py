"""Exact big-integer sequences: Bell numbers, Stirling numbers, binomials.

Everything here is exact. Python ints carry the arbitrary-precision
integer arithmetic and ``fractions.Fraction`` is used for rationals
throughout the package.
"""

from __future__ import annotations

import math
import threading


class BellTable:
    """Memoized Bell numbers B_0..B_max computed via the Bell triangle.

    The triangle rows also satisfy the binomial recurrence
    B_{n+1} = sum_k C(n,k) B_k; a table instance only ever grows.
    Extension is guarded by a lock so a shared table is safe to grow
    from multiple threads; reads of already-computed entries are free.
    """

    def __init__(self) -> None:
        self._values = [1, 1]  # B_0, B_1
        self._row = [1]  # latest triangle row; last entry is B_1
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    def extend(self, n: int) -> None:
        """Ensure B_0..B_n are available."""
        if n <= self.max_index:
            return
        with self._lock:
            while self.max_index < n:
                prev = self._row
                row = [prev[-1]]
                for v in prev:
                    row.append(row[-1] + v)
                self._row = row
                self._values.append(row[-1])

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise ValueError("Bell numbers are indexed by naturals, got %d" % n)
        self.extend(n)
        return self._values[n]


_BELL = BellTable()


def bell(n: int) -> int:
    """The nth Bell number, the number of set partitions of [n]."""
    return _BELL[n]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n or either argument is negative."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


_STIRLING_ROWS = [[1]]  # row n holds S(n,0)..S(n,n)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 requires nonnegative arguments")
    if k > n:
        return 0
    while len(_STIRLING_ROWS) <= n:
        m = len(_STIRLING_ROWS)
        prev = _STIRLING_ROWS[-1]
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            row[j] = j * (prev[j] if j < m else 0) + prev[j - 1]
        _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][k]


def bell_mod_table(nmax: int, m: int) -> list[int]:
    """B_0..B_nmax reduced mod m, via the Bell triangle with reduced entries."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    values = [1 % m]
    row = [1 % m]
    while len(values) <= nmax:
        values.append(row[-1])
        nxt = [row[-1]]
        for v in row:
            nxt.append((nxt[-1] + v) % m)
        row = nxt
    return values[: nmax + 1]


def bell_mod(n: int, m: int) -> int:
    """B_n mod m without materializing the full big integer."""
    return bell_mod_table(n, m)[n]
