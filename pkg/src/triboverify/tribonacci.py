"""The sequence T_0 = T_1 = 0, T_2 = 1, T_{n+3} = T_{n+2} + T_{n+1} + T_n.

Values are served from an append-only memo table.  Membership testing does
not scan: the growth bounds alpha**(n-3) <= T_n <= alpha**(n-2) (n >= 2)
confine any index with T_n = N to a window of width one around the certified
floor of log_alpha(N), so at most two table lookups decide membership.
"""

from __future__ import annotations

import threading

from .constants import DEFAULT_PRECISION, MAX_PRECISION, floor_log_alpha


class TribTable:
    """Thread-safe cache of sequence values.

    Reads of already-computed prefixes take no lock; extension is serialized.
    """

    def __init__(self):
        self._vals = [0, 0, 1]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._vals)

    def extend_to(self, n: int):
        with self._lock:
            v = self._vals
            while len(v) <= n:
                v.append(v[-1] + v[-2] + v[-3])

    def value(self, n: int) -> int:
        if n < 0:
            raise ValueError("index must be >= 0")
        if n >= len(self._vals):
            self.extend_to(n)
        return self._vals[n]

    def values_upto(self, bound: int) -> list[tuple[int, int]]:
        """All (n, T_n) with T_n <= bound, in index order."""
        out = []
        n = 0
        while True:
            t = self.value(n)
            if t > bound:
                return out
            out.append((n, t))
            n += 1

    def first_index(self, value: int,
                    precision_bits: int = DEFAULT_PRECISION,
                    max_precision_bits: int = MAX_PRECISION) -> int | None:
        """Smallest n with T_n = value, or None.

        The only value taken twice (beyond the leading zeros) is 1, at
        indices 2 and 3; the smallest index wins, so 1 maps to 2 and 0 to 0.
        """
        if value < 0:
            return None
        if value == 0:
            return 0
        lo, hi = index_window(value, precision_bits, max_precision_bits)
        for n in range(lo, hi + 1):
            if self.value(n) == value:
                return n
        return None


_TABLE = TribTable()


def default_table() -> TribTable:
    return _TABLE


def trib(n: int) -> int:
    """T_n from the shared memo table."""
    return _TABLE.value(n)


def _mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3))


def trib_fast(n: int) -> int:
    """T_n by 3x3 matrix powering; independent of the memo table, used to
    cross-check it."""
    if n < 0:
        raise ValueError("index must be >= 0")
    m = ((1, 1, 1), (1, 0, 0), (0, 1, 0))
    r = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    e = n
    while e:
        if e & 1:
            r = _mat_mul(r, m)
        m = _mat_mul(m, m)
        e >>= 1
    return r[2][0]


def index_window(value: int,
                 precision_bits: int = DEFAULT_PRECISION,
                 max_precision_bits: int = MAX_PRECISION) -> tuple[int, int]:
    """Closed index range that must contain every n >= 2 with T_n = value.

    From the growth bounds, T_n = N >= 1 forces
    2 + log_alpha(N) <= n <= 3 + log_alpha(N), so with k the certified floor
    of log_alpha(N) the window (k+2, k+3) suffices; its width is 1.
    """
    if value < 1:
        raise ValueError("value must be >= 1")
    k = floor_log_alpha(value, precision_bits, max_precision_bits)
    return k + 2, k + 3


def is_tribonacci(value: int,
                  precision_bits: int = DEFAULT_PRECISION,
                  max_precision_bits: int = MAX_PRECISION) -> int | None:
    """Smallest index n with T_n = value, or None if value never occurs."""
    return _TABLE.first_index(value, precision_bits, max_precision_bits)
