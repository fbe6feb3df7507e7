#!/usr/bin/env python3
"""Calibration run: the O(1) gap in the sine prefix sum bound.

For S(x, n) = sum_{j<=n} |sin jx|/j, measures

    gap(n) = max_x S(x, n) - (2/pi) ln n

over the grid x = pi*k/10^4, 0 <= k < 10^4, for every n <= 10^4, tracking
the supremum (frozen as C_emp) plus the values at n in {1, 10, 100, 1000,
10000} and the stabilization difference gap(10^4) - gap(10^2).
"""

import math

import numpy as np

GRID = 10**4
NMAX = 10**4


def main() -> None:
    x = math.pi * np.arange(GRID) / GRID
    s = np.zeros(GRID)
    two_over_pi = 2.0 / math.pi
    snapshots = {1, 10, 100, 1000, 10000}
    gap_at = {}
    max_gap, argmax_n = -math.inf, 0
    for n in range(1, NMAX + 1):
        s += np.abs(np.sin(n * x)) / n
        gap = float(s.max()) - two_over_pi * math.log(n)
        if gap > max_gap:
            max_gap, argmax_n = gap, n
        if n in snapshots:
            gap_at[n] = gap
    for n in sorted(gap_at):
        print(f"gap({n}) = {gap_at[n]:.6f}")
    print(f"max gap over n <= {NMAX}: {max_gap:.6f} at n = {argmax_n}")
    print(f"gap(10^4) - gap(10^2) = {gap_at[10000] - gap_at[100]:.6f}")


if __name__ == "__main__":
    main()
