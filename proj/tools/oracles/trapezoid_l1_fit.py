#!/usr/bin/env python3
"""Calibration run: l1 norm of the trapezoid window spectrum.

Computes sum_a |fhat(a)| for the trapezoid window with plateau (M+1..M+N-1),
linear ramps of width K (half-open feet), via numpy's FFT -- a route fully
independent of the closed-form evaluation used by the library.  Fits the
two-parameter model

    l1 ~ A * q * ln(q/K) + B * q

over q = 2^10 .. 2^17 with N = floor(q/3), K = floor(q^0.7), M = 0, and
prints the values the acceptance suite pins (see tools/oracles/README.md).
"""

import math

import numpy as np


def trapezoid(q: int, m: int, n: int, k: int) -> np.ndarray:
    assert n + 2 * k < q and k >= 1 and n >= 2
    f = np.zeros(q)
    x0 = m + 1 - k  # left ramp foot, value 0
    for off in range(n + 2 * k - 1):
        if off < k:
            v = off / k
        elif off <= k + n - 2:
            v = 1.0
        else:
            v = (n + 2 * k - 2 - off) / k
        f[(x0 + off) % q] = v
    return f


def l1_fft(q: int, m: int, n: int, k: int) -> float:
    return float(np.abs(np.fft.fft(trapezoid(q, m, n, k))).sum())


def bound(q: int, k: int) -> float:
    return 4.0 * q / math.pi**2 * math.log(q / k)


def main() -> None:
    print("== model fit grid (q = 2^10 .. 2^17, N = q//3, K = floor(q^0.7)) ==")
    qs = [2**e for e in range(10, 18)]
    rows = []
    for q in qs:
        n = q // 3
        k = math.floor(q**0.7 + 1e-9)
        l1 = l1_fft(q, 0, n, k)
        rows.append((q, k, l1))
        print(f"q={q:7d} K={k:5d} l1={l1:.6f} l1/bound={l1 / bound(q, k):.6f}")

    design = np.array([[q * math.log(q / k), q] for q, k, _ in rows])
    rhs = np.array([l1 for _, _, l1 in rows])
    (a_fit, b_fit), res, _, _ = np.linalg.lstsq(design, rhs, rcond=None)
    pred = design @ np.array([a_fit, b_fit])
    rms = math.sqrt(float(np.mean((pred - rhs) ** 2)))
    print(f"A = {a_fit:.9f}   B = {b_fit:.9f}   rms = {rms:.6f}")
    print(f"4/pi^2 = {4 / math.pi**2:.9f}   A - 4/pi^2 = {a_fit - 4 / math.pi**2:.6f}")

    print("== ratio trend grid (q in {1e3, 1e4, 1e5}) ==")
    for q in (10**3, 10**4, 10**5):
        n = q // 3
        k = math.floor(q**0.7 + 1e-9)
        l1 = l1_fft(q, 0, n, k)
        ind = np.zeros(q)
        ind[1 : n + 1] = 1.0  # sharp cutoff over (0, N]
        sharp = float(np.abs(np.fft.fft(ind)).sum())
        print(
            f"q={q:7d} K={k:5d} l1={l1:.4f} sharp={sharp:.4f} "
            f"ratio=l1/bound={l1 / bound(q, k):.6f} trapezoid<sharp={l1 < sharp}"
        )

    print("== spot value ==")
    print(f"bound(q=10^4, K=631) = {bound(10**4, 631):.4f}")


if __name__ == "__main__":
    main()
