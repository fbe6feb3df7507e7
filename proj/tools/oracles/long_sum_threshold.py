#!/usr/bin/env python3
"""Calibration run: boundedness ratio for interval character sums of length
N = floor(q^0.7).

For every prime 500 < q <= 3000 and every non-principal character chi mod q
(all are primitive; conjugate pairs share a ratio, so one representative per
pair is scanned), computes

    ratio(chi) = max_M |sum_{M < n <= M+N} chi(n)| / sqrt(q)

with N = floor(q^0.7 + 1e-9), the exponent coming from 1 - 1/4 - 0.05 for
cubefree moduli with epsilon = 0.05.  The maximum over the whole family is
frozen as the acceptance threshold (tools/oracles/README.md).
"""

import math

import numpy as np


def primes_up_to(n: int) -> list:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def primitive_root(q: int) -> int:
    order = q - 1
    fac = []
    t = order
    d = 2
    while d * d <= t:
        if t % d == 0:
            fac.append(d)
            while t % d == 0:
                t //= d
        d += 1
    if t > 1:
        fac.append(t)
    for g in range(2, q):
        if all(pow(g, order // p, q) != 1 for p in fac):
            return g
    raise AssertionError("no primitive root")


def main() -> None:
    overall, arg = 0.0, None
    ratios = []
    for q in primes_up_to(3000):
        if q <= 500:
            continue
        n_len = int(math.floor(q**0.7 + 1e-9))
        g = primitive_root(q)
        dlog = np.zeros(q, dtype=np.int64)
        acc = 1
        for i in range(q - 1):
            dlog[acc] = i
            acc = acc * g % q
        order = q - 1
        roots = np.exp(2j * math.pi * np.arange(order) / order)
        dl = dlog[1:q]  # n = 1 .. q-1
        for j in range(1, order // 2 + 1):
            chi = roots[(j * dl) % order]
            walk = np.empty(q, dtype=np.complex128)
            walk[0] = 0.0
            np.cumsum(chi, out=walk[1:])
            shifted = np.roll(walk, -(n_len % q))
            ratio = float(np.abs(shifted - walk).max()) / math.sqrt(q)
            ratios.append(ratio)
            if ratio > overall:
                overall, arg = ratio, (q, j)
    ratios = np.array(ratios)
    print(f"characters scanned (one per conjugate pair): {len(ratios)}")
    for p in (50, 90, 99, 99.9):
        print(f"p{p}: {np.percentile(ratios, p):.6f}")
    print(f"max ratio = {overall:.6f} at (q, exponent) = {arg}")


if __name__ == "__main__":
    main()
