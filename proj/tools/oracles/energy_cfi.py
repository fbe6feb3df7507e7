#!/usr/bin/env python3
"""Calibration run: the constant in the congruence-energy count.

Counts solutions of n1*u1 = n2*u2 (mod q) with M < n1,n2 <= M+N and
1 <= u1,u2 <= U over 50 seeded configurations (splitmix64, seed 42;
the acceptance suite regenerates the identical configurations), and
records C_FI = max count / (N*U*ln q).

Also evaluates one fixed spot configuration used by the unit tests.
"""

import math

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    if n <= 2:
        return 2
    c = n | 1
    while not is_prime(c):
        c += 2
    return c


def energy(q: int, m: int, n: int, u: int) -> int:
    counts = {}
    for nn in range(m + 1, m + n + 1):
        base = nn % q
        for uu in range(1, u + 1):
            c = base * uu % q
            counts[c] = counts.get(c, 0) + 1
    return sum(v * v for v in counts.values())


def main() -> None:
    rng = SplitMix64(42)
    c_fi, arg = 0.0, None
    for i in range(50):
        q = next_prime(1000 + rng.next() % 99000)
        u = 1 + rng.next() % 30
        max_n = (q - 1) // (2 * u)
        n = 1 + rng.next() % min(max_n, 20000)
        m = rng.next() % q
        cnt = energy(q, m, n, u)
        norm = cnt / (n * u * math.log(q))
        if norm > c_fi:
            c_fi, arg = norm, (q, m, n, u, cnt)
        print(f"config {i:2d}: q={q} M={m} N={n} U={u} count={cnt} norm={norm:.6f}")
    print(f"C_FI = {c_fi:.6f} at (q, M, N, U, count) = {arg}")
    print(f"spot: energy(q=1009, M=0, N=10, U=5) = {energy(1009, 0, 10, 5)}")
    print(f"spot: energy(q=11, M=0, N=2, U=2) = {energy(11, 0, 2, 2)}")


if __name__ == "__main__":
    main()
