#include "pvlab/util.hpp"

#include <cstdio>

namespace pvlab {

namespace {

uint64_t pow_mod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for all 64-bit inputs
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t next_prime(uint64_t n) {
    if (n <= 2) return 2;
    uint64_t c = n | 1;
    while (!is_prime64(c)) c += 2;
    return c;
}

std::vector<uint32_t> primes_up_to(uint32_t n) {
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    std::vector<uint32_t> out;
    if (n < 2) return out;
    sieve[0] = sieve[1] = false;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (!sieve[p]) continue;
        for (uint64_t k = p * p; k <= n; k += p) sieve[k] = false;
    }
    for (uint32_t p = 2; p <= n; ++p) {
        if (sieve[p]) out.push_back(p);
    }
    return out;
}

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace pvlab
