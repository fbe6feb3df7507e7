#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pvlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// Deterministic PRNG.
//
// SplitMix64: 64-bit additive-counter generator with a strong output mix.
// All seeded sampling in the project goes through this so that reports and
// calibration runs reproduce bit-for-bit across platforms.
// ---------------------------------------------------------------------------
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n >= 1.  Modulo reduction: the bias is irrelevant at
    // the ranges used here and keeping it trivial makes the sequence easy to
    // reproduce in other languages.
    uint64_t below(uint64_t n) { return next() % n; }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

// ---------------------------------------------------------------------------
// 64-bit integer arithmetic helpers.
// ---------------------------------------------------------------------------
inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

// Floor residue of a possibly negative value.
inline uint64_t floor_mod(int64_t a, uint64_t m) {
    int64_t r = a % static_cast<int64_t>(m);
    if (r < 0) r += static_cast<int64_t>(m);
    return static_cast<uint64_t>(r);
}

bool is_prime64(uint64_t n);      // deterministic Miller-Rabin
uint64_t next_prime(uint64_t n);  // smallest prime >= n
std::vector<uint32_t> primes_up_to(uint32_t n);

// floor(q^e), stabilized against floating ulps at exact-power points.
inline uint64_t floor_pow(uint64_t q, double e) {
    return static_cast<uint64_t>(std::floor(std::pow(static_cast<double>(q), e) + 1e-9));
}

// ---------------------------------------------------------------------------
// Summation.  Sums are accumulated pairwise so that roundoff grows with
// log(n) rather than n; large sweeps rely on this for their 1e-6..1e-9
// tolerances.
// ---------------------------------------------------------------------------
template <class T>
class PairwiseAccumulator {
public:
    // Binary-counter carry chain: level i holds a partial sum of exactly
    // 2^i terms and is occupied iff bit i of count_ is set.
    void add(T v) {
        size_t lvl = 0;
        for (uint64_t c = count_; c & 1; c >>= 1, ++lvl) {
            v += levels_[lvl];
            levels_[lvl] = T{};
        }
        if (lvl >= levels_.size()) levels_.resize(lvl + 1, T{});
        levels_[lvl] = v;
        ++count_;
    }

    T total() const {
        T s{};
        for (const T& v : levels_) s += v;
        return s;
    }

    uint64_t count() const { return count_; }

private:
    std::vector<T> levels_;
    uint64_t count_ = 0;
};

template <class T>
T pairwise_sum(std::span<const T> xs) {
    if (xs.size() <= 32) {
        T s{};
        for (const T& v : xs) s += v;
        return s;
    }
    size_t half = xs.size() / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

// ---------------------------------------------------------------------------
// Roots of unity.
// ---------------------------------------------------------------------------

// e(num/den) = exp(2*pi*i*num/den); num is reduced mod den first so the
// trig argument never exceeds 2*pi.
inline std::complex<double> unit_root(int64_t num, uint64_t den) {
    double frac = static_cast<double>(floor_mod(num, den)) / static_cast<double>(den);
    return {std::cos(2.0 * kPi * frac), std::sin(2.0 * kPi * frac)};
}

// |sin(pi * num/den)| with exact integer folding into [0, 1/2].
inline double abs_sin_pi(uint64_t num, uint64_t den) {
    uint64_t r = num % den;
    if (2 * r > den) r = den - r;
    return std::sin(kPi * static_cast<double>(r) / static_cast<double>(den));
}

// Fixed-width float formatting used by all report writers: 12 significant
// digits, locale-independent.
std::string format_g12(double v);

} // namespace pvlab
