#pragma once

/* Exact modular arithmetic and the multiplicative structure of (Z/qZ)*:
 * factored moduli, roots of unity in reduced rational form, and a generator
 * basis with eagerly built discrete-log tables.  Moduli are capped at 2^32
 * so every intermediate product fits in 64/128-bit arithmetic. */

#include <complex>
#include <cstdint>
#include <vector>

#include "pvlab/errors.hpp"
#include "pvlab/util.hpp"

namespace pvlab {

struct FactoredModulus {
    uint64_t q = 1;
    std::vector<std::pair<uint64_t, uint32_t>> factors; // (prime, exponent), primes increasing
    bool cubefree = true;
};

// Trial division; q = 1 yields the empty factorization.
FactoredModulus factorize(uint64_t n);

// b^e mod m by square-and-multiply; b may be negative.
uint64_t pow_mod(int64_t b, uint64_t e, uint64_t m);

// Modular inverse via extended Euclid; throws NotInvertible when gcd(a,m) > 1.
uint64_t inv_mod(int64_t a, uint64_t m);

// ---------------------------------------------------------------------------
// A root of unity e(num/den) = exp(2*pi*i*num/den) in reduced form, or the
// value zero.  Invariant: 0 <= num < den, gcd(num, den) = 1 (den = 1 for the
// value 1).
// ---------------------------------------------------------------------------
struct UnityValue {
    bool zero = false;
    uint64_t num = 0;
    uint64_t den = 1;

    static UnityValue zero_value() { return {true, 0, 1}; }
    static UnityValue make(int64_t num, uint64_t den); // reduces mod den and by gcd
    static UnityValue one() { return {false, 0, 1}; }

    bool operator==(const UnityValue&) const = default;

    // product of two roots of unity (either operand may be zero)
    UnityValue operator*(const UnityValue& o) const;
    UnityValue conj() const { return zero ? *this : make(-static_cast<int64_t>(num), den); }
    bool is_real() const { return zero || den <= 2; }
};

std::complex<double> unity_eval(const UnityValue& u);

// ---------------------------------------------------------------------------
// Generator basis of (Z/qZ)*.
//
// One component per prime power p^k || q.  Odd p^k contributes the smallest
// primitive root (order phi(p^k)); 2 contributes nothing; 4 contributes -1;
// 2^k with k >= 3 contributes -1 (order 2) and 5 (order 2^{k-2}).  Generator
// residues are CRT-lifted to be 1 on every other component, so exponent
// vectors against this list describe the full group.
// ---------------------------------------------------------------------------
struct UnitGroupBasis {
    static constexpr uint32_t kNonUnit = 0xFFFFFFFFu;

    struct Generator {
        uint64_t residue; // mod q, CRT-lifted
        uint64_t order;
    };

    struct Component {
        uint64_t prime;
        uint32_t exponent;
        uint64_t pp;          // prime^exponent
        uint32_t gen_offset;  // slice of `generators` owned by this component
        uint32_t gen_count;
        // dlog[r * gen_count + j] = exponent of generator j for residue r mod pp;
        // kNonUnit marks residues sharing a factor with pp.
        std::vector<uint32_t> dlog;
    };

    FactoredModulus modulus;
    std::vector<Generator> generators;
    std::vector<Component> components;
    uint64_t phi = 1;            // group order
    uint64_t group_exponent = 1; // lcm of generator orders

    uint64_t q() const { return modulus.q; }

    // Exponent vector of n against all generators; false when gcd(n, q) > 1.
    // `out` must have generators.size() entries.
    bool dlog_vector(uint64_t n_mod_q, uint32_t* out) const;

    // Reconstruct the residue with the given exponent vector (inverse of
    // dlog_vector; used by invariants tests).
    uint64_t reconstruct(const std::vector<uint32_t>& exps) const;
};

// Builds the basis with eager dlog tables; throws TooLarge for q >= 2^32.
UnitGroupBasis unit_group_basis(const FactoredModulus& m);

uint64_t euler_phi(const FactoredModulus& m);

} // namespace pvlab
