#pragma once

/* Partial, maximal, twisted and complete character sums.  The central object
 * is the prefix walk P(t) = sum_{n<=t} chi(n) as a planar point set: interval
 * sums are walk differences and the maximal interval sum is the diameter of
 * the point set (convex hull + rotating calipers, max-min for real-valued
 * characters). */

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pvlab/dirichlet.hpp"

namespace pvlab {

struct IntervalSumRecord {
    int64_t M = 0;
    uint64_t N = 0;
    std::complex<double> value{0.0, 0.0};
    double abs = 0.0;
};

struct PrefixWalk {
    uint64_t q = 1;
    std::complex<double> period_sum{0.0, 0.0};
    std::vector<std::complex<double>> points; // P(0) .. P(q-1)

    // P extended to all t >= 0 by period reduction.
    std::complex<double> prefix(uint64_t t) const {
        return points[t % q] + static_cast<double>(t / q) * period_sum;
    }
};

PrefixWalk prefix_walk(const CharacterTable& t);
PrefixWalk prefix_walk(const DirichletCharacter& chi);

// S(chi, M, N) = sum_{M < n <= M+N} chi(n); M may be any integer.
IntervalSumRecord partial_sum(const PrefixWalk& w, int64_t M, uint64_t N);
IntervalSumRecord partial_sum(const DirichletCharacter& chi, int64_t M, uint64_t N);

// Diameter of a planar point set; returns the two attaining indices.
struct Diameter {
    size_t a = 0, b = 0;
    double dist2 = 0.0;
};
Diameter point_set_diameter(std::span<const std::complex<double>> pts);

// max over 0 <= M < q, 0 <= N < q of |S(chi, M, N)| together with an
// attaining (M, N); throws PrincipalCharacter.
IntervalSumRecord max_interval_sum(const DirichletCharacter& chi);
IntervalSumRecord max_interval_sum(const PrefixWalk& w, bool real_valued);

// tau(chi) = sum_n chi(n) e_q(n), direct O(q) summation.  The span overload
// takes a precomputed e_q table (root_table(q)) so per-modulus sweeps avoid
// rebuilding it for every character.
std::complex<double> gauss_sum(const CharacterTable& t, std::span<const std::complex<double>> eq);
std::complex<double> gauss_sum(const CharacterTable& t);
std::complex<double> gauss_sum(const DirichletCharacter& chi);

// max over 0 <= M < q of |S(chi, M, N)| from the walk, O(q); N < q.
double max_windowed_abs(const PrefixWalk& w, uint64_t N);

// Both sides of  S(chi,M,N) * tau(conj chi) = sum_{0<|m|<=(q-1)/2} conj(chi)(m)
// * sum_{M<n<=M+N} e_q(mn)  evaluated independently (primitive chi, odd q,
// N < q); throws NotPrimitive / EvenModulus.
struct GaussExpansionCheck {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double diff = 0.0;
};
GaussExpansionCheck gauss_expansion_check(const DirichletCharacter& chi, int64_t M, uint64_t N);

// sum_{1<=n<=N} chi(n) e(alpha n); N <= q.
std::complex<double> twisted_sum(const DirichletCharacter& chi, double alpha, uint64_t N);
std::complex<double> twisted_sum(const CharacterTable& t, double alpha, uint64_t N);

// sum_{M<n<=M+N} psi(n) chi(n) with psi mod k and chi mod q evaluated at the
// integers of the interval.
std::complex<double> psi_twisted_sum(const CharacterTable& chi, const CharacterTable& psi,
                                     int64_t M, uint64_t N);
std::complex<double> psi_twisted_sum(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                     int64_t M, uint64_t N);

// max |S| / (sqrt(q) ln q); chi non-principal, q >= 3.
double pv_constant(const DirichletCharacter& chi);

// e_q(t), t = 0..q-1; shared by the summation loops.
std::vector<std::complex<double>> root_table(uint64_t q);

} // namespace pvlab
