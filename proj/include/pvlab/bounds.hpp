#pragma once

/* Empirical verification of the counting and bound statements: the exact
 * congruence-energy count, the complete rational character sum at tiny
 * scale, long-sum boundedness, and the uniform interval-sum ratio.  Bounds
 * with asymptotic constants are measured and recorded, never asserted
 * against invented constants; the acceptance thresholds come from the
 * calibration runs under tools/oracles. */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pvlab/charsum.hpp"
#include "pvlab/dirichlet.hpp"

namespace pvlab {

// Number of solutions of n1 u1 = n2 u2 (mod q), M < n1,n2 <= M+N,
// 1 <= u1,u2 <= U.
struct EnergyCount {
    uint64_t q = 0;
    int64_t M = 0;
    uint64_t N = 0, U = 0;
    uint64_t count = 0;
    double normalized = 0.0; // count / (N U ln q)
};

// Exact count by multiplicity hashing of the NU products; requires the
// hypothesis 2NU < q (throws HypothesisViolated).
EnergyCount congruence_energy(uint64_t q, int64_t M, uint64_t N, uint64_t U);

// sum over v_1..v_{2r} <= V of |sum_{lambda=1..q} chi of the rational value
// prod(lambda+v_i, i<=r) / prod(lambda+v_i, i>r)|, with chi(x/y) taken as
// chi(x) conj(chi(y)) and each factor zero off the units.  Desk scale only:
// r = 2, V <= 4, q <= 200 (throws TooLarge).
struct BurgessEnergy {
    double value = 0.0;
    double normalized = 0.0; // value / (sqrt(q) V^{2r})
};
BurgessEnergy burgess_complete_sum(const DirichletCharacter& chi, uint64_t V, uint64_t r);

// c = 1/4 for cubefree moduli, 1/3 otherwise.
inline double pv_theorem_constant(bool cubefree) { return cubefree ? 0.25 : 1.0 / 3.0; }

enum class RatioQuantity { long_sum, theorem, twisted, burgess_twisted };
const char* to_string(RatioQuantity q);

struct RatioRecord {
    uint64_t q = 0;
    uint64_t label = 0;
    RatioQuantity quantity = RatioQuantity::long_sum;
    double value = 0.0;
    std::vector<std::pair<std::string, double>> params; // ordered key/value
};

// max_M |S(chi, M, N)| / sqrt(q) with N = floor(q^{1-c-epsilon}); primitive
// chi only (throws NotPrimitive).
RatioRecord long_sum_ratio(const DirichletCharacter& chi, double epsilon);

// max |S| / ((4c/pi^2) sqrt(q) ln q); reported, not asserted <= 1.
RatioRecord theorem_check(const DirichletCharacter& chi);

// |sum_{n<=N} chi(n) e(alpha n)| / (N / ln q).
RatioRecord twisted_ratio(const DirichletCharacter& chi, double alpha, uint64_t N);

// |sum_{M<n<=M+N} psi(n) chi(n)| / (k N^{1-1/r} q^{(r+1)/4r^2}).
RatioRecord burgess_twisted_ratio(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                  uint64_t r, int64_t M, uint64_t N);

} // namespace pvlab
