#pragma once

/* The trapezoid smoothing window on Z/qZ: plateau 1 on [M+1, M+N-1], linear
 * ramps of width K on both sides, zero elsewhere.  Ramps are half-open
 * ([M+1-K, M+1) and (M+N-1, M+N-1+K]) so the decomposition of an interval
 * sum into a smoothed sum minus two edge sums is an exact identity and the
 * total mass is exactly N+K-2.
 *
 * The spectrum has the exact product form
 *
 *   fhat(a) = e_q(a(M+2-K)) * (e_q(aK)-1)(e_q(aA)-1) / (K (e_q(a)-1)^2),
 *
 * A = N+K-2, because the window is (1/K) times the convolution of two boxcar
 * indicators of lengths K and A; fourier_dft is the direct-summation oracle
 * it is validated against. */

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "pvlab/charsum.hpp"
#include "pvlab/dirichlet.hpp"
#include "pvlab/modarith.hpp"

namespace pvlab {

struct TrapezoidWindow {
    uint64_t q = 0;
    int64_t M = 0;  // left edge parameter; plateau starts at M+1
    uint64_t N = 0; // interval length parameter; plateau is N-1 points
    uint64_t K = 0; // ramp length

    uint64_t support() const { return N + 2 * K - 1; } // offsets carrying the shape
    int64_t support_start() const { return M + 1 - static_cast<int64_t>(K); }
};

// Validated constructor; throws SupportTooWide (N+2K >= q) or DegenerateRamp
// (K < 1 or N < 2).
TrapezoidWindow make_window(uint64_t q, int64_t M, uint64_t N, uint64_t K);

// f(x) in [0, 1]; x reduced mod q.
double eval_window(const TrapezoidWindow& w, int64_t x);

// sum_x f(x) = N + K - 2.
double window_mass(const TrapezoidWindow& w);

// fhat(a) = sum_x f(x) e_q(ax) for a = 0..q-1 by direct summation over the
// support: the ground-truth oracle, O(q * support).
std::vector<std::complex<double>> fourier_dft(const TrapezoidWindow& w);

// Exact closed form for a != 0 (throws ZeroFrequency at a = 0 mod q).
std::complex<double> fourier_closed_form(const TrapezoidWindow& w, uint64_t a);

// |fhat(a)| for a != 0 via the sine form of the closed product.
double spectrum_magnitude(const TrapezoidWindow& w, uint64_t a);

struct SpectrumSummary {
    TrapezoidWindow window;
    double l1 = 0.0;    // sum_a |fhat(a)|
    double bound = 0.0; // (4q/pi^2) ln(q/K)
    double ratio = 0.0; // l1 / bound
};

// O(q) via the closed form.
SpectrumSummary l1_norm(const TrapezoidWindow& w);

// l1 norm of the spectrum of the 0/1 indicator of (M, M+N]: the baseline the
// trapezoid improves on.  Independent of M.
double sharp_cutoff_l1(uint64_t q, int64_t M, uint64_t N);

// sum_{j=1..n} |sin(jx)| / j.
double pom_sine_sum(double x, uint64_t n);

// max over the grid x = pi*k/grid (0 <= k < grid) of
// pom_sine_sum(x, n) - (2/pi) ln n; grid >= 1000.
double pom_gap(uint64_t n, uint64_t grid);

// One-pass gaps for several n (ns must be increasing); used by sweeps.
std::vector<double> pom_gap_profile(std::span<const uint64_t> ns, uint64_t grid);

// Exact identity: S = smoothed - left_edge - right_edge, where S is the
// plateau sum over (M, M+N-1], smoothed = sum_n f(n) chi(n), and the edge
// sums carry the ramp weights.  residual is the float defect.
struct SmoothingDecomposition {
    std::complex<double> S{0.0, 0.0};
    std::complex<double> smoothed{0.0, 0.0};
    std::complex<double> left_edge{0.0, 0.0};
    std::complex<double> right_edge{0.0, 0.0};
    double residual = 0.0;
};
SmoothingDecomposition smoothing_decomposition_check(const DirichletCharacter& chi,
                                                     const TrapezoidWindow& w);
SmoothingDecomposition smoothing_decomposition_check(const CharacterTable& tab,
                                                     const TrapezoidWindow& w);

// Default ramp K = floor(q^{1-c-epsilon}) with c = 1/4 for cubefree q, 1/3
// otherwise.
uint64_t default_ramp(const FactoredModulus& m, double epsilon = 0.05);

} // namespace pvlab
