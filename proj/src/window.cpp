#include "pvlab/window.hpp"

#include <cmath>

#include "pvlab/bounds.hpp"

namespace pvlab {

TrapezoidWindow make_window(uint64_t q, int64_t M, uint64_t N, uint64_t K) {
    if (K < 1) throw DegenerateRamp("make_window: K must be >= 1");
    if (N < 2) throw DegenerateRamp("make_window: N must be >= 2");
    if (N + 2 * K >= q) throw SupportTooWide("make_window: N + 2K must be < q");
    return {q, M, N, K};
}

namespace {

// shape value at support offset `off` (0 .. N+2K-2); both ramp feet are 0
double shape_at(const TrapezoidWindow& w, uint64_t off) {
    if (off < w.K) return static_cast<double>(off) / static_cast<double>(w.K);
    if (off <= w.K + w.N - 2) return 1.0;
    return static_cast<double>(w.N + 2 * w.K - 2 - off) / static_cast<double>(w.K);
}

} // namespace

double eval_window(const TrapezoidWindow& w, int64_t x) {
    uint64_t off = floor_mod(x - w.support_start(), w.q);
    if (off >= w.support()) return 0.0;
    return shape_at(w, off);
}

double window_mass(const TrapezoidWindow& w) {
    return static_cast<double>(w.N + w.K) - 2.0;
}

std::vector<std::complex<double>> fourier_dft(const TrapezoidWindow& w) {
    const uint64_t q = w.q;
    auto roots = root_table(q);
    const uint64_t x0 = floor_mod(w.support_start(), q);
    const uint64_t supp = w.support();
    std::vector<std::complex<double>> out(q);
    for (uint64_t a = 0; a < q; ++a) {
        uint64_t idx = mul_mod(a, x0, q);
        const uint64_t step = a; // already < q
        PairwiseAccumulator<std::complex<double>> acc;
        for (uint64_t off = 0; off < supp; ++off) {
            acc.add(shape_at(w, off) * roots[idx]);
            idx += step;
            if (idx >= q) idx -= q;
        }
        out[a] = acc.total();
    }
    return out;
}

std::complex<double> fourier_closed_form(const TrapezoidWindow& w, uint64_t a) {
    const uint64_t q = w.q;
    const uint64_t am = a % q;
    if (am == 0) throw ZeroFrequency("fourier_closed_form: a must not be 0 mod q");
    const uint64_t plateau_len = w.N + w.K - 2; // boxcar length A
    std::complex<double> om = unit_root(static_cast<int64_t>(am), q);
    std::complex<double> wk = unit_root(static_cast<int64_t>(mul_mod(am, w.K % q, q)), q);
    std::complex<double> wa = unit_root(static_cast<int64_t>(mul_mod(am, plateau_len % q, q)), q);
    uint64_t s0 = floor_mod(w.M + 2 - static_cast<int64_t>(w.K), q);
    std::complex<double> phase = unit_root(static_cast<int64_t>(mul_mod(am, s0, q)), q);
    return phase * (wk - 1.0) * (wa - 1.0) /
           (static_cast<double>(w.K) * (om - 1.0) * (om - 1.0));
}

double spectrum_magnitude(const TrapezoidWindow& w, uint64_t a) {
    const uint64_t q = w.q;
    const uint64_t am = a % q;
    if (am == 0) throw ZeroFrequency("spectrum_magnitude: a must not be 0 mod q");
    const uint64_t plateau_len = w.N + w.K - 2;
    double s1 = abs_sin_pi(am * w.K, q); // products stay < 2^64 for q < 2^32
    double s2 = abs_sin_pi(am * plateau_len, q);
    double s = abs_sin_pi(am, q);
    return s1 * s2 / (static_cast<double>(w.K) * s * s);
}

SpectrumSummary l1_norm(const TrapezoidWindow& w) {
    PairwiseAccumulator<double> acc;
    acc.add(window_mass(w)); // |fhat(0)|
    for (uint64_t a = 1; a < w.q; ++a) acc.add(spectrum_magnitude(w, a));
    SpectrumSummary s;
    s.window = w;
    s.l1 = acc.total();
    double dq = static_cast<double>(w.q);
    s.bound = 4.0 * dq / (kPi * kPi) * std::log(dq / static_cast<double>(w.K));
    s.ratio = s.l1 / s.bound;
    return s;
}

double sharp_cutoff_l1(uint64_t q, int64_t /*M*/, uint64_t N) {
    if (N == 0 || N >= q) throw Error("sharp_cutoff_l1: need 0 < N < q");
    PairwiseAccumulator<double> acc;
    acc.add(static_cast<double>(N)); // a = 0
    for (uint64_t a = 1; a < q; ++a) {
        acc.add(abs_sin_pi(a * N, q) / abs_sin_pi(a, q));
    }
    return acc.total();
}

double pom_sine_sum(double x, uint64_t n) {
    double s = 0.0;
    for (uint64_t j = 1; j <= n; ++j) {
        s += std::abs(std::sin(static_cast<double>(j) * x)) / static_cast<double>(j);
    }
    return s;
}

std::vector<double> pom_gap_profile(std::span<const uint64_t> ns, uint64_t grid) {
    if (grid < 1000) throw Error("pom_gap_profile: grid must be >= 1000");
    if (ns.empty()) return {};
    std::vector<double> sums(grid, 0.0);
    std::vector<double> xs(grid);
    for (uint64_t k = 0; k < grid; ++k) {
        xs[k] = kPi * static_cast<double>(k) / static_cast<double>(grid);
    }
    std::vector<double> gaps;
    gaps.reserve(ns.size());
    size_t next = 0;
    for (uint64_t j = 1; j <= ns.back() && next < ns.size(); ++j) {
        double dj = static_cast<double>(j);
        for (uint64_t k = 0; k < grid; ++k) {
            sums[k] += std::abs(std::sin(dj * xs[k])) / dj;
        }
        while (next < ns.size() && ns[next] == j) {
            double top = 0.0;
            for (double s : sums) top = std::max(top, s);
            gaps.push_back(top - 2.0 / kPi * std::log(dj));
            ++next;
        }
    }
    return gaps;
}

double pom_gap(uint64_t n, uint64_t grid) {
    const uint64_t ns[1] = {n};
    return pom_gap_profile(ns, grid)[0];
}

SmoothingDecomposition smoothing_decomposition_check(const CharacterTable& tab,
                                                     const TrapezoidWindow& w) {
    if (tab.q != w.q) throw Error("smoothing_decomposition_check: modulus mismatch");
    SmoothingDecomposition out;
    const uint64_t q = w.q;
    uint64_t x = floor_mod(w.support_start(), q);
    PairwiseAccumulator<std::complex<double>> smoothed, left, right;
    const uint64_t supp = w.support();
    for (uint64_t off = 0; off < supp; ++off) {
        std::complex<double> cv = tab.value(x);
        double fv = shape_at(w, off);
        smoothed.add(fv * cv);
        if (off < w.K) {
            left.add(fv * cv);
        } else if (off > w.K + w.N - 2) {
            right.add(fv * cv);
        }
        x = (x + 1 == q) ? 0 : x + 1;
    }
    // S over the plateau (M, M+N-1] via the walk route, independent of the
    // term loop above
    out.S = partial_sum(prefix_walk(tab), w.M, w.N - 1).value;
    out.smoothed = smoothed.total();
    out.left_edge = left.total();
    out.right_edge = right.total();
    out.residual = std::abs(out.S - out.smoothed + out.left_edge + out.right_edge);
    return out;
}

SmoothingDecomposition smoothing_decomposition_check(const DirichletCharacter& chi,
                                                     const TrapezoidWindow& w) {
    if (chi.is_principal())
        throw PrincipalCharacter("smoothing_decomposition_check: principal character");
    return smoothing_decomposition_check(character_table(chi), w);
}

uint64_t default_ramp(const FactoredModulus& m, double epsilon) {
    double c = pv_theorem_constant(m.cubefree);
    return floor_pow(m.q, 1.0 - c - epsilon);
}

} // namespace pvlab
