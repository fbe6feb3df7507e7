#include "pvlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "pvlab/bounds.hpp"
#include "pvlab/calibration.hpp"
#include "pvlab/charsum.hpp"
#include "pvlab/dirichlet.hpp"
#include "pvlab/harness.hpp"
#include "pvlab/modarith.hpp"
#include "pvlab/util.hpp"
#include "pvlab/window.hpp"

namespace pvlab {

namespace {

using Clock = std::chrono::steady_clock;
using Cx = std::complex<double>;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Ctx {
    bool fast;
    std::ostream& log;
    std::vector<CriterionResult> results;

    void record(int id, const std::string& name, bool pass, const std::string& detail,
                double secs) {
        results.push_back({id, name, pass, false, detail, secs});
        log << (pass ? "PASS" : "FAIL") << "  " << id << ". " << name << " -- " << detail << "  ["
            << format_g12(secs) << " s]\n";
    }
    void skip(int id, const std::string& name) {
        results.push_back({id, name, true, true, "skipped in fast mode", 0.0});
        log << "SKIP  " << id << ". " << name << " -- full grid only\n";
    }
};

// multiplicative order of the element with dlog vector dl
uint64_t element_order(const UnitGroupBasis& basis, const std::vector<uint32_t>& dl) {
    uint64_t o = 1;
    for (size_t i = 0; i < dl.size(); ++i) {
        uint64_t d = basis.generators[i].order;
        o = std::lcm(o, d / std::gcd(d, static_cast<uint64_t>(dl[i])));
    }
    return o;
}

// ---------------------------------------------------------------------------
// 1. character algebra, exact for q <= 200 and floats for q <= 500
// ---------------------------------------------------------------------------
void criterion_1(Ctx& c) {
    auto t0 = Clock::now();
    const uint64_t q_exact = c.fast ? 60 : 200;
    const uint64_t q_float = c.fast ? 150 : 500;
    uint64_t exact_fail = 0;
    double worst_float = 0.0;
    SplitMix64 rng(calib::kSeed);

    for (uint64_t q = 1; q <= q_float; ++q) {
        auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
        auto chars = enumerate_characters(basis);
        const uint64_t D = basis->group_exponent;
        const uint64_t phi = basis->phi;
        auto roots = unity_roots(D);
        const bool exact_scope = q <= q_exact;

        // per-unit multiplicative orders (for the column distribution check)
        std::vector<uint64_t> unit_order(q ? q : 1, 0);
        std::vector<uint32_t> dl(basis->generators.size());
        if (exact_scope) {
            for (uint64_t n = 0; n < q; ++n) {
                if (basis->dlog_vector(n, dl.data()))
                    unit_order[n] = element_order(*basis, {dl.begin(), dl.end()});
            }
        }

        std::vector<std::vector<uint64_t>> col_cnt; // [n][numerator]
        if (exact_scope) col_cnt.assign(q ? q : 1, std::vector<uint64_t>(D, 0));
        std::vector<Cx> col_sum(q ? q : 1, Cx{0, 0});

        for (const auto& chi : chars) {
            CharacterTable tab = character_table(chi, roots);
            const auto& num = tab.num;
            uint64_t ord = attributes(chi).order;

            if (exact_scope) {
                // multiplicativity: exact numerator arithmetic over all pairs
                for (uint64_t m = 0; m < q; ++m) {
                    for (uint64_t n = m; n < q; ++n) {
                        uint32_t lhs = num[(m * n) % q];
                        uint32_t rhs;
                        if (num[m] == CharacterTable::kNonUnit ||
                            num[n] == CharacterTable::kNonUnit) {
                            rhs = CharacterTable::kNonUnit;
                        } else {
                            uint64_t s = num[m] + num[n];
                            rhs = static_cast<uint32_t>(s >= D ? s - D : s);
                        }
                        if (lhs != rhs) ++exact_fail;
                    }
                }
                // row orthogonality: values distribute evenly over the
                // ord-th roots, so the full-period sum vanishes iff ord > 1
                std::vector<uint64_t> cnt(D, 0);
                for (uint64_t n = 0; n < q; ++n) {
                    if (num[n] != CharacterTable::kNonUnit) ++cnt[num[n]];
                }
                uint64_t step = D / ord;
                for (uint64_t k = 0; k < D; ++k) {
                    uint64_t want = (k % step == 0) ? phi / ord : 0;
                    if (cnt[k] != want) ++exact_fail;
                }
                for (uint64_t n = 0; n < q; ++n) {
                    if (num[n] != CharacterTable::kNonUnit) ++col_cnt[n][num[n]];
                }
            }

            // float checks (q <= q_float): row sum, column accumulation,
            // sampled multiplicativity and periodicity through the API
            PairwiseAccumulator<Cx> row;
            for (uint64_t n = 0; n < q; ++n) {
                Cx v = tab.value(n);
                row.add(v);
                col_sum[n] += v;
            }
            if (!chi.is_principal()) worst_float = std::max(worst_float, std::abs(row.total()));
            for (int s = 0; s < 8; ++s) {
                int64_t m = static_cast<int64_t>(rng.below(3 * q + 1)) - static_cast<int64_t>(q);
                int64_t n = static_cast<int64_t>(rng.below(3 * q + 1)) - static_cast<int64_t>(q);
                Cx lhs = unity_eval(chi.eval(m * n));
                Cx rhs = unity_eval(chi.eval(m)) * unity_eval(chi.eval(n));
                worst_float = std::max(worst_float, std::abs(lhs - rhs));
                if (!(chi.eval(m + static_cast<int64_t>(q)) == chi.eval(m))) ++exact_fail;
            }
        }

        if (exact_scope) {
            for (uint64_t n = 0; n < q; ++n) {
                if (unit_order[n] == 0) continue;
                uint64_t on = unit_order[n];
                uint64_t step = D / on;
                for (uint64_t k = 0; k < D; ++k) {
                    uint64_t want = (k % step == 0) ? phi / on : 0;
                    if (col_cnt[n][k] != want) ++exact_fail;
                }
            }
        }
        for (uint64_t n = 0; n < q; ++n) {
            double target = (q <= 2 || n == 1 % q) ? static_cast<double>(phi) : 0.0;
            if (q == 1) target = 1.0;
            worst_float = std::max(worst_float, std::abs(col_sum[n] - target));
        }
    }

    bool pass = exact_fail == 0 && worst_float <= 1e-9;
    std::ostringstream det;
    det << "exact defects " << exact_fail << ", worst float defect " << format_g12(worst_float)
        << " (<= 1e-9)";
    c.record(1, "character algebra (multiplicativity, periodicity, orthogonality)", pass,
             det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 2. |tau(chi)|^2 = q for primitive chi, q <= 2000; imprimitive negative
//    control
// ---------------------------------------------------------------------------
void criterion_2(Ctx& c) {
    auto t0 = Clock::now();
    const uint64_t q_max = c.fast ? 400 : 2000;
    double worst = 0.0;
    uint64_t tested = 0;
    for (uint64_t q = 3; q <= q_max; ++q) {
        auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
        auto chars = enumerate_characters(basis);
        auto roots = unity_roots(basis->group_exponent);
        auto eq = root_table(q);
        for (const auto& chi : chars) {
            if (!is_primitive(chi)) continue;
            if (chi.conjugate().label() < chi.label()) continue; // |tau| shared in a pair
            CharacterTable tab = character_table(chi, roots);
            Cx tau = gauss_sum(tab, eq);
            worst = std::max(worst, std::abs(std::norm(tau) - static_cast<double>(q)));
            ++tested;
        }
    }
    // negative control: some imprimitive non-principal character must break
    // the identity
    bool control = false;
    for (uint64_t q = 3; q <= 50 && !control; ++q) {
        auto chars = enumerate_characters(factorize(q));
        for (const auto& chi : chars) {
            if (chi.is_principal() || is_primitive(chi)) continue;
            double defect = std::abs(std::norm(gauss_sum(chi)) - static_cast<double>(q));
            if (defect > 1e-3) { control = true; break; }
        }
    }
    bool pass = worst <= 1e-6 && control;
    std::ostringstream det;
    det << tested << " primitive pairs, worst ||tau|^2 - q| = " << format_g12(worst)
        << " (<= 1e-6), negative control " << (control ? "found" : "MISSING");
    c.record(2, "Gauss sum magnitude", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 3. Gauss expansion identity on seeded random primitive cases
// ---------------------------------------------------------------------------
void criterion_3(Ctx& c) {
    auto t0 = Clock::now();
    const int cases = c.fast ? 20 : 100;
    SplitMix64 rng(calib::kSeed + 3);
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
        uint64_t q;
        do {
            q = next_prime(3 + rng.below(4900));
        } while (q > 5000);
        auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
        auto chi = character_from_label(basis, 1 + rng.below(q - 2));
        int64_t M = static_cast<int64_t>(rng.below(3 * q)) - static_cast<int64_t>(q);
        uint64_t N = 1 + rng.below(q - 1);
        GaussExpansionCheck chk = gauss_expansion_check(chi, M, N);
        worst = std::max(worst, chk.diff);
    }
    bool pass = worst <= 1e-6;
    std::ostringstream det;
    det << cases << " cases, worst |lhs-rhs| = " << format_g12(worst) << " (<= 1e-6)";
    c.record(3, "Gauss expansion identity", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 4. calipers diameter == O(q^2) brute force, exhaustive
// ---------------------------------------------------------------------------
void criterion_4(Ctx& c) {
    auto t0 = Clock::now();
    const uint64_t q_max = c.fast ? 80 : 200;
    uint64_t mismatches = 0, tested = 0;
    double worst_attain = 0.0;
    for (uint64_t q = 3; q <= q_max; ++q) {
        auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
        auto chars = enumerate_characters(basis);
        auto roots = unity_roots(basis->group_exponent);
        for (const auto& chi : chars) {
            if (chi.is_principal()) continue;
            if (chi.conjugate().label() < chi.label()) continue; // mirrored walk
            CharacterTable tab = character_table(chi, roots);
            PrefixWalk w = prefix_walk(tab);
            double brute = 0.0;
            for (size_t s = 0; s < w.points.size(); ++s) {
                for (size_t t = s + 1; t < w.points.size(); ++t) {
                    double dx = w.points[t].real() - w.points[s].real();
                    double dy = w.points[t].imag() - w.points[s].imag();
                    double d2 = dx * dx + dy * dy;
                    if (d2 > brute) brute = d2;
                }
            }
            Diameter dia = point_set_diameter(w.points);
            if (dia.dist2 != brute) ++mismatches;
            // the reported (M, N) must attain the maximum
            IntervalSumRecord rec = max_interval_sum(w, attributes(chi).order <= 2);
            double attain = std::abs(partial_sum(w, rec.M, rec.N).abs - std::sqrt(brute));
            worst_attain = std::max(worst_attain, attain);
            ++tested;
        }
    }
    bool pass = mismatches == 0 && worst_attain <= 1e-9;
    std::ostringstream det;
    det << tested << " walks, " << mismatches << " diameter mismatches, attainment defect "
        << format_g12(worst_attain);
    c.record(4, "rotating calipers vs brute force", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 5. closed-form spectrum == DFT oracle on seeded windows
// ---------------------------------------------------------------------------
void criterion_5(Ctx& c) {
    auto t0 = Clock::now();
    const std::vector<uint64_t> sizes =
        c.fast ? std::vector<uint64_t>{64, 256} : std::vector<uint64_t>{64, 256, 1024, 4096};
    const int cases = c.fast ? 16 : 50;
    SplitMix64 rng(calib::kSeed + 5);
    double worst_rel = 0.0;
    for (int i = 0; i < cases; ++i) {
        uint64_t q = sizes[i % sizes.size()];
        uint64_t K = 1 + rng.below(q / 8);
        uint64_t N = 2 + rng.below(q - 2 * K - 3);
        int64_t M = static_cast<int64_t>(rng.below(2 * q)) - static_cast<int64_t>(q);
        TrapezoidWindow w = make_window(q, M, N, K);
        auto dft = fourier_dft(w);
        double tol_scale = static_cast<double>(q);
        double worst_here = std::abs(dft[0] - Cx{window_mass(w), 0.0}) / tol_scale;
        for (uint64_t a = 1; a < q; ++a) {
            double d = std::abs(dft[a] - fourier_closed_form(w, a)) / tol_scale;
            worst_here = std::max(worst_here, d);
        }
        worst_rel = std::max(worst_rel, worst_here);
    }
    bool pass = worst_rel <= 1e-9;
    std::ostringstream det;
    det << cases << " windows, worst |closed - dft|/q = " << format_g12(worst_rel)
        << " (<= 1e-9)";
    c.record(5, "closed-form spectrum vs DFT oracle", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 6. smoothing decomposition identity on seeded (chi, window) pairs
// ---------------------------------------------------------------------------
void criterion_6(Ctx& c) {
    auto t0 = Clock::now();
    const int cases = c.fast ? 20 : 100;
    SplitMix64 rng(calib::kSeed + 6);
    double worst = 0.0;
    for (int i = 0; i < cases; ++i) {
        uint64_t q;
        do {
            q = next_prime(17 + rng.below(4900));
        } while (q > 5000);
        auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
        auto chi = character_from_label(basis, 1 + rng.below(q - 2));
        uint64_t K = 1 + rng.below(q / 8);
        uint64_t N = 2 + rng.below(q - 2 * K - 3);
        int64_t M = static_cast<int64_t>(rng.below(2 * q)) - static_cast<int64_t>(q);
        SmoothingDecomposition d =
            smoothing_decomposition_check(chi, make_window(q, M, N, K));
        worst = std::max(worst, d.residual / static_cast<double>(q));
    }
    bool pass = worst <= 1e-9;
    std::ostringstream det;
    det << cases << " pairs, worst residual/q = " << format_g12(worst) << " (<= 1e-9)";
    c.record(6, "smoothing decomposition identity", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 7. trapezoid l1 < sharp-cutoff l1 and decreasing l1/bound ratio
// ---------------------------------------------------------------------------
void criterion_7(Ctx& c) {
    auto t0 = Clock::now();
    const std::vector<uint64_t> grid =
        c.fast ? std::vector<uint64_t>{1000, 10000} : std::vector<uint64_t>{1000, 10000, 100000};
    bool improves = true, decreasing = true;
    std::ostringstream det;
    double prev_ratio = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        uint64_t q = grid[i];
        uint64_t N = q / 3, K = floor_pow(q, 0.7);
        SpectrumSummary s = l1_norm(make_window(q, 0, N, K));
        double sharp = sharp_cutoff_l1(q, 0, N);
        if (!(s.l1 < sharp)) improves = false;
        if (i > 0 && !(s.ratio <= prev_ratio + calib::kL1RatioNoise)) decreasing = false;
        prev_ratio = s.ratio;
        det << "q=" << q << " l1/sharp=" << format_g12(s.l1 / sharp)
            << " ratio=" << format_g12(s.ratio) << (i + 1 < grid.size() ? "; " : "");
    }
    c.record(7, "l1 improvement mechanism", improves && decreasing, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 8. l1 model fit within the calibrated band
// ---------------------------------------------------------------------------
void criterion_8(Ctx& c) {
    if (c.fast) { c.skip(8, "l1 model fit"); return; }
    auto t0 = Clock::now();
    std::vector<L1FitPoint> pts;
    for (int e = 10; e <= 17; ++e) {
        uint64_t q = 1ULL << e;
        uint64_t N = q / 3, K = floor_pow(q, 0.7);
        SpectrumSummary s = l1_norm(make_window(q, 0, N, K));
        pts.push_back({static_cast<double>(q), static_cast<double>(K), s.l1});
    }
    L1Fit fit = fit_l1_model(pts);
    bool pass = fit.A >= calib::kL1FitALo && fit.A <= calib::kL1FitAHi;
    std::ostringstream det;
    det << "A = " << format_g12(fit.A) << " in [" << calib::kL1FitALo << ", " << calib::kL1FitAHi
        << "], B = " << format_g12(fit.B) << ", rms = " << format_g12(fit.rms)
        << " (4/pi^2 = " << format_g12(4.0 / (kPi * kPi)) << ")";
    c.record(8, "l1 model fit", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 9. classical uniform bound with constant 1 at desk scale
// ---------------------------------------------------------------------------
void criterion_9(Ctx& c) {
    auto t0 = Clock::now();
    const uint64_t q_max = c.fast ? 300 : 1000;
    double worst = 0.0;
    uint64_t tested = 0;
    for (uint64_t q = 3; q <= q_max; ++q) {
        auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
        auto chars = enumerate_characters(basis);
        auto roots = unity_roots(basis->group_exponent);
        double cap = std::sqrt(static_cast<double>(q)) * std::log(static_cast<double>(q));
        for (const auto& chi : chars) {
            if (!is_primitive(chi) || chi.is_principal()) continue;
            if (chi.conjugate().label() < chi.label()) continue;
            CharacterTable tab = character_table(chi, roots);
            IntervalSumRecord rec =
                max_interval_sum(prefix_walk(tab), attributes(chi).order <= 2);
            worst = std::max(worst, rec.abs / cap);
            ++tested;
        }
    }
    bool pass = worst <= 1.0;
    std::ostringstream det;
    det << tested << " primitive pairs, max |S| / (sqrt(q) ln q) = " << format_g12(worst)
        << " (<= 1)";
    c.record(9, "classical uniform bound sanity", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 10. sine prefix-sum gap against the calibrated ceilings
// ---------------------------------------------------------------------------
void criterion_10(Ctx& c) {
    auto t0 = Clock::now();
    const uint64_t grid = c.fast ? 2000 : 10000;
    const std::vector<uint64_t> ns = c.fast ? std::vector<uint64_t>{10, 100, 1000}
                                            : std::vector<uint64_t>{10, 100, 1000, 10000};
    std::vector<double> gaps = pom_gap_profile(ns, grid);
    double worst = *std::max_element(gaps.begin(), gaps.end());
    double stab = gaps.back() - gaps[1]; // gap(max n) - gap(100)
    bool pass = worst <= calib::kPomGapTailCeiling && stab <= calib::kPomGapStabilization;
    std::ostringstream det;
    det << "max gap = " << format_g12(worst) << " (<= " << calib::kPomGapTailCeiling
        << "), stabilization = " << format_g12(stab) << " (<= "
        << calib::kPomGapStabilization << ")";
    c.record(10, "sine prefix-sum gap", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 11. congruence energy: brute-force agreement and calibrated constant
// ---------------------------------------------------------------------------
uint64_t energy_brute(uint64_t q, int64_t M, uint64_t N, uint64_t U) {
    std::vector<uint64_t> prods;
    uint64_t n0 = floor_mod(M, q);
    for (uint64_t j = 0; j < N; ++j) {
        n0 = (n0 + 1 == q) ? 0 : n0 + 1;
        for (uint64_t u = 1; u <= U; ++u) prods.push_back(mul_mod(n0, u, q));
    }
    uint64_t cnt = 0;
    for (uint64_t a : prods) {
        for (uint64_t b : prods) {
            if (a == b) ++cnt;
        }
    }
    return cnt;
}

void criterion_11(Ctx& c) {
    auto t0 = Clock::now();
    const int small_cases = c.fast ? 15 : 50;
    const int cfi_cases = c.fast ? 10 : 50;
    uint64_t mismatches = 0;
    // (a) hashed count == O((NU)^2) brute force, NU <= 200
    {
        SplitMix64 rng(calib::kSeed + 11);
        for (int i = 0; i < small_cases; ++i) {
            uint64_t q = next_prime(500 + rng.below(9500));
            uint64_t U = 1 + rng.below(14);
            uint64_t N = 1 + rng.below(200 / U);
            int64_t M = static_cast<int64_t>(rng.below(q));
            if (congruence_energy(q, M, N, U).count != energy_brute(q, M, N, U)) ++mismatches;
        }
    }
    // (b) the calibrated sweep: count <= C_FI * N U ln q (identical seeded
    // configurations as the calibration run)
    double worst_norm = 0.0;
    {
        SplitMix64 rng(calib::kSeed);
        for (int i = 0; i < cfi_cases; ++i) {
            uint64_t q = next_prime(1000 + rng.below(99000));
            uint64_t U = 1 + rng.below(30);
            uint64_t maxN = (q - 1) / (2 * U);
            uint64_t N = 1 + rng.below(std::min<uint64_t>(maxN, 20000));
            int64_t M = static_cast<int64_t>(rng.below(q));
            worst_norm = std::max(worst_norm, congruence_energy(q, M, N, U).normalized);
        }
    }
    bool pass = mismatches == 0 && worst_norm <= calib::kEnergyCfi;
    std::ostringstream det;
    det << small_cases << " brute-force configs, " << mismatches << " mismatches; max count/(NU ln q) = "
        << format_g12(worst_norm) << " (<= " << calib::kEnergyCfi << ")";
    c.record(11, "congruence energy", pass, det.str(), elapsed(t0));
}

// ---------------------------------------------------------------------------
// 12. long-sum boundedness over the full prime family
// ---------------------------------------------------------------------------
void criterion_12(Ctx& c) {
    if (c.fast) { c.skip(12, "long-sum boundedness"); return; }
    auto t0 = Clock::now();
    double worst = 0.0;
    uint64_t tested = 0;
    std::vector<double> ratios;
    for (uint64_t q = 503; q <= 3000; q = next_prime(q + 1)) {
        auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
        auto roots = unity_roots(basis->group_exponent);
        double c_exp = pv_theorem_constant(basis->modulus.cubefree);
        uint64_t N = floor_pow(q, 1.0 - c_exp - 0.05);
        double sq = std::sqrt(static_cast<double>(q));
        for (uint64_t label = 1; label <= (q - 1) / 2; ++label) { // one per conjugate pair
            auto chi = character_from_label(basis, label);
            CharacterTable tab = character_table(chi, roots);
            double ratio = max_windowed_abs(prefix_walk(tab), N) / sq;
            ratios.push_back(ratio);
            worst = std::max(worst, ratio);
            ++tested;
        }
    }
    std::sort(ratios.begin(), ratios.end());
    bool pass = worst <= calib::kLongSumRatioCeiling;
    std::ostringstream det;
    det << tested << " characters, max ratio = " << format_g12(worst) << " (<= "
        << calib::kLongSumRatioCeiling << "), p50 = " << format_g12(ratios[ratios.size() / 2])
        << ", p99 = " << format_g12(ratios[ratios.size() * 99 / 100]);
    c.record(12, "long-sum boundedness", pass, det.str(), elapsed(t0));
}

} // namespace

AcceptanceOutcome run_acceptance(bool fast, std::ostream& log) {
    auto t0 = Clock::now();
    Ctx ctx{fast, log, {}};
    criterion_1(ctx);
    criterion_2(ctx);
    criterion_3(ctx);
    criterion_4(ctx);
    criterion_5(ctx);
    criterion_6(ctx);
    criterion_7(ctx);
    criterion_8(ctx);
    criterion_9(ctx);
    criterion_10(ctx);
    criterion_11(ctx);
    criterion_12(ctx);

    AcceptanceOutcome out;
    out.total_seconds = elapsed(t0);
    // 13. wall-clock budget for the suite itself
    double budget = fast ? 60.0 : 600.0;
    bool pass13 = out.total_seconds <= budget;
    ctx.record(13, "runtime budget", pass13,
               format_g12(out.total_seconds) + " s (<= " + format_g12(budget) + " s)", 0.0);
    out.results = std::move(ctx.results);
    return out;
}

} // namespace pvlab
