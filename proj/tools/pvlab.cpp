/* pvlab: command-line front end for the character-sum laboratory. */

#include <complex>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "pvlab/acceptance.hpp"
#include "pvlab/bounds.hpp"
#include "pvlab/charsum.hpp"
#include "pvlab/dirichlet.hpp"
#include "pvlab/harness.hpp"
#include "pvlab/modarith.hpp"
#include "pvlab/window.hpp"

namespace {

using namespace pvlab;

// exit codes: 0 ok, 1 invariant violation detected, 2 usage/config, 3 I/O
constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::shared_ptr<const UnitGroupBasis> basis_for(uint64_t q) {
    return std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
}

int cmd_chars(uint64_t q, bool primitive_only) {
    auto basis = basis_for(q);
    for (const auto& chi : enumerate_characters(basis)) {
        uint64_t cond = conductor(chi);
        bool prim = cond == q;
        if (primitive_only && !prim) continue;
        CharacterAttributes at = attributes(chi);
        std::cout << q << ':' << chi.label() << " conductor=" << cond
                  << " parity=" << (at.parity > 0 ? "+1" : "-1") << " order=" << at.order
                  << (prim ? " primitive" : " imprimitive")
                  << (chi.is_principal() ? " principal" : "") << '\n';
    }
    return kExitOk;
}

int cmd_sum(uint64_t q, uint64_t label, int64_t m, uint64_t n) {
    auto chi = character_from_label(basis_for(q), label);
    IntervalSumRecord rec = partial_sum(chi, m, n);
    std::cout << interval_record_json(rec, q, label).dump() << '\n';
    return kExitOk;
}

int cmd_max(uint64_t q, uint64_t label) {
    auto chi = character_from_label(basis_for(q), label);
    IntervalSumRecord rec = max_interval_sum(chi);
    auto j = interval_record_json(rec, q, label);
    j["pv_constant"] = pv_constant(chi);
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int cmd_gauss(uint64_t q, uint64_t label) {
    auto chi = character_from_label(basis_for(q), label);
    std::complex<double> tau = gauss_sum(chi);
    nlohmann::json j{{"q", q},
                     {"label", label},
                     {"re", tau.real()},
                     {"im", tau.imag()},
                     {"abs", std::abs(tau)},
                     {"norm_defect", std::abs(std::norm(tau) - static_cast<double>(q))},
                     {"primitive", is_primitive(chi)}};
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int cmd_window(uint64_t q, int64_t m, uint64_t n, uint64_t k, bool want_l1, bool check_dft) {
    TrapezoidWindow w = make_window(q, m, n, k);
    std::cout << "mass=" << format_g12(window_mass(w)) << " support=" << w.support() << '\n';
    if (want_l1) {
        SpectrumSummary s = l1_norm(w);
        std::cout << spectrum_summary_csv_header() << spectrum_summary_csv(s);
    }
    if (check_dft) {
        auto dft = fourier_dft(w);
        double worst = std::abs(dft[0] - std::complex<double>{window_mass(w), 0.0});
        for (uint64_t a = 1; a < q; ++a) {
            worst = std::max(worst, std::abs(dft[a] - fourier_closed_form(w, a)));
        }
        double tol = 1e-9 * static_cast<double>(q);
        std::cout << "dft_defect=" << format_g12(worst) << " tol=" << format_g12(tol) << '\n';
        if (worst > tol) {
            std::cerr << "pvlab: closed form disagrees with the DFT oracle\n";
            return kExitInvariant;
        }
    }
    return kExitOk;
}

int cmd_energy(uint64_t q, int64_t m, uint64_t n, uint64_t u) {
    EnergyCount e = congruence_energy(q, m, n, u);
    nlohmann::json j{{"q", e.q}, {"M", e.M},         {"N", e.N},
                     {"U", e.U}, {"count", e.count}, {"normalized", e.normalized}};
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int cmd_verify(bool fast) {
    AcceptanceOutcome out = run_acceptance(fast, std::cout);
    std::cout << (out.all_passed() ? "VERIFY PASS" : "VERIFY FAIL") << " ("
              << format_g12(out.total_seconds) << " s)\n";
    return out.all_passed() ? kExitOk : kExitInvariant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pvlab: a numerical laboratory for character sums, Gauss sums and "
                 "trapezoid-window spectra"};
    app.require_subcommand(1);
    int rc = kExitOk;

    // chars
    auto* chars = app.add_subcommand("chars", "list the characters mod q");
    uint64_t chars_q = 0;
    bool chars_prim = false;
    chars->add_option("--q", chars_q, "modulus")->required();
    chars->add_flag("--primitive-only", chars_prim, "only primitive characters");
    chars->callback([&] { rc = cmd_chars(chars_q, chars_prim); });

    // sum
    auto* sum = app.add_subcommand("sum", "interval sum S(chi, M, N)");
    uint64_t sum_q = 0, sum_label = 0, sum_n = 0;
    int64_t sum_m = 0;
    sum->add_option("--q", sum_q, "modulus")->required();
    sum->add_option("--label", sum_label, "character label")->required();
    sum->add_option("--m", sum_m, "interval start M (sum over (M, M+N])")->required();
    sum->add_option("--n", sum_n, "interval length N")->required();
    sum->callback([&] { rc = cmd_sum(sum_q, sum_label, sum_m, sum_n); });

    // max
    auto* mx = app.add_subcommand("max", "maximal interval sum over all M, N < q");
    uint64_t max_q = 0, max_label = 0;
    mx->add_option("--q", max_q, "modulus")->required();
    mx->add_option("--label", max_label, "character label")->required();
    mx->callback([&] { rc = cmd_max(max_q, max_label); });

    // gauss
    auto* gs = app.add_subcommand("gauss", "Gauss sum tau(chi)");
    uint64_t gauss_q = 0, gauss_label = 0;
    gs->add_option("--q", gauss_q, "modulus")->required();
    gs->add_option("--label", gauss_label, "character label")->required();
    gs->callback([&] { rc = cmd_gauss(gauss_q, gauss_label); });

    // window
    auto* win = app.add_subcommand("window", "trapezoid window diagnostics");
    uint64_t win_q = 0, win_n = 0, win_k = 0;
    int64_t win_m = 0;
    bool win_l1 = false, win_dft = false;
    win->add_option("--q", win_q, "modulus")->required();
    win->add_option("--m", win_m, "left edge parameter M")->required();
    win->add_option("--n", win_n, "length parameter N")->required();
    win->add_option("--k", win_k, "ramp length K")->required();
    win->add_flag("--l1", win_l1, "print the spectrum l1 summary");
    win->add_flag("--check-dft", win_dft, "validate the closed form against the DFT oracle");
    win->callback([&] { rc = cmd_window(win_q, win_m, win_n, win_k, win_l1, win_dft); });

    // energy
    auto* en = app.add_subcommand("energy", "congruence energy count");
    uint64_t en_q = 0, en_n = 0, en_u = 0;
    int64_t en_m = 0;
    en->add_option("--q", en_q, "modulus")->required();
    en->add_option("--m", en_m, "interval start M")->required();
    en->add_option("--n", en_n, "interval length N")->required();
    en->add_option("--u", en_u, "multiplier range U")->required();
    en->callback([&] { rc = cmd_energy(en_q, en_m, en_n, en_u); });

    // sweep
    auto* sw = app.add_subcommand("sweep", "measurement sweep over a modulus range");
    std::string sw_config, sw_out, sw_filter, sw_chars, sw_format = "csv";
    uint64_t sw_lo = 0, sw_hi = 0, sw_seed = 0, sw_samples = 0;
    unsigned sw_jobs = 0;
    double sw_kexp = 0.0, sw_eps = 0.0;
    bool sw_force = false;
    sw->add_option("--config", sw_config, "TOML config file (flat keys mirroring the config)");
    sw->add_option("--q-lo", sw_lo, "lowest modulus");
    sw->add_option("--q-hi", sw_hi, "highest modulus");
    sw->add_option("--filter", sw_filter, "modulus filter: primes|all|cubefree|non_cubefree");
    sw->add_option("--chars", sw_chars,
                   "character filter: all_primitive|real_primitive|sample_k");
    sw->add_option("--k-exponent", sw_kexp, "window ramp exponent (default 0.7)");
    sw->add_option("--epsilon", sw_eps, "long-sum exponent offset (default 0.05)");
    sw->add_option("--sample-count", sw_samples, "characters per modulus under sample_k");
    sw->add_option("--out", sw_out, "output path");
    sw->add_option("--format", sw_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sw->add_option("--jobs", sw_jobs, "worker threads");
    sw->add_option("--seed", sw_seed, "PRNG seed");
    sw->add_flag("--force", sw_force, "overwrite an existing output file");
    sw->callback([&] {
        SweepConfig cfg;
        if (!sw_config.empty()) cfg = load_config_toml(sw_config);
        if (sw->count("--q-lo")) cfg.q_lo = sw_lo;
        if (sw->count("--q-hi")) cfg.q_hi = sw_hi;
        if (sw->count("--filter")) cfg.q_filter = q_filter_from_string(sw_filter);
        if (sw->count("--chars")) cfg.char_filter = char_filter_from_string(sw_chars);
        if (sw->count("--k-exponent")) cfg.k_exponent = sw_kexp;
        if (sw->count("--epsilon")) cfg.epsilon = sw_eps;
        if (sw->count("--sample-count")) cfg.sample_count = sw_samples;
        if (sw->count("--seed")) cfg.seed = sw_seed;
        if (sw->count("--jobs")) cfg.parallelism = sw_jobs;
        if (sw->count("--out")) cfg.output_path = sw_out;
        if (cfg.output_path.empty()) throw ConfigError("sweep: an output path is required");
        cfg.validate();
        SweepReport report = run_sweep(cfg);
        ReportFormat fmt = (sw_format == "json") ? ReportFormat::json : ReportFormat::csv;
        write_report(report, fmt, cfg.output_path, sw_force);
        std::cout << "rows=" << report.summary.rows
                  << " max_pv_constant=" << format_g12(report.summary.max_pv_constant)
                  << " max_long_sum_ratio=" << format_g12(report.summary.max_long_sum_ratio)
                  << " fit_A=" << format_g12(report.summary.fit_A) << " -> " << cfg.output_path
                  << '\n';
    });

    // verify
    auto* vf = app.add_subcommand("verify", "run the verification suite");
    bool vf_fast = false;
    vf->add_flag("--fast", vf_fast, "reduced-range subset (about a minute)");
    vf->callback([&] { rc = cmd_verify(vf_fast); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "pvlab: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigError& e) {
        std::cerr << "pvlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "pvlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "pvlab: " << e.what() << '\n';
        return kExitUsage;
    }
    return rc;
}
