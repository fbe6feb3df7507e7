#pragma once

/* Sweep engine and persistence.  A sweep walks a modulus range, selects
 * characters, measures the per-character ratios and per-modulus spectrum
 * numbers, and emits a report with a fitted l1 model and family maxima.
 * Everything is deterministic given (config, seed): workers are pure, rows
 * merge in (q, label) order, and all sampling uses SplitMix64 streams
 * derived from the seed, so the report bytes do not depend on the number
 * of threads. */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pvlab/bounds.hpp"
#include "pvlab/charsum.hpp"
#include "pvlab/window.hpp"

namespace pvlab {

enum class QFilter { primes, all, cubefree, non_cubefree };
enum class CharFilter { all_primitive, real_primitive, sample_k };

const char* to_string(QFilter f);
const char* to_string(CharFilter f);
QFilter q_filter_from_string(const std::string& s);       // throws ConfigError
CharFilter char_filter_from_string(const std::string& s); // throws ConfigError

struct SweepConfig {
    uint64_t q_lo = 3;
    uint64_t q_hi = 100;
    QFilter q_filter = QFilter::primes;
    CharFilter char_filter = CharFilter::all_primitive;
    double k_exponent = 0.7;
    double epsilon = 0.05;
    uint64_t seed = 42;
    uint32_t parallelism = 1;
    std::string output_path;
    uint64_t sample_count = 8; // characters per modulus under sample_k

    void validate() const; // throws ConfigError
};

// One row per (q, character).  l1 / l1_bound are per-modulus (window
// N = floor(q/3), K = floor(q^{k_exponent})) and NaN when that window is
// not admissible at small q.
struct SweepRow {
    uint64_t q = 0;
    uint64_t label = 0;
    double pv_constant = 0.0;
    double theorem_ratio = 0.0;
    double long_sum_ratio = 0.0;
    double l1 = 0.0;
    double l1_bound = 0.0;
    double gauss_defect = 0.0;

    bool operator==(const SweepRow&) const = default;
};

struct SweepSummary {
    double fit_A = 0.0, fit_B = 0.0, fit_rms = 0.0; // NaN when too few moduli
    double max_pv_constant = 0.0;
    double max_theorem_ratio = 0.0;
    double max_long_sum_ratio = 0.0;
    double max_gauss_defect = 0.0;
    uint64_t rows = 0;
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepRow> rows; // sorted by (q, label)
    SweepSummary summary;
};

SweepReport run_sweep(const SweepConfig& config);

// Summary is a pure function of (config, rows); run_sweep uses this.
SweepSummary summarize(const SweepConfig& config, const std::vector<SweepRow>& rows);

// Ordinary least squares for  l1 ~ A q ln(q/K) + B q; needs >= 5 distinct q
// (throws DegenerateDesign).
struct L1FitPoint {
    double q, K, l1;
};
struct L1Fit {
    double A, B, rms;
};
L1Fit fit_l1_model(std::span<const L1FitPoint> pts);

enum class ReportFormat { csv, json };

std::string report_to_csv(const SweepReport& report);
nlohmann::json report_to_json(const SweepReport& report); // schema "pvlab-1"
SweepReport report_from_json(const nlohmann::json& j);

// Refuses to overwrite an existing file unless force; throws IoError.
void write_report(const SweepReport& report, ReportFormat format, const std::string& path,
                  bool force);

SweepConfig parse_config_toml(const std::string& text); // throws ConfigError
SweepConfig load_config_toml(const std::string& path);  // throws IoError / ConfigError

// Record serializations shared with the CLI.
std::string ratio_record_csv_header();
std::string ratio_record_csv(const RatioRecord& r);
nlohmann::json interval_record_json(const IntervalSumRecord& r, uint64_t q, uint64_t label);
std::string spectrum_summary_csv_header();
std::string spectrum_summary_csv(const SpectrumSummary& s);

} // namespace pvlab
