#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pvlab/harness.hpp"

using namespace pvlab;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.q_lo = 3;
    cfg.q_hi = 50;
    cfg.q_filter = QFilter::primes;
    cfg.char_filter = CharFilter::all_primitive;
    cfg.parallelism = 1;
    return cfg;
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name)
        : path((std::filesystem::temp_directory_path() / name).string()) {
        std::filesystem::remove(path);
    }
    ~TempPath() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("l1 model fit recovers synthetic coefficients") {
    std::vector<L1FitPoint> pts;
    for (int e = 8; e <= 14; ++e) {
        double q = std::pow(2.0, e);
        double k = std::floor(std::pow(q, 0.7));
        pts.push_back({q, k, 0.4 * q * std::log(q / k) + 1.0 * q});
    }
    L1Fit fit = fit_l1_model(pts);
    CHECK(fit.A == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(fit.B == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.rms <= 1e-6);

    std::vector<L1FitPoint> single = {{1024, 128, 5000}, {1024, 128, 5001}};
    CHECK_THROWS_AS(fit_l1_model(single), DegenerateDesign);
    std::vector<L1FitPoint> four(pts.begin(), pts.begin() + 4);
    CHECK_THROWS_AS(fit_l1_model(four), DegenerateDesign);
}

TEST_CASE("sweep row counts for prime moduli") {
    SweepConfig cfg = small_config();
    SweepReport rep = run_sweep(cfg);

    uint64_t expected = 0;
    for (uint64_t q = 3; q <= 50; ++q) {
        if (is_prime64(q)) expected += euler_phi(factorize(q)) - 1; // all non-principal primitive
    }
    CHECK(rep.rows.size() == expected);
    CHECK(rep.summary.rows == expected);

    for (size_t i = 1; i < rep.rows.size(); ++i) {
        bool ordered = rep.rows[i - 1].q < rep.rows[i].q ||
                       (rep.rows[i - 1].q == rep.rows[i].q &&
                        rep.rows[i - 1].label < rep.rows[i].label);
        CHECK(ordered);
    }
    // derived columns recompute from each other: theorem = pv / (4c/pi^2)
    for (const SweepRow& r : rep.rows) {
        double c = 0.25; // primes are cubefree
        CHECK(r.theorem_ratio ==
              doctest::Approx(r.pv_constant / (4.0 * c / (kPi * kPi))).epsilon(1e-12));
        CHECK(r.gauss_defect <= 1e-6); // primes: every non-principal chi is primitive
    }
}

TEST_CASE("sweep determinism across parallelism") {
    SweepConfig cfg = small_config();
    cfg.q_hi = 60;
    SweepReport a = run_sweep(cfg);
    cfg.parallelism = 4;
    SweepReport b = run_sweep(cfg);
    cfg.parallelism = 1; // report bytes must not depend on the thread count
    b.config.parallelism = 1;
    a.config.parallelism = 1;
    CHECK(report_to_csv(a) == report_to_csv(b));
    CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("modulus filters") {
    SweepConfig cfg = small_config();
    cfg.q_lo = 3;
    cfg.q_hi = 100;
    cfg.q_filter = QFilter::cubefree;
    cfg.char_filter = CharFilter::sample_k;
    cfg.sample_count = 2;
    SweepReport rep = run_sweep(cfg);
    for (const SweepRow& r : rep.rows) {
        CHECK(factorize(r.q).cubefree);
    }
    cfg.q_filter = QFilter::non_cubefree;
    SweepReport rep2 = run_sweep(cfg);
    for (const SweepRow& r : rep2.rows) {
        CHECK_FALSE(factorize(r.q).cubefree);
    }
    // 8, 16, 27, 32, ... are the excluded moduli
    for (const SweepRow& r : rep.rows) {
        CHECK(r.q % 8 != 0);
        CHECK(r.q % 27 != 0);
    }
}

TEST_CASE("sampling is deterministic and bounded") {
    SweepConfig cfg = small_config();
    cfg.q_lo = 97;
    cfg.q_hi = 97;
    cfg.char_filter = CharFilter::sample_k;
    cfg.sample_count = 5;
    SweepReport a = run_sweep(cfg);
    SweepReport b = run_sweep(cfg);
    CHECK(a.rows.size() == 5);
    CHECK(report_to_csv(a) == report_to_csv(b));
    cfg.seed = 43;
    SweepReport c = run_sweep(cfg);
    bool same = report_to_csv(a) == report_to_csv(c);
    CHECK_FALSE(same); // a different seed picks a different sample
}

TEST_CASE("summary is recomputable from rows") {
    SweepConfig cfg = small_config();
    cfg.q_hi = 40;
    SweepReport rep = run_sweep(cfg);
    SweepSummary again = summarize(cfg, rep.rows);
    CHECK(again.rows == rep.summary.rows);
    CHECK(again.max_pv_constant == rep.summary.max_pv_constant);
    CHECK(again.max_theorem_ratio == rep.summary.max_theorem_ratio);
    CHECK(again.max_long_sum_ratio == rep.summary.max_long_sum_ratio);
    CHECK(again.max_gauss_defect == rep.summary.max_gauss_defect);
    CHECK((std::isnan(again.fit_A) == std::isnan(rep.summary.fit_A)));
}

TEST_CASE("csv shape") {
    SweepConfig cfg = small_config();
    cfg.q_hi = 20;
    SweepReport rep = run_sweep(cfg);
    std::string csv = report_to_csv(rep);
    std::istringstream is(csv);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "q,label,pv_constant,theorem_ratio,long_sum_ratio,l1,l1_bound,gauss_defect");
    size_t rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(rows == rep.rows.size());

    // empty sweep: header only
    cfg.q_lo = 4;
    cfg.q_hi = 4; // no primes in range
    std::string empty_csv = report_to_csv(run_sweep(cfg));
    CHECK(empty_csv == "q,label,pv_constant,theorem_ratio,long_sum_ratio,l1,l1_bound,gauss_defect\n");
}

TEST_CASE("json round trip") {
    SweepConfig cfg = small_config();
    cfg.q_hi = 30;
    SweepReport rep = run_sweep(cfg);
    nlohmann::json j = report_to_json(rep);
    CHECK(j["schema"] == "pvlab-1");
    SweepReport back = report_from_json(j);
    CHECK(report_to_json(back) == j);
    REQUIRE(back.rows.size() == rep.rows.size());
    auto same = [](double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; };
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].q == rep.rows[i].q);
        CHECK(back.rows[i].label == rep.rows[i].label);
        CHECK(same(back.rows[i].pv_constant, rep.rows[i].pv_constant));
        CHECK(same(back.rows[i].l1, rep.rows[i].l1));
        CHECK(same(back.rows[i].l1_bound, rep.rows[i].l1_bound));
        CHECK(same(back.rows[i].gauss_defect, rep.rows[i].gauss_defect));
    }
}

TEST_CASE("write refuses to clobber") {
    SweepConfig cfg = small_config();
    cfg.q_hi = 12;
    SweepReport rep = run_sweep(cfg);
    TempPath tmp("pvlab_test_report.csv");
    write_report(rep, ReportFormat::csv, tmp.path, false);
    CHECK_THROWS_AS(write_report(rep, ReportFormat::csv, tmp.path, false), IoError);
    CHECK_NOTHROW(write_report(rep, ReportFormat::csv, tmp.path, true));
    std::ifstream in(tmp.path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == report_to_csv(rep));
}

TEST_CASE("toml config") {
    std::string text = R"(
# sweep configuration
q_range = [11, 101]
q_filter = "primes"       # only primes
char_filter = "sample_k"
k_exponent = 0.7
epsilon = 0.05
seed = 1234
parallelism = 2
output_path = "out.csv"
sample_count = 3
)";
    SweepConfig cfg = parse_config_toml(text);
    CHECK(cfg.q_lo == 11);
    CHECK(cfg.q_hi == 101);
    CHECK(cfg.q_filter == QFilter::primes);
    CHECK(cfg.char_filter == CharFilter::sample_k);
    CHECK(cfg.k_exponent == doctest::Approx(0.7));
    CHECK(cfg.epsilon == doctest::Approx(0.05));
    CHECK(cfg.seed == 1234);
    CHECK(cfg.parallelism == 2);
    CHECK(cfg.output_path == "out.csv");
    CHECK(cfg.sample_count == 3);

    CHECK_THROWS_AS(parse_config_toml("bogus_key = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_toml("q_range = [2, 10]\n"), ConfigError);  // q_lo < 3
    CHECK_THROWS_AS(parse_config_toml("epsilon = 0.9\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_toml("k_exponent = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_toml("[section]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_toml("q_filter = primes\n"), ConfigError); // unquoted
    CHECK_THROWS_AS(load_config_toml("/nonexistent/path.toml"), IoError);
}

TEST_CASE("record serializations") {
    RatioRecord r{7, 3, RatioQuantity::theorem, 3.834, {{"c", 0.25}, {"N", 3.0}}};
    CHECK(ratio_record_csv_header() == "q,label,quantity,value,params\n");
    CHECK(ratio_record_csv(r) == "7,3,theorem,3.834,\"{\"\"c\"\":0.25,\"\"N\"\":3}\"\n");

    IntervalSumRecord rec{2, 3, {1.0, -2.0}, std::sqrt(5.0)};
    nlohmann::json j = interval_record_json(rec, 7, 5);
    CHECK(j["q"] == 7);
    CHECK(j["label"] == 5);
    CHECK(j["M"] == 2);
    CHECK(j["N"] == 3);
    CHECK(j["re"] == 1.0);
    CHECK(j["im"] == -2.0);

    SpectrumSummary s;
    s.window = {100, 10, 30, 5};
    s.l1 = 123.5;
    s.bound = 100.0;
    s.ratio = 1.235;
    CHECK(spectrum_summary_csv_header() == "q,M,N,K,l1,bound,ratio\n");
    CHECK(spectrum_summary_csv(s) == "100,10,30,5,123.5,100,1.235\n");
}

TEST_CASE("config validation") {
    SweepConfig cfg;
    cfg.q_lo = 2;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = SweepConfig{};
    cfg.q_hi = 1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = SweepConfig{};
    cfg.k_exponent = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = SweepConfig{};
    cfg.parallelism = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = SweepConfig{};
    CHECK_NOTHROW(cfg.validate());
}
