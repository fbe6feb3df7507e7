#include "pvlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace pvlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// per-modulus PRNG stream; keeps sampled subsets independent of sweep order
SplitMix64 stream_for(uint64_t seed, uint64_t q) {
    return SplitMix64(seed ^ (q * 0x9E3779B97F4A7C15ULL));
}

} // namespace

const char* to_string(QFilter f) {
    switch (f) {
        case QFilter::primes: return "primes";
        case QFilter::all: return "all";
        case QFilter::cubefree: return "cubefree";
        case QFilter::non_cubefree: return "non_cubefree";
    }
    return "?";
}

const char* to_string(CharFilter f) {
    switch (f) {
        case CharFilter::all_primitive: return "all_primitive";
        case CharFilter::real_primitive: return "real_primitive";
        case CharFilter::sample_k: return "sample_k";
    }
    return "?";
}

QFilter q_filter_from_string(const std::string& s) {
    if (s == "primes") return QFilter::primes;
    if (s == "all") return QFilter::all;
    if (s == "cubefree") return QFilter::cubefree;
    if (s == "non_cubefree") return QFilter::non_cubefree;
    throw ConfigError("unknown q_filter: " + s);
}

CharFilter char_filter_from_string(const std::string& s) {
    if (s == "all_primitive") return CharFilter::all_primitive;
    if (s == "real_primitive") return CharFilter::real_primitive;
    if (s == "sample_k") return CharFilter::sample_k;
    throw ConfigError("unknown char_filter: " + s);
}

void SweepConfig::validate() const {
    if (q_lo < 3) throw ConfigError("q_lo must be >= 3");
    if (q_hi < q_lo) throw ConfigError("q_hi must be >= q_lo");
    if (!(k_exponent > 0.0 && k_exponent < 1.0)) throw ConfigError("k_exponent must be in (0,1)");
    if (!(epsilon > 0.0 && epsilon < 2.0 / 3.0))
        throw ConfigError("epsilon must be in (0, 1-c) for every c, i.e. (0, 2/3)");
    if (parallelism < 1) throw ConfigError("parallelism must be >= 1");
    if (char_filter == CharFilter::sample_k && sample_count < 1)
        throw ConfigError("sample_count must be >= 1 under sample_k");
}

namespace {

std::vector<uint64_t> admissible_moduli(const SweepConfig& cfg) {
    std::vector<uint64_t> qs;
    for (uint64_t q = cfg.q_lo; q <= cfg.q_hi; ++q) {
        switch (cfg.q_filter) {
            case QFilter::primes:
                if (is_prime64(q)) qs.push_back(q);
                break;
            case QFilter::all:
                qs.push_back(q);
                break;
            case QFilter::cubefree:
                if (factorize(q).cubefree) qs.push_back(q);
                break;
            case QFilter::non_cubefree:
                if (!factorize(q).cubefree) qs.push_back(q);
                break;
        }
    }
    return qs;
}

std::vector<SweepRow> rows_for_modulus(uint64_t q, const SweepConfig& cfg) {
    auto basis = std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
    auto chars = enumerate_characters(basis);

    std::vector<const DirichletCharacter*> selected;
    for (const auto& chi : chars) {
        if (!is_primitive(chi)) continue;
        if (cfg.char_filter == CharFilter::real_primitive && attributes(chi).order > 2) continue;
        selected.push_back(&chi);
    }
    if (cfg.char_filter == CharFilter::sample_k && selected.size() > cfg.sample_count) {
        SplitMix64 rng = stream_for(cfg.seed, q);
        // partial Fisher-Yates over the primitive list, then restore label order
        for (uint64_t i = 0; i < cfg.sample_count; ++i) {
            uint64_t j = i + rng.below(selected.size() - i);
            std::swap(selected[i], selected[j]);
        }
        selected.resize(cfg.sample_count);
        std::sort(selected.begin(), selected.end(),
                  [](const DirichletCharacter* a, const DirichletCharacter* b) {
                      return a->label() < b->label();
                  });
    }
    if (selected.empty()) return {};

    const double dq = static_cast<double>(q);
    const double c = pv_theorem_constant(basis->modulus.cubefree);
    const double sqrtq = std::sqrt(dq);
    const double logq = std::log(dq);

    // canonical per-modulus window; NaN columns when not admissible
    double l1 = kNaN, l1_bound = kNaN;
    uint64_t wN = q / 3, wK = floor_pow(q, cfg.k_exponent);
    if (wN >= 2 && wK >= 1 && wN + 2 * wK < q) {
        SpectrumSummary s = l1_norm(make_window(q, 0, wN, wK));
        l1 = s.l1;
        l1_bound = s.bound;
    }

    uint64_t longN = floor_pow(q, 1.0 - c - cfg.epsilon);
    if (longN >= q) longN = q - 1;

    auto eq = root_table(q);
    auto roots = unity_roots(basis->group_exponent);

    std::vector<SweepRow> rows;
    rows.reserve(selected.size());
    for (const DirichletCharacter* chi : selected) {
        CharacterTable tab = character_table(*chi, roots);
        PrefixWalk walk = prefix_walk(tab);
        bool real_valued = attributes(*chi).order <= 2;
        IntervalSumRecord maxrec = max_interval_sum(walk, real_valued);

        SweepRow row;
        row.q = q;
        row.label = chi->label();
        row.pv_constant = maxrec.abs / (sqrtq * logq);
        row.theorem_ratio = maxrec.abs / (4.0 * c / (kPi * kPi) * sqrtq * logq);
        row.long_sum_ratio = (longN == 0) ? 0.0 : max_windowed_abs(walk, longN) / sqrtq;
        row.l1 = l1;
        row.l1_bound = l1_bound;
        std::complex<double> tau = gauss_sum(tab, eq);
        row.gauss_defect = std::abs(std::norm(tau) - dq);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

SweepSummary summarize(const SweepConfig& cfg, const std::vector<SweepRow>& rows) {
    SweepSummary s;
    s.rows = rows.size();
    s.fit_A = s.fit_B = s.fit_rms = kNaN;
    for (const SweepRow& r : rows) {
        s.max_pv_constant = std::max(s.max_pv_constant, r.pv_constant);
        s.max_theorem_ratio = std::max(s.max_theorem_ratio, r.theorem_ratio);
        s.max_long_sum_ratio = std::max(s.max_long_sum_ratio, r.long_sum_ratio);
        s.max_gauss_defect = std::max(s.max_gauss_defect, r.gauss_defect);
    }
    std::vector<L1FitPoint> pts;
    uint64_t last_q = 0;
    for (const SweepRow& r : rows) {
        if (r.q == last_q || std::isnan(r.l1)) continue;
        last_q = r.q;
        pts.push_back({static_cast<double>(r.q),
                       static_cast<double>(floor_pow(r.q, cfg.k_exponent)), r.l1});
    }
    if (pts.size() >= 5) {
        L1Fit fit = fit_l1_model(pts);
        s.fit_A = fit.A;
        s.fit_B = fit.B;
        s.fit_rms = fit.rms;
    }
    return s;
}

SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<uint64_t> qs = admissible_moduli(cfg);
    std::vector<std::vector<SweepRow>> slots(qs.size());

    unsigned workers = std::min<std::size_t>(cfg.parallelism, qs.size());
    if (workers <= 1) {
        for (size_t i = 0; i < qs.size(); ++i) slots[i] = rows_for_modulus(qs[i], cfg);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < qs.size(); i = next.fetch_add(1)) {
                    slots[i] = rows_for_modulus(qs[i], cfg);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    SweepReport report;
    report.config = cfg;
    for (auto& slot : slots) {
        report.rows.insert(report.rows.end(), slot.begin(), slot.end());
    }
    report.summary = summarize(cfg, report.rows);
    return report;
}

L1Fit fit_l1_model(std::span<const L1FitPoint> pts) {
    std::vector<double> qs;
    for (const auto& p : pts) qs.push_back(p.q);
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    if (qs.size() < 5) throw DegenerateDesign("fit_l1_model: need >= 5 distinct q");

    double sxx = 0, sxy = 0, syy = 0, sxl = 0, syl = 0;
    for (const auto& p : pts) {
        double x = p.q * std::log(p.q / p.K);
        double y = p.q;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        sxl += x * p.l1;
        syl += y * p.l1;
    }
    double det = sxx * syy - sxy * sxy;
    if (!(std::abs(det) > 1e-12 * sxx * syy)) {
        throw DegenerateDesign("fit_l1_model: singular normal equations");
    }
    L1Fit fit{};
    fit.A = (sxl * syy - syl * sxy) / det;
    fit.B = (syl * sxx - sxl * sxy) / det;
    double ss = 0;
    for (const auto& p : pts) {
        double pred = fit.A * p.q * std::log(p.q / p.K) + fit.B * p.q;
        ss += (pred - p.l1) * (pred - p.l1);
    }
    fit.rms = std::sqrt(ss / static_cast<double>(pts.size()));
    return fit;
}

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------
namespace {

nlohmann::json nan_safe(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

double nan_restore(const nlohmann::json& j) {
    if (j.is_null()) return kNaN;
    return j.get<double>();
}

} // namespace

std::string report_to_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "q,label,pv_constant,theorem_ratio,long_sum_ratio,l1,l1_bound,gauss_defect\n";
    for (const SweepRow& r : report.rows) {
        os << r.q << ',' << r.label << ',' << format_g12(r.pv_constant) << ','
           << format_g12(r.theorem_ratio) << ',' << format_g12(r.long_sum_ratio) << ','
           << format_g12(r.l1) << ',' << format_g12(r.l1_bound) << ','
           << format_g12(r.gauss_defect) << '\n';
    }
    return os.str();
}

nlohmann::json report_to_json(const SweepReport& report) {
    nlohmann::json j;
    j["schema"] = "pvlab-1";
    const SweepConfig& c = report.config;
    j["config"] = {{"q_range", {c.q_lo, c.q_hi}},
                   {"q_filter", to_string(c.q_filter)},
                   {"char_filter", to_string(c.char_filter)},
                   {"k_exponent", c.k_exponent},
                   {"epsilon", c.epsilon},
                   {"seed", c.seed},
                   {"parallelism", c.parallelism},
                   {"output_path", c.output_path},
                   {"sample_count", c.sample_count}};
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : report.rows) {
        rows.push_back({{"q", r.q},
                        {"label", r.label},
                        {"pv_constant", r.pv_constant},
                        {"theorem_ratio", r.theorem_ratio},
                        {"long_sum_ratio", r.long_sum_ratio},
                        {"l1", nan_safe(r.l1)},
                        {"l1_bound", nan_safe(r.l1_bound)},
                        {"gauss_defect", r.gauss_defect}});
    }
    j["rows"] = std::move(rows);
    const SweepSummary& s = report.summary;
    j["summary"] = {{"fit_A", nan_safe(s.fit_A)},
                    {"fit_B", nan_safe(s.fit_B)},
                    {"fit_rms", nan_safe(s.fit_rms)},
                    {"max_pv_constant", s.max_pv_constant},
                    {"max_theorem_ratio", s.max_theorem_ratio},
                    {"max_long_sum_ratio", s.max_long_sum_ratio},
                    {"max_gauss_defect", s.max_gauss_defect},
                    {"rows", s.rows}};
    return j;
}

SweepReport report_from_json(const nlohmann::json& j) {
    if (!j.contains("schema") || j["schema"] != "pvlab-1")
        throw IoError("report_from_json: unknown schema");
    SweepReport r;
    const auto& jc = j.at("config");
    r.config.q_lo = jc.at("q_range")[0].get<uint64_t>();
    r.config.q_hi = jc.at("q_range")[1].get<uint64_t>();
    r.config.q_filter = q_filter_from_string(jc.at("q_filter").get<std::string>());
    r.config.char_filter = char_filter_from_string(jc.at("char_filter").get<std::string>());
    r.config.k_exponent = jc.at("k_exponent").get<double>();
    r.config.epsilon = jc.at("epsilon").get<double>();
    r.config.seed = jc.at("seed").get<uint64_t>();
    r.config.parallelism = jc.at("parallelism").get<uint32_t>();
    r.config.output_path = jc.at("output_path").get<std::string>();
    r.config.sample_count = jc.at("sample_count").get<uint64_t>();
    for (const auto& jr : j.at("rows")) {
        SweepRow row;
        row.q = jr.at("q").get<uint64_t>();
        row.label = jr.at("label").get<uint64_t>();
        row.pv_constant = jr.at("pv_constant").get<double>();
        row.theorem_ratio = jr.at("theorem_ratio").get<double>();
        row.long_sum_ratio = jr.at("long_sum_ratio").get<double>();
        row.l1 = nan_restore(jr.at("l1"));
        row.l1_bound = nan_restore(jr.at("l1_bound"));
        row.gauss_defect = jr.at("gauss_defect").get<double>();
        r.rows.push_back(row);
    }
    const auto& js = j.at("summary");
    r.summary.fit_A = nan_restore(js.at("fit_A"));
    r.summary.fit_B = nan_restore(js.at("fit_B"));
    r.summary.fit_rms = nan_restore(js.at("fit_rms"));
    r.summary.max_pv_constant = js.at("max_pv_constant").get<double>();
    r.summary.max_theorem_ratio = js.at("max_theorem_ratio").get<double>();
    r.summary.max_long_sum_ratio = js.at("max_long_sum_ratio").get<double>();
    r.summary.max_gauss_defect = js.at("max_gauss_defect").get<double>();
    r.summary.rows = js.at("rows").get<uint64_t>();
    return r;
}

void write_report(const SweepReport& report, ReportFormat format, const std::string& path,
                  bool force) {
    if (!force && std::filesystem::exists(path)) {
        throw IoError("write_report: " + path + " exists (use force to overwrite)");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("write_report: cannot open " + path);
    if (format == ReportFormat::csv) {
        out << report_to_csv(report);
    } else {
        out << report_to_json(report).dump(2) << '\n';
    }
    if (!out.flush()) throw IoError("write_report: write failed for " + path);
}

// ---------------------------------------------------------------------------
// Flat TOML subset: key = value with integers, floats, booleans, quoted
// strings and [int, int] arrays; '#' comments.  Exactly what SweepConfig
// needs.
// ---------------------------------------------------------------------------
namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

uint64_t parse_u64(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        uint64_t out = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for " + key + ": " + v);
    }
}

double parse_f64(const std::string& v, const std::string& key) {
    try {
        size_t pos = 0;
        double out = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config: bad float for " + key + ": " + v);
    }
}

std::string parse_string(const std::string& v, const std::string& key) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
        throw ConfigError("config: expected quoted string for " + key + ": " + v);
    return v.substr(1, v.size() - 2);
}

} // namespace

SweepConfig parse_config_toml(const std::string& text) {
    SweepConfig cfg;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        // strip comments outside quotes
        bool quoted = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) { line.resize(i); break; }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') throw ConfigError("config: tables are not supported: " + line);
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config: expected key = value: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "q_range") {
            if (val.size() < 2 || val.front() != '[' || val.back() != ']')
                throw ConfigError("config: q_range must be [lo, hi]");
            std::string body = val.substr(1, val.size() - 2);
            size_t comma = body.find(',');
            if (comma == std::string::npos) throw ConfigError("config: q_range must be [lo, hi]");
            cfg.q_lo = parse_u64(trim(body.substr(0, comma)), key);
            cfg.q_hi = parse_u64(trim(body.substr(comma + 1)), key);
        } else if (key == "q_filter") {
            cfg.q_filter = q_filter_from_string(parse_string(val, key));
        } else if (key == "char_filter") {
            cfg.char_filter = char_filter_from_string(parse_string(val, key));
        } else if (key == "k_exponent") {
            cfg.k_exponent = parse_f64(val, key);
        } else if (key == "epsilon") {
            cfg.epsilon = parse_f64(val, key);
        } else if (key == "seed") {
            cfg.seed = parse_u64(val, key);
        } else if (key == "parallelism") {
            cfg.parallelism = static_cast<uint32_t>(parse_u64(val, key));
        } else if (key == "output_path") {
            cfg.output_path = parse_string(val, key);
        } else if (key == "sample_count") {
            cfg.sample_count = parse_u64(val, key);
        } else {
            throw ConfigError("config: unknown key: " + key);
        }
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config_toml(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("load_config_toml: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_toml(ss.str());
}

std::string ratio_record_csv_header() { return "q,label,quantity,value,params\n"; }

std::string ratio_record_csv(const RatioRecord& r) {
    std::ostringstream os;
    os << r.q << ',' << r.label << ',' << to_string(r.quantity) << ',' << format_g12(r.value)
       << ",\"{";
    for (size_t i = 0; i < r.params.size(); ++i) {
        if (i) os << ',';
        os << "\"\"" << r.params[i].first << "\"\":" << format_g12(r.params[i].second);
    }
    os << "}\"\n";
    return os.str();
}

nlohmann::json interval_record_json(const IntervalSumRecord& r, uint64_t q, uint64_t label) {
    return {{"q", q},     {"label", label},          {"M", r.M},
            {"N", r.N},   {"re", r.value.real()},    {"im", r.value.imag()},
            {"abs", r.abs}};
}

std::string spectrum_summary_csv_header() { return "q,M,N,K,l1,bound,ratio\n"; }

std::string spectrum_summary_csv(const SpectrumSummary& s) {
    std::ostringstream os;
    os << s.window.q << ',' << s.window.M << ',' << s.window.N << ',' << s.window.K << ','
       << format_g12(s.l1) << ',' << format_g12(s.bound) << ',' << format_g12(s.ratio) << '\n';
    return os.str();
}

} // namespace pvlab
