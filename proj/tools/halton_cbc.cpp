// halton-cbc: constructions, studies, bound comparisons, point export, and
// verification sweeps, driven by flags or a JSON config file (flags win).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "halcbc/bounds.hpp"
#include "halcbc/cbc.hpp"
#include "halcbc/halton.hpp"
#include "halcbc/kernels.hpp"
#include "halcbc/report_io.hpp"
#include "halcbc/verify.hpp"
#include "halcbc/wce.hpp"
#include "halcbc/weights.hpp"

using namespace halcbc;

namespace {

struct RunConfig {
    std::string mode;
    std::vector<std::int64_t> bases;
    std::size_t first_primes = 0; // bases = first s primes when set
    std::size_t n = 0;
    std::string n_range;
    std::string weights_text;
    std::string out = "-";
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 0;
    std::size_t max_n = kDefaultPointCap;
    std::size_t max_search = 1'000'000;
    std::size_t trials = 10'000;
    std::vector<std::int64_t> numerators;
    std::vector<int> ms;
    std::string shift_mode = "mid-simplified";
    std::string grid = "default";
    std::string points_as = "fractions";
    std::string kernel = "auto";
    std::size_t bound_dim = 0; // 0 = full dimension
    bool timing = false;
    double selftest_perturb = 0.0;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

// geometric range "from:to:xF"; "from:to" defaults to x2; single value allowed
std::vector<std::size_t> parse_n_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("n-range: empty specification");
    const std::size_t from = static_cast<std::size_t>(std::stoull(parts[0]));
    if (parts.size() == 1) return {from};
    const std::size_t to = static_cast<std::size_t>(std::stoull(parts[1]));
    std::size_t factor = 2;
    if (parts.size() >= 3) {
        if (parts[2].empty() || parts[2][0] != 'x')
            throw std::invalid_argument("n-range: step must look like x2");
        factor = static_cast<std::size_t>(std::stoull(parts[2].substr(1)));
        if (factor < 2) throw std::invalid_argument("n-range: factor must be >= 2");
    }
    if (from == 0 || to < from) throw std::invalid_argument("n-range: need 1 <= from <= to");
    std::vector<std::size_t> out;
    for (std::size_t v = from; v <= to; v *= factor) out.push_back(v);
    return out;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: " + std::string(e.what()));
    }
    try {
        if (j.contains("bases")) cfg.bases = j["bases"].get<std::vector<std::int64_t>>();
        if (j.contains("s")) cfg.first_primes = j["s"].get<std::size_t>();
        if (j.contains("n")) cfg.n = j["n"].get<std::size_t>();
        if (j.contains("n_range")) cfg.n_range = j["n_range"].get<std::string>();
        if (j.contains("weights")) {
            if (j["weights"].is_array()) {
                std::string list;
                for (const auto& v : j["weights"])
                    list += (list.empty() ? "" : ",") + report::format_double(v.get<double>());
                cfg.weights_text = list;
            } else {
                cfg.weights_text = j["weights"].get<std::string>();
            }
        }
        if (j.contains("out")) cfg.out = j["out"].get<std::string>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
        if (j.contains("max_n")) cfg.max_n = j["max_n"].get<std::size_t>();
        if (j.contains("max_search")) cfg.max_search = j["max_search"].get<std::size_t>();
        if (j.contains("trials")) cfg.trials = j["trials"].get<std::size_t>();
        if (j.contains("numerators"))
            cfg.numerators = j["numerators"].get<std::vector<std::int64_t>>();
        if (j.contains("ms")) cfg.ms = j["ms"].get<std::vector<int>>();
        if (j.contains("shift_mode")) cfg.shift_mode = j["shift_mode"].get<std::string>();
        if (j.contains("grid")) cfg.grid = j["grid"].get<std::string>();
        if (j.contains("points_as")) cfg.points_as = j["points_as"].get<std::string>();
        if (j.contains("kernel")) cfg.kernel = j["kernel"].get<std::string>();
        if (j.contains("d")) cfg.bound_dim = j["d"].get<std::size_t>();
        if (j.contains("timing")) cfg.timing = j["timing"].get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: " + std::string(e.what()));
    }
}

BaseVector resolve_bases(const RunConfig& cfg) {
    if (!cfg.bases.empty()) return BaseVector(cfg.bases);
    if (cfg.first_primes > 0) return BaseVector::first_primes(cfg.first_primes);
    throw std::invalid_argument("bases: provide --bases or --s");
}

WeightSequence resolve_weights(const RunConfig& cfg, std::size_t s) {
    if (cfg.weights_text.empty()) throw std::invalid_argument("weights: not specified");
    return WeightSequence::parse(cfg.weights_text, s);
}

void apply_kernel_choice(const RunConfig& cfg) {
    if (cfg.kernel == "auto") return;
    if (cfg.kernel == "scalar") {
        kernels::force_backend(kernels::Backend::scalar);
    } else if (cfg.kernel == "avx2") {
        kernels::force_backend(kernels::Backend::avx2);
    } else {
        throw std::invalid_argument("kernel: expected auto, scalar, or avx2");
    }
}

// Resolved-settings echo, identical for identical configs; excludes the
// thread count and timing switches, which must not influence output bytes.
void write_config_object(report::JsonWriter& w, const RunConfig& cfg, const BaseVector* bases) {
    w.begin_object();
    w.field("mode", cfg.mode);
    if (bases) {
        w.key("bases");
        w.begin_array();
        for (std::int64_t p : bases->primes()) w.value(p);
        w.end_array();
    }
    if (!cfg.n_range.empty()) w.field("n_range", cfg.n_range);
    if (cfg.n > 0) w.field("n", cfg.n);
    if (!cfg.weights_text.empty()) w.field("weights", cfg.weights_text);
    if (!cfg.numerators.empty()) w.array_field("numerators", cfg.numerators);
    if (!cfg.ms.empty()) w.array_field("ms", cfg.ms);
    if (cfg.mode == "halton" || cfg.mode == "wce") w.field("shift_mode", cfg.shift_mode);
    if (cfg.mode == "verify") w.field("grid", cfg.grid);
    if (cfg.mode == "halton") w.field("points_as", cfg.points_as);
    if (cfg.mode == "bound" && cfg.bound_dim > 0) w.field("d", cfg.bound_dim);
    w.field("max_n", cfg.max_n);
    w.field("max_search", cfg.max_search);
    w.field("seed", static_cast<std::int64_t>(cfg.seed));
    w.end_object();
}

std::string config_echo_compact(const RunConfig& cfg, const BaseVector* bases) {
    std::ostringstream ss;
    ss << "{\"mode\":\"" << cfg.mode << "\"";
    if (bases) {
        ss << ",\"bases\":[";
        for (std::size_t j = 0; j < bases->dimension(); ++j)
            ss << (j ? "," : "") << bases->prime(j);
        ss << "]";
    }
    if (!cfg.n_range.empty()) ss << ",\"n_range\":\"" << cfg.n_range << "\"";
    if (cfg.n > 0) ss << ",\"n\":" << cfg.n;
    if (!cfg.weights_text.empty()) ss << ",\"weights\":\"" << cfg.weights_text << "\"";
    if (!cfg.numerators.empty()) {
        ss << ",\"numerators\":[";
        for (std::size_t j = 0; j < cfg.numerators.size(); ++j)
            ss << (j ? "," : "") << cfg.numerators[j];
        ss << "]";
    }
    ss << ",\"seed\":" << cfg.seed << "}";
    return ss.str();
}

void write_json_metadata(report::JsonWriter& w, const RunConfig& cfg, const BaseVector* bases,
                         double wall_ms) {
    w.key("metadata");
    w.begin_object();
    w.field("version", report::kVersion);
    w.field("seed", static_cast<std::int64_t>(cfg.seed));
    w.key("config");
    write_config_object(w, cfg, bases);
    if (cfg.timing) w.field("wall_ms", wall_ms);
    w.end_object();
}

void write_csv_metadata(std::ostream& out, const RunConfig& cfg, const BaseVector* bases,
                        double wall_ms) {
    out << "# version=" << report::kVersion << "\n";
    out << "# seed=" << cfg.seed << "\n";
    out << "# config=" << config_echo_compact(cfg, bases) << "\n";
    if (cfg.timing) out << "# wall_ms=" << report::format_double(wall_ms) << "\n";
}

class OutputFile {
public:
    explicit OutputFile(const std::string& path) {
        if (path != "-" && !path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("out: cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

bool within_bound(double sq_error, double bound_sq) {
    return sq_error <= bound_sq + 1e-12 * std::abs(bound_sq);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

CbcOptions make_cbc_options(const RunConfig& cfg) {
    CbcOptions options;
    options.point_cap = cfg.max_n;
    options.candidate_cap = cfg.max_search;
    options.threads = cfg.threads;
    options.m_override = cfg.ms;
    return options;
}

void write_primes(report::JsonWriter& w, const BaseVector& bases) {
    w.key("bases");
    w.begin_array();
    for (std::int64_t p : bases.primes()) w.value(p);
    w.end_array();
}

std::vector<double> weights_list(const WeightSequence& weights) {
    return std::vector<double>(weights.gammas().begin(), weights.gammas().end());
}

int run_cbc(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const BaseVector bases = resolve_bases(cfg);
    const std::size_t s = bases.dimension();
    if (cfg.n == 0) throw std::invalid_argument("n: required and must be >= 1");
    const WeightSequence weights = resolve_weights(cfg, s);
    const CbcResult result = cbc_construct(bases, cfg.n, weights, make_cbc_options(cfg));

    bool all_within = true;
    std::vector<bool> flags;
    for (std::size_t d = 0; d < result.cbc_bounds_sq.size(); ++d) {
        flags.push_back(within_bound(result.sq_errors[d], result.cbc_bounds_sq[d]));
        all_within = all_within && flags.back();
    }

    OutputFile out(cfg.out);
    report::JsonWriter w(out.stream());
    w.begin_object();
    w.field("mode", "cbc");
    write_primes(w, bases);
    w.field("n", cfg.n);
    w.array_field("weights", weights_list(weights));
    w.array_field("ms", result.shift.ms);
    w.array_field("numerators", result.shift.numerators);
    w.key("sigma");
    w.begin_array();
    for (std::size_t j = 0; j < s; ++j)
        w.value(std::to_string(result.shift.numerators[j]) + "/" +
                std::to_string(checked_pow(bases.prime(j), result.shift.ms[j])));
    w.end_array();
    w.array_field("sq_errors", result.sq_errors);
    {
        std::vector<double> errors;
        for (double v : result.sq_errors) errors.push_back(std::sqrt(std::max(v, 0.0)));
        w.array_field("errors", errors);
    }
    if (cfg.n >= 2) {
        w.array_field("cbc_bound_sq", result.cbc_bounds_sq);
        w.key("error_within_bound");
        w.begin_array();
        for (bool f : flags) w.value(f);
        w.end_array();
    } else {
        w.field("cbc_bound_sq", "n/a (N < 2)");
        w.field("error_within_bound", "n/a (N < 2)");
    }
    w.array_field("candidate_counts", result.candidate_counts);
    write_json_metadata(w, cfg, &bases, elapsed_ms(start));
    w.end_object();
    return all_within ? 0 : 1;
}

int run_study(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const BaseVector bases = resolve_bases(cfg);
    const std::size_t s = bases.dimension();
    if (cfg.n_range.empty()) throw std::invalid_argument("n-range: required for study");
    const std::vector<std::size_t> ns = parse_n_range(cfg.n_range);
    const WeightSequence weights = resolve_weights(cfg, s);

    bool all_within = true;
    OutputFile out(cfg.out);
    std::ostream& os = out.stream();
    os << "# construction study: error of the greedily shifted point set vs N\n";
    os << "# columns: N = point count; e = worst-case error at full dimension;\n";
    os << "#          cbc_bound = sqrt of the construction bound at d=s;\n";
    os << "#          rms_bound = sqrt of the random-shift root-mean-square bound at d=s\n";
    os << "N,e,cbc_bound,rms_bound\n";
    for (std::size_t n : ns) {
        const CbcResult result = cbc_construct(bases, n, weights, make_cbc_options(cfg));
        const double e = std::sqrt(std::max(result.sq_errors[s - 1], 0.0));
        double cb = std::numeric_limits<double>::quiet_NaN();
        double rb = std::numeric_limits<double>::quiet_NaN();
        if (n >= 2) {
            const double cb_sq = cbc_bound_sq(bases, weights, n, s);
            cb = std::sqrt(cb_sq);
            rb = std::sqrt(rms_bound_sq(bases, weights, n, s));
            if (!within_bound(result.sq_errors[s - 1], cb_sq)) all_within = false;
        }
        os << n << ',' << report::format_double(e) << ',' << report::format_double(cb) << ','
           << report::format_double(rb) << "\n";
    }
    write_csv_metadata(os, cfg, &bases, elapsed_ms(start));
    return all_within ? 0 : 1;
}

int run_verify(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    bool vacuous = false;
    if (cfg.grid == "default" || cfg.grid == "small") {
        VerifyGrid grid;
        if (cfg.grid == "small") {
            grid.primes = {2, 3};
            grid.counts = {2, 3, 4};
            grid.gammas = {1.0, 0.5};
        }
        VerifyOptions options;
        options.threads = cfg.threads;
        options.inject_lhs_offset = cfg.selftest_perturb;
        report = run_verification(grid, options);
    } else if (cfg.grid == "none") {
        vacuous = true;
        std::cerr << "halton-cbc: warning: empty verification grid, vacuous pass\n";
    } else {
        throw std::invalid_argument("grid: expected default, small, or none");
    }

    OutputFile out(cfg.out);
    report::JsonWriter w(out.stream());
    w.begin_object();
    w.field("mode", "verify");
    w.field("grid", cfg.grid);
    w.field("total_checks", report.checks.size());
    w.field("failures", report.failures());
    w.field("all_pass", report.all_pass());
    if (vacuous) w.field("warning", "empty grid: no checks were run");
    w.key("checks");
    w.begin_array();
    for (const auto& check : report.checks) {
        w.begin_object();
        w.field("name", check.name);
        w.field("lhs", check.lhs);
        w.field("rhs", check.rhs);
        w.field("slack", check.slack);
        w.field("pass", check.pass);
        w.end_object();
    }
    w.end_array();
    write_json_metadata(w, cfg, nullptr, elapsed_ms(start));
    w.end_object();
    return report.all_pass() ? 0 : 1;
}

PointSet make_points(const RunConfig& cfg, const BaseVector& bases) {
    if (cfg.numerators.empty()) return halton_points(bases, cfg.n);
    std::vector<int> ms = cfg.ms;
    if (ms.empty())
        for (std::size_t j = 0; j < bases.dimension(); ++j)
            ms.push_back(minimal_m(bases.prime(j), cfg.n));
    const ShiftVector shift(bases, ms, cfg.numerators);
    return shifted_halton_points(bases, cfg.n, shift, parse_shift_mode(cfg.shift_mode));
}

int run_wce(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const BaseVector bases = resolve_bases(cfg);
    if (cfg.n == 0) throw std::invalid_argument("n: required and must be >= 1");
    const WeightSequence weights = resolve_weights(cfg, bases.dimension());
    const PointSet points = make_points(cfg, bases);
    const double sq = squared_wce(points, weights);

    OutputFile out(cfg.out);
    report::JsonWriter w(out.stream());
    w.begin_object();
    w.field("mode", "wce");
    write_primes(w, bases);
    w.field("n", cfg.n);
    w.array_field("weights", weights_list(weights));
    if (!cfg.numerators.empty()) {
        w.array_field("numerators", cfg.numerators);
        w.field("shift_mode", cfg.shift_mode);
    }
    w.field("sq_wce", sq);
    w.field("e", std::sqrt(std::max(sq, 0.0)));
    write_json_metadata(w, cfg, &bases, elapsed_ms(start));
    w.end_object();
    return 0;
}

int run_bound(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const BaseVector bases = resolve_bases(cfg);
    if (cfg.n < 2) throw std::invalid_argument("n: bounds require N >= 2");
    const std::size_t d = cfg.bound_dim == 0 ? bases.dimension() : cfg.bound_dim;
    const WeightSequence weights = resolve_weights(cfg, bases.dimension());
    const BoundReport report = bound_report(bases, weights, cfg.n, d);

    OutputFile out(cfg.out);
    report::JsonWriter w(out.stream());
    w.begin_object();
    w.field("mode", "bound");
    write_primes(w, bases);
    w.field("n", cfg.n);
    w.field("d", d);
    w.array_field("weights", weights_list(weights));
    w.field("rms_bound_sq", report.rms_bound_sq);
    w.field("cbc_bound_sq", report.cbc_bound_sq);
    w.field("rms_bound", std::sqrt(report.rms_bound_sq));
    w.field("cbc_bound", std::sqrt(report.cbc_bound_sq));
    w.field("weight_summability", report.weight_summability);
    write_json_metadata(w, cfg, &bases, elapsed_ms(start));
    w.end_object();
    return 0;
}

int run_halton(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const BaseVector bases = resolve_bases(cfg);
    if (cfg.n == 0) throw std::invalid_argument("n: required and must be >= 1");
    const PointSet points = make_points(cfg, bases);

    OutputFile out(cfg.out);
    write_points_csv(out.stream(), points, cfg.points_as != "doubles");
    write_csv_metadata(out.stream(), cfg, &bases, elapsed_ms(start));
    return 0;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& bases_text,
                        std::string& numerators_text, std::string& ms_text,
                        std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    cmd->add_option("--bases", bases_text, "comma-separated distinct primes, e.g. 2,3,5");
    cmd->add_option("--s", cfg.first_primes, "use the first s primes as bases");
    cmd->add_option("--n", cfg.n, "number of points N");
    cmd->add_option("--weights", cfg.weights_text,
                    "weight family 1/j^2, 0.9^j, or an explicit list");
    cmd->add_option("--out", cfg.out, "output path ('-' for stdout)");
    cmd->add_option("--seed", cfg.seed, "seed recorded in reports and used by sampling");
    cmd->add_option("--threads", cfg.threads,
                    "worker threads (0 = HALTON_CBC_THREADS or hardware)");
    cmd->add_option("--max-n", cfg.max_n, "largest allowed N");
    cmd->add_option("--max-search", cfg.max_search, "largest allowed candidate set");
    cmd->add_option("--m", ms_text, "per-dimension m override, comma-separated");
    cmd->add_option("--numerators", numerators_text,
                    "per-dimension shift numerators, comma-separated");
    cmd->add_option("--kernel", cfg.kernel, "inner-loop backend: auto, scalar, or avx2");
    cmd->add_flag("--timing", cfg.timing, "include wall time in output metadata");
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::string bases_text, numerators_text, ms_text, config_path;

    CLI::App app{"mid-simplified shift construction for Halton point sets"};
    app.require_subcommand(1);

    CLI::App* cmd_cbc = app.add_subcommand("cbc", "greedy per-dimension shift construction");
    CLI::App* cmd_study =
        app.add_subcommand("study", "construction error vs N over a geometric range");
    cmd_study->add_option("--n-range", cfg.n_range, "geometric range, e.g. 16:512:x2");
    CLI::App* cmd_verify = app.add_subcommand("verify", "inequality verification sweeps");
    cmd_verify->add_option("--grid", cfg.grid, "default, small, or none");
    cmd_verify
        ->add_option("--selftest-perturb", cfg.selftest_perturb,
                     "harness self-test: offset one check to force a failure")
        ->group("");
    CLI::App* cmd_wce = app.add_subcommand("wce", "worst-case error of a point set");
    cmd_wce->add_option("--shift-mode", cfg.shift_mode, "full, simplified, or mid-simplified");
    CLI::App* cmd_bound = app.add_subcommand("bound", "bound right-hand sides");
    cmd_bound->add_option("--d", cfg.bound_dim, "dimension prefix (default: full)");
    CLI::App* cmd_halton = app.add_subcommand("halton", "export points as CSV");
    cmd_halton->add_option("--points-as", cfg.points_as, "fractions or doubles");
    cmd_halton->add_option("--shift-mode", cfg.shift_mode,
                           "full, simplified, or mid-simplified");

    for (CLI::App* cmd : {cmd_cbc, cmd_study, cmd_verify, cmd_wce, cmd_bound, cmd_halton})
        add_common_options(cmd, cfg, bases_text, numerators_text, ms_text, config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "halton-cbc: error: " << e.what() << "\n";
        return 2;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        cfg.mode = active->get_name();

        if (!config_path.empty()) {
            RunConfig file_cfg;
            apply_config_file(file_cfg, config_path);
            // command-line flags win over the file
            if (active->count("--bases") == 0 && bases_text.empty())
                cfg.bases = file_cfg.bases;
            if (active->count("--s") == 0) cfg.first_primes = file_cfg.first_primes;
            if (active->count("--n") == 0) cfg.n = file_cfg.n;
            if (cfg.mode != "study" || active->count("--n-range") == 0)
                cfg.n_range = file_cfg.n_range;
            if (active->count("--weights") == 0) cfg.weights_text = file_cfg.weights_text;
            if (active->count("--out") == 0) cfg.out = file_cfg.out;
            if (active->count("--seed") == 0) cfg.seed = file_cfg.seed;
            if (active->count("--threads") == 0) cfg.threads = file_cfg.threads;
            if (active->count("--max-n") == 0) cfg.max_n = file_cfg.max_n;
            if (active->count("--max-search") == 0) cfg.max_search = file_cfg.max_search;
            if (active->count("--kernel") == 0) cfg.kernel = file_cfg.kernel;
            if (active->count("--timing") == 0) cfg.timing = file_cfg.timing;
            if (active->count("--numerators") == 0 && numerators_text.empty())
                cfg.numerators = file_cfg.numerators;
            if (active->count("--m") == 0 && ms_text.empty()) cfg.ms = file_cfg.ms;
            cfg.trials = file_cfg.trials;
            cfg.format = file_cfg.format;
            if (cfg.mode != "verify" || active->count("--grid") == 0) cfg.grid = file_cfg.grid;
            if (cfg.mode != "bound" || active->count("--d") == 0)
                cfg.bound_dim = file_cfg.bound_dim;
            if (cfg.mode != "halton" || active->count("--points-as") == 0)
                cfg.points_as = file_cfg.points_as;
            const bool shift_flag_given =
                (cfg.mode == "halton" || cfg.mode == "wce") && active->count("--shift-mode") > 0;
            if (!shift_flag_given) cfg.shift_mode = file_cfg.shift_mode;
        }
        if (!bases_text.empty()) cfg.bases = parse_int_list(bases_text);
        if (!numerators_text.empty()) cfg.numerators = parse_int_list(numerators_text);
        if (!ms_text.empty()) {
            cfg.ms.clear();
            for (std::int64_t v : parse_int_list(ms_text)) cfg.ms.push_back(static_cast<int>(v));
        }

        apply_kernel_choice(cfg);

        if (cfg.mode == "cbc") return run_cbc(cfg);
        if (cfg.mode == "study") return run_study(cfg);
        if (cfg.mode == "verify") return run_verify(cfg);
        if (cfg.mode == "wce") return run_wce(cfg);
        if (cfg.mode == "bound") return run_bound(cfg);
        if (cfg.mode == "halton") return run_halton(cfg);
        throw std::invalid_argument("unknown mode " + cfg.mode);
    } catch (const std::exception& e) {
        std::cerr << "halton-cbc: error: " << e.what() << "\n";
        return 2;
    }
}
