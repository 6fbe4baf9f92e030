#include "rcarlab/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rcarlab/errors.hpp"
#include "rcarlab/limit_laws.hpp"
#include "rcarlab/mixing.hpp"
#include "rcarlab/panel.hpp"
#include "rcarlab/poisson_sim.hpp"
#include "rcarlab/regime.hpp"
#include "rcarlab/stats.hpp"

namespace rcarlab::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double need_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError("config: missing numeric field '" + key + "'");
    return j[key].get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError("config: field '" + key + "' must be numeric");
    return j[key].get<double>();
}

std::vector<double> need_array(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
        throw ConfigError("config: missing non-empty array '" + key + "'");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw ConfigError("config: array '" + key + "' must be numeric");
        out.push_back(v.get<double>());
    }
    return out;
}

StableLaw parse_innovation(const json& root) {
    if (!root.contains("innovation") || !root["innovation"].is_object())
        throw ConfigError("config: missing 'innovation' object");
    const json& j = root["innovation"];
    const std::string flavor = j.value("flavor", "");
    if (flavor == "gaussian") return StableLaw::gaussian(number_or(j, "variance", 1.0));
    if (flavor == "exact-stable")
        return StableLaw::exact_stable(need_number(j, "alpha"), need_number(j, "c1"),
                                       need_number(j, "c2"));
    if (flavor == "two-sided-pareto")
        return StableLaw::two_sided_pareto(need_number(j, "alpha"), need_number(j, "c1"),
                                           need_number(j, "c2"));
    throw ConfigError("config: innovation.flavor must be gaussian | exact-stable | two-sided-pareto");
}

MixingLaw parse_mixing(const json& root) {
    if (!root.contains("mixing") || !root["mixing"].is_object())
        throw ConfigError("config: missing 'mixing' object");
    return MixingLaw::pure_power(need_number(root["mixing"], "beta"));
}

std::vector<double> parse_thetas(const json& root) {
    if (!root.contains("thetas")) return theta_grid(-3.0, 3.0, 61);
    const json& j = root["thetas"];
    const auto count = static_cast<std::size_t>(number_or(j, "count", 61));
    return theta_grid(number_or(j, "min", -3.0), number_or(j, "max", 3.0), count);
}

QuadratureSpec parse_quad(const json& root) {
    QuadratureSpec quad = QuadratureSpec::nested();
    if (root.contains("quadrature")) {
        const json& j = root["quadrature"];
        quad.rel_tol = number_or(j, "rel_tol", quad.rel_tol);
        quad.abs_tol = number_or(j, "abs_tol", quad.abs_tol);
        quad.max_subdivisions = static_cast<int>(number_or(j, "max_subdivisions", quad.max_subdivisions));
        quad.x_split = number_or(j, "x_split", quad.x_split);
    }
    quad.validate();
    return quad;
}

struct RunContext {
    json config;
    std::string config_hash;
    std::uint64_t seed = 0;
    int workers = 1;
    std::filesystem::path out_dir;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    std::ofstream open_output(const std::string& filename) const {
        std::filesystem::create_directories(out_dir);
        std::ofstream file(out_dir / filename, std::ios::binary | std::ios::trunc);
        if (!file) throw ConfigError("cannot open output file " + (out_dir / filename).string());
        file << "# config=" << config_hash << " seed=" << seed << "\n";
        return file;
    }

    void write_manifest(const std::string& command, int exit_code) const {
        std::filesystem::create_directories(out_dir);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        json manifest;
        manifest["command"] = command;
        manifest["config_hash"] = config_hash;
        manifest["seed"] = seed;
        manifest["workers"] = workers;
        manifest["version"] = kVersion;
        manifest["exit_code"] = exit_code;
        manifest["wall_time_ms"] = elapsed;
        std::ofstream file(out_dir / "manifest.json", std::ios::binary | std::ios::trunc);
        file << manifest.dump(2) << "\n";
    }
};

PanelSpec parse_panel(const RunContext& ctx) {
    const json& root = ctx.config;
    if (!root.contains("panel") || !root["panel"].is_object())
        throw ConfigError("config: missing 'panel' object");
    const json& j = root["panel"];
    PanelSpec spec;
    spec.innovation = parse_innovation(root);
    spec.mixing = parse_mixing(root);
    spec.N = static_cast<std::int64_t>(need_number(j, "N"));
    spec.n = static_cast<std::int64_t>(need_number(j, "n"));
    spec.taus = need_array(j, "taus");
    spec.burn_in_tol = number_or(j, "burn_in_tol", 1e-8);
    spec.seed = ctx.seed;
    spec.validate();
    return spec;
}

std::int64_t parse_replicates(const json& root) {
    const double m = need_number(root, "replicates");
    if (!(m >= 1.0 && m <= 1e9)) throw ConfigError("config: replicates out of range");
    return static_cast<std::int64_t>(m);
}

double innovation_alpha(const StableLaw& law) { return law.alpha; }

int cmd_simulate_panel(RunContext& ctx) {
    const PanelSpec spec = parse_panel(ctx);
    const std::int64_t replicates = parse_replicates(ctx.config);
    const double mu_threshold = number_or(ctx.config, "mu_threshold", 4.0);
    const RegimeReport report =
        classify(innovation_alpha(spec.innovation), spec.mixing.beta,
                 static_cast<double>(spec.N), static_cast<double>(spec.n), mu_threshold);

    const auto samples = aggregate_replicates(spec, replicates, ctx.workers);
    std::ofstream out = ctx.open_output("panel.csv");
    out << "replicate,tau,raw,normalized\n";
    for (const auto& sample : samples)
        for (std::size_t j = 0; j < spec.taus.size(); ++j)
            out << sample.replicate_id << ',' << fmt(spec.taus[j]) << ',' << fmt(sample.values[j])
                << ',' << fmt(sample.values[j] / report.normalization) << '\n';

    std::ofstream rep = ctx.open_output("regime.csv");
    rep << "case,mu_proxy,gamma,normalization,limit,stability\n";
    rep << to_string(report.regime) << ',' << fmt(report.mu_proxy) << ','
        << (report.gamma ? fmt(*report.gamma) : "") << ',' << fmt(report.normalization) << ','
        << report.limit_law.name() << ',' << report.limit_law.stability() << '\n';
    return kExitOk;
}

int cmd_simulate_z(RunContext& ctx) {
    const json& root = ctx.config;
    if (!root.contains("z") || !root["z"].is_object())
        throw ConfigError("config: missing 'z' object");
    const json& j = root["z"];
    PoissonSimSpec spec;
    spec.alpha = need_number(j, "alpha");
    spec.beta = need_number(j, "beta");
    spec.psi1 = number_or(j, "psi1", 1.0);
    spec.driver = parse_innovation(root);
    spec.tau_grid = need_array(j, "tau_grid");
    if (j.contains("x_min") || j.contains("x_max")) {
        spec.x_min = need_number(j, "x_min");
        spec.x_max = need_number(j, "x_max");
    } else {
        const PoissonTruncation bounds = default_truncation(
            spec.alpha, spec.beta, spec.psi1, spec.tau_grid.back(), number_or(j, "trunc_tol", 0.01));
        spec.x_min = bounds.x_min;
        spec.x_max = bounds.x_max;
    }
    spec.dt = number_or(j, "dt", 0.01);
    spec.seed = ctx.seed;
    spec.validate();

    const std::int64_t replicates = parse_replicates(root);
    const auto paths = simulate_Z_replicates(spec, replicates, ctx.workers);
    std::ofstream out = ctx.open_output("z.csv");
    out << "replicate,tau,value\n";
    for (std::size_t r = 0; r < paths.size(); ++r)
        for (std::size_t k = 0; k < spec.tau_grid.size(); ++k)
            out << r << ',' << fmt(spec.tau_grid[k]) << ',' << fmt(paths[r][k]) << '\n';
    return kExitOk;
}

int cmd_limit_cf(RunContext& ctx) {
    const json& root = ctx.config;
    if (!root.contains("limit_cf") || !root["limit_cf"].is_object())
        throw ConfigError("config: missing 'limit_cf' object");
    const json& j = root["limit_cf"];
    const std::string family = j.value("family", "");
    const StableLaw law = parse_innovation(root);
    const double beta = number_or(j, "beta", 0.0);
    const double psi1 = number_or(j, "psi1", beta);
    const std::vector<double> taus = j.contains("taus") ? need_array(j, "taus") : std::vector<double>{1.0};
    const std::vector<double> thetas = parse_thetas(root);
    const QuadratureSpec quad = parse_quad(root);

    auto evaluate = [&](double theta, double tau) -> std::complex<double> {
        if (family == "levy") return cf_levy(theta, tau, law);
        if (family == "V") return cf_V(theta * tau, beta, psi1, law);
        if (family == "V1") return cf_V1(theta * tau, psi1, law);
        if (family == "W") return cf_W(theta, tau, beta, psi1, law);
        if (family == "Lambda") return cf_Lambda(theta, tau, beta, psi1, law, quad);
        if (family == "Z") return cf_Z(theta, tau, beta, psi1, law, quad);
        throw ConfigError("config: limit_cf.family must be levy | V | V1 | W | Lambda | Z");
    };

    std::ofstream out = ctx.open_output("cf.csv");
    out << "family,tau,theta,re,im\n";
    for (double tau : taus)
        for (double theta : thetas) {
            const std::complex<double> value = evaluate(theta, tau);
            out << family << ',' << fmt(tau) << ',' << fmt(theta) << ',' << fmt(value.real())
                << ',' << fmt(value.imag()) << '\n';
        }
    return kExitOk;
}

int cmd_regime_table(RunContext& ctx) {
    const json& root = ctx.config;
    if (!root.contains("grid") || !root["grid"].is_object())
        throw ConfigError("config: missing 'grid' object");
    const json& j = root["grid"];
    const std::vector<double> alphas = need_array(j, "alphas");
    const std::vector<double> betas = need_array(j, "betas");
    const double N = need_number(j, "N");
    const double n = need_number(j, "n");
    const double mu_threshold = number_or(root, "mu_threshold", 4.0);

    std::ofstream out = ctx.open_output("regime_table.csv");
    out << "alpha,beta,N,n,case,gamma,mu_proxy,normalization,limit,stability\n";
    for (double alpha : alphas)
        for (double beta : betas) {
            const RegimeReport report = classify(alpha, beta, N, n, mu_threshold);
            out << fmt(alpha) << ',' << fmt(beta) << ',' << fmt(N) << ',' << fmt(n) << ','
                << to_string(report.regime) << ',' << (report.gamma ? fmt(*report.gamma) : "")
                << ',' << fmt(report.mu_proxy) << ',' << fmt(report.normalization) << ','
                << report.limit_law.name() << ',' << report.limit_law.stability() << '\n';
        }
    return kExitOk;
}

int cmd_verify_regime(RunContext& ctx) {
    const PanelSpec spec = parse_panel(ctx);
    const std::int64_t replicates = parse_replicates(ctx.config);
    const double mu_threshold = number_or(ctx.config, "mu_threshold", 4.0);
    const double tolerance = need_number(ctx.config, "tolerance");
    const std::vector<double> thetas = parse_thetas(ctx.config);
    const QuadratureSpec quad = parse_quad(ctx.config);

    const RegimeReport report =
        classify(innovation_alpha(spec.innovation), spec.mixing.beta,
                 static_cast<double>(spec.N), static_cast<double>(spec.n), mu_threshold);
    if (report.regime == RegimeCase::Unsupported)
        throw ConfigError("verify-regime: (alpha, beta) lies in an unsupported boundary case");

    const auto samples = aggregate_replicates(spec, replicates, ctx.workers);

    std::ofstream out = ctx.open_output("verify.csv");
    out << "tau,theta,empirical_re,empirical_im,limit_re,limit_im\n";
    std::ofstream dist = ctx.open_output("distances.csv");
    dist << "tau,distance\n";

    double sup_distance = 0.0;
    std::vector<double> normalized(samples.size());
    for (std::size_t j = 0; j < spec.taus.size(); ++j) {
        for (std::size_t r = 0; r < samples.size(); ++r)
            normalized[r] = samples[r].values[j] / report.normalization;
        const CFGrid empirical = empirical_cf(normalized, thetas);
        CFGrid limit;
        limit.thetas = thetas;
        limit.values.resize(thetas.size());
        for (std::size_t k = 0; k < thetas.size(); ++k)
            limit.values[k] = report.limit_law.cf(thetas[k], spec.taus[j], spec.innovation, quad);
        const double distance = cf_distance(empirical, limit);
        sup_distance = std::max(sup_distance, distance);
        dist << fmt(spec.taus[j]) << ',' << fmt(distance) << '\n';
        for (std::size_t k = 0; k < thetas.size(); ++k)
            out << fmt(spec.taus[j]) << ',' << fmt(thetas[k]) << ','
                << fmt(empirical.values[k].real()) << ',' << fmt(empirical.values[k].imag()) << ','
                << fmt(limit.values[k].real()) << ',' << fmt(limit.values[k].imag()) << '\n';
    }

    const bool pass = sup_distance <= tolerance;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " verify-regime case=" << to_string(report.regime)
              << " limit=" << report.limit_law.name() << " distance=" << fmt(sup_distance)
              << " tolerance=" << fmt(tolerance) << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int dispatch(RunContext& ctx) {
    const std::string command = ctx.config.value("command", "");
    int code = kExitConfigError;
    if (command == "simulate-panel") code = cmd_simulate_panel(ctx);
    else if (command == "simulate-z") code = cmd_simulate_z(ctx);
    else if (command == "limit-cf") code = cmd_limit_cf(ctx);
    else if (command == "regime-table") code = cmd_regime_table(ctx);
    else if (command == "verify-regime") code = cmd_verify_regime(ctx);
    else throw ConfigError("config: unknown command '" + command + "'");
    ctx.write_manifest(command, code);
    return code;
}

}  // namespace

int run_config_text(const std::string& config_text, const Overrides& overrides) {
    RunContext ctx;
    try {
        ctx.config = json::parse(config_text);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }
    try {
        ctx.config_hash = fnv1a_hex(config_text);
        if (!ctx.config.is_object()) throw ConfigError("config: top level must be an object");
        ctx.seed = overrides.seed ? *overrides.seed
                                  : static_cast<std::uint64_t>(number_or(ctx.config, "seed", 0.0));
        ctx.workers = overrides.workers ? *overrides.workers
                                        : static_cast<int>(number_or(ctx.config, "workers", 1.0));
        if (ctx.workers < 1) throw ConfigError("config: workers must be >= 1");
        ctx.out_dir = overrides.out ? *overrides.out : ctx.config.value("out", "rcarlab-out");
        return dispatch(ctx);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what()
                  << " (error estimate " << e.error_estimate() << ")\n";
        return kExitNumericalFailure;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
}

int run_config_file(const std::string& path, const Overrides& overrides) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "config error: cannot read " << path << "\n";
        return kExitConfigError;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return run_config_text(buffer.str(), overrides);
}

int run_main(int argc, const char* const* argv) {
    std::string config_path;
    Overrides overrides;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string out;

    CLI::App app{"random-coefficient AR(1) aggregation laboratory"};
    app.add_option("--config", config_path, "JSON config file (see README for the schema)")
        ->required();
    auto* seed_opt = app.add_option("--seed", seed, "override the master seed");
    auto* workers_opt = app.add_option("--workers", workers, "override the worker count");
    auto* out_opt = app.add_option("--out", out, "override the output directory");
    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }
    if (seed_opt->count() > 0) overrides.seed = seed;
    if (workers_opt->count() > 0) overrides.workers = workers;
    if (out_opt->count() > 0) overrides.out = out;
    return run_config_file(config_path, overrides);
}

}  // namespace rcarlab::cli
