#include "rcarlab/panel.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace rcarlab {

void PanelSpec::validate() const {
    innovation.validate();
    mixing.validate();
    if (N < 1 || n < 1) throw std::invalid_argument("PanelSpec: N and n must be >= 1");
    if (taus.empty()) throw std::invalid_argument("PanelSpec: taus must be non-empty");
    double prev = 0.0;
    for (double t : taus) {
        if (!(t > prev)) throw std::invalid_argument("PanelSpec: taus must be strictly increasing and positive");
        prev = t;
    }
    if (!(burn_in_tol > 0.0 && burn_in_tol < 1.0))
        throw std::invalid_argument("PanelSpec: burn_in_tol must lie in (0,1)");
}

double ma_weight(double a, std::int64_t n, std::int64_t s) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("ma_weight: a must lie in [0,1)");
    if (s > n) return 0.0;
    if (a == 0.0) return (s >= 1 && s <= n) ? 1.0 : 0.0;
    const std::int64_t t0 = s > 1 ? s : 1;
    // sum_{t=t0}^{n} a^{t-s} = (a^{t0-s} - a^{n+1-s}) / (1-a)
    return (std::pow(a, static_cast<double>(t0 - s)) - std::pow(a, static_cast<double>(n + 1 - s))) /
           (1.0 - a);
}

std::int64_t burn_in_length(double a, double burn_in_tol) {
    if (a <= 0.0) return 0;
    constexpr std::int64_t kCap = 10'000'000;
    const double m = std::ceil(std::log(burn_in_tol) / std::log(a));
    if (!(m > 0.0)) return 0;
    return m < static_cast<double>(kCap) ? static_cast<std::int64_t>(m) : kCap;
}

namespace {

// Draw the stationary X(0) given a. For laws closed under convolution the
// conditional law is exact: sum_k a^k eps(-k) has Levy exponent
// |theta|^alpha omega(theta) / (1 - a^alpha), i.e. X(0) = (1-a^alpha)^{-1/alpha} zeta_alpha(1).
double stationary_start(double a, const StableLaw& law, double burn_in_tol, RngStream& rng) {
    if (a == 0.0) return sample_innovation(law, rng);
    if (law.flavor != StableFlavor::TwoSidedPareto) {
        const double scale = std::pow(1.0 - std::pow(a, law.alpha), -1.0 / law.alpha);
        return scale * sample_stable(law, rng);
    }
    const std::int64_t m = burn_in_length(a, burn_in_tol);
    double x0 = 0.0;
    double weight = 1.0;
    for (std::int64_t k = 0; k <= m; ++k) {
        x0 += weight * sample_innovation(law, rng);
        weight *= a;
    }
    return x0;
}

}  // namespace

std::vector<double> simulate_path(double a, std::int64_t n, const StableLaw& innovation,
                                  double burn_in_tol, RngStream& rng) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("simulate_path: a must lie in [0,1)");
    std::vector<double> path(static_cast<std::size_t>(n));
    double x = stationary_start(a, innovation, burn_in_tol, rng);
    for (std::int64_t t = 0; t < n; ++t) {
        x = a * x + sample_innovation(innovation, rng);
        path[static_cast<std::size_t>(t)] = x;
    }
    return path;
}

AggregateSample aggregate(const PanelSpec& spec, std::int64_t replicate_id) {
    spec.validate();
    const std::size_t k = spec.taus.size();
    // Checkpoints [n tau_j]; tau may exceed 1, so the horizon is [n tau_max].
    std::vector<std::int64_t> checkpoints(k);
    for (std::size_t j = 0; j < k; ++j)
        checkpoints[j] = static_cast<std::int64_t>(std::floor(static_cast<double>(spec.n) * spec.taus[j]));
    const std::int64_t horizon = checkpoints.back();

    std::vector<long double> totals(k, 0.0L);
    for (std::int64_t i = 0; i < spec.N; ++i) {
        RngStream rng = substream(spec.seed, static_cast<std::uint64_t>(replicate_id),
                                  static_cast<std::uint64_t>(i));
        const double a = sample_coefficient(spec.mixing, rng);
        double x = stationary_start(a, spec.innovation, spec.burn_in_tol, rng);
        long double partial = 0.0L;
        std::size_t j = 0;
        while (j < k && checkpoints[j] == 0) ++j; // [n tau] = 0 checkpoints stay 0
        for (std::int64_t t = 1; t <= horizon && j < k; ++t) {
            x = a * x + sample_innovation(spec.innovation, rng);
            partial += x;
            while (j < k && checkpoints[j] == t) {
                totals[j] += partial;
                ++j;
            }
        }
    }

    AggregateSample out;
    out.replicate_id = replicate_id;
    out.values.resize(k);
    for (std::size_t j = 0; j < k; ++j) out.values[j] = static_cast<double>(totals[j]);
    return out;
}

std::vector<AggregateSample> aggregate_replicates(const PanelSpec& spec, std::int64_t replicates,
                                                  int workers) {
    spec.validate();
    if (replicates < 0) throw std::invalid_argument("aggregate_replicates: negative count");
    std::vector<AggregateSample> out(static_cast<std::size_t>(replicates));
    if (replicates == 0) return out;
    if (workers < 1) workers = 1;
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw > 0 && workers > 2 * hw) workers = 2 * hw;
    if (replicates < workers) workers = static_cast<int>(replicates);

    if (workers == 1) {
        for (std::int64_t r = 0; r < replicates; ++r) out[static_cast<std::size_t>(r)] = aggregate(spec, r);
        return out;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t r = next.fetch_add(1);
            if (r >= replicates) return;
            out[static_cast<std::size_t>(r)] = aggregate(spec, r);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace rcarlab
