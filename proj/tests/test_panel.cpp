#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rcarlab/panel.hpp"
#include "rcarlab/stats.hpp"

using namespace rcarlab;

namespace {

PanelSpec basic_spec() {
    PanelSpec spec;
    spec.innovation = StableLaw::gaussian(1.0);
    spec.mixing = MixingLaw::pure_power(2.0);
    spec.N = 4;
    spec.n = 50;
    spec.taus = {0.5, 1.0};
    spec.seed = 99;
    return spec;
}

// brute-force oracle for c_n(a, s) = sum_{t=1}^n a^{t-s} 1(s <= t)
double ma_weight_brute(double a, std::int64_t n, std::int64_t s) {
    double acc = 0.0;
    for (std::int64_t t = 1; t <= n; ++t)
        if (s <= t) acc += std::pow(a, static_cast<double>(t - s));
    return acc;
}

}  // namespace

TEST_CASE("ma_weight closed form") {
    CHECK(ma_weight(0.0, 5, 3) == 1.0);
    CHECK(ma_weight(0.0, 5, 0) == 0.0);
    CHECK(ma_weight(0.5, 3, -1) == doctest::Approx(0.4375).epsilon(1e-15));
    CHECK(ma_weight(0.9, 100, 1) == doctest::Approx(ma_weight_brute(0.9, 100, 1)).epsilon(1e-12));
    CHECK(ma_weight(0.9, 100, 1) <= std::min(100.0, 1.0 / (1.0 - 0.9)));

    SUBCASE("brute-force agreement and the elementary inequalities") {
        RngStream rng = substream(51, 0);
        for (int i = 0; i < 10'000; ++i) {
            const double a = uniform_open(rng) < 0.1 ? 0.0 : uniform_open(rng);
            const auto n = static_cast<std::int64_t>(1 + 60.0 * uniform_open(rng));
            const auto s = static_cast<std::int64_t>(-40.0 + 110.0 * uniform_open(rng));
            const double w = ma_weight(a, n, s);
            CHECK(w == doctest::Approx(ma_weight_brute(a, n, s)).epsilon(1e-10));
        }
        // sum_{s<=0} c^alpha and sum_{s=1..n} c^alpha bounds
        for (int i = 0; i < 200; ++i) {
            const double a = uniform_open(rng);
            const double alpha = 0.2 + 1.8 * uniform_open(rng);
            const auto n = static_cast<std::int64_t>(2 + 40.0 * uniform_open(rng));
            const double cap = std::min(static_cast<double>(n), 1.0 / (1.0 - a));
            double left = 0.0;
            for (std::int64_t s = -2000; s <= 0; ++s) left += std::pow(ma_weight(a, n, s), alpha);
            CHECK(left <= std::pow(cap, alpha) / (std::min(alpha, 1.0) * (1.0 - a)) * (1.0 + 1e-9));
            double right = 0.0;
            for (std::int64_t s = 1; s <= n; ++s) right += std::pow(ma_weight(a, n, s), alpha);
            CHECK(right <= static_cast<double>(n) * std::pow(cap, alpha) * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("burn_in_length") {
    CHECK(burn_in_length(0.0, 1e-8) == 0);
    CHECK(burn_in_length(0.5, 1e-8) == 27); // ceil(log(1e-8)/log(0.5))
    CHECK(burn_in_length(1.0 - 1e-12, 1e-8) == 10'000'000);
}

TEST_CASE("simulate_path") {
    SUBCASE("a = 0 reproduces the innovation sequence") {
        const StableLaw law = StableLaw::exact_stable(1.5, 1.0, 1.0);
        RngStream path_rng = substream(7, 3);
        const auto path = simulate_path(0.0, 20, law, 1e-8, path_rng);
        RngStream ref_rng = substream(7, 3);
        (void)sample_innovation(law, ref_rng); // the stationary start draw
        for (double v : path) CHECK(v == sample_innovation(law, ref_rng));
    }
    SUBCASE("stationary variance of the Gaussian AR(1)") {
        const StableLaw law = StableLaw::gaussian(1.0);
        RngStream rng = substream(8, 0);
        const auto path = simulate_path(0.5, 100'000, law, 1e-8, rng);
        const double var = testutil::variance(path);
        // AR(1) sample-variance standard error ~ sigma^2 sqrt(2/n (1+a^2)/(1-a^2))
        const double se = (4.0 / 3.0) * std::sqrt(2.0 / 100'000.0 * 1.25 / 0.75);
        CHECK(std::abs(var - 4.0 / 3.0) < 3.0 * se);
    }
    SUBCASE("pareto innovations use the truncated MA start") {
        const StableLaw law = StableLaw::two_sided_pareto(1.8, 0.5, 0.5);
        RngStream rng = substream(9, 0);
        const auto path = simulate_path(0.9, 2000, law, 1e-8, rng);
        CHECK(path.size() == 2000);
        for (double v : path) CHECK(std::isfinite(v));
    }
    SUBCASE("conditional stable limit of partial sums at fixed a") {
        // n^{-1/alpha} sum_t X(t) is near (1-a)^{-1} zeta_alpha(1).
        const StableLaw law = StableLaw::exact_stable(1.5, 0.5, 0.5);
        const double a = 0.8;
        const std::size_t n = 10'000, reps = 10'000;
        std::vector<double> sums(reps);
        const double norm = std::pow(static_cast<double>(n), -1.0 / 1.5);
        for (std::size_t r = 0; r < reps; ++r) {
            RngStream rng = substream(10, r);
            double x = std::pow(1.0 - std::pow(a, 1.5), -1.0 / 1.5) * sample_stable(law, rng);
            double acc = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                x = a * x + sample_stable(law, rng);
                acc += x;
            }
            sums[r] = norm * acc;
        }
        const double sup = testutil::ecf_distance(
            sums, theta_grid(-3.0, 3.0, 61),
            [&](double t) { return cf_levy(t / (1.0 - a), 1.0, law); });
        CHECK(sup < 0.03);
    }
}

TEST_CASE("aggregate") {
    SUBCASE("panel of width 1 equals one path's partial sums") {
        PanelSpec spec = basic_spec();
        spec.N = 1;
        const AggregateSample sample = aggregate(spec, 5);
        RngStream rng = substream(spec.seed, 5, 0);
        const double a = sample_coefficient(spec.mixing, rng);
        double x = std::pow(1.0 - std::pow(a, 2.0), -0.5) * sample_stable(spec.innovation, rng);
        double acc = 0.0;
        std::vector<double> expected;
        for (std::int64_t t = 1; t <= 50; ++t) {
            x = a * x + sample_stable(spec.innovation, rng);
            acc += x;
            if (t == 25 || t == 50) expected.push_back(acc);
        }
        CHECK(sample.values[0] == doctest::Approx(expected[0]).epsilon(1e-12));
        CHECK(sample.values[1] == doctest::Approx(expected[1]).epsilon(1e-12));
    }
    SUBCASE("[n tau] = 0 checkpoints are empty sums") {
        PanelSpec spec = basic_spec();
        spec.n = 2;
        spec.taus = {0.3, 1.0};
        const AggregateSample sample = aggregate(spec, 0);
        CHECK(sample.values[0] == 0.0);
        CHECK(sample.values[1] != 0.0);
    }
    SUBCASE("determinism and worker independence") {
        PanelSpec spec = basic_spec();
        const auto a = aggregate(spec, 3);
        const auto b = aggregate(spec, 3);
        CHECK(a.values == b.values);
        const auto seq = aggregate_replicates(spec, 8, 1);
        const auto par = aggregate_replicates(spec, 8, 4);
        for (std::size_t r = 0; r < 8; ++r) CHECK(seq[r].values == par[r].values);
    }
    SUBCASE("short-memory variance matches kappa_2 * Var eps") {
        PanelSpec spec;
        spec.innovation = StableLaw::gaussian(1.0);
        spec.mixing = MixingLaw::pure_power(3.0);
        spec.N = 150;
        spec.n = 150;
        spec.taus = {1.0};
        spec.seed = 1234;
        const auto samples = aggregate_replicates(spec, 2000, 1);
        std::vector<double> normalized(samples.size());
        const double norm = std::sqrt(150.0 * 150.0);
        for (std::size_t r = 0; r < samples.size(); ++r)
            normalized[r] = samples[r].values[0] / norm;
        const double var = testutil::variance(normalized);
        const double kappa2 = 3.0 / (3.0 - 2.0); // beta/(beta-alpha)
        CHECK(std::abs(var - kappa2) / kappa2 < 0.10);
    }
}
