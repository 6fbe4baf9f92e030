#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "rcarlab/stable.hpp"
#include "rcarlab/stats.hpp"

using namespace rcarlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("StableLaw invariants are enforced") {
    CHECK_NOTHROW(StableLaw::gaussian(1.0));
    CHECK_NOTHROW(StableLaw::exact_stable(1.5, 1.0, 0.5));
    CHECK_NOTHROW(StableLaw::exact_stable(1.0, 0.5, 0.5));
    CHECK_THROWS_AS(StableLaw::gaussian(0.0), std::invalid_argument);
    CHECK_THROWS_AS(StableLaw::exact_stable(2.5, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(StableLaw::exact_stable(1.5, 0.0, 0.0), std::invalid_argument);
    // alpha = 1 must be symmetric
    CHECK_THROWS_AS(StableLaw::exact_stable(1.0, 1.0, 0.5), std::invalid_argument);
    // alpha = 2 only via the Gaussian flavor
    StableLaw bad = StableLaw::exact_stable(1.5, 1.0, 1.0);
    bad.alpha = 2.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("omega branches") {
    SUBCASE("alpha = 2") {
        const StableLaw law = StableLaw::gaussian(1.0);
        const OmegaValue w = omega(7.3, law);
        CHECK(w.re == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(w.im_sign_pos == 0.0);
    }
    SUBCASE("alpha = 1") {
        const StableLaw law = StableLaw::exact_stable(1.0, 1.0, 1.0);
        const OmegaValue w = omega(3.0, law);
        CHECK(w.re == doctest::Approx(kPi).epsilon(1e-15));
        CHECK(w.im_sign_pos == 0.0);
    }
    SUBCASE("alpha = 0.5, one-sided") {
        // Gamma(1.5)/0.5 * (cos(pi/4) - i sin(pi/4)); reference from an
        // arbitrary-precision gamma evaluation.
        const StableLaw law = StableLaw::exact_stable(0.5, 1.0, 0.0);
        const OmegaValue w = omega(1.0, law);
        CHECK(w.re == doctest::Approx(1.25331413731550025).epsilon(1e-14));
        CHECK(w.im_sign_pos == doctest::Approx(-1.25331413731550025).epsilon(1e-14));
    }
    SUBCASE("theta dependence through sign only; conjugate at -theta") {
        const StableLaw law = StableLaw::exact_stable(1.3, 2.0, 0.5);
        const OmegaValue w1 = omega(0.4, law);
        const OmegaValue w2 = omega(400.0, law);
        CHECK(w1.re == w2.re);
        CHECK(w1.im_sign_pos == w2.im_sign_pos);
        CHECK(omega(-0.4, law).at(1.0) == std::conj(w1.at(1.0)));
        // omega(0) takes the theta > 0 branch
        CHECK(omega(0.0, law).im_sign_pos == w1.im_sign_pos);
    }
    SUBCASE("real part is strictly positive across the parameter range") {
        for (double alpha : {0.1, 0.5, 0.9, 1.0, 1.1, 1.5, 1.9, 1.99}) {
            for (auto [c1, c2] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {2.0, 3.0}, {1.0, 1.0}}) {
                if (alpha == 1.0 && c1 != c2) continue;
                const OmegaValue w = omega(1.0, StableLaw::exact_stable(alpha, c1, c2));
                CHECK(w.re > 0.0);
            }
        }
    }
}

TEST_CASE("cf_levy values and properties") {
    SUBCASE("origin and alpha = 2") {
        const StableLaw law = StableLaw::gaussian(1.0);
        CHECK(cf_levy(0.0, 5.0, law) == std::complex<double>(1.0, 0.0));
        CHECK(cf_levy(2.0, 1.0, law).real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
        CHECK(cf_levy(2.0, 1.0, law).imag() == 0.0);
    }
    SUBCASE("alpha = 1 Cauchy scales") {
        // c1 = c2 = 1/pi is the standard Cauchy: omega = 1.
        const StableLaw cauchy = StableLaw::exact_stable(1.0, 1.0 / kPi, 1.0 / kPi);
        CHECK(std::abs(cf_levy(1.0, 1.0, cauchy) - std::exp(-1.0)) < 1e-14);
        CHECK(std::abs(cf_levy(1.0, 2.0, cauchy) - std::exp(-2.0)) < 1e-14);
        // c1 = c2 = 1/(2 pi) gives omega = 1/2.
        const StableLaw half = StableLaw::exact_stable(1.0, 0.5 / kPi, 0.5 / kPi);
        CHECK(omega(1.0, half).re == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(std::abs(cf_levy(1.0, 2.0, half) - std::exp(-1.0)) < 1e-14);
    }
    SUBCASE("Levy exponent additivity in tau") {
        const StableLaw law = StableLaw::exact_stable(1.4, 2.0, 0.7);
        RngStream rng = substream(7, 0);
        for (int i = 0; i < 200; ++i) {
            const double theta = 6.0 * uniform_open(rng) - 3.0;
            const double t1 = 3.0 * uniform_open(rng);
            const double t2 = 3.0 * uniform_open(rng);
            const auto lhs = cf_levy(theta, t1 + t2, law);
            const auto rhs = cf_levy(theta, t1, law) * cf_levy(theta, t2, law);
            CHECK(std::abs(lhs - rhs) < 1e-13);
            CHECK(std::abs(cf_levy(theta, t1, law)) <= 1.0 + 1e-15);
        }
    }
    SUBCASE("alpha = 2 is real and positive") {
        const StableLaw law = StableLaw::gaussian(2.5);
        for (double theta : {-3.0, -0.5, 0.1, 2.0}) {
            const auto value = cf_levy(theta, 1.7, law);
            CHECK(value.imag() == 0.0);
            CHECK(value.real() > 0.0);
        }
    }
}

TEST_CASE("sample_stable matches its characteristic function") {
    const std::vector<double> thetas = theta_grid(-3.0, 3.0, 61);

    SUBCASE("alpha = 2: sample variance within 3 standard errors") {
        const StableLaw law = StableLaw::gaussian(1.0);
        const auto draws = testutil::draw_stable(law, 100'000, 11);
        const double var = testutil::variance(draws);
        const double se = std::sqrt(2.0 / 100'000.0);
        CHECK(std::abs(var - 1.0) < 3.0 * se);
    }
    SUBCASE("symmetric law: sign balance consistent with symmetry") {
        const StableLaw law = StableLaw::exact_stable(1.5, 1.0, 1.0);
        const auto draws = testutil::draw_stable(law, 100'000, 12);
        std::size_t positive = 0;
        for (double v : draws) positive += v > 0.0;
        const double se = std::sqrt(100'000.0) / 2.0;
        CHECK(std::abs(static_cast<double>(positive) - 50'000.0) < 3.0 * se);
    }
    SUBCASE("alpha = 1.5 symmetric: empirical CF near cf_levy") {
        const StableLaw law = StableLaw::exact_stable(1.5, 1.0, 1.0);
        const auto draws = testutil::draw_stable(law, 100'000, 13);
        const double sup = testutil::ecf_distance(
            draws, thetas, [&](double t) { return cf_levy(t, 1.0, law); });
        CHECK(sup < 0.02);
    }
    SUBCASE("asymmetric laws keep the skew sign") {
        const StableLaw law = StableLaw::exact_stable(1.2, 1.5, 0.5);
        const auto draws = testutil::draw_stable(law, 100'000, 14);
        const double sup = testutil::ecf_distance(
            draws, thetas, [&](double t) { return cf_levy(t, 1.0, law); });
        CHECK(sup < 0.02);
    }
    SUBCASE("alpha < 1 one-sided") {
        const StableLaw law = StableLaw::exact_stable(0.7, 1.0, 0.0);
        const auto draws = testutil::draw_stable(law, 100'000, 15);
        const double sup = testutil::ecf_distance(
            draws, thetas, [&](double t) { return cf_levy(t, 1.0, law); });
        CHECK(sup < 0.02);
    }
    SUBCASE("alpha = 1 symmetric Cauchy") {
        const StableLaw law = StableLaw::exact_stable(1.0, 1.0 / kPi, 1.0 / kPi);
        const auto draws = testutil::draw_stable(law, 100'000, 16);
        const double sup = testutil::ecf_distance(
            draws, thetas, [&](double t) { return cf_levy(t, 1.0, law); });
        CHECK(sup < 0.02);
    }
    SUBCASE("TwoSidedPareto is rejected") {
        const StableLaw law = StableLaw::two_sided_pareto(1.5, 1.0, 1.0);
        RngStream rng = substream(1, 0);
        CHECK_THROWS_AS(sample_stable(law, rng), std::invalid_argument);
    }
}

TEST_CASE("sample_innovation: exact Pareto tails, centering, attraction") {
    SUBCASE("alpha = 2 reduces to a Gaussian draw") {
        const StableLaw law = StableLaw::gaussian(1.0);
        RngStream a = substream(21, 0);
        RngStream b = substream(21, 0);
        CHECK(sample_innovation(law, a) == sample_stable(law, b));
    }
    SUBCASE("Hill estimate of the tail index") {
        const StableLaw law = StableLaw::two_sided_pareto(1.5, 1.0, 1.0);
        const auto draws = testutil::draw_innovations(law, 1'000'000, 22);
        const double hill = hill_index(draws, 10'000); // top 1%
        CHECK(hill > 1.35);
        CHECK(hill < 1.65);
    }
    SUBCASE("tail ratio approaches c1/c2") {
        const StableLaw law = StableLaw::two_sided_pareto(1.2, 2.0, 1.0);
        const auto draws = testutil::draw_innovations(law, 1'000'000, 23);
        for (double level : {20.0, 50.0}) {
            double right = 0.0, left = 0.0;
            for (double v : draws) {
                right += v > level;
                left += v < -level;
            }
            CHECK(right / left == doctest::Approx(2.0).epsilon(0.2));
        }
    }
    SUBCASE("exact survival beyond the threshold") {
        const StableLaw law = StableLaw::two_sided_pareto(1.5, 0.3, 0.1);
        const double x0 = pareto_threshold(law);
        const auto draws = testutil::draw_innovations(law, 1'000'000, 24);
        const double level = 2.0 * x0;
        const double expected = 0.3 * std::pow(level, -1.5);
        double count = 0.0;
        for (double v : draws) count += v > level;
        const double se = std::sqrt(expected * 1e6);
        CHECK(std::abs(count - expected * 1e6) < 4.0 * se);
    }
    SUBCASE("mean-zero for alpha > 1") {
        const StableLaw law = StableLaw::two_sided_pareto(1.8, 2.0, 0.3);
        const auto draws = testutil::draw_innovations(law, 400'000, 25);
        CHECK(std::abs(testutil::mean(draws)) < 0.05);
    }
    SUBCASE("partial sums are attracted to the stable law") {
        const StableLaw law = StableLaw::two_sided_pareto(1.3, 0.5, 0.5);
        const std::size_t n = 2000, reps = 3000;
        RngStream rng = substream(26, 0);
        std::vector<double> sums(reps);
        const double norm = std::pow(static_cast<double>(n), -1.0 / 1.3);
        for (auto& s : sums) {
            double acc = 0.0;
            for (std::size_t t = 0; t < n; ++t) acc += sample_innovation(law, rng);
            s = norm * acc;
        }
        const double sup =
            testutil::ecf_distance(sums, theta_grid(-3.0, 3.0, 61),
                                   [&](double t) { return cf_levy(t, 1.0, law); });
        CHECK(sup < 0.06);
    }
}
