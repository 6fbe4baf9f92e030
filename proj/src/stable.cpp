#include "rcarlab/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rcarlab {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void invalid(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

StableLaw StableLaw::gaussian(double variance) {
    StableLaw law;
    law.alpha = 2.0;
    law.variance = variance;
    law.flavor = StableFlavor::Gaussian;
    law.validate();
    return law;
}

StableLaw StableLaw::exact_stable(double alpha, double c1, double c2) {
    StableLaw law;
    law.alpha = alpha;
    law.c1 = c1;
    law.c2 = c2;
    law.flavor = StableFlavor::ExactStable;
    law.validate();
    return law;
}

StableLaw StableLaw::two_sided_pareto(double alpha, double c1, double c2) {
    StableLaw law;
    law.alpha = alpha;
    law.c1 = c1;
    law.c2 = c2;
    law.flavor = StableFlavor::TwoSidedPareto;
    law.validate();
    return law;
}

void StableLaw::validate() const {
    if (!(alpha > 0.0) || alpha > 2.0) invalid("StableLaw: alpha must lie in (0, 2]");
    if (alpha == 2.0) {
        if (flavor != StableFlavor::Gaussian) invalid("StableLaw: alpha = 2 requires Gaussian flavor");
        if (!(variance > 0.0) || !std::isfinite(variance)) invalid("StableLaw: alpha = 2 requires finite positive variance");
        return;
    }
    if (flavor == StableFlavor::Gaussian) invalid("StableLaw: Gaussian flavor requires alpha = 2");
    if (c1 < 0.0 || c2 < 0.0) invalid("StableLaw: tail constants must be nonnegative");
    if (!(c1 + c2 > 0.0)) invalid("StableLaw: alpha < 2 requires c1 + c2 > 0");
    if (alpha == 1.0 && c1 != c2) invalid("StableLaw: alpha = 1 requires a symmetric law (c1 = c2)");
}

OmegaValue omega(const StableLaw& law) {
    OmegaValue w;
    if (law.alpha == 2.0) {
        w.re = 0.5 * law.variance;
        return w;
    }
    if (law.alpha == 1.0) {
        w.re = (law.c1 + law.c2) * kPi / 2.0;
        return w;
    }
    const double pref = std::tgamma(2.0 - law.alpha) / (1.0 - law.alpha);
    const double half_angle = law.alpha * kPi / 2.0;
    w.re = pref * (law.c1 + law.c2) * std::cos(half_angle);
    w.im_sign_pos = -pref * (law.c1 - law.c2) * std::sin(half_angle);
    return w;
}

OmegaValue omega(double theta, const StableLaw& law) {
    OmegaValue w = omega(law);
    if (theta < 0.0) w.im_sign_pos = -w.im_sign_pos;
    return w;
}

std::complex<double> cf_levy(double theta, double tau, const StableLaw& law) {
    if (tau < 0.0) invalid("cf_levy: tau must be nonnegative");
    if (theta == 0.0 || tau == 0.0) return {1.0, 0.0};
    const std::complex<double> expo =
        -tau * std::pow(std::abs(theta), law.alpha) * omega(law).at(theta);
    return std::exp(expo);
}

namespace {

// Chambers-Mallows-Stuck draw of a standard stable r.v. in the S1
// parameterization: CF exp(-|t|^a (1 - i b sign(t) tan(pi a / 2))), a != 1.
double cms_standard(double alpha, double beta_skew, RngStream& rng) {
    const double u = kPi * (uniform_open(rng) - 0.5); // uniform on (-pi/2, pi/2)
    const double w = -std::log(uniform_pos(rng));     // Exp(1)
    if (alpha == 1.0) {
        // symmetric only: standard Cauchy
        return std::tan(u);
    }
    const double zeta = -beta_skew * std::tan(kPi * alpha / 2.0);
    const double xi = std::atan(-zeta) / alpha;
    const double t = alpha * (u + xi);
    const double value = std::pow(1.0 + zeta * zeta, 0.5 / alpha) * std::sin(t) /
                         std::pow(std::cos(u), 1.0 / alpha) *
                         std::pow(std::cos(u - t) / w, (1.0 - alpha) / alpha);
    return value;
}

}  // namespace

double sample_stable(const StableLaw& law, RngStream& rng) {
    law.validate();
    if (law.flavor == StableFlavor::TwoSidedPareto)
        invalid("sample_stable: TwoSidedPareto laws are sampled via sample_innovation");
    if (law.alpha == 2.0) {
        std::normal_distribution<double> normal(0.0, std::sqrt(law.variance));
        return normal(rng);
    }
    // Scale and skew matching exp(-|t|^alpha omega(t)):
    //   sigma^alpha = Re omega, beta_skew = (c1 - c2)/(c1 + c2).
    const OmegaValue w = omega(law);
    const double sigma = std::pow(w.re, 1.0 / law.alpha);
    const double beta_skew = (law.c1 - law.c2) / (law.c1 + law.c2);
    return sigma * cms_standard(law.alpha, beta_skew, rng);
}

double pareto_threshold(const StableLaw& law) {
    // Tail masses q_i = c_i x0^-alpha must fit below 0.8, and for alpha > 1
    // the centering shift of the core masses must stay feasible:
    //   |mR - mL| = 2 alpha |c1 - c2| x0^-alpha / (alpha - 1) <= 1 - (c1+c2) x0^-alpha.
    double demand = law.c1 + law.c2;
    if (law.alpha > 1.0) demand += 2.0 * law.alpha * std::abs(law.c1 - law.c2) / (law.alpha - 1.0);
    const double x0 = std::pow(demand / 0.8, 1.0 / law.alpha);
    return x0 > 1.0 ? x0 : 1.0;
}

double sample_innovation(const StableLaw& law, RngStream& rng) {
    law.validate();
    if (law.flavor != StableFlavor::TwoSidedPareto) return sample_stable(law, rng);

    const double x0 = pareto_threshold(law);
    const double t = std::pow(x0, -law.alpha);
    const double q1 = law.c1 * t; // exact right tail mass at x0
    const double q2 = law.c2 * t; // exact left tail mass at x0
    const double q0 = 1.0 - q1 - q2;
    // Core masses on (0, x0) and (-x0, 0); asymmetric split cancels the
    // tail means when alpha > 1, symmetric otherwise.
    double d = 0.0;
    if (law.alpha > 1.0) d = -2.0 * law.alpha * (law.c1 - law.c2) * t / (law.alpha - 1.0);
    const double m_right = 0.5 * (q0 + d);

    const double v = uniform_open(rng);
    if (v < q1) return x0 * std::pow(uniform_pos(rng), -1.0 / law.alpha);
    if (v < q1 + q2) return -x0 * std::pow(uniform_pos(rng), -1.0 / law.alpha);
    if (v < q1 + q2 + m_right) return x0 * uniform_open(rng);
    return -x0 * uniform_open(rng);
}

}  // namespace rcarlab
