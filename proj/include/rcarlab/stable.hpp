#pragma once

#include <complex>
#include <cstdint>

#include "rcarlab/rng.hpp"

namespace rcarlab {

enum class StableFlavor { ExactStable, TwoSidedPareto, Gaussian };

/// Innovation distribution in the domain of normal attraction of an
/// alpha-stable law. For alpha < 2 the tails satisfy
///   x^alpha P(eps > x) -> c1,   x^alpha P(eps <= -x) -> c2,
/// with c1 + c2 > 0; for alpha = 2 only the variance matters. The law is
/// mean-centered for alpha > 1 and symmetric for alpha = 1 (so c1 = c2).
struct StableLaw {
    double alpha = 2.0;
    double c1 = 0.0;       // right tail constant
    double c2 = 0.0;       // left tail constant
    double variance = 1.0; // meaningful only when alpha = 2
    StableFlavor flavor = StableFlavor::Gaussian;

    static StableLaw gaussian(double variance = 1.0);
    static StableLaw exact_stable(double alpha, double c1, double c2);
    static StableLaw two_sided_pareto(double alpha, double c1, double c2);

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;

    bool symmetric() const noexcept { return alpha == 2.0 || c1 == c2; }
};

/// The Levy exponent factor omega of the attracting stable law:
///   E exp(i theta zeta_alpha(tau)) = exp(-tau |theta|^alpha omega(theta)),
/// where omega depends on theta only through its sign and has strictly
/// positive real part. Stored as the value on theta > 0; the value on
/// theta < 0 is the complex conjugate.
struct OmegaValue {
    double re = 0.0;
    double im_sign_pos = 0.0; // imaginary part for theta > 0; negated for theta < 0

    std::complex<double> at(double theta) const noexcept {
        return {re, theta >= 0.0 ? im_sign_pos : -im_sign_pos};
    }
    std::complex<double> positive() const noexcept { return {re, im_sign_pos}; }
};

/// omega(theta) per branch of the law's alpha. theta = 0 returns the
/// theta > 0 branch (the CF at the origin is forced to 1 regardless).
OmegaValue omega(double theta, const StableLaw& law);

/// Convenience: the theta-independent core of omega.
OmegaValue omega(const StableLaw& law);

/// Characteristic function of the attracting Levy process at time tau >= 0:
/// exp(-tau |theta|^alpha omega(theta)). Exactly 1 at theta = 0.
std::complex<double> cf_levy(double theta, double tau, const StableLaw& law);

/// One draw of zeta_alpha(1), the attracting stable law itself, by the
/// Chambers-Mallows-Stuck construction (Gaussian draw for alpha = 2).
/// Rejects flavor = TwoSidedPareto.
double sample_stable(const StableLaw& law, RngStream& rng);

/// One innovation draw from the concrete law. ExactStable and Gaussian
/// delegate to sample_stable; TwoSidedPareto draws from a piecewise law with
/// exact power tails beyond the feasibility threshold pareto_threshold(law)
/// and a uniform core, reweighted so E eps = 0 when alpha > 1.
double sample_innovation(const StableLaw& law, RngStream& rng);

/// Tail threshold x0 of the TwoSidedPareto construction:
/// P(eps > x) = c1 x^-alpha and P(eps < -x) = c2 x^-alpha hold exactly for
/// x >= x0. Equals 1 unless tail mass or mean-centering forces it larger.
double pareto_threshold(const StableLaw& law);

}  // namespace rcarlab
