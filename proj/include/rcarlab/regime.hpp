#pragma once

#include <complex>
#include <optional>
#include <string>

#include "rcarlab/quadrature.hpp"
#include "rcarlab/stable.hpp"

namespace rcarlab {

enum class RegimeCase {
    IMuInfBetaGt1,  // beta < alpha, N^{1/beta}/n -> inf, 1 < beta
    IMuInfBetaEq1,  // beta = 1 < alpha, N/n -> inf
    IMuInfBetaLt1,  // beta < min(alpha,1), N^{1/beta}/n -> inf
    IMuZero,        // beta < alpha, N^{1/beta}/n -> 0
    IIntermediate,  // beta < alpha, N^{1/beta}/n in the finite band
    IIMuInf,        // alpha < beta < 1, N^{1/(gamma beta)}/n -> inf
    IIMuZero,       // alpha < beta < 1, N^{1/(gamma beta)}/n -> 0
    IIIntermediate, // alpha < beta < 1, finite band
    IIIShortMemory, // beta > max(alpha, 1)
    Unsupported,    // alpha = beta or alpha < beta = 1
};

enum class LimitFamily {
    LambdaProcess,  // Lambda_{alpha,beta}(tau)
    VLine,          // V_{alpha,beta} tau
    V1Line,         // V_{alpha,1} tau
    WProcess,       // W_{alpha,beta}(tau)
    IntermediateZ,  // mu^{1/alpha} Z_{alpha,beta}(tau/mu)
    VLinePlusLevy,  // mu^{1/alpha - 1} V_{alpha,beta} tau + kappa^{1/alpha} zeta_alpha(tau)
    ScaledLevy,     // kappa_alpha^{1/alpha} zeta_alpha(tau)
    None,
};

/// Limit law with its parameters bound; evaluates the marginal CF at (theta, tau).
struct LimitLawDescriptor {
    LimitFamily family = LimitFamily::None;
    double alpha = 0.0;
    double beta = 0.0;
    double psi1 = 0.0;
    double mu = 0.0;              // bound for IntermediateZ / VLinePlusLevy
    double kappa_alpha_value = 0.0; // bound for ScaledLevy / VLinePlusLevy

    std::complex<double> cf(double theta, double tau, const StableLaw& law,
                            const QuadratureSpec& quad) const;

    /// Short formula-style name, e.g. "V(alpha,beta)*tau".
    std::string name() const;

    /// Stability index of the limit marginal as in the regime table:
    /// "alpha-stable", "(alpha*beta)-stable", "beta-stable",
    /// "intermediate Poisson" or "(alpha*beta)-stable + alpha-stable".
    std::string stability() const;
};

struct RegimeReport {
    RegimeCase regime = RegimeCase::Unsupported;
    double mu_proxy = 0.0; // N^{1/beta}/n, or N^{1/(gamma beta)}/n in region II
    std::optional<double> gamma;
    double normalization = 1.0; // A_{N,n}
    LimitLawDescriptor limit_law;
};

const char* to_string(RegimeCase c);

/// Classify (alpha, beta, N, n) into the scaling regime, with the finite-mu
/// band declared when mu_proxy lies in [1/mu_threshold, mu_threshold].
RegimeReport classify(double alpha, double beta, double N, double n, double mu_threshold = 4.0);

}  // namespace rcarlab
