#include "rcarlab/regime.hpp"

#include <cmath>
#include <stdexcept>

#include "rcarlab/limit_laws.hpp"
#include "rcarlab/mixing.hpp"

namespace rcarlab {

std::complex<double> LimitLawDescriptor::cf(double theta, double tau, const StableLaw& law,
                                            const QuadratureSpec& quad) const {
    switch (family) {
        case LimitFamily::LambdaProcess:
            return cf_Lambda(theta, tau, beta, psi1, law, quad);
        case LimitFamily::VLine:
            return cf_V(theta * tau, beta, psi1, law);
        case LimitFamily::V1Line:
            return cf_V1(theta * tau, psi1, law);
        case LimitFamily::WProcess:
            return cf_W(theta, tau, beta, psi1, law);
        case LimitFamily::IntermediateZ:
            // mu^{1/alpha} Z(tau/mu)
            return cf_Z(theta * std::pow(mu, 1.0 / alpha), tau / mu, beta, psi1, law, quad);
        case LimitFamily::VLinePlusLevy: {
            // independent sum: CF product
            const std::complex<double> v = cf_V(theta * tau * std::pow(mu, 1.0 / alpha - 1.0),
                                                beta, psi1, law);
            return v * cf_levy(theta, tau * kappa_alpha_value, law);
        }
        case LimitFamily::ScaledLevy:
            return cf_levy(theta, tau * kappa_alpha_value, law);
        case LimitFamily::None:
            break;
    }
    throw std::invalid_argument("LimitLawDescriptor: no limit law bound");
}

std::string LimitLawDescriptor::name() const {
    switch (family) {
        case LimitFamily::LambdaProcess: return "Lambda(alpha,beta)";
        case LimitFamily::VLine: return "V(alpha,beta)*tau";
        case LimitFamily::V1Line: return "V(alpha,1)*tau";
        case LimitFamily::WProcess: return "W(alpha,beta)";
        case LimitFamily::IntermediateZ: return "mu^(1/alpha)*Z(alpha,beta)(tau/mu)";
        case LimitFamily::VLinePlusLevy: return "mu^(1/alpha-1)*V(alpha,beta)*tau + kappa^(1/alpha)*levy";
        case LimitFamily::ScaledLevy: return "kappa^(1/alpha)*levy";
        case LimitFamily::None: break;
    }
    return "none";
}

std::string LimitLawDescriptor::stability() const {
    switch (family) {
        case LimitFamily::LambdaProcess: return "alpha-stable";
        case LimitFamily::VLine: return "(alpha*beta)-stable";
        case LimitFamily::V1Line: return "alpha-stable";
        case LimitFamily::WProcess: return "beta-stable";
        case LimitFamily::IntermediateZ: return "intermediate Poisson";
        case LimitFamily::VLinePlusLevy: return "(alpha*beta)-stable + alpha-stable";
        case LimitFamily::ScaledLevy: return "alpha-stable";
        case LimitFamily::None: break;
    }
    return "none";
}

const char* to_string(RegimeCase c) {
    switch (c) {
        case RegimeCase::IMuInfBetaGt1: return "I_mu_inf_beta_gt1";
        case RegimeCase::IMuInfBetaEq1: return "I_mu_inf_beta_eq1";
        case RegimeCase::IMuInfBetaLt1: return "I_mu_inf_beta_lt1";
        case RegimeCase::IMuZero: return "I_mu_zero";
        case RegimeCase::IIntermediate: return "I_intermediate";
        case RegimeCase::IIMuInf: return "II_mu_inf";
        case RegimeCase::IIMuZero: return "II_mu_zero";
        case RegimeCase::IIIntermediate: return "II_intermediate";
        case RegimeCase::IIIShortMemory: return "III_short_memory";
        case RegimeCase::Unsupported: return "unsupported";
    }
    return "unsupported";
}

RegimeReport classify(double alpha, double beta, double N, double n, double mu_threshold) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("classify: alpha must lie in (0,2]");
    if (!(beta > 0.0)) throw std::invalid_argument("classify: beta must be positive");
    if (!(N >= 2.0 && n >= 2.0)) throw std::invalid_argument("classify: N and n must be >= 2");
    if (!(mu_threshold >= 1.0)) throw std::invalid_argument("classify: mu_threshold must be >= 1");

    RegimeReport report;
    report.limit_law.alpha = alpha;
    report.limit_law.beta = beta;
    report.limit_law.psi1 = beta; // pure power mixing

    // Open boundary cases stay unsupported.
    if (alpha == beta || (alpha < beta && beta == 1.0)) {
        report.regime = RegimeCase::Unsupported;
        report.mu_proxy = std::pow(N, 1.0 / beta) / n;
        return report;
    }

    const MixingLaw mixing = MixingLaw::pure_power(beta);

    if (beta > alpha && beta > 1.0) { // region (iii): short memory
        report.regime = RegimeCase::IIIShortMemory;
        report.mu_proxy = std::pow(N, 1.0 / beta) / n;
        report.normalization = std::pow(N * n, 1.0 / alpha);
        report.limit_law.family = LimitFamily::ScaledLevy;
        report.limit_law.kappa_alpha_value = kappa_alpha(mixing, alpha);
        return report;
    }

    if (beta < alpha) { // region (i)
        const double mu = std::pow(N, 1.0 / beta) / n;
        report.mu_proxy = mu;
        if (mu > mu_threshold) {
            if (beta > 1.0) {
                report.regime = RegimeCase::IMuInfBetaGt1;
                report.normalization = std::pow(N, 1.0 / alpha) *
                                       std::pow(n, 1.0 - (beta - 1.0) / alpha);
                report.limit_law.family = LimitFamily::LambdaProcess;
            } else if (beta == 1.0) {
                report.regime = RegimeCase::IMuInfBetaEq1;
                report.normalization = std::pow(N * std::log(N / n), 1.0 / alpha) * n;
                report.limit_law.family = LimitFamily::V1Line;
            } else {
                report.regime = RegimeCase::IMuInfBetaLt1;
                report.normalization = std::pow(N, 1.0 / (alpha * beta)) * n;
                report.limit_law.family = LimitFamily::VLine;
            }
        } else if (mu < 1.0 / mu_threshold) {
            report.regime = RegimeCase::IMuZero;
            report.normalization = std::pow(N, 1.0 / beta) * std::pow(n, 1.0 / alpha);
            report.limit_law.family = LimitFamily::WProcess;
        } else {
            report.regime = RegimeCase::IIntermediate;
            report.normalization = std::pow(N, 1.0 / beta) * std::pow(n, 1.0 / alpha);
            report.limit_law.family = LimitFamily::IntermediateZ;
            report.limit_law.mu = mu;
        }
        return report;
    }

    // region (ii): 0 < alpha < beta < 1
    const double gamma = (1.0 - alpha) / (1.0 - beta);
    report.gamma = gamma;
    const double mu = std::pow(N, 1.0 / (gamma * beta)) / n;
    report.mu_proxy = mu;
    if (mu > mu_threshold) {
        report.regime = RegimeCase::IIMuInf;
        report.normalization = std::pow(N, 1.0 / (alpha * beta)) * n;
        report.limit_law.family = LimitFamily::VLine;
    } else if (mu < 1.0 / mu_threshold) {
        report.regime = RegimeCase::IIMuZero;
        report.normalization = std::pow(N * n, 1.0 / alpha);
        report.limit_law.family = LimitFamily::ScaledLevy;
        report.limit_law.kappa_alpha_value = kappa_alpha(mixing, alpha);
    } else {
        report.regime = RegimeCase::IIIntermediate;
        report.normalization = std::pow(N * n, 1.0 / alpha);
        report.limit_law.family = LimitFamily::VLinePlusLevy;
        report.limit_law.mu = mu;
        report.limit_law.kappa_alpha_value = kappa_alpha(mixing, alpha);
    }
    return report;
}

}  // namespace rcarlab
