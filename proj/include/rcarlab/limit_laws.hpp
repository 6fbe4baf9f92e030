#pragma once

#include <complex>
#include <span>

#include "rcarlab/quadrature.hpp"
#include "rcarlab/stable.hpp"

namespace rcarlab {

/// Integrated Ornstein-Uhlenbeck kernel
///   f_tau(x, s) = integral_0^tau exp(-x (t - s)) 1(s <= t) dt,
/// evaluated in closed form. Bounded by min(tau, 1/x) and zero for s > tau.
double f_tau(double x, double s, double tau);

/// kappa_{lambda,alpha,beta} = psi1 Gamma(1 - lambda) / ((lambda alpha / beta)^lambda beta),
/// the Laplace-transform constant of the positive lambda-stable mixing
/// variable. Requires 0 < lambda < 1.
double kappa_lambda(double lambda, double alpha, double beta, double psi1);

/// The same constant by its integral form
///   psi1 integral_0^infty (1 - exp{-(lambda alpha / beta)^{-1} x^{-beta/lambda}}) x^{beta-1} dx,
/// evaluated by adaptive quadrature. Independent cross-check route for the
/// closed form above.
double kappa_lambda_integral(double lambda, double alpha, double beta, double psi1,
                             const QuadratureSpec& quad);

/// CF of the (alpha beta)-stable r.v. V_{alpha,beta} (0 < beta < 1):
///   exp{-kappa_{beta,alpha,beta} |theta|^(alpha beta) (omega(theta))^beta}.
std::complex<double> cf_V(double theta, double beta, double psi1, const StableLaw& law);

/// CF of the alpha-stable r.v. V_{alpha,1} (alpha > 1):
///   exp{-(psi1/alpha) |theta|^alpha omega(theta)}.
std::complex<double> cf_V1(double theta, double psi1, const StableLaw& law);

/// Joint CF of the sub-stable process W_{alpha,beta} (0 < beta < alpha) at
/// ascending times taus:
///   exp{-kappa_{beta/alpha,alpha,beta} (sum_i (tau_i - tau_{i-1}) |T_i|^alpha omega(T_i))^{beta/alpha}},
/// T_i = theta_i + ... + theta_d, principal complex powers.
std::complex<double> cf_W(std::span<const double> thetas, std::span<const double> taus,
                          double beta, double psi1, const StableLaw& law);
std::complex<double> cf_W(double theta, double tau, double beta, double psi1,
                          const StableLaw& law);

/// Joint CF of the alpha-stable H-self-similar process Lambda_{alpha,beta}
/// (1 < beta < alpha, H = 1 - (beta-1)/alpha):
///   exp{-integral |sum_j theta_j f_{tau_j}(x,s)|^alpha omega(.) psi1 x^(beta-1) dx ds}
/// by nested adaptive quadrature.
std::complex<double> cf_Lambda(std::span<const double> thetas, std::span<const double> taus,
                               double beta, double psi1, const StableLaw& law,
                               const QuadratureSpec& quad);
std::complex<double> cf_Lambda(double theta, double tau, double beta, double psi1,
                               const StableLaw& law, const QuadratureSpec& quad);

/// Covariance of the Gaussian case Lambda_{2,beta} (1 < beta < 2):
/// fractional Brownian motion with H = (3-beta)/2 and
/// sigma^2_beta = psi1 Gamma(beta-1) Var / ((2-beta)(3-beta)).
double cov_Lambda2(double tau1, double tau2, double beta, double psi1, double variance);

/// The same covariance by double quadrature of Var * integral f_tau1 f_tau2 dm.
/// Independent cross-check route for the closed form above.
double cov_Lambda2_quadrature(double tau1, double tau2, double beta, double psi1, double variance,
                              const QuadratureSpec& quad);

/// Joint CF of the intermediate process Z_{alpha,beta} (0 < beta < alpha):
///   exp{psi1 integral_0^infty (exp{-inner(x)} - 1) x^(beta-1) dx},
/// inner(x) = integral_R |sum_j theta_j f_{tau_j}(x,s)|^alpha omega(.) ds.
std::complex<double> cf_Z(std::span<const double> thetas, std::span<const double> taus,
                          double beta, double psi1, const StableLaw& law,
                          const QuadratureSpec& quad);
std::complex<double> cf_Z(double theta, double tau, double beta, double psi1,
                          const StableLaw& law, const QuadratureSpec& quad);

namespace detail {

/// |g|^alpha omega(g) with the sign of g selecting the omega branch.
std::complex<double> stable_kernel(double g, double alpha, const OmegaValue& om);

/// inner(x) = integral_R |sum_j theta_j f_{tau_j}(x,s)|^alpha omega(.) ds.
/// The s <= 0 half-line is exact (the kernel factorizes there); (0, tau_d]
/// is integrated per knot segment with a boundary-layer substitution at
/// scale 1/x so large x stays accurate.
std::complex<double> ou_exponent(double x, std::span<const double> thetas,
                                 std::span<const double> taus, double alpha,
                                 const OmegaValue& om, const QuadratureSpec& inner);

}  // namespace detail

}  // namespace rcarlab
