#pragma once

#include <complex>
#include <functional>

namespace rcarlab {

/// Controls for the adaptive integrators used by the limit-law evaluators.
/// x_split separates the singular small-x sub-integral from the tail.
struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    double x_split = 1.0;

    void validate() const;

    /// Looser preset for the nested two-level evaluations (cf_Lambda, cf_Z).
    static QuadratureSpec nested();
};

/// Adaptive Gauss-Kronrod on a finite interval. Throws NumericalFailure with
/// the achieved error estimate if the tolerance is not met within the
/// subdivision budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& quad);
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, const QuadratureSpec& quad);

/// tanh-sinh on a finite interval; tolerant of integrable endpoint
/// singularities (the transformed outer integrals land here).
double integrate_singular(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& quad);
std::complex<double> integrate_singular(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, const QuadratureSpec& quad);

}  // namespace rcarlab
