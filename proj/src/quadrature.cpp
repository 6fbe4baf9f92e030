#include "rcarlab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <stdexcept>

#include "rcarlab/errors.hpp"

namespace rcarlab {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
    if (max_subdivisions < 10)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 10");
    if (!(x_split > 0.0)) throw std::invalid_argument("QuadratureSpec: x_split must be positive");
}

QuadratureSpec QuadratureSpec::nested() {
    QuadratureSpec quad;
    quad.rel_tol = 1e-6;
    quad.abs_tol = 1e-9;
    return quad;
}

namespace {

// Subdivision budget -> bisection depth (2^depth panels).
unsigned depth_for(int max_subdivisions) {
    unsigned depth = 1;
    while ((1 << depth) < max_subdivisions && depth < 24) ++depth;
    return depth;
}

template <typename T>
T integrate_gk(const std::function<T(double)>& f, double a, double b, const QuadratureSpec& quad) {
    quad.validate();
    double err = 0.0;
    double l1 = 0.0;
    const T value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, depth_for(quad.max_subdivisions), quad.rel_tol, &err, &l1);
    const double scale = std::max(std::abs(value), l1);
    if (!(err <= quad.abs_tol || err <= quad.rel_tol * scale * 10.0)) {
        throw NumericalFailure("adaptive Gauss-Kronrod did not converge", err);
    }
    return value;
}

template <typename T>
T integrate_ts(const std::function<T(double)>& f, double a, double b, const QuadratureSpec& quad) {
    quad.validate();
    boost::math::quadrature::tanh_sinh<double> ts(15);
    double err = 0.0;
    double l1 = 0.0;
    T value;
    try {
        value = ts.integrate(f, a, b, quad.rel_tol, &err, &l1);
    } catch (const std::exception& e) {
        throw NumericalFailure(std::string("tanh-sinh integration failed: ") + e.what(),
                               std::numeric_limits<double>::infinity());
    }
    // tanh_sinh reports the relative error of its last refinement against L1.
    if (!(std::isfinite(err)) ||
        !(err * l1 <= quad.abs_tol || err <= quad.rel_tol * 100.0)) {
        throw NumericalFailure("tanh-sinh integration did not converge", err);
    }
    return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& quad) {
    return integrate_gk<double>(f, a, b, quad);
}

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double a,
                               double b, const QuadratureSpec& quad) {
    return integrate_gk<std::complex<double>>(f, a, b, quad);
}

double integrate_singular(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& quad) {
    return integrate_ts<double>(f, a, b, quad);
}

std::complex<double> integrate_singular(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, const QuadratureSpec& quad) {
    return integrate_ts<std::complex<double>>(f, a, b, quad);
}

}  // namespace rcarlab
