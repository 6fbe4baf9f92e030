#include "rcarlab/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rcarlab/errors.hpp"

namespace rcarlab {

namespace {

using Complex = std::complex<double>;

// 1 - exp(-y) without cancellation.
inline double em1(double y) { return -std::expm1(-y); }

// exp(z) - 1 for complex z, accurate when |z| is small.
inline Complex expm1c(Complex z) {
    const double ex = std::expm1(z.real());
    const double sy = std::sin(z.imag());
    const double hy = std::sin(0.5 * z.imag());
    return {ex * std::cos(z.imag()) - 2.0 * hy * hy, (ex + 1.0) * sy};
}

void check_times(std::span<const double> thetas, std::span<const double> taus) {
    if (thetas.size() != taus.size() || thetas.empty())
        throw std::invalid_argument("limit_laws: thetas and taus must be non-empty and equal length");
    if (!(taus.front() >= 0.0))
        throw std::invalid_argument("limit_laws: taus must be nonnegative");
    for (std::size_t i = 1; i < taus.size(); ++i)
        if (!(taus[i] > taus[i - 1]))
            throw std::invalid_argument("limit_laws: taus must be strictly ascending");
}

bool all_zero(std::span<const double> thetas) {
    return std::all_of(thetas.begin(), thetas.end(), [](double t) { return t == 0.0; });
}

// integral_0^infty f(x) x^(beta-1) dx via x = split * exp(+-u) on the two
// halves. The caller supplies envelope bounds |f(x)| <= low_c * x^-p_low for
// x <= split and |f(x)| <= high_c * x^-p_high for x >= split, used to pick
// truncation points with tail error below tail_tol.
template <typename F>
Complex power_weighted_integral(F&& f, double beta, double split, double low_c, double p_low,
                                double high_c, double p_high, double tail_tol,
                                const QuadratureSpec& quad) {
    if (!(p_low < beta && beta < p_high))
        throw std::invalid_argument("power_weighted_integral: envelope exponents must bracket beta");
    const double split_b = std::pow(split, beta);

    // Truncation points from the envelope tails:
    //   low tail  (0, split e^-U]:   low_c split^(b-p) e^-(b-p)U / (b-p) <= tail_tol
    //   high tail [split e^U, inf):  high_c split^(b-p) e^-(p-b)U / (p-b) <= tail_tol
    // The caps keep x and the substitution weights inside double range; if a
    // capped tail still exceeds its budget the integral is not resolvable at
    // this tolerance.
    auto trunc = [&](double c, double gap, double power_of_split, double cap) {
        const double budget = c * std::pow(split, power_of_split) / gap;
        double u = budget > tail_tol ? std::log(budget / tail_tol) / gap : 1.0;
        u = std::clamp(u, 1.0, cap);
        const double achieved = budget * std::exp(-gap * u);
        if (achieved > 100.0 * tail_tol)
            throw NumericalFailure("power_weighted_integral: truncation tail above tolerance",
                                   achieved);
        return u;
    };
    const double u_low = trunc(low_c, beta - p_low, beta - p_low, 650.0);
    const double u_high = trunc(high_c, p_high - beta, beta - p_high, 640.0 / std::max(beta, 1.0));

    const Complex low = integrate(
        std::function<Complex(double)>([&](double u) -> Complex {
            const double x = split * std::exp(-u);
            return f(x) * std::exp(-beta * u);
        }),
        0.0, u_low, quad);
    const Complex high = integrate(
        std::function<Complex(double)>([&](double u) -> Complex {
            const double x = split * std::exp(u);
            return f(x) * std::exp(beta * u);
        }),
        0.0, u_high, quad);
    return split_b * (low + high);
}

QuadratureSpec tighten(const QuadratureSpec& quad, double factor) {
    QuadratureSpec inner = quad;
    inner.rel_tol = std::max(quad.rel_tol * factor, 1e-12);
    inner.abs_tol = std::max(quad.abs_tol * factor, 1e-300);
    return inner;
}

}  // namespace

double f_tau(double x, double s, double tau) {
    if (!(x > 0.0)) throw std::invalid_argument("f_tau: x must be positive");
    if (tau < 0.0) throw std::invalid_argument("f_tau: tau must be nonnegative");
    if (s > tau || tau == 0.0) return 0.0;
    if (s <= 0.0) return std::exp(x * s) * em1(x * tau) / x;
    return em1(x * (tau - s)) / x;
}

double kappa_lambda(double lambda, double alpha, double beta, double psi1) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("kappa_lambda: lambda must lie in (0,1)");
    return psi1 * std::tgamma(1.0 - lambda) / (std::pow(lambda * alpha / beta, lambda) * beta);
}

double kappa_lambda_integral(double lambda, double alpha, double beta, double psi1,
                             const QuadratureSpec& quad) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("kappa_lambda_integral: lambda must lie in (0,1)");
    const double c = beta / (lambda * alpha); // (lambda alpha / beta)^{-1}
    const double decay = beta / lambda;       // integrand ~ c x^-decay at infinity
    auto integrand = [&](double x) -> Complex { return em1(c * std::pow(x, -decay)); };
    const Complex value =
        power_weighted_integral(integrand, beta, quad.x_split, 1.0, 0.0, c, decay,
                                quad.abs_tol * 0.1, quad);
    return psi1 * value.real();
}

namespace detail {

Complex stable_kernel(double g, double alpha, const OmegaValue& om) {
    if (g == 0.0) return {0.0, 0.0};
    return std::pow(std::abs(g), alpha) * om.at(g);
}

Complex ou_exponent(double x, std::span<const double> thetas, std::span<const double> taus,
                    double alpha, const OmegaValue& om, const QuadratureSpec& inner) {
    const std::size_t d = thetas.size();

    // s <= 0: the kernel factorizes as e^{xs} A with A = sum_j theta_j (1-e^{-x tau_j})/x,
    // so this half-line integrates exactly to |A|^alpha omega(A) / (alpha x).
    double amp = 0.0;
    for (std::size_t j = 0; j < d; ++j) amp += thetas[j] * em1(x * taus[j]) / x;
    Complex total = stable_kernel(amp, alpha, om) / (alpha * x);

    // (0, tau_d]: per knot segment. Beyond 45/x of the right knot every
    // kernel term is flat to ~1e-20, so split off that boundary layer and
    // integrate it on the O(1) scale u = x (tau_k - s). tanh-sinh charts:
    // |g|^alpha has an alpha-Holder kink where g vanishes at a knot.
    constexpr double kLayer = 45.0;
    auto g_at = [&](std::size_t k, double s) {
        double g = 0.0;
        for (std::size_t j = k; j < d; ++j) g += thetas[j] * em1(x * (taus[j] - s)) / x;
        return g;
    };
    double left = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double right = taus[k];
        if (right <= left) { left = right; continue; }
        const double len = right - left;
        auto direct = [&](double s) { return stable_kernel(g_at(k, s), alpha, om); };
        if (x * len <= kLayer) {
            total += integrate_singular(std::function<Complex(double)>(direct), left, right, inner);
        } else {
            const double cut = right - kLayer / x;
            total += integrate_singular(std::function<Complex(double)>(direct), left, cut, inner);
            total += integrate_singular(std::function<Complex(double)>([&](double u) {
                         return stable_kernel(g_at(k, right - u / x), alpha, om) / x;
                     }),
                     0.0, kLayer, inner);
        }
        left = right;
    }
    return total;
}

}  // namespace detail

std::complex<double> cf_V(double theta, double beta, double psi1, const StableLaw& law) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("cf_V: beta must lie in (0,1)");
    if (theta == 0.0) return {1.0, 0.0};
    const double alpha = law.alpha;
    const double kappa = kappa_lambda(beta, alpha, beta, psi1);
    const Complex wpow = std::pow(omega(law).at(theta), beta);
    return std::exp(-kappa * std::pow(std::abs(theta), alpha * beta) * wpow);
}

std::complex<double> cf_V1(double theta, double psi1, const StableLaw& law) {
    if (!(law.alpha > 1.0)) throw std::invalid_argument("cf_V1: alpha must exceed 1");
    if (theta == 0.0) return {1.0, 0.0};
    return std::exp(-(psi1 / law.alpha) * std::pow(std::abs(theta), law.alpha) *
                    omega(law).at(theta));
}

std::complex<double> cf_W(std::span<const double> thetas, std::span<const double> taus,
                          double beta, double psi1, const StableLaw& law) {
    check_times(thetas, taus);
    const double alpha = law.alpha;
    if (!(beta > 0.0 && beta < alpha)) throw std::invalid_argument("cf_W: requires 0 < beta < alpha");
    if (all_zero(thetas)) return {1.0, 0.0};
    const OmegaValue om = omega(law);
    Complex levy_exponent = 0.0; // sum_i (tau_i - tau_{i-1}) |T_i|^alpha omega(T_i)
    double prev_tau = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        double tail = 0.0;
        for (std::size_t j = i; j < thetas.size(); ++j) tail += thetas[j];
        levy_exponent += (taus[i] - prev_tau) * detail::stable_kernel(tail, alpha, om);
        prev_tau = taus[i];
    }
    const double kappa = kappa_lambda(beta / alpha, alpha, beta, psi1);
    return std::exp(-kappa * std::pow(levy_exponent, beta / alpha));
}

std::complex<double> cf_W(double theta, double tau, double beta, double psi1,
                          const StableLaw& law) {
    return cf_W(std::span<const double>(&theta, 1), std::span<const double>(&tau, 1), beta, psi1,
                law);
}

std::complex<double> cf_Lambda(std::span<const double> thetas, std::span<const double> taus,
                               double beta, double psi1, const StableLaw& law,
                               const QuadratureSpec& quad) {
    check_times(thetas, taus);
    const double alpha = law.alpha;
    if (!(beta > 1.0 && beta < alpha))
        throw std::invalid_argument("cf_Lambda: requires 1 < beta < alpha");
    if (all_zero(thetas)) return {1.0, 0.0};

    const OmegaValue om = omega(law);
    const double om_mod = std::hypot(om.re, om.im_sign_pos);
    const double tau_d = taus.back();
    double theta_abs = 0.0;
    for (double t : thetas) theta_abs += std::abs(t);
    const double envelope = om_mod * std::pow(theta_abs, alpha);
    const QuadratureSpec inner = tighten(quad, 0.02);

    auto f = [&](double x) { return detail::ou_exponent(x, thetas, taus, alpha, om, inner); };
    // |inner(x)| <= envelope * ((1/alpha) min(tau^alpha/x, x^-1-alpha) + min(tau x^-alpha, tau^1+alpha))
    const double sp = quad.x_split;
    const double low_c = envelope * (std::pow(tau_d, alpha) / alpha + std::pow(tau_d, 1.0 + alpha) * sp);
    const double high_c = envelope * (1.0 / (alpha * sp) + tau_d);
    const Complex outer = power_weighted_integral(f, beta, sp, low_c, 1.0, high_c, alpha,
                                                  quad.abs_tol * 0.1, quad);
    return std::exp(-psi1 * outer);
}

std::complex<double> cf_Lambda(double theta, double tau, double beta, double psi1,
                               const StableLaw& law, const QuadratureSpec& quad) {
    return cf_Lambda(std::span<const double>(&theta, 1), std::span<const double>(&tau, 1), beta,
                     psi1, law, quad);
}

double cov_Lambda2(double tau1, double tau2, double beta, double psi1, double variance) {
    if (!(beta > 1.0 && beta < 2.0)) throw std::invalid_argument("cov_Lambda2: beta must lie in (1,2)");
    if (tau1 < 0.0 || tau2 < 0.0) throw std::invalid_argument("cov_Lambda2: times must be nonnegative");
    const double hurst2 = 3.0 - beta; // 2H
    const double sigma2 = psi1 * std::tgamma(beta - 1.0) * variance / ((2.0 - beta) * (3.0 - beta));
    return 0.5 * sigma2 *
           (std::pow(tau1, hurst2) + std::pow(tau2, hurst2) - std::pow(std::abs(tau1 - tau2), hurst2));
}

double cov_Lambda2_quadrature(double tau1, double tau2, double beta, double psi1, double variance,
                              const QuadratureSpec& quad) {
    if (!(beta > 1.0 && beta < 2.0))
        throw std::invalid_argument("cov_Lambda2_quadrature: beta must lie in (1,2)");
    if (tau1 <= 0.0 || tau2 <= 0.0) return 0.0;
    const double tmin = std::min(tau1, tau2);
    const QuadratureSpec inner = tighten(quad, 0.02);

    // S(x) = int_R f_tau1 f_tau2 ds; the s <= 0 half-line is exact. The
    // (0, tmin] part has a boundary layer of width 1/x at s = tmin, which the
    // tanh-sinh node clustering resolves.
    auto s_product = [&](double x) -> Complex {
        double value = em1(x * tau1) * em1(x * tau2) / (2.0 * x * x * x);
        value += integrate_singular(std::function<double(double)>([&](double s) {
                     return em1(x * (tau1 - s)) * em1(x * (tau2 - s)) / (x * x);
                 }),
                 0.0, tmin, inner);
        return {value, 0.0};
    };
    const double sp = quad.x_split;
    const double low_c = 0.5 * tau1 * tau2 + tmin * tau1 * tau2 * sp;
    const double high_c = 0.5 / sp + tmin;
    const Complex outer = power_weighted_integral(s_product, beta, sp, low_c, 1.0, high_c, 2.0,
                                                  quad.abs_tol * 0.1, quad);
    return variance * psi1 * outer.real();
}

std::complex<double> cf_Z(std::span<const double> thetas, std::span<const double> taus,
                          double beta, double psi1, const StableLaw& law,
                          const QuadratureSpec& quad) {
    check_times(thetas, taus);
    const double alpha = law.alpha;
    if (!(beta > 0.0 && beta < alpha)) throw std::invalid_argument("cf_Z: requires 0 < beta < alpha");
    if (all_zero(thetas)) return {1.0, 0.0};

    const OmegaValue om = omega(law);
    const double om_mod = std::hypot(om.re, om.im_sign_pos);
    const double tau_d = taus.back();
    double theta_abs = 0.0;
    for (double t : thetas) theta_abs += std::abs(t);
    const double envelope = om_mod * std::pow(theta_abs, alpha);
    const QuadratureSpec inner = tighten(quad, 0.02);

    // |e^{-inner} - 1| <= min(2, |inner|): bounded near 0, ~x^-alpha at infinity.
    auto f = [&](double x) {
        return expm1c(-detail::ou_exponent(x, thetas, taus, alpha, om, inner));
    };
    const double sp = quad.x_split;
    const double high_c = envelope * (1.0 / (alpha * sp) + tau_d);
    const Complex outer =
        power_weighted_integral(f, beta, sp, 2.0, 0.0, high_c, alpha, quad.abs_tol * 0.1, quad);
    return std::exp(psi1 * outer);
}

std::complex<double> cf_Z(double theta, double tau, double beta, double psi1,
                          const StableLaw& law, const QuadratureSpec& quad) {
    return cf_Z(std::span<const double>(&theta, 1), std::span<const double>(&tau, 1), beta, psi1,
                law, quad);
}

}  // namespace rcarlab
