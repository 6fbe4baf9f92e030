#include "rcarlab/poisson_sim.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "rcarlab/errors.hpp"

namespace rcarlab {

void PoissonSimSpec::validate() const {
    driver.validate();
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("PoissonSimSpec: alpha in (0,2]");
    if (!(beta > 0.0 && beta < alpha)) throw std::invalid_argument("PoissonSimSpec: requires 0 < beta < alpha");
    if (driver.alpha != alpha) throw std::invalid_argument("PoissonSimSpec: driver law alpha mismatch");
    if (!(x_min > 0.0 && x_min < x_max && std::isfinite(x_max)))
        throw std::invalid_argument("PoissonSimSpec: requires 0 < x_min < x_max < inf");
    if (!(dt > 0.0)) throw std::invalid_argument("PoissonSimSpec: dt must be positive");
    if (tau_grid.empty()) throw std::invalid_argument("PoissonSimSpec: tau_grid must be non-empty");
    double prev = -1.0;
    for (double t : tau_grid) {
        if (!(t >= 0.0 && t > prev)) throw std::invalid_argument("PoissonSimSpec: tau_grid must be ascending and nonnegative");
        prev = t;
    }
    if (!std::isfinite(expected_points())) throw std::invalid_argument("PoissonSimSpec: expected point count not finite");
}

double PoissonSimSpec::expected_points() const {
    return psi1 * (std::pow(x_max, beta) - std::pow(x_min, beta)) / beta;
}

namespace {

// E|S|^p for the symmetric alpha-stable law with CF exp(-|t|^alpha),
// 0 < p < alpha (at alpha = 2 this is E|N(0, sqrt 2)|^p).
double stable_abs_moment(double p, double alpha) {
    return std::pow(2.0, p) * std::tgamma((1.0 + p) / 2.0) * std::tgamma(1.0 - p / alpha) /
           (std::tgamma(1.0 - p / 2.0) * std::sqrt(std::numbers::pi));
}

// Poisson draw by product of uniforms, chunked so exp(-lambda) never
// underflows. Deterministic given the stream.
std::int64_t poisson_draw(double lambda, RngStream& rng) {
    std::int64_t total = 0;
    while (lambda > 0.0) {
        const double chunk = lambda > 500.0 ? 500.0 : lambda;
        lambda -= chunk;
        const double floor = std::exp(-chunk);
        double prod = uniform_pos(rng);
        std::int64_t k = 0;
        while (prod > floor) {
            prod *= uniform_pos(rng);
            ++k;
        }
        total += k;
    }
    return total;
}

}  // namespace

PoissonTruncation default_truncation(double alpha, double beta, double psi1, double tau_max,
                                     double tol) {
    if (!(beta > 0.0 && beta < alpha && alpha <= 2.0))
        throw std::invalid_argument("default_truncation: requires 0 < beta < alpha <= 2");
    if (!(tol > 0.0 && tau_max > 0.0))
        throw std::invalid_argument("default_truncation: tol and tau_max must be positive");

    // E|z(tau;x)|^p = C_p (int |f_tau(x,.)|^alpha ds)^{p/alpha}; the kernel
    // integral is bounded by (tau^alpha/alpha)(1 + alpha tau x)/x for x <= 1
    // and (1/alpha + tau) x^-alpha for x >= 1.
    const double p_lo = alpha * beta / 2.0;
    const double c_lo = std::pow(tau_max, alpha) / alpha * (1.0 + alpha * tau_max);
    const double m_lo = stable_abs_moment(p_lo, alpha) * std::pow(c_lo, p_lo / alpha);
    const double gap_lo = beta - p_lo / alpha; // = beta/2
    double x_min = std::pow(tol * gap_lo / (psi1 * m_lo), 1.0 / gap_lo);

    double p_hi = 0.9 * alpha;
    if (p_hi <= beta) p_hi = 0.5 * (alpha + beta);
    const double c_hi = 1.0 / alpha + tau_max;
    const double m_hi = stable_abs_moment(p_hi, alpha) * std::pow(c_hi, p_hi / alpha);
    const double gap_hi = p_hi - beta;
    double x_max = std::pow(psi1 * m_hi / (gap_hi * tol), 1.0 / gap_hi);
    if (x_max < 1.0) x_max = 1.0;

    if (!(x_min > 0.0) || !std::isfinite(x_min)) x_min = 1e-12;
    if (x_min >= x_max || !std::isfinite(x_max) || x_max > 1e8)
        throw TruncationError("default_truncation: no feasible bounds at this tolerance");
    return {x_min, x_max};
}

namespace {

// One interval step of the pair (eta, dzeta) with
//   eta   = int_{t0}^{t1} e^{-x (t1 - s)} d zeta(s),
//   dzeta = zeta(t1) - zeta(t0).
// For alpha = 2 the pair is exactly bivariate normal. Otherwise the kernel
// only acts within ~45/x of t1 (the boundary layer): the bulk collapses to a
// single exact stable draw for dzeta, and the layer is a midpoint
// Riemann-Stieltjes sum at kernel resolution x du <= 0.15.
struct IntervalStep {
    double eta;
    double dzeta;
};

IntervalStep step_increments(double x, double h, const StableLaw& law, double dt, RngStream& rng) {
    if (law.alpha == 2.0) {
        const double var = law.variance;
        const double var_dz = var * h;
        const double var_eta = var * -std::expm1(-2.0 * x * h) / (2.0 * x);
        const double cov = var * -std::expm1(-x * h) / x;
        const double z1 = sample_stable(law, rng) / std::sqrt(var);
        const double z2 = sample_stable(law, rng) / std::sqrt(var);
        const double dzeta = std::sqrt(var_dz) * z1;
        const double resid = var_eta - cov * cov / var_dz;
        const double eta = (cov / var_dz) * dzeta + std::sqrt(resid > 0.0 ? resid : 0.0) * z2;
        return {eta, dzeta};
    }
    const double inv_alpha = 1.0 / law.alpha;
    const double layer = std::min(h, 45.0 / x);
    double eta = 0.0;
    double dzeta = 0.0;
    if (h > layer) dzeta += std::pow(h - layer, inv_alpha) * sample_stable(law, rng);
    const double du_target = std::min(dt, 0.15 / x);
    const auto steps = static_cast<std::int64_t>(std::ceil(layer / du_target));
    const double du = layer / static_cast<double>(steps);
    const double inc_scale = std::pow(du, inv_alpha);
    for (std::int64_t k = 0; k < steps; ++k) {
        const double u = (static_cast<double>(k) + 0.5) * du; // distance below t1
        const double xi = inc_scale * sample_stable(law, rng);
        dzeta += xi;
        eta += std::exp(-x * u) * xi;
    }
    return {eta, dzeta};
}

}  // namespace

std::vector<double> simulate_elementary_z(double x, std::span<const double> tau_grid,
                                          const StableLaw& law, double dt, RngStream& rng) {
    if (!(x > 0.0)) throw std::invalid_argument("simulate_elementary_z: x must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("simulate_elementary_z: dt must be positive");
    const std::size_t d = tau_grid.size();
    std::vector<double> z(d, 0.0);
    if (d == 0 || tau_grid.back() <= 0.0) return z;

    // With U the stationary OU process at rate x driven by zeta,
    //   z(tau; x) = int f_tau(x, s) d zeta(s) = (U(0) - U(tau) + zeta(tau)) / x
    // exactly, so only (U, zeta) have to be advanced across the grid.
    const double u0 = std::pow(law.alpha * x, -1.0 / law.alpha) * sample_stable(law, rng);
    double u = u0;
    double zeta = 0.0;
    double prev = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        const double h = tau_grid[j] - prev;
        if (h > 0.0) {
            const IntervalStep inc = step_increments(x, h, law, dt, rng);
            u = std::exp(-x * h) * u + inc.eta;
            zeta += inc.dzeta;
            prev = tau_grid[j];
        }
        z[j] = (u0 - u + zeta) / x;
    }
    return z;
}

std::vector<double> simulate_Z(const PoissonSimSpec& spec, std::int64_t replicate_id) {
    spec.validate();
    RngStream rng = substream(spec.seed, static_cast<std::uint64_t>(replicate_id));
    const std::int64_t points = poisson_draw(spec.expected_points(), rng);
    const double lo = std::pow(spec.x_min, spec.beta);
    const double hi = std::pow(spec.x_max, spec.beta);

    std::vector<double> total(spec.tau_grid.size(), 0.0);
    for (std::int64_t p = 0; p < points; ++p) {
        const double x = std::pow(lo + uniform_open(rng) * (hi - lo), 1.0 / spec.beta);
        const std::vector<double> z =
            simulate_elementary_z(x, spec.tau_grid, spec.driver, spec.dt, rng);
        for (std::size_t j = 0; j < total.size(); ++j) total[j] += z[j];
    }
    return total;
}

std::vector<std::vector<double>> simulate_Z_replicates(const PoissonSimSpec& spec,
                                                       std::int64_t replicates, int workers) {
    spec.validate();
    if (replicates < 0) throw std::invalid_argument("simulate_Z_replicates: negative count");
    std::vector<std::vector<double>> out(static_cast<std::size_t>(replicates));
    if (replicates == 0) return out;
    if (workers < 1) workers = 1;
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw > 0 && workers > 2 * hw) workers = 2 * hw;
    if (replicates < workers) workers = static_cast<int>(replicates);

    if (workers == 1) {
        for (std::int64_t r = 0; r < replicates; ++r)
            out[static_cast<std::size_t>(r)] = simulate_Z(spec, r);
        return out;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t r = next.fetch_add(1);
            if (r >= replicates) return;
            out[static_cast<std::size_t>(r)] = simulate_Z(spec, r);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace rcarlab
