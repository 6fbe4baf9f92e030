#include "rcarlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rcarlab/errors.hpp"

namespace rcarlab {

std::vector<double> theta_grid(double lo, double hi, std::size_t count) {
    if (count < 2 || !(hi > lo)) throw std::invalid_argument("theta_grid: need hi > lo and count >= 2");
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k)
        grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
    return grid;
}

CFGrid empirical_cf(std::span<const double> samples, std::span<const double> thetas) {
    if (samples.size() < 2) throw std::invalid_argument("empirical_cf: need at least 2 samples");
    CFGrid grid;
    grid.thetas.assign(thetas.begin(), thetas.end());
    grid.values.resize(thetas.size());
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const double theta = thetas[k];
        double re = 0.0, im = 0.0;
        for (double v : samples) {
            re += std::cos(theta * v);
            im += std::sin(theta * v);
        }
        const auto m = static_cast<double>(samples.size());
        grid.values[k] = {re / m, im / m};
    }
    return grid;
}

double cf_distance(const CFGrid& a, const CFGrid& b) {
    if (a.thetas.size() != b.thetas.size())
        throw std::invalid_argument("cf_distance: theta grids differ in size");
    for (std::size_t k = 0; k < a.thetas.size(); ++k)
        if (a.thetas[k] != b.thetas[k])
            throw std::invalid_argument("cf_distance: theta grids differ");
    double sup = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        sup = std::max(sup, std::abs(a.values[k] - b.values[k]));
    return sup;
}

double hill_index(std::span<const double> samples, std::size_t k) {
    if (k < 1 || samples.size() < 2 * k)
        throw std::invalid_argument("hill_index: need k >= 1 and at least 2k samples");
    std::vector<double> mags(samples.size());
    std::transform(samples.begin(), samples.end(), mags.begin(),
                   [](double v) { return std::abs(v); });
    std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(k), mags.end(),
                     std::greater<>());
    std::sort(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(k + 1), std::greater<>());
    const double pivot = mags[k]; // (k+1)-th largest
    if (!(pivot > 0.0)) return 0.0;
    double log_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) log_sum += std::log(mags[i] / pivot);
    if (!(log_sum > 0.0)) return 0.0; // degenerate sample: no spread in the tail
    return static_cast<double>(k) / log_sum;
}

double invert_cf_cdf(const std::function<std::complex<double>(double)>& cf, double x,
                     const QuadratureSpec& quad) {
    // Truncate where the CF has decayed; the tail of the integrand is then
    // bounded by |cf(t)|/t.
    double t_max = 1.0;
    double tail = std::abs(cf(t_max));
    while (tail > 1e-14 && t_max < 1e8) {
        t_max *= 2.0;
        tail = std::abs(cf(t_max));
    }
    if (tail > 1e-6)
        throw NumericalFailure("invert_cf_cdf: CF does not decay on the probed range", tail);
    auto integrand = [&](double t) -> double {
        const std::complex<double> rot{std::cos(t * x), -std::sin(t * x)};
        return (rot * cf(t)).imag() / t;
    };
    const double integral =
        integrate(std::function<double(double)>(integrand), 0.0, t_max, quad);
    const double p = 0.5 - integral / std::numbers::pi;
    return std::clamp(p, 0.0, 1.0);
}

std::vector<double> sample_autocov(std::span<const double> series, std::size_t max_lag) {
    if (series.size() < 2) throw std::invalid_argument("sample_autocov: series too short");
    double mean = 0.0;
    for (double v : series) mean += v;
    return sample_autocov(series, max_lag, mean / static_cast<double>(series.size()));
}

std::vector<double> sample_autocov(std::span<const double> series, std::size_t max_lag,
                                   double known_mean) {
    if (series.size() < 2 || max_lag >= series.size())
        throw std::invalid_argument("sample_autocov: series too short for max_lag");
    const auto m = static_cast<double>(series.size());
    std::vector<double> acov(max_lag + 1, 0.0);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        double acc = 0.0;
        for (std::size_t t = 0; t + lag < series.size(); ++t)
            acc += (series[t] - known_mean) * (series[t + lag] - known_mean);
        acov[lag] = acc / m;
    }
    return acov;
}

double loglog_slope(std::span<const double> lags, std::span<const double> values) {
    if (lags.size() != values.size() || lags.size() < 2)
        throw std::invalid_argument("loglog_slope: need matching spans with >= 2 points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto m = static_cast<double>(lags.size());
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (!(lags[i] > 0.0)) throw FitError("loglog_slope: lags must be positive");
        if (!(values[i] > 0.0)) throw FitError("loglog_slope: nonpositive value in fit range");
        const double lx = std::log(lags[i]);
        const double ly = std::log(values[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = m * sxx - sx * sx;
    if (denom == 0.0) throw FitError("loglog_slope: degenerate lag grid");
    return (m * sxy - sx * sy) / denom;
}

}  // namespace rcarlab
