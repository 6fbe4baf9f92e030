#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rcarlab/quadrature.hpp"

namespace rcarlab {

/// Real frequency grid with complex characteristic-function values.
struct CFGrid {
    std::vector<double> thetas;
    std::vector<std::complex<double>> values;
};

/// Sample values with provenance tags (spec hash, seed) for output files.
struct SampleSet {
    std::vector<double> values;
    std::string meta;
};

/// Evenly spaced grid of count points on [lo, hi].
std::vector<double> theta_grid(double lo, double hi, std::size_t count);

/// Empirical CF: value[k] = mean_m exp(i theta_k X_m). Requires >= 2 samples.
CFGrid empirical_cf(std::span<const double> samples, std::span<const double> thetas);

/// sup_k |a.values[k] - b.values[k]|; the grids must match.
double cf_distance(const CFGrid& a, const CFGrid& b);

/// Hill estimate of the tail index from the k upper order statistics of
/// |values|. Returns 0 (degenerate-sample case) when the upper tail carries
/// no spread.
double hill_index(std::span<const double> samples, std::size_t k);

/// Gil-Pelaez inversion: P(X <= x) = 1/2 - (1/pi) int_0^inf Im(e^{-i t x} cf(t))/t dt.
double invert_cf_cdf(const std::function<std::complex<double>(double)>& cf, double x,
                     const QuadratureSpec& quad);

/// Biased (divide-by-length) sample autocovariance at lags 0..max_lag,
/// centered at the sample mean.
std::vector<double> sample_autocov(std::span<const double> series, std::size_t max_lag);

/// Same, centered at a known mean. Under long-range dependence the
/// sample-mean version shrinks large-lag values by O(sqrt(lag/length));
/// pass the model mean when it is known (the panel processes are centered).
std::vector<double> sample_autocov(std::span<const double> series, std::size_t max_lag,
                                   double known_mean);

/// Least-squares slope of log(value) on log(lag). Throws FitError on
/// nonpositive values in the fit range.
double loglog_slope(std::span<const double> lags, std::span<const double> values);

}  // namespace rcarlab
