#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rcarlab/rng.hpp"
#include "rcarlab/stable.hpp"
#include "rcarlab/stats.hpp"

namespace testutil {

inline std::vector<double> draw_innovations(const rcarlab::StableLaw& law, std::size_t count,
                                            std::uint64_t seed) {
    rcarlab::RngStream rng = rcarlab::substream(seed, 0);
    std::vector<double> values(count);
    for (auto& v : values) v = rcarlab::sample_innovation(law, rng);
    return values;
}

inline std::vector<double> draw_stable(const rcarlab::StableLaw& law, std::size_t count,
                                       std::uint64_t seed) {
    rcarlab::RngStream rng = rcarlab::substream(seed, 0);
    std::vector<double> values(count);
    for (auto& v : values) v = rcarlab::sample_stable(law, rng);
    return values;
}

/// sup_theta |empirical CF(samples) - cf(theta)| over the grid.
inline double ecf_distance(const std::vector<double>& samples, const std::vector<double>& thetas,
                           const std::function<std::complex<double>(double)>& cf) {
    const rcarlab::CFGrid empirical = rcarlab::empirical_cf(samples, thetas);
    double sup = 0.0;
    for (std::size_t k = 0; k < thetas.size(); ++k)
        sup = std::max(sup, std::abs(empirical.values[k] - cf(thetas[k])));
    return sup;
}

inline double mean(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
    const double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return acc / static_cast<double>(v.size() - 1);
}

}  // namespace testutil
