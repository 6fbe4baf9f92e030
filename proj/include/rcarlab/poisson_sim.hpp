#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rcarlab/rng.hpp"
#include "rcarlab/stable.hpp"

namespace rcarlab {

/// Trajectory simulation of the intermediate process Z_{alpha,beta} from its
/// Poisson-integral representation: points (x, zeta) of a Poisson measure
/// with mean psi1 x^(beta-1) dx P_alpha(d zeta), truncated to
/// x in [x_min, x_max], each contributing the integrated OU functional
/// z(tau; x) of an independent driving Levy path.
struct PoissonSimSpec {
    double alpha = 1.5;
    double beta = 0.5;
    double psi1 = 1.0;
    StableLaw driver;           // law of the driving Levy increments (alpha must match)
    std::vector<double> tau_grid{1.0};
    double x_min = 1e-6;        // truncation bounds for the rate coordinate
    double x_max = 100.0;
    double dt = 0.01;           // base time step; per-point step is min(dt, 0.1/x)
    std::uint64_t seed = 0;

    void validate() const;

    /// Expected Poisson point count psi1 (x_max^beta - x_min^beta) / beta.
    double expected_points() const;
};

/// Truncation bounds chosen from the moment-integral tails
///   I^-(p) = int_0^xmin E|z(tau;x)|^p x^(beta-1) dx   (p = alpha beta / 2),
///   I^+(p) = int_xmax^inf E|z(tau;x)|^p x^(beta-1) dx (p close to alpha),
/// each required to stay below tol. Throws TruncationError when no feasible
/// bounds exist.
struct PoissonTruncation {
    double x_min;
    double x_max;
};
PoissonTruncation default_truncation(double alpha, double beta, double psi1, double tau_max,
                                     double tol);

/// One elementary integrated OU functional z(tau; x) on the tau grid:
/// exact stationary value at time 0 plus a Riemann-Stieltjes sum of the
/// kernel against discretized Levy increments dt^(1/alpha) * stable draw.
std::vector<double> simulate_elementary_z(double x, std::span<const double> tau_grid,
                                          const StableLaw& law, double dt, RngStream& rng);

/// One replicate of Z_{alpha,beta} on the tau grid: Poisson(Lambda) points,
/// locations by inverse CDF of the x^(beta-1) density, independent elementary
/// z per point, summed. (The alpha > 1 compensator has zero mean per point
/// and is not subtracted.)
std::vector<double> simulate_Z(const PoissonSimSpec& spec, std::int64_t replicate_id = 0);

/// M replicates of the marginal Z(tau_grid), worker pool over replicates.
std::vector<std::vector<double>> simulate_Z_replicates(const PoissonSimSpec& spec,
                                                       std::int64_t replicates, int workers = 1);

}  // namespace rcarlab
