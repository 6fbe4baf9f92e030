#pragma once

#include <cstdint>
#include <vector>

#include "rcarlab/mixing.hpp"
#include "rcarlab/rng.hpp"
#include "rcarlab/stable.hpp"

namespace rcarlab {

/// Full experiment description for the joint aggregate
///   S_{N,n}(tau) = sum_{i<=N} sum_{t<=[n tau]} X_i(t).
struct PanelSpec {
    StableLaw innovation;
    MixingLaw mixing;
    std::int64_t N = 1; // panel width
    std::int64_t n = 1; // time horizon
    std::vector<double> taus{1.0};
    std::uint64_t seed = 0;
    double burn_in_tol = 1e-8; // truncation tolerance for the stationary start

    void validate() const;
};

struct AggregateSample {
    std::vector<double> values; // one per tau, cumulative checkpoints
    std::int64_t replicate_id = 0;
};

/// MA weight c_n(a, s) = sum_{t=1}^n a^{t-s} 1(s <= t), closed form.
double ma_weight(double a, std::int64_t n, std::int64_t s);

/// Stationary RCAR(1) path X(1..n) for a fixed coefficient a. The stationary
/// start X(0) is drawn exactly from its conditional law when the innovation
/// law is closed under convolution (ExactStable, Gaussian); for
/// TwoSidedPareto it is the truncated MA sum with a^M < burn_in_tol.
std::vector<double> simulate_path(double a, std::int64_t n, const StableLaw& innovation,
                                  double burn_in_tol, RngStream& rng);

/// Number of MA terms kept for the truncated stationary start (0 for a = 0),
/// capped at 10^7.
std::int64_t burn_in_length(double a, double burn_in_tol);

/// One replicate of the joint aggregate. Paths consume deterministic
/// substreams derived from (spec.seed, replicate_id, path_index), so the
/// result is a pure function of (spec, replicate_id).
AggregateSample aggregate(const PanelSpec& spec, std::int64_t replicate_id = 0);

/// M replicates, optionally on a worker pool. Replicate r of any run equals
/// aggregate(spec, r) regardless of the worker count.
std::vector<AggregateSample> aggregate_replicates(const PanelSpec& spec, std::int64_t replicates,
                                                  int workers = 1);

}  // namespace rcarlab
