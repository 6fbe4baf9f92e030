#pragma once

#include "rcarlab/rng.hpp"

namespace rcarlab {

enum class MixingShape { PurePower };

/// Law of the random autoregressive coefficient a in [0,1) with density
/// phi(u) = psi(u) (1-u)^(beta-1). Only the pure power shape
/// phi(u) = beta (1-u)^(beta-1) ships, for which psi1 = beta.
struct MixingLaw {
    double beta = 1.0;
    double psi1 = 1.0; // limit of psi(u) as u -> 1
    MixingShape shape = MixingShape::PurePower;

    static MixingLaw pure_power(double beta);

    void validate() const;
};

/// a = 1 - U^(1/beta), U uniform on (0,1]; density exactly beta (1-u)^(beta-1).
double sample_coefficient(const MixingLaw& law, RngStream& rng);

/// kappa_alpha = E (1-a)^-alpha = beta / (beta - alpha) for the pure power
/// shape. Throws NonIntegrable when beta <= alpha.
double kappa_alpha(const MixingLaw& law, double alpha);

}  // namespace rcarlab
