#include "rcarlab/mixing.hpp"

#include <cmath>
#include <stdexcept>

#include "rcarlab/errors.hpp"

namespace rcarlab {

MixingLaw MixingLaw::pure_power(double beta) {
    MixingLaw law;
    law.beta = beta;
    law.psi1 = beta;
    law.shape = MixingShape::PurePower;
    law.validate();
    return law;
}

void MixingLaw::validate() const {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("MixingLaw: beta must be positive and finite");
    if (shape == MixingShape::PurePower && psi1 != beta)
        throw std::invalid_argument("MixingLaw: pure power shape has psi1 = beta");
    if (!(psi1 > 0.0)) throw std::invalid_argument("MixingLaw: psi1 must be positive");
}

double sample_coefficient(const MixingLaw& law, RngStream& rng) {
    law.validate();
    const double u = uniform_pos(rng);
    const double a = 1.0 - std::pow(u, 1.0 / law.beta);
    return a < 0.0 ? 0.0 : a;
}

double kappa_alpha(const MixingLaw& law, double alpha) {
    law.validate();
    if (law.beta <= alpha)
        throw NonIntegrable("kappa_alpha: E(1-a)^-alpha is infinite for beta <= alpha");
    return law.beta / (law.beta - alpha);
}

}  // namespace rcarlab
