#include "ncqm/params.hpp"

#include <cmath>
#include <sstream>

#include "ncqm/error.hpp"

namespace ncqm {

NCParameters NCParameters::make(double mu, double nu, double hbar) {
  if (!(std::isfinite(mu) && std::isfinite(nu) && std::isfinite(hbar))) {
    throw Error(ErrorCode::InvalidDeformation, "mu, nu and hbar must be finite");
  }
  if (!(mu > 0.0 && nu > 0.0 && hbar > 0.0)) {
    throw Error(ErrorCode::InvalidDeformation, "mu, nu and hbar must be positive");
  }
  const double theta = std::sqrt(mu * nu) / hbar;
  if (!(theta > 0.0 && theta < 1.0)) {
    std::ostringstream os;
    os << "theta = sqrt(mu*nu)/hbar must satisfy 0 < theta < 1 (got " << theta << ")";
    throw Error(ErrorCode::InvalidDeformation, os.str());
  }
  return NCParameters(mu, nu, hbar, theta);
}

void OscillatorParams::validate() const {
  if (!(m > 0.0)) throw Error(ErrorCode::InvalidRegime, "mass m must be positive");
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidRegime, "frequency omega must be positive");
  if (!std::isfinite(k) || !std::isfinite(l)) {
    throw Error(ErrorCode::InvalidRegime, "couplings k and l must be finite");
  }
  if (!(1.0 - l * m > 0.0)) throw Error(ErrorCode::InvalidRegime, "1 - lm must be positive");
  if (!(1.0 + k / (m * omega * omega) > 0.0)) {
    throw Error(ErrorCode::InvalidRegime, "1 + k/(m omega^2) must be positive");
  }
}

OscillatorParams make_oscillator(const NCParameters& nc, double m, double omega, double k,
                                 double l) {
  OscillatorParams p{nc, m, omega, k, l};
  p.validate();
  return p;
}

}  // namespace ncqm
