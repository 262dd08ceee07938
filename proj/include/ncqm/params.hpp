#pragma once

#include <cmath>

namespace ncqm {

/// Noncommutativity data of the 4D phase space:
///   [x, y] = i mu,  [px, py] = i nu,  [x, px] = [y, py] = i hbar.
/// theta = sqrt(mu nu) / hbar is the deformation of the boson algebra and must
/// lie strictly inside (0, 1). Construction through make() enforces this.
class NCParameters {
 public:
  static NCParameters make(double mu, double nu, double hbar);

  double mu() const noexcept { return mu_; }
  double nu() const noexcept { return nu_; }
  double hbar() const noexcept { return hbar_; }
  double theta() const noexcept { return theta_; }

  /// (mu/nu)^{1/4}
  double length_ratio() const noexcept { return std::sqrt(std::sqrt(mu_ / nu_)); }
  /// (nu/mu)^{1/4}
  double momentum_ratio() const noexcept { return std::sqrt(std::sqrt(nu_ / mu_)); }

  /// sqrt(hbar/2) (mu/nu)^{1/4}: x = position_scale (a + a^dag).
  double position_scale() const noexcept { return std::sqrt(hbar_ / 2.0) * length_ratio(); }
  /// sqrt(hbar/2) (nu/mu)^{1/4}: px = -i momentum_scale (a - a^dag).
  double momentum_scale() const noexcept { return std::sqrt(hbar_ / 2.0) * momentum_ratio(); }

  friend bool operator==(const NCParameters&, const NCParameters&) = default;

 private:
  NCParameters(double mu, double nu, double hbar, double theta)
      : mu_(mu), nu_(nu), hbar_(hbar), theta_(theta) {}

  double mu_;
  double nu_;
  double hbar_;
  double theta_;
};

/// Coupled oscillator
///   H = (px^2 + py^2)/2m + m w^2 (x^2 + y^2)/2 + k (xy + yx)/2 + l (px py + py px)/2
struct OscillatorParams {
  NCParameters nc;
  double m;
  double omega;
  double k;
  double l;

  /// Throws InvalidRegime naming the violated constraint.
  void validate() const;
};

/// Validated construction of OscillatorParams.
OscillatorParams make_oscillator(const NCParameters& nc, double m, double omega, double k,
                                 double l);

}  // namespace ncqm
