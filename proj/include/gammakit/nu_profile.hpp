#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gammakit::ham {

struct ProfileDiagnostics {
  bool ok = true;
  std::vector<std::string> issues;
};

// Radial profile of the compactification-compatible Hamiltonian. The
// default family is the quadratic cap epsilon^2/4 - t^2 on [0, cap_end],
// glued to 0 at support_end by a Hermite cubic, identically 0 beyond.
// Sampled profiles (piecewise linear) are accepted for experiments.
//
// Shape requirements checked by validate(): nu' < 0 wherever nu > 0,
// exactly one sign change of nu'' inside {nu > 0}, omega(0+) = 1.
class NuProfile {
 public:
  static NuProfile make_default();  // epsilon 0.45, cap 0.1, support 0.4
  static NuProfile closed_form(double epsilon, double cap_end, double support_end);
  static NuProfile from_samples(double epsilon,
                                std::vector<std::pair<double, double>> knots);

  double epsilon() const { return epsilon_; }
  double cap_end() const { return cap_end_; }
  // Infimum of the region where nu vanishes identically.
  double support_end() const { return support_end_; }
  double max_value() const;  // nu(0)

  double nu(double t) const;
  double nu_prime(double t) const;

  // omega(r) = -nu'(r) / (2 r); only defined where nu(r) > 0.
  double angular_speed(double r) const;
  double omega_max() const { return omega_max_; }

  // Constant above sup of -4 nu'(t)/t; per-axis solution counts obey
  // N(lambda) <= floor(tau lambda / 2 pi).
  double tau() const { return tau_; }

  // The nu'' = 0 point inside {nu > 0} (the glue junction when the sign
  // flips there).
  double inflection_radius() const { return inflection_radius_; }

  // nu values at or below this count as the "small nu" region.
  double smallnu_threshold() const;

  ProfileDiagnostics validate() const;

  // Dense radius grid over (0, support_end) with cached omega values,
  // shared by the root finder.
  const std::vector<double>& grid_radii() const { return grid_r_; }
  const std::vector<double>& grid_omega() const { return grid_w_; }

 private:
  NuProfile() = default;
  void finish_setup();

  bool closed_form_ = true;
  double epsilon_ = 0.0;
  double cap_end_ = 0.0;
  double support_end_ = 0.0;
  // Hermite data for the glue segment.
  double glue_value_ = 0.0;  // nu(cap_end)
  double glue_slope_ = 0.0;  // nu'(cap_end)
  // Sampled backend.
  std::vector<std::pair<double, double>> knots_;

  double tau_ = 0.0;
  double omega_max_ = 0.0;
  double inflection_radius_ = 0.0;
  std::vector<double> grid_r_;
  std::vector<double> grid_w_;
};

}  // namespace gammakit::ham
