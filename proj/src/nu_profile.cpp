#include "gammakit/nu_profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gammakit::ham {

namespace {
constexpr std::size_t kGridPoints = 10000;
}

NuProfile NuProfile::make_default() { return closed_form(0.45, 0.1, 0.4); }

NuProfile NuProfile::closed_form(double epsilon, double cap_end, double support_end) {
  if (!(epsilon > 0) || !(cap_end > 0) || !(cap_end < support_end) || !(support_end < epsilon)) {
    throw std::invalid_argument("profile needs 0 < cap_end < support_end < epsilon");
  }
  if (!(cap_end < epsilon / 2)) {
    throw std::invalid_argument("cap_end must stay below epsilon/2 (nu positive on the cap)");
  }
  NuProfile p;
  p.closed_form_ = true;
  p.epsilon_ = epsilon;
  p.cap_end_ = cap_end;
  p.support_end_ = support_end;
  p.glue_value_ = epsilon * epsilon / 4 - cap_end * cap_end;
  p.glue_slope_ = -2 * cap_end;
  // Keeps the Hermite glue strictly decreasing (no interior extremum).
  if (!(p.glue_value_ > cap_end * (support_end - cap_end))) {
    throw std::invalid_argument("glue too shallow: nu would not decrease strictly");
  }
  p.finish_setup();
  return p;
}

NuProfile NuProfile::from_samples(double epsilon, std::vector<std::pair<double, double>> knots) {
  if (!(epsilon > 0) || knots.size() < 4) {
    throw std::invalid_argument("sampled profile needs epsilon > 0 and at least 4 knots");
  }
  std::sort(knots.begin(), knots.end());
  if (knots.front().first != 0.0) throw std::invalid_argument("sampled profile must start at t = 0");
  if (!(knots.back().first < epsilon)) {
    throw std::invalid_argument("sampled profile knots must stay below epsilon");
  }
  NuProfile p;
  p.closed_form_ = false;
  p.epsilon_ = epsilon;
  p.knots_ = std::move(knots);
  // support_end: first knot after which nu stays 0.
  p.support_end_ = p.knots_.back().first;
  for (std::size_t i = p.knots_.size(); i-- > 0;) {
    if (p.knots_[i].second > 0) break;
    p.support_end_ = p.knots_[i].first;
  }
  p.cap_end_ = 0.0;
  p.finish_setup();
  return p;
}

double NuProfile::max_value() const { return nu(0.0); }

double NuProfile::nu(double t) const {
  if (t < 0) throw std::domain_error("nu is defined on [0, epsilon)");
  if (t >= support_end_) return 0.0;
  if (closed_form_) {
    if (t <= cap_end_) return epsilon_ * epsilon_ / 4 - t * t;
    const double h = support_end_ - cap_end_;
    const double s = (t - cap_end_) / h;
    return glue_value_ * (2 * s * s * s - 3 * s * s + 1) +
           glue_slope_ * h * (s * s * s - 2 * s * s + s);
  }
  auto it = std::upper_bound(knots_.begin(), knots_.end(), std::make_pair(t, 1e300));
  if (it == knots_.begin()) return knots_.front().second;
  if (it == knots_.end()) return 0.0;
  const auto& [t1, v1] = *(it - 1);
  const auto& [t2, v2] = *it;
  return v1 + (v2 - v1) * (t - t1) / (t2 - t1);
}

double NuProfile::nu_prime(double t) const {
  if (t < 0) throw std::domain_error("nu is defined on [0, epsilon)");
  if (t >= support_end_) return 0.0;
  if (closed_form_) {
    if (t <= cap_end_) return -2 * t;
    const double h = support_end_ - cap_end_;
    const double s = (t - cap_end_) / h;
    return (glue_value_ * (6 * s * s - 6 * s) + glue_slope_ * h * (3 * s * s - 4 * s + 1)) / h;
  }
  auto it = std::upper_bound(knots_.begin(), knots_.end(), std::make_pair(t, 1e300));
  if (it == knots_.begin() || it == knots_.end()) return 0.0;
  const auto& [t1, v1] = *(it - 1);
  const auto& [t2, v2] = *it;
  return (v2 - v1) / (t2 - t1);
}

double NuProfile::angular_speed(double r) const {
  if (!(r > 0) || !(r < epsilon_) || !(nu(r) > 0)) {
    throw std::domain_error("angular speed needs 0 < r < epsilon with nu(r) > 0");
  }
  if (closed_form_ && r <= cap_end_) return 1.0;
  return -nu_prime(r) / (2 * r);
}

double NuProfile::smallnu_threshold() const { return max_value() / 16; }

void NuProfile::finish_setup() {
  grid_r_.resize(kGridPoints);
  grid_w_.resize(kGridPoints);
  double sup_ratio = 0.0;
  omega_max_ = 0.0;
  for (std::size_t j = 0; j < kGridPoints; ++j) {
    const double r = support_end_ * (j + 1) / (kGridPoints + 1);
    grid_r_[j] = r;
    const double w = nu(r) > 0 ? -nu_prime(r) / (2 * r) : 0.0;
    grid_w_[j] = w;
    omega_max_ = std::max(omega_max_, w);
    sup_ratio = std::max(sup_ratio, -4 * nu_prime(r) / r);
  }
  tau_ = sup_ratio * 1.02;

  // Locate the sign change of nu'' by sampling second differences.
  inflection_radius_ = cap_end_;
  const double dt = support_end_ / kGridPoints;
  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t j = 1; j + 1 < kGridPoints; ++j) {
    const double t = grid_r_[j];
    if (nu(t) <= 0) break;
    const double second = (nu_prime(t + dt / 2) - nu_prime(t - dt / 2)) / dt;
    if (have_prev && prev < 0 && second > 0) {
      inflection_radius_ = t;
      break;
    }
    if (second != 0) {
      prev = second;
      have_prev = true;
    }
  }
}

ProfileDiagnostics NuProfile::validate() const {
  ProfileDiagnostics diag;
  auto issue = [&diag](const std::string& msg) {
    diag.ok = false;
    diag.issues.push_back(msg);
  };

  if (!(support_end_ < epsilon_)) issue("nu must vanish near epsilon");

  // omega(0+) = 1, i.e. the cap is the standard quadratic one.
  const double r0 = support_end_ * 1e-3;
  const double w0 = nu(r0) > 0 ? -nu_prime(r0) / (2 * r0) : 0.0;
  if (std::fabs(w0 - 1.0) > 0.02) {
    std::ostringstream msg;
    msg << "omega(0+) = " << w0 << ", expected 1 (cap must match epsilon^2/4 - t^2)";
    issue(msg.str());
  }

  // nu' < 0 wherever nu > 0 (the tiny band next to the vanishing point is
  // exempted: the glue flattens out there).
  for (std::size_t j = 0; j < grid_r_.size(); ++j) {
    const double t = grid_r_[j];
    if (nu(t) > max_value() * 1e-6 && !(nu_prime(t) < 0)) {
      std::ostringstream msg;
      msg << "nu' must be negative where nu > 0; fails at t = " << t;
      issue(msg.str());
      break;
    }
  }

  // Exactly one sign change of nu'' inside {nu > 0}.
  const double dt = support_end_ / grid_r_.size();
  int changes = 0;
  int prev_sign = 0;
  for (std::size_t j = 1; j + 1 < grid_r_.size(); ++j) {
    const double t = grid_r_[j];
    if (nu(t) <= max_value() * 1e-6) break;
    const double second = (nu_prime(t + dt / 2) - nu_prime(t - dt / 2)) / dt;
    const int sign = second > 1e-9 ? 1 : (second < -1e-9 ? -1 : 0);
    if (sign == 0) continue;
    if (prev_sign != 0 && sign != prev_sign) ++changes;
    prev_sign = sign;
  }
  if (changes != 1) {
    std::ostringstream msg;
    msg << "nu'' must change sign exactly once in {nu > 0}, found " << changes << " changes";
    issue(msg.str());
  }
  return diag;
}

}  // namespace gammakit::ham
