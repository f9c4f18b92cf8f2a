#include "gammakit/growth.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gammakit::fds {

void SampledGrowth::validate() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].x < 1) throw std::invalid_argument("growth sample x must be >= 1");
    if (samples[i].count < 0) throw std::invalid_argument("growth sample count must be >= 0");
    if (i > 0 && !(samples[i - 1].x < samples[i].x)) {
      throw std::invalid_argument("growth sample x values must be strictly increasing");
    }
  }
}

std::string GammaEstimate::describe() const {
  std::ostringstream out;
  switch (cls) {
    case GammaClass::neg_infinity:
      out << "-inf";
      break;
    case GammaClass::pos_infinity:
      out << "+inf (slope " << slope << ")";
      break;
    case GammaClass::finite:
      out << value;
      break;
  }
  return out.str();
}

GammaEstimate fit_gamma(const SampledGrowth& growth, const GammaOptions& opts) {
  growth.validate();
  const std::size_t n = growth.samples.size();
  std::size_t window = static_cast<std::size_t>(std::ceil(opts.window_fraction * n));
  if (window > n) window = n;
  if (window < opts.min_samples) {
    throw std::invalid_argument("too few samples in the gamma fit window");
  }
  const std::size_t begin = n - window;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t used = 0;
  for (std::size_t i = begin; i < n; ++i) {
    const auto& s = growth.samples[i];
    if (s.count == 0) continue;
    const double lx = std::log(to_double(s.x));
    const double ly = log_big(s.count);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }

  GammaEstimate est;
  est.points = used;
  if (used == 0) {
    est.cls = GammaClass::neg_infinity;
    return est;
  }

  double slope = 0.0;
  const double det = used * sxx - sx * sx;
  if (used >= 2 && det > 0) {
    slope = (used * sxy - sx * sy) / det;
  }
  est.slope = slope;

  double ss = 0.0;
  const double intercept = (sy - slope * sx) / used;
  for (std::size_t i = begin; i < n; ++i) {
    const auto& s = growth.samples[i];
    if (s.count == 0) continue;
    const double lx = std::log(to_double(s.x));
    const double ly = log_big(s.count);
    const double r = ly - (intercept + slope * lx);
    ss += r * r;
  }
  est.residual = std::sqrt(ss / used);

  if (slope > opts.inf_threshold) {
    est.cls = GammaClass::pos_infinity;
  } else {
    est.cls = GammaClass::finite;
    est.value = slope < 0.0 ? 0.0 : slope;
  }
  return est;
}

}  // namespace gammakit::fds
