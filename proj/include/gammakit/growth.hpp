#pragma once

#include "gammakit/rational.hpp"

#include <string>
#include <vector>

namespace gammakit::fds {

struct GrowthSample {
  Rat x;      // filtration level, >= 1
  Int count;  // rank a(x), >= 0
};

// Step-interpolated rank function known only through samples.
struct SampledGrowth {
  std::vector<GrowthSample> samples;

  void validate() const;  // throws std::invalid_argument
};

enum class GammaClass { neg_infinity, finite, pos_infinity };

struct GammaEstimate {
  GammaClass cls = GammaClass::neg_infinity;
  double value = 0.0;      // fitted growth rate when finite
  double slope = 0.0;      // raw least-squares slope of log a vs log x
  double residual = 0.0;   // rms residual of that fit
  std::size_t points = 0;  // samples entering the fit

  bool is_finite() const { return cls == GammaClass::finite; }
  std::string describe() const;
};

struct GammaOptions {
  // Fraction of the sample list (counted from the end) used for the fit.
  double window_fraction = 0.5;
  // Fitted slopes above this report +infinity. 50 suits x-scale sweeps up
  // to ~1e4; short integer-index sequences (conjugacy counts) use a lower
  // cutoff, see conj::gamma_cong.
  double inf_threshold = 50.0;
  std::size_t min_samples = 8;
};

// Least-squares slope of log a(x) against log x over the tail window, with
// the -infinity (tail identically zero) and +infinity (slope above
// threshold) conventions.
GammaEstimate fit_gamma(const SampledGrowth& growth, const GammaOptions& opts = {});

}  // namespace gammakit::fds
