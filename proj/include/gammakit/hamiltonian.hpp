#pragma once

#include "gammakit/divisor.hpp"
#include "gammakit/growth.hpp"
#include "gammakit/nu_profile.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace gammakit::ham {

// One root of lambda * omega(r) = 2 pi k.
struct AxisSolution {
  int winding = 0;
  double radius = 0.0;
};

struct AxisSolutionSet {
  double lambda = 0.0;  // after any degeneracy nudge
  std::vector<AxisSolution> solutions;
};

// All per-axis winding solutions for slope lambda, found by sign-change
// bracketing on the profile grid plus bisection (relative tol 1e-10).
// Slopes for which omega hits 2 pi k / lambda on a plateau are nudged by a
// relative 2^-20 step, mirroring the excluded discrete set of slopes.
AxisSolutionSet axis_solutions(const NuProfile& p, double lambda);

std::int64_t per_axis_bound(const NuProfile& p, double lambda);

// An (S^1)^l family of 1-periodic orbits: stratum, windings and radii.
struct OrbitFamily {
  divisor::Stratum stratum = 0;
  std::vector<int> windings;   // aligned with stratum_indices(stratum)
  std::vector<double> radii;
  double action = 0.0;
};

// A = -lambda sum nu(r_i) - sum (r_i^2 + kappa_i) 2 pi k_i.
double action(const OrbitFamily& f, const NuProfile& p, const divisor::DivisorModel& d,
              double lambda);

// Census bound constant: C = 2 pi * 2^k * (sum of all strata Morse counts).
double bound_constant(const divisor::DivisorModel& d);

// Action-bound constant C_H: dense-sampled sup of -theta(X_H) - H over the
// model, i.e. max over nonempty strata I of sum_{i in I} of the positive
// part of sup_r [(r^2 + kappa_i) nu'(r) / (2r) - nu(r)].
double action_bound_constant(const NuProfile& p, const divisor::DivisorModel& d);

struct StratumCensus {
  divisor::Stratum stratum = 0;
  std::int64_t family_count = 0;  // N(lambda)^{|I|}
  std::int64_t orbit_count = 0;   // family_count * morse(I) * 2^{|I|}
  double min_action = 0.0;
  double max_action = 0.0;
  bool smallnu_positive = true;  // min action over all-small-radius families > 0
};

struct CensusOptions {
  // Families with action > action_filter * lambda are dropped (needs
  // enumeration; the default +inf keeps the closed-form count).
  double action_filter = std::numeric_limits<double>::infinity();
  bool enumerate_families = false;
  std::int64_t family_cap = 200000;
};

struct OrbitCensus {
  double lambda = 0.0;
  AxisSolutionSet axis;
  int depth = 0;
  std::vector<StratumCensus> strata;
  std::vector<OrbitFamily> families;  // populated when enumerating
  std::int64_t nondegenerate_count = 0;
  double min_action = 0.0;
  double max_action = 0.0;
  double count_bound = 0.0;  // 2 C lambda^d
  double action_bound = 0.0;  // lambda * C_H
  bool count_bound_satisfied = true;
  bool per_axis_bound_satisfied = true;
  bool action_bound_satisfied = true;
  bool smallnu_positive = true;

  bool all_bounds_satisfied() const {
    return count_bound_satisfied && per_axis_bound_satisfied && action_bound_satisfied &&
           smallnu_positive;
  }
};

// Profile/model fit: the support of nu must sit below 1 and below every
// -kappa_i, and within the tube radius.
divisor::Diagnostics check_compatible(const NuProfile& p, const divisor::DivisorModel& d);

OrbitCensus census(const divisor::DivisorModel& d, const NuProfile& p, double lambda,
                   const CensusOptions& opts = {});

struct SweepOptions {
  double lambda_min = 10.0;
  double lambda_max = 1000.0;
  std::size_t samples = 48;  // log-spaced
  int jobs = 1;
  CensusOptions census;
};

std::vector<OrbitCensus> census_sweep(const divisor::DivisorModel& d, const NuProfile& p,
                                      const SweepOptions& opts);

fds::SampledGrowth counts_growth(const std::vector<OrbitCensus>& sweep);

struct GrowthExponentReport {
  fds::GammaEstimate estimate;
  int expected_depth = 0;
  std::vector<OrbitCensus> sweep;
};

GrowthExponentReport growth_exponent(const divisor::DivisorModel& d, const NuProfile& p,
                                     const SweepOptions& opts,
                                     const fds::GammaOptions& gamma_opts = {});

// Degree-k-cover bound on orbit counts; preserves the polynomial degree.
std::int64_t cover_scale(std::int64_t census_count, int k);

}  // namespace gammakit::ham
