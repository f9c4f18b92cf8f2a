#pragma once

#include "gammakit/growth.hpp"
#include "gammakit/rational.hpp"

#include <cstdint>
#include <vector>

namespace gammakit::loops {

// Flat torus R^n / Z^n with a rational metric. The free loop space splits
// into components indexed by Z^n, each carrying total Betti number 2^n and
// entering the length filtration at the lattice norm sqrt(v^T g v).
struct TorusModel {
  int n = 0;
  std::vector<std::vector<Rat>> metric;

  void validate() const;  // symmetry and positive leading principal minors
};

// a(lambda) = 2^n * #{ v in Z^n : v^T g v <= lambda^4 }  (length <= lambda^2
// filtration). Exact integer comparison throughout.
Int torus_a(const TorusModel& t, const Rat& lambda);

// Counts for a whole grid out of a single enumeration pass.
std::vector<Int> torus_counts(const TorusModel& t, const std::vector<Rat>& lambdas);

fds::SampledGrowth torus_growth(const TorusModel& t, const std::vector<Rat>& lambdas);

// Fitted growth rate; 2n for an n-torus.
fds::GammaEstimate torus_gamma(const TorusModel& t, const std::vector<Rat>& lambdas,
                               const fds::GammaOptions& opts = {});

// Evenly spaced rational grid over [lo, hi].
std::vector<Rat> rational_grid(const Rat& lo, const Rat& hi, std::size_t samples);

// Conjugacy counts r reindexed onto the x-scale (C+P)c, the desk form of
// the fundamental-group lower bound for loop-space growth. Reindexing
// leaves the fitted growth rate unchanged.
fds::SampledGrowth pi1_lower_bound(const std::vector<std::int64_t>& r, const Rat& generator_bound,
                                   const Rat& connecting_bound);

}  // namespace gammakit::loops
