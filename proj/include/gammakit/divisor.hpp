#pragma once

#include "gammakit/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gammakit::divisor {

// Strata are subsets of {1..k} stored as bitmasks (bit i-1 for component i).
using Stratum = std::uint32_t;

std::vector<int> stratum_indices(Stratum s);       // sorted 1-based indices
Stratum stratum_from_indices(const std::vector<int>& indices, int k);
int stratum_size(Stratum s);

// Combinatorial model of a smooth normal-crossing compactification:
// intersection poset of the divisor components, wrapping numbers of the
// Liouville form, and Morse counts of the auxiliary function per stratum.
struct DivisorModel {
  int n = 0;                      // complex dimension of the compactification
  int k = 0;                      // number of divisor components
  std::vector<Stratum> strata;    // nonempty strata, always including {} (mask 0)
  std::vector<Rat> wrapping;      // kappa_1..kappa_k, all < 0
  std::map<Stratum, std::int64_t> morse;  // per nonempty stratum
  std::int64_t morse_zero_region = 0;     // M_H
  double epsilon = 0.0;           // tube radius

  bool has_stratum(Stratum s) const;
};

struct Diagnostics {
  bool ok = true;
  std::vector<std::string> issues;
};

Diagnostics validate(const DivisorModel& d);

// d = max { n - dim_C S_I : S_I nonempty } = deepest stratum size.
// Rejects models whose only stratum is the empty set (A would be compact).
int depth_d(const DivisorModel& d);

struct CompactificationSet {
  std::vector<DivisorModel> models;
};

// Minimum of depth_d over the supplied compactifications; an upper bound
// for the minimum over all compactifications.
int m_A(const CompactificationSet& c);

}  // namespace gammakit::divisor
