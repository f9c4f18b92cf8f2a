#pragma once

#include "gammakit/fds.hpp"

#include <random>

namespace gammakit::fds {

// Seeded generators for the randomized morphism/isomorphism suites.

struct RandomFDSParams {
  std::size_t breakpoints = 16;
  std::size_t max_dim = 5;
  int entry_range = 2;
};

FiniteFDS random_fds(std::mt19937_64& rng, const RandomFDSParams& params = {});

struct IsomorphicPair {
  FiniteFDS from;
  FiniteFDS to;
  FDSMorphism phi;       // from -> to
  FDSMorphism phi_back;  // to -> from
};

// `to` is `from` reindexed by an integer factor B >= 1 with a random change
// of basis at every breakpoint; (phi, phi_back) is the natural witness pair.
IsomorphicPair random_isomorphic_pair(std::mt19937_64& rng, const RandomFDSParams& params = {});

// Instance of the four-system sandwich built the way the lemma's proof
// composes directed maps, dressed with per-system changes of basis.
SandwichInstance random_sandwich_instance(std::mt19937_64& rng,
                                          const RandomFDSParams& params = {});

// Corrupts one entry of one morphism map (for the negative tests). Returns
// false when there is no entry to corrupt.
bool corrupt_one_entry(std::mt19937_64& rng, FDSMorphism& m);

}  // namespace gammakit::fds
