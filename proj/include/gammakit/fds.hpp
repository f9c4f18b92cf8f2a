#pragma once

#include "gammakit/growth.hpp"
#include "gammakit/matrix.hpp"
#include "gammakit/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gammakit::fds {

// A finitely presented filtered directed system over [1, infinity).
// V_x is the zero space for x below the first breakpoint and constant on
// [x_i, x_{i+1}); transitions[i] carries V_{x_i} into V_{x_{i+1}}.
// Past the last breakpoint the presentation repeats V_{x_m} with identity
// maps; stable_tail records that this is the genuine behaviour of the
// system (required for direct limits).
struct FiniteFDS {
  std::vector<Rat> breakpoints;
  std::vector<std::size_t> dims;
  std::vector<MatQ> transitions;
  bool stable_tail = true;

  static constexpr std::size_t before_first = static_cast<std::size_t>(-1);

  std::size_t count() const { return breakpoints.size(); }
  void validate() const;

  // Largest i with x_i <= x, or before_first.
  std::size_t locate(const Rat& x) const;
  std::size_t dim_at_index(std::size_t idx) const { return idx == before_first ? 0 : dims[idx]; }
  std::size_t dim_at(const Rat& x) const { return dim_at_index(locate(x)); }
};

// The composite transition between the enclosing breakpoints of x1 and x2
// (indices may be before_first, giving maps out of the zero space).
MatQ evaluate_by_index(const FiniteFDS& f, std::size_t i1, std::size_t i2);
MatQ evaluate(const FiniteFDS& f, const Rat& x1, const Rat& x2);

// a(x) = rank of V_x -> colim V = V_{x_m}; rejects non-stable tails.
std::size_t rank_to_limit(const FiniteFDS& f, const Rat& x, const Field& field = {});

// a(x_i) at every breakpoint (the documented sampling of the system).
SampledGrowth sample_growth(const FiniteFDS& f, const Field& field = {});

GammaEstimate gamma(const FiniteFDS& f, const GammaOptions& opts = {}, const Field& field = {});

// Morphism of filtered directed systems: a rescaling constant C >= 1 and,
// per source breakpoint x_i, a matrix into V'_{snap(C x_i)} where snap
// rounds down to the enclosing breakpoint of the target grid.
struct FDSMorphism {
  Rat scale = 1;
  std::vector<MatQ> maps;
};

struct CheckResult {
  bool ok = true;
  std::ptrdiff_t failing_square = -1;
  std::string message;

  static CheckResult failure(std::ptrdiff_t square, std::string msg) {
    return {false, square, std::move(msg)};
  }
};

// The directed-system self-morphism x -> Kx built from the psi maps.
FDSMorphism shift_morphism(const FiniteFDS& f, const Rat& factor);

// Composite `later(earlier(.))`; landings are pushed forward along the
// codomain's own transitions so the result snaps like a single morphism of
// scale later.scale * earlier.scale.
FDSMorphism compose_morphism(const FDSMorphism& later, const FiniteFDS& later_domain,
                             const FDSMorphism& earlier, const FiniteFDS& earlier_domain,
                             const FiniteFDS& codomain);

// True iff every consecutive commuting square holds exactly.
CheckResult check_morphism(const FDSMorphism& phi, const FiniteFDS& from, const FiniteFDS& to);

// Does the morphism equal the directed-system maps psi_{x, scale x} of sys?
CheckResult is_directed_morphism(const FDSMorphism& m, const FiniteFDS& sys);

// (phi, phi_back) witness an isomorphism iff both are morphisms and both
// composites equal directed-system maps for the composite constants.
CheckResult check_isomorphism_witness(const FDSMorphism& phi, const FiniteFDS& f,
                                      const FDSMorphism& phi_back, const FiniteFDS& g);

// Four systems V^1 -> V^2 -> V^3 -> V^4 with maps u[j] whose double
// composites are isomorphisms, witnessed by b1 : V^3 -> V^1 and
// b2 : V^4 -> V^2.
struct SandwichInstance {
  std::array<FiniteFDS, 4> systems;
  std::array<FDSMorphism, 3> u;
  FDSMorphism b1;
  FDSMorphism b2;
};

struct SandwichReport {
  bool ok = false;
  std::string failed_identity;  // empty when ok
  FDSMorphism phi;              // u2
  FDSMorphism phi_back;         // b2 . u3 . psi^3
};

// Verifies the four witness identities, builds phi = u2 and
// phi_back = b2 . u3 . psi^3, and checks that they witness V^2 ~ V^3.
SandwichReport sandwich_check(const SandwichInstance& inst);

struct InvarianceReport {
  CheckResult witness;
  GammaEstimate gamma_from;
  GammaEstimate gamma_to;
  bool same_class = false;
  double slope_gap = 0.0;
  bool pass = false;
};

// Checks the witness pair, then compares fitted growth rates of the two
// systems (equal value class; finite slopes within slope_tol).
InvarianceReport gamma_invariance_test(const FiniteFDS& f, const FiniteFDS& g,
                                       const FDSMorphism& phi, const FDSMorphism& phi_back,
                                       double slope_tol = 0.05, const GammaOptions& opts = {},
                                       const Field& field = {});

}  // namespace gammakit::fds
