#include "gammakit/fds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gammakit::fds {

void FiniteFDS::validate() const {
  const std::size_t m = breakpoints.size();
  if (m == 0) throw std::invalid_argument("FDS needs at least one breakpoint");
  if (dims.size() != m) throw std::invalid_argument("FDS dims/breakpoints length mismatch");
  if (transitions.size() + 1 != m) {
    throw std::invalid_argument("FDS needs exactly one transition per consecutive breakpoint pair");
  }
  if (breakpoints.front() < 1) throw std::invalid_argument("FDS breakpoints must be >= 1");
  for (std::size_t i = 1; i < m; ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw std::invalid_argument("FDS breakpoints must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (transitions[i].rows() != dims[i + 1] || transitions[i].cols() != dims[i]) {
      std::ostringstream msg;
      msg << "transition " << i << " has shape " << transitions[i].rows() << "x"
          << transitions[i].cols() << ", expected " << dims[i + 1] << "x" << dims[i];
      throw std::invalid_argument(msg.str());
    }
  }
}

std::size_t FiniteFDS::locate(const Rat& x) const {
  if (breakpoints.empty() || x < breakpoints.front()) return before_first;
  std::size_t lo = 0, hi = breakpoints.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (breakpoints[mid] <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

MatQ evaluate_by_index(const FiniteFDS& f, std::size_t i1, std::size_t i2) {
  if (i1 == FiniteFDS::before_first) {
    return MatQ(f.dim_at_index(i2), 0);
  }
  if (i2 == FiniteFDS::before_first || i2 < i1) {
    throw std::invalid_argument("evaluate requires x1 <= x2");
  }
  MatQ acc = MatQ::identity(f.dims[i1]);
  for (std::size_t k = i1; k < i2; ++k) acc = f.transitions[k] * acc;
  return acc;
}

MatQ evaluate(const FiniteFDS& f, const Rat& x1, const Rat& x2) {
  if (x2 < x1) throw std::invalid_argument("evaluate requires x1 <= x2");
  return evaluate_by_index(f, f.locate(x1), f.locate(x2));
}

std::size_t rank_to_limit(const FiniteFDS& f, const Rat& x, const Field& field) {
  if (!f.stable_tail) {
    throw std::domain_error("direct limit not representable: tail is not stable");
  }
  const std::size_t last = f.count() - 1;
  return rank_in(evaluate_by_index(f, f.locate(x), last), field);
}

SampledGrowth sample_growth(const FiniteFDS& f, const Field& field) {
  f.validate();
  if (!f.stable_tail) {
    throw std::domain_error("direct limit not representable: tail is not stable");
  }
  const std::size_t m = f.count();
  SampledGrowth growth;
  growth.samples.resize(m);
  // Suffix products psi_{x_i, x_m} computed right to left.
  MatQ suffix = MatQ::identity(f.dims[m - 1]);
  for (std::size_t i = m; i-- > 0;) {
    if (i + 1 < m) suffix = suffix * f.transitions[i];
    growth.samples[i] = {f.breakpoints[i], Int(rank_in(suffix, field))};
  }
  return growth;
}

GammaEstimate gamma(const FiniteFDS& f, const GammaOptions& opts, const Field& field) {
  return fit_gamma(sample_growth(f, field), opts);
}

FDSMorphism shift_morphism(const FiniteFDS& f, const Rat& factor) {
  if (factor < 1) throw std::invalid_argument("shift factor must be >= 1");
  FDSMorphism m;
  m.scale = factor;
  m.maps.reserve(f.count());
  for (std::size_t i = 0; i < f.count(); ++i) {
    m.maps.push_back(evaluate_by_index(f, i, f.locate(factor * f.breakpoints[i])));
  }
  return m;
}

FDSMorphism compose_morphism(const FDSMorphism& later, const FiniteFDS& later_domain,
                             const FDSMorphism& earlier, const FiniteFDS& earlier_domain,
                             const FiniteFDS& codomain) {
  FDSMorphism out;
  out.scale = later.scale * earlier.scale;
  out.maps.reserve(earlier_domain.count());
  for (std::size_t i = 0; i < earlier_domain.count(); ++i) {
    const Rat& x = earlier_domain.breakpoints[i];
    const std::size_t target = codomain.locate(out.scale * x);
    const std::size_t mid = later_domain.locate(earlier.scale * x);
    if (mid == FiniteFDS::before_first) {
      out.maps.emplace_back(codomain.dim_at_index(target), earlier_domain.dims[i]);
      continue;
    }
    MatQ composite = later.maps[mid] * earlier.maps[i];
    const std::size_t landed = codomain.locate(later.scale * later_domain.breakpoints[mid]);
    if (landed != target) {
      composite = evaluate_by_index(codomain, landed, target) * composite;
    }
    out.maps.push_back(std::move(composite));
  }
  return out;
}

CheckResult check_morphism(const FDSMorphism& phi, const FiniteFDS& from, const FiniteFDS& to) {
  if (phi.scale < 1) return CheckResult::failure(-1, "morphism constant must be >= 1");
  if (phi.maps.size() != from.count()) {
    return CheckResult::failure(-1, "morphism needs one map per source breakpoint");
  }
  for (std::size_t i = 0; i < from.count(); ++i) {
    const std::size_t target = to.locate(phi.scale * from.breakpoints[i]);
    const std::size_t want_rows = to.dim_at_index(target);
    if (phi.maps[i].rows() != want_rows || phi.maps[i].cols() != from.dims[i]) {
      std::ostringstream msg;
      msg << "map at breakpoint " << i << " has shape " << phi.maps[i].rows() << "x"
          << phi.maps[i].cols() << ", expected " << want_rows << "x" << from.dims[i];
      return CheckResult::failure(static_cast<std::ptrdiff_t>(i), msg.str());
    }
  }
  for (std::size_t i = 0; i + 1 < from.count(); ++i) {
    const std::size_t t1 = to.locate(phi.scale * from.breakpoints[i]);
    const std::size_t t2 = to.locate(phi.scale * from.breakpoints[i + 1]);
    const MatQ left = phi.maps[i + 1] * from.transitions[i];
    const MatQ right = evaluate_by_index(to, t1, t2) * phi.maps[i];
    if (!(left == right)) {
      std::ostringstream msg;
      msg << "square between breakpoints " << i << " and " << i + 1 << " does not commute";
      return CheckResult::failure(static_cast<std::ptrdiff_t>(i), msg.str());
    }
  }
  return {};
}

CheckResult is_directed_morphism(const FDSMorphism& m, const FiniteFDS& sys) {
  if (m.maps.size() != sys.count()) {
    return CheckResult::failure(-1, "morphism needs one map per breakpoint");
  }
  for (std::size_t i = 0; i < sys.count(); ++i) {
    const std::size_t target = sys.locate(m.scale * sys.breakpoints[i]);
    if (!(m.maps[i] == evaluate_by_index(sys, i, target))) {
      std::ostringstream msg;
      msg << "map at breakpoint " << i << " differs from the directed-system map";
      return CheckResult::failure(static_cast<std::ptrdiff_t>(i), msg.str());
    }
  }
  return {};
}

CheckResult check_isomorphism_witness(const FDSMorphism& phi, const FiniteFDS& f,
                                      const FDSMorphism& phi_back, const FiniteFDS& g) {
  if (CheckResult r = check_morphism(phi, f, g); !r.ok) {
    r.message = "phi: " + r.message;
    return r;
  }
  if (CheckResult r = check_morphism(phi_back, g, f); !r.ok) {
    r.message = "phi': " + r.message;
    return r;
  }
  const FDSMorphism round_f = compose_morphism(phi_back, g, phi, f, f);
  if (CheckResult r = is_directed_morphism(round_f, f); !r.ok) {
    r.message = "phi' . phi: " + r.message;
    return r;
  }
  const FDSMorphism round_g = compose_morphism(phi, f, phi_back, g, g);
  if (CheckResult r = is_directed_morphism(round_g, g); !r.ok) {
    r.message = "phi . phi': " + r.message;
    return r;
  }
  return {};
}

SandwichReport sandwich_check(const SandwichInstance& inst) {
  SandwichReport report;
  const auto& s = inst.systems;
  struct Edge {
    const FDSMorphism* m;
    const FiniteFDS* from;
    const FiniteFDS* to;
    const char* name;
  };
  const Edge edges[] = {
      {&inst.u[0], &s[0], &s[1], "u1"}, {&inst.u[1], &s[1], &s[2], "u2"},
      {&inst.u[2], &s[2], &s[3], "u3"}, {&inst.b1, &s[2], &s[0], "b1"},
      {&inst.b2, &s[3], &s[1], "b2"},
  };
  for (const Edge& e : edges) {
    if (CheckResult r = check_morphism(*e.m, *e.from, *e.to); !r.ok) {
      report.failed_identity = std::string(e.name) + " is not a morphism: " + r.message;
      return report;
    }
  }

  const FDSMorphism u21 = compose_morphism(inst.u[1], s[1], inst.u[0], s[0], s[2]);
  const FDSMorphism u32 = compose_morphism(inst.u[2], s[2], inst.u[1], s[1], s[3]);

  if (!is_directed_morphism(compose_morphism(u21, s[0], inst.b1, s[2], s[2]), s[2]).ok) {
    report.failed_identity = "u2.u1.b1 is not a directed-system map of V^3";
    return report;
  }
  if (!is_directed_morphism(compose_morphism(inst.b1, s[2], u21, s[0], s[0]), s[0]).ok) {
    report.failed_identity = "b1.u2.u1 is not a directed-system map of V^1";
    return report;
  }
  if (!is_directed_morphism(compose_morphism(u32, s[1], inst.b2, s[3], s[3]), s[3]).ok) {
    report.failed_identity = "u3.u2.b2 is not a directed-system map of V^4";
    return report;
  }
  if (!is_directed_morphism(compose_morphism(inst.b2, s[3], u32, s[1], s[1]), s[1]).ok) {
    report.failed_identity = "b2.u3.u2 is not a directed-system map of V^2";
    return report;
  }

  // phi = u2 and phi' = b2 . u3 . psi^3 witness V^2 ~ V^3.
  const Rat shift = inst.b1.scale * inst.u[0].scale * inst.u[1].scale;
  const FDSMorphism psi3 = shift_morphism(s[2], shift);
  const FDSMorphism u3_psi3 = compose_morphism(inst.u[2], s[2], psi3, s[2], s[3]);
  report.phi = inst.u[1];
  report.phi_back = compose_morphism(inst.b2, s[3], u3_psi3, s[2], s[1]);

  if (CheckResult r = check_isomorphism_witness(report.phi, s[1], report.phi_back, s[2]); !r.ok) {
    report.failed_identity = "constructed witness pair fails: " + r.message;
    return report;
  }
  report.ok = true;
  return report;
}

InvarianceReport gamma_invariance_test(const FiniteFDS& f, const FiniteFDS& g,
                                       const FDSMorphism& phi, const FDSMorphism& phi_back,
                                       double slope_tol, const GammaOptions& opts,
                                       const Field& field) {
  InvarianceReport report;
  report.witness = check_isomorphism_witness(phi, f, phi_back, g);
  report.gamma_from = gamma(f, opts, field);
  report.gamma_to = gamma(g, opts, field);
  report.same_class = report.gamma_from.cls == report.gamma_to.cls;
  if (report.same_class && report.gamma_from.is_finite()) {
    report.slope_gap = std::fabs(report.gamma_from.value - report.gamma_to.value);
  }
  report.pass = report.witness.ok && report.same_class && report.slope_gap <= slope_tol;
  return report;
}

}  // namespace gammakit::fds
