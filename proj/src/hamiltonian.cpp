#include "gammakit/hamiltonian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gammakit::ham {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  const __int128 r = static_cast<__int128>(a) * b;
  if (r > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("orbit count exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  if (a > std::numeric_limits<std::int64_t>::max() - b) {
    throw std::overflow_error("orbit count exceeds 64-bit range");
  }
  return a + b;
}

std::int64_t ipow_checked(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

double bisect_root(const NuProfile& p, double lo, double hi, double target) {
  double flo = p.angular_speed(lo) - target;
  for (int iter = 0; iter < 200 && (hi - lo) > 1e-10 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = p.angular_speed(mid) - target;
    if ((flo <= 0) == (fmid <= 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

AxisSolutionSet axis_solutions(const NuProfile& p, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("axis solutions need lambda > 0");
  const auto& radii = p.grid_radii();
  const auto& omega = p.grid_omega();

  AxisSolutionSet out;
  out.lambda = lambda;
  for (int attempt = 0; attempt < 8; ++attempt) {
    out.solutions.clear();
    bool degenerate = false;
    const int kmax = static_cast<int>(std::floor(out.lambda * p.omega_max() / kTwoPi)) + 1;
    for (int k = 1; k <= kmax && !degenerate; ++k) {
      const double target = kTwoPi * k / out.lambda;
      for (std::size_t j = 0; j + 1 < radii.size(); ++j) {
        const double g1 = omega[j] - target;
        const double g2 = omega[j + 1] - target;
        if (g1 == 0.0) {
          // Exact hit on the grid: lambda sits in the excluded discrete
          // set (e.g. on the omega = 1 plateau). Nudge and rescan.
          degenerate = true;
          break;
        }
        if (g1 * g2 < 0) {
          out.solutions.push_back({k, bisect_root(p, radii[j], radii[j + 1], target)});
        }
      }
    }
    if (!degenerate) break;
    out.lambda *= 1.0 + 0x1p-20;
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const AxisSolution& a, const AxisSolution& b) {
              return a.winding != b.winding ? a.winding < b.winding : a.radius < b.radius;
            });
  return out;
}

std::int64_t per_axis_bound(const NuProfile& p, double lambda) {
  return static_cast<std::int64_t>(std::floor(p.tau() * lambda / kTwoPi));
}

double action(const OrbitFamily& f, const NuProfile& p, const divisor::DivisorModel& d,
              double lambda) {
  const std::vector<int> indices = divisor::stratum_indices(f.stratum);
  if (indices.size() != f.radii.size() || indices.size() != f.windings.size()) {
    throw std::invalid_argument("orbit family shape mismatch");
  }
  double a = 0.0;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const double kappa = to_double(d.wrapping[indices[j] - 1]);
    const double r = f.radii[j];
    a += -lambda * p.nu(r) - (r * r + kappa) * kTwoPi * f.windings[j];
  }
  return a;
}

double bound_constant(const divisor::DivisorModel& d) {
  double morse_sum = 0.0;
  for (const auto& [s, count] : d.morse) {
    if (s != 0) morse_sum += static_cast<double>(count);
  }
  return kTwoPi * std::ldexp(1.0, d.k) * morse_sum;
}

double action_bound_constant(const NuProfile& p, const divisor::DivisorModel& d) {
  const auto& radii = p.grid_radii();
  std::vector<double> per_component(d.k, 0.0);
  for (int i = 0; i < d.k; ++i) {
    const double kappa = to_double(d.wrapping[i]);
    double sup = 0.0;
    for (double r : radii) {
      const double c = (r * r + kappa) * p.nu_prime(r) / (2 * r) - p.nu(r);
      sup = std::max(sup, c);
    }
    per_component[i] = sup;
  }
  double best = 0.0;
  for (divisor::Stratum s : d.strata) {
    if (s == 0) continue;
    double total = 0.0;
    for (int i : divisor::stratum_indices(s)) total += per_component[i - 1];
    best = std::max(best, total);
  }
  return best;
}

divisor::Diagnostics check_compatible(const NuProfile& p, const divisor::DivisorModel& d) {
  divisor::Diagnostics diag;
  auto issue = [&diag](const std::string& msg) {
    diag.ok = false;
    diag.issues.push_back(msg);
  };
  if (p.epsilon() > d.epsilon * (1 + 1e-12)) {
    issue("profile tube radius exceeds the model's epsilon");
  }
  if (!(p.support_end() <= 1.0)) {
    issue("nu support must stay below 1");
  }
  for (int i = 0; i < d.k; ++i) {
    if (!(p.support_end() <= -to_double(d.wrapping[i]))) {
      std::ostringstream msg;
      msg << "nu support must stay below -kappa_" << i + 1;
      issue(msg.str());
    }
  }
  return diag;
}

namespace {

void enumerate_families(const divisor::DivisorModel& d, const NuProfile& p, double lambda,
                        const AxisSolutionSet& axis, divisor::Stratum stratum,
                        double max_total_action, std::vector<OrbitFamily>& out) {
  const std::vector<int> indices = divisor::stratum_indices(stratum);
  const std::size_t l = indices.size();
  std::vector<std::size_t> choice(l, 0);
  if (axis.solutions.empty()) return;
  while (true) {
    OrbitFamily fam;
    fam.stratum = stratum;
    fam.windings.reserve(l);
    fam.radii.reserve(l);
    for (std::size_t j = 0; j < l; ++j) {
      fam.windings.push_back(axis.solutions[choice[j]].winding);
      fam.radii.push_back(axis.solutions[choice[j]].radius);
    }
    fam.action = action(fam, p, d, lambda);
    if (fam.action <= max_total_action) out.push_back(std::move(fam));

    std::size_t pos = 0;
    while (pos < l) {
      if (++choice[pos] < axis.solutions.size()) break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == l) break;
  }
}

}  // namespace

OrbitCensus census(const divisor::DivisorModel& d, const NuProfile& p, double lambda,
                   const CensusOptions& opts) {
  if (const auto diag = divisor::validate(d); !diag.ok) {
    throw std::invalid_argument("invalid divisor model: " + diag.issues.front());
  }
  if (const auto diag = check_compatible(p, d); !diag.ok) {
    throw std::invalid_argument("profile incompatible with model: " + diag.issues.front());
  }

  OrbitCensus out;
  out.axis = axis_solutions(p, lambda);
  out.lambda = out.axis.lambda;
  // Unlike divisor::depth_d this tolerates an empty divisor (the census is
  // then the constant M_H and no polynomial bound is asserted).
  out.depth = 0;
  for (divisor::Stratum s : d.strata) out.depth = std::max(out.depth, divisor::stratum_size(s));

  const std::size_t n_sol = out.axis.solutions.size();
  out.per_axis_bound_satisfied =
      static_cast<std::int64_t>(n_sol) <= per_axis_bound(p, out.lambda);

  // Per-component action contribution of every axis solution; families are
  // products, so stratum extremes split into per-axis extremes.
  std::vector<std::vector<double>> contrib(d.k);
  std::vector<bool> small(n_sol);
  const double small_threshold = p.smallnu_threshold();
  for (std::size_t s = 0; s < n_sol; ++s) {
    small[s] = p.nu(out.axis.solutions[s].radius) <= small_threshold;
  }
  for (int i = 0; i < d.k; ++i) {
    contrib[i].resize(n_sol);
    const double kappa = to_double(d.wrapping[i]);
    for (std::size_t s = 0; s < n_sol; ++s) {
      const double r = out.axis.solutions[s].radius;
      contrib[i][s] =
          -out.lambda * p.nu(r) - (r * r + kappa) * kTwoPi * out.axis.solutions[s].winding;
    }
  }

  out.nondegenerate_count = d.morse_zero_region;
  bool have_family = false;
  for (divisor::Stratum stratum : d.strata) {
    if (stratum == 0) continue;
    StratumCensus sc;
    sc.stratum = stratum;
    const std::vector<int> indices = divisor::stratum_indices(stratum);
    const int l = static_cast<int>(indices.size());
    sc.family_count = n_sol == 0 ? 0 : ipow_checked(static_cast<std::int64_t>(n_sol), l);
    sc.orbit_count = checked_mul(sc.family_count, checked_mul(d.morse.at(stratum), 1LL << l));
    if (sc.family_count > 0) {
      double lo = 0.0, hi = 0.0, lo_small = 0.0;
      bool all_have_small = true;
      for (int idx : indices) {
        const auto& c = contrib[idx - 1];
        lo += *std::min_element(c.begin(), c.end());
        hi += *std::max_element(c.begin(), c.end());
        double cmin_small = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < n_sol; ++s) {
          if (small[s]) cmin_small = std::min(cmin_small, c[s]);
        }
        if (std::isinf(cmin_small)) {
          all_have_small = false;
        } else {
          lo_small += cmin_small;
        }
      }
      sc.min_action = lo;
      sc.max_action = hi;
      // Vacuously true when no all-small family exists for this stratum.
      sc.smallnu_positive = !all_have_small || lo_small > 0.0;
      if (!have_family) {
        out.min_action = lo;
        out.max_action = hi;
        have_family = true;
      } else {
        out.min_action = std::min(out.min_action, lo);
        out.max_action = std::max(out.max_action, hi);
      }
    }
    out.nondegenerate_count = checked_add(out.nondegenerate_count, sc.orbit_count);
    out.smallnu_positive = out.smallnu_positive && sc.smallnu_positive;
    out.strata.push_back(sc);
  }

  const bool filter_active = std::isfinite(opts.action_filter);
  if (opts.enumerate_families || filter_active) {
    std::int64_t total = 0;
    for (const auto& sc : out.strata) total = checked_add(total, sc.family_count);
    if (total > opts.family_cap) {
      std::ostringstream msg;
      msg << "family enumeration would produce " << total << " families (cap "
          << opts.family_cap << ")";
      throw std::length_error(msg.str());
    }
    const double max_action =
        filter_active ? opts.action_filter * out.lambda : std::numeric_limits<double>::infinity();
    for (const auto& sc : out.strata) {
      enumerate_families(d, p, out.lambda, out.axis, sc.stratum, max_action, out.families);
    }
    if (filter_active) {
      // Recompute the aggregates from the surviving families.
      out.nondegenerate_count = d.morse_zero_region;
      have_family = false;
      for (const OrbitFamily& fam : out.families) {
        const int l = divisor::stratum_size(fam.stratum);
        out.nondegenerate_count = checked_add(
            out.nondegenerate_count, checked_mul(d.morse.at(fam.stratum), 1LL << l));
        if (!have_family) {
          out.min_action = out.max_action = fam.action;
          have_family = true;
        } else {
          out.min_action = std::min(out.min_action, fam.action);
          out.max_action = std::max(out.max_action, fam.action);
        }
      }
      if (!have_family) out.min_action = out.max_action = 0.0;
    }
  }

  if (out.depth == 0) {
    out.count_bound = std::numeric_limits<double>::infinity();
    out.count_bound_satisfied = true;
  } else {
    out.count_bound = 2 * bound_constant(d) * std::pow(out.lambda, out.depth);
    out.count_bound_satisfied = static_cast<double>(out.nondegenerate_count) <= out.count_bound;
  }
  out.action_bound = out.lambda * action_bound_constant(p, d);
  out.action_bound_satisfied =
      !have_family || out.max_action <= out.action_bound * (1 + 1e-9) + 1e-12;
  return out;
}

std::vector<OrbitCensus> census_sweep(const divisor::DivisorModel& d, const NuProfile& p,
                                      const SweepOptions& opts) {
  if (!(opts.lambda_min > 0) || !(opts.lambda_min < opts.lambda_max) || opts.samples < 2) {
    throw std::invalid_argument("sweep needs 0 < lambda_min < lambda_max and >= 2 samples");
  }
  std::vector<double> grid(opts.samples);
  const double ratio = std::log(opts.lambda_max / opts.lambda_min);
  for (std::size_t j = 0; j < opts.samples; ++j) {
    grid[j] = opts.lambda_min * std::exp(ratio * static_cast<double>(j) /
                                         static_cast<double>(opts.samples - 1));
  }

  std::vector<OrbitCensus> result(opts.samples);
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t j = 0; j < opts.samples; ++j) result[j] = census(d, p, grid[j], opts.census);
    return result;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t j = next.fetch_add(1);
        if (j >= grid.size()) return;
        try {
          result[j] = census(d, p, grid[j], opts.census);
        } catch (...) {
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) throw std::runtime_error("census sweep failed on a grid point");
  return result;
}

fds::SampledGrowth counts_growth(const std::vector<OrbitCensus>& sweep) {
  fds::SampledGrowth growth;
  growth.samples.reserve(sweep.size());
  for (const OrbitCensus& c : sweep) {
    // Rational x with 2^-24 resolution; the fit only consumes log x.
    const Rat x(static_cast<long long>(std::llround(std::ldexp(c.lambda, 24))), 1LL << 24);
    growth.samples.push_back({x, Int(c.nondegenerate_count)});
  }
  return growth;
}

GrowthExponentReport growth_exponent(const divisor::DivisorModel& d, const NuProfile& p,
                                     const SweepOptions& opts,
                                     const fds::GammaOptions& gamma_opts) {
  if (!(opts.lambda_max >= 10 * opts.lambda_min)) {
    throw std::invalid_argument("growth exponent needs a lambda range of at least one decade");
  }
  GrowthExponentReport report;
  report.sweep = census_sweep(d, p, opts);
  for (divisor::Stratum s : d.strata) {
    report.expected_depth = std::max(report.expected_depth, divisor::stratum_size(s));
  }
  report.estimate = fds::fit_gamma(counts_growth(report.sweep), gamma_opts);
  return report;
}

std::int64_t cover_scale(std::int64_t census_count, int k) {
  if (k < 1) throw std::invalid_argument("cover degree must be >= 1");
  return checked_mul(census_count, k);
}

}  // namespace gammakit::ham
