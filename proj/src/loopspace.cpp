#include "gammakit/loopspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gammakit::loops {

namespace {

// Determinant of the leading principal j x j block, exact.
Rat leading_minor(const std::vector<std::vector<Rat>>& g, int j) {
  std::vector<std::vector<Rat>> w(g.begin(), g.begin() + j);
  for (auto& row : w) row.resize(static_cast<std::size_t>(j));
  Rat det = 1;
  for (int col = 0; col < j; ++col) {
    int pivot = col;
    while (pivot < j && w[pivot][col] == 0) ++pivot;
    if (pivot == j) return 0;
    if (pivot != col) {
      std::swap(w[pivot], w[col]);
      det = -det;
    }
    det *= w[col][col];
    const Rat inv = Rat(1) / w[col][col];
    for (int i = col + 1; i < j; ++i) {
      const Rat f = w[i][col] * inv;
      for (int c = col; c < j; ++c) w[i][c] -= f * w[col][c];
    }
  }
  return det;
}

}  // namespace

void TorusModel::validate() const {
  if (n < 1) throw std::invalid_argument("torus dimension must be positive");
  if (metric.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("metric must be n x n");
  }
  for (const auto& row : metric) {
    if (row.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("metric must be n x n");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (metric[i][j] != metric[j][i]) throw std::invalid_argument("metric must be symmetric");
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (!(leading_minor(metric, j) > 0)) {
      throw std::invalid_argument("metric must be positive definite (leading minor check)");
    }
  }
}

namespace {

struct IntQuadratic {
  int n = 0;
  std::vector<std::int64_t> g;  // D * metric, row-major integers
  Int scale;                    // D
};

IntQuadratic integerize(const TorusModel& t) {
  Int d = 1;
  for (const auto& row : t.metric) {
    for (const Rat& x : row) {
      const Int den = boost::multiprecision::denominator(x);
      d = boost::multiprecision::lcm(d, den);
    }
  }
  IntQuadratic q;
  q.n = t.n;
  q.scale = d;
  q.g.reserve(static_cast<std::size_t>(t.n) * t.n);
  for (const auto& row : t.metric) {
    for (const Rat& x : row) {
      const Rat scaled = x * Rat(d);
      q.g.push_back(boost::multiprecision::numerator(scaled).convert_to<std::int64_t>());
    }
  }
  return q;
}

// Box bound per coordinate: v_i^2 <= R * (g^{-1})_{ii}.
std::vector<std::int64_t> box_bounds(const TorusModel& t, const Rat& radius_sq) {
  const int n = t.n;
  // Invert the metric exactly.
  std::vector<std::vector<Rat>> w = t.metric;
  std::vector<std::vector<Rat>> inv(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (w[pivot][col] == 0) ++pivot;
    std::swap(w[pivot], w[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat d = w[col][col];
    for (int c = 0; c < n; ++c) {
      w[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || w[i][col] == 0) continue;
      const Rat f = w[i][col];
      for (int c = 0; c < n; ++c) {
        w[i][c] -= f * w[col][c];
        inv[i][c] -= f * inv[col][c];
      }
    }
  }
  std::vector<std::int64_t> bounds(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double b = std::sqrt(std::max(0.0, to_double(radius_sq * inv[i][i])));
    bounds[i] = static_cast<std::int64_t>(std::floor(b)) + 1;
  }
  return bounds;
}

}  // namespace

std::vector<Int> torus_counts(const TorusModel& t, const std::vector<Rat>& lambdas) {
  t.validate();
  for (const Rat& l : lambdas) {
    if (l < 0) throw std::invalid_argument("lambda must be nonnegative");
  }
  std::vector<Rat> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());

  const IntQuadratic q = integerize(t);
  const Rat rmax = sorted.empty() ? Rat(0) : sorted.back() * sorted.back() * sorted.back() *
                                                 sorted.back();
  // Integer thresholds: v^T (D g) v <= floor(D * lambda^4).
  std::vector<Int> thresholds;
  thresholds.reserve(sorted.size());
  for (const Rat& l : sorted) {
    const Rat scaled = Rat(q.scale) * l * l * l * l;
    thresholds.push_back(boost::multiprecision::numerator(scaled) /
                         boost::multiprecision::denominator(scaled));
  }

  std::vector<std::int64_t> counts(sorted.size(), 0);
  const std::vector<std::int64_t> bounds = box_bounds(t, rmax);
  const int n = q.n;

  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  // Largest threshold as int64 if possible, for the fast comparison path.
  const bool fits64 = thresholds.empty() ||
                      thresholds.back() <= Int(std::numeric_limits<std::int64_t>::max() / 4);
  if (!fits64) throw std::length_error("lattice threshold too large for enumeration");
  std::vector<std::int64_t> th64(thresholds.size());
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    th64[i] = thresholds[i].convert_to<std::int64_t>();
  }
  std::int64_t max_entry = 1, max_bound = 1;
  for (std::int64_t e : q.g) max_entry = std::max(max_entry, std::abs(e));
  for (std::int64_t b : bounds) max_bound = std::max(max_bound, b);
  if (max_entry > std::numeric_limits<std::int64_t>::max() / (max_bound * max_bound) /
                      (static_cast<std::int64_t>(n) * n)) {
    throw std::length_error("lattice norm would overflow; rescale the metric");
  }

  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      std::int64_t norm = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) norm += q.g[static_cast<std::size_t>(i) * n + j] * v[i] * v[j];
      }
      // First grid value admitting this vector.
      const auto it = std::lower_bound(th64.begin(), th64.end(), norm);
      if (it != th64.end()) counts[static_cast<std::size_t>(it - th64.begin())] += 1;
      return;
    }
    for (std::int64_t x = -bounds[depth]; x <= bounds[depth]; ++x) {
      v[static_cast<std::size_t>(depth)] = x;
      self(self, depth + 1);
    }
  };
  if (!sorted.empty()) recurse(recurse, 0);

  // Prefix-sum the histogram, then scale by 2^n per component.
  std::vector<Int> out_sorted(sorted.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    acc += counts[i];
    out_sorted[i] = Int(acc) << n;
  }

  // Map back to the caller's order.
  std::vector<Int> out(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), lambdas[i]);
    out[i] = out_sorted[static_cast<std::size_t>(it - sorted.begin())];
  }
  return out;
}

Int torus_a(const TorusModel& t, const Rat& lambda) {
  return torus_counts(t, {lambda}).front();
}

fds::SampledGrowth torus_growth(const TorusModel& t, const std::vector<Rat>& lambdas) {
  std::vector<Rat> grid = lambdas;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (!grid.empty() && grid.front() < 1) {
    throw std::invalid_argument("torus growth needs lambda >= 1");
  }
  const std::vector<Int> counts = torus_counts(t, grid);
  fds::SampledGrowth growth;
  growth.samples.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    growth.samples.push_back({grid[i], counts[i]});
  }
  return growth;
}

fds::GammaEstimate torus_gamma(const TorusModel& t, const std::vector<Rat>& lambdas,
                               const fds::GammaOptions& opts) {
  return fds::fit_gamma(torus_growth(t, lambdas), opts);
}

std::vector<Rat> rational_grid(const Rat& lo, const Rat& hi, std::size_t samples) {
  if (samples < 2 || !(lo < hi)) throw std::invalid_argument("grid needs lo < hi, >= 2 samples");
  std::vector<Rat> grid;
  grid.reserve(samples);
  const Rat step = (hi - lo) / Rat(static_cast<long long>(samples - 1));
  for (std::size_t i = 0; i < samples; ++i) grid.push_back(lo + step * Rat(static_cast<long long>(i)));
  return grid;
}

fds::SampledGrowth pi1_lower_bound(const std::vector<std::int64_t>& r, const Rat& generator_bound,
                                   const Rat& connecting_bound) {
  if (!(generator_bound > 0) || !(connecting_bound > 0)) {
    throw std::invalid_argument("pi1 lower bound needs positive length constants");
  }
  const Rat scale = generator_bound + connecting_bound;
  fds::SampledGrowth growth;
  growth.samples.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    growth.samples.push_back({scale * Rat(static_cast<long long>(i + 1)), Int(r[i])});
  }
  return growth;
}

}  // namespace gammakit::loops
