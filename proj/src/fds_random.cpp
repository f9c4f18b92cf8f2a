#include "gammakit/fds_random.hpp"

#include <stdexcept>

namespace gammakit::fds {

namespace {

MatQ random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> entry(-range, range);
  MatQ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

// Product of elementary row operations, so always invertible.
MatQ random_invertible(std::mt19937_64& rng, std::size_t n) {
  MatQ m = MatQ::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) j = (j + 1) % n;
    const int c = coeff(rng);
    if (c == 0) continue;
    for (std::size_t k = 0; k < n; ++k) m(i, k) += Rat(c) * m(j, k);
  }
  return m;
}

MatQ inverse(const MatQ& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
  MatQ w = m;
  MatQ inv = MatQ::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(w(col, j), w(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    const Rat d = w(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w(i, col) == 0) continue;
      const Rat f = w(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<MatQ> random_bases(std::mt19937_64& rng, const std::vector<std::size_t>& dims) {
  std::vector<MatQ> bases;
  bases.reserve(dims.size());
  for (std::size_t d : dims) bases.push_back(random_invertible(rng, d));
  return bases;
}

FiniteFDS conjugate_system(const FiniteFDS& base, const std::vector<MatQ>& bases,
                           const Rat& grid_scale) {
  FiniteFDS out;
  out.stable_tail = base.stable_tail;
  out.dims = base.dims;
  out.breakpoints.reserve(base.count());
  for (const Rat& x : base.breakpoints) out.breakpoints.push_back(grid_scale * x);
  out.transitions.reserve(base.transitions.size());
  for (std::size_t i = 0; i < base.transitions.size(); ++i) {
    out.transitions.push_back(bases[i + 1] * base.transitions[i] * inverse(bases[i]));
  }
  return out;
}

// Morphism between two conjugated copies of the same base system whose
// underlying map is the base directed-system map x -> x_target.
FDSMorphism dressed_shift(const FiniteFDS& base, const std::vector<MatQ>& from_bases,
                          const std::vector<MatQ>& to_bases, const Rat& scale) {
  FDSMorphism m;
  m.scale = scale;
  m.maps.reserve(base.count());
  for (std::size_t i = 0; i < base.count(); ++i) {
    const std::size_t target = base.locate(scale * base.breakpoints[i]);
    m.maps.push_back(to_bases[target] * evaluate_by_index(base, i, target) *
                     inverse(from_bases[i]));
  }
  return m;
}

}  // namespace

FiniteFDS random_fds(std::mt19937_64& rng, const RandomFDSParams& params) {
  if (params.breakpoints == 0) throw std::invalid_argument("need at least one breakpoint");
  std::uniform_int_distribution<int> step(1, 3);
  std::uniform_int_distribution<std::size_t> dim(1, params.max_dim);

  FiniteFDS f;
  f.breakpoints.reserve(params.breakpoints);
  Rat x = 1;
  for (std::size_t i = 0; i < params.breakpoints; ++i) {
    f.breakpoints.push_back(x);
    x += Rat(step(rng), 2);
  }
  f.dims.reserve(params.breakpoints);
  for (std::size_t i = 0; i < params.breakpoints; ++i) f.dims.push_back(dim(rng));
  for (std::size_t i = 0; i + 1 < params.breakpoints; ++i) {
    f.transitions.push_back(random_matrix(rng, f.dims[i + 1], f.dims[i], params.entry_range));
  }
  f.stable_tail = true;
  f.validate();
  return f;
}

IsomorphicPair random_isomorphic_pair(std::mt19937_64& rng, const RandomFDSParams& params) {
  IsomorphicPair pair;
  pair.from = random_fds(rng, params);
  std::uniform_int_distribution<int> factor(1, 3);
  const Rat b = factor(rng);
  const std::vector<MatQ> bases = random_bases(rng, pair.from.dims);
  pair.to = conjugate_system(pair.from, bases, b);

  pair.phi.scale = b;  // V_{x_i} lands exactly on the scaled grid point
  for (std::size_t i = 0; i < pair.from.count(); ++i) pair.phi.maps.push_back(bases[i]);

  pair.phi_back.scale = 1;
  for (std::size_t i = 0; i < pair.to.count(); ++i) {
    const std::size_t j = pair.from.locate(pair.to.breakpoints[i]);
    pair.phi_back.maps.push_back(evaluate_by_index(pair.from, i, j) * inverse(bases[i]));
  }
  return pair;
}

SandwichInstance random_sandwich_instance(std::mt19937_64& rng, const RandomFDSParams& params) {
  const FiniteFDS base = random_fds(rng, params);
  std::uniform_int_distribution<int> factor(1, 2);
  const Rat c1 = factor(rng), c2 = factor(rng), c3 = factor(rng);
  const Rat d1 = factor(rng), d2 = factor(rng);

  std::array<std::vector<MatQ>, 4> bases;
  for (auto& b : bases) b = random_bases(rng, base.dims);

  SandwichInstance inst;
  for (std::size_t j = 0; j < 4; ++j) inst.systems[j] = conjugate_system(base, bases[j], 1);
  inst.u[0] = dressed_shift(base, bases[0], bases[1], c1);
  inst.u[1] = dressed_shift(base, bases[1], bases[2], c2);
  inst.u[2] = dressed_shift(base, bases[2], bases[3], c3);
  inst.b1 = dressed_shift(base, bases[2], bases[0], d1);
  inst.b2 = dressed_shift(base, bases[3], bases[1], d2);
  return inst;
}

bool corrupt_one_entry(std::mt19937_64& rng, FDSMorphism& m) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < m.maps.size(); ++i) {
    if (m.maps[i].rows() > 0 && m.maps[i].cols() > 0) candidates.push_back(i);
  }
  if (candidates.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  MatQ& target = m.maps[candidates[pick(rng)]];
  std::uniform_int_distribution<std::size_t> row(0, target.rows() - 1);
  std::uniform_int_distribution<std::size_t> col(0, target.cols() - 1);
  target(row(rng), col(rng)) += Rat(7, 3);
  return true;
}

}  // namespace gammakit::fds
