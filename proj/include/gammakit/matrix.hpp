#pragma once

#include "gammakit/rational.hpp"

#include <cstddef>
#include <vector>

namespace gammakit {

// Coefficient field for rank computations. Matrices are always stored over
// the rationals; the prime option reduces mod p for speed on large suites.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::int64_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::int64_t p);
};

// Dense matrix over the exact rationals. Zero-dimensional shapes are legal
// and stand for maps to or from the zero space.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static MatQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const MatQ& other) const = default;

  // this ∘ rhs as linear maps (usual row-by-column product).
  MatQ operator*(const MatQ& rhs) const;

  bool is_zero() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

// Rank of m reduced mod p. Throws std::domain_error when a denominator
// vanishes mod p (pick a different prime).
std::size_t rank_mod_p(const MatQ& m, std::int64_t p);

std::size_t rank_in(const MatQ& m, const Field& field);

}  // namespace gammakit
