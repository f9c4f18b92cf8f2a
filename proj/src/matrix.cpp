#include "gammakit/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gammakit {

Field Field::prime(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be a prime >= 2");
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
  }
  Field f;
  f.kind = Kind::prime;
  f.p = p;
  return f;
}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::operator*(const MatQ& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  MatQ out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& lik = (*this)(i, k);
      if (lik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rat& rkj = rhs(k, j);
        if (rkj == 0) continue;
        out(i, j) += lik * rkj;
      }
    }
  }
  return out;
}

bool MatQ::is_zero() const {
  for (const Rat& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

std::size_t MatQ::rank() const {
  MatQ w = *this;
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < w.cols_ && row < w.rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < w.rows_ && w(pivot, col) == 0) ++pivot;
    if (pivot == w.rows_) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < w.cols_; ++j) std::swap(w(row, j), w(pivot, j));
    }
    const Rat inv = Rat(1) / w(row, col);
    for (std::size_t i = row + 1; i < w.rows_; ++i) {
      if (w(i, col) == 0) continue;
      const Rat factor = w(i, col) * inv;
      w(i, col) = 0;
      for (std::size_t j = col + 1; j < w.cols_; ++j) {
        w(i, j) -= factor * w(row, j);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  __int128 acc = 1;
  __int128 b = base % p;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t reduce_rat(const Rat& x, std::int64_t p) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  const std::int64_t n = static_cast<std::int64_t>(((num % p) + p) % p);
  const std::int64_t d = static_cast<std::int64_t>(den % p);
  if (d == 0) throw std::domain_error("denominator vanishes mod p; choose another prime");
  return static_cast<std::int64_t>(static_cast<__int128>(n) * mod_pow(d, p - 2, p) % p);
}

}  // namespace

std::size_t rank_mod_p(const MatQ& m, std::int64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> w(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) w[i * cols + j] = reduce_rat(m(i, j), p);
  }
  std::size_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && w[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(w[row * cols + j], w[pivot * cols + j]);
    }
    const std::int64_t inv = mod_pow(w[row * cols + col], p - 2, p);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (w[i * cols + col] == 0) continue;
      const std::int64_t f =
          static_cast<std::int64_t>(static_cast<__int128>(w[i * cols + col]) * inv % p);
      for (std::size_t j = col; j < cols; ++j) {
        const __int128 v = w[i * cols + j] - static_cast<__int128>(f) * w[row * cols + j] % p;
        w[i * cols + j] = static_cast<std::int64_t>((v % p + p) % p);
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::size_t rank_in(const MatQ& m, const Field& field) {
  if (field.kind == Field::Kind::prime) return rank_mod_p(m, field.p);
  return m.rank();
}

}  // namespace gammakit
