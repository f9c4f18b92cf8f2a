#include "gammakit/loopspace.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace gammakit;
using namespace gammakit::loops;

namespace {

TorusModel flat_torus(int n) {
  TorusModel t;
  t.n = n;
  t.metric.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) t.metric[i][i] = 1;
  return t;
}

}  // namespace

TEST_CASE("torus model validation") {
  CHECK_NOTHROW(flat_torus(2).validate());

  TorusModel bad = flat_torus(2);
  bad.metric[0][1] = 1;  // asymmetric
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  TorusModel indefinite = flat_torus(2);
  indefinite.metric[1][1] = -1;
  CHECK_THROWS_AS(indefinite.validate(), std::invalid_argument);

  TorusModel semidefinite = flat_torus(2);
  semidefinite.metric[0][1] = 1;
  semidefinite.metric[1][0] = 1;
  semidefinite.metric[1][1] = 1;  // determinant 0
  CHECK_THROWS_AS(semidefinite.validate(), std::invalid_argument);
}

TEST_CASE("torus counts: worked values") {
  // n=1, g=1, lambda=1: 2 * (2*1 + 1) = 6.
  CHECK(torus_a(flat_torus(1), Rat(1)) == Int(6));
  // lambda = 0: only the constant loops, one component, 2^n classes.
  CHECK(torus_a(flat_torus(1), Rat(0)) == Int(2));
  CHECK(torus_a(flat_torus(2), Rat(0)) == Int(4));
  CHECK(torus_a(flat_torus(3), Rat(0)) == Int(8));
  // n=2, lambda^4 = 2: nine lattice points of norm^2 <= 2.
  // lambda = 2^(1/4) is irrational; bracket it instead.
  TorusModel t2 = flat_torus(2);
  TorusModel scaled = t2;
  scaled.metric[0][0] = scaled.metric[1][1] = Rat(1, 2);  // v^T g v <= 1 <=> |v|^2 <= 2
  CHECK(torus_a(scaled, Rat(1)) == Int(4 * 9));
}

TEST_CASE("torus counts agree with the exact box oracle") {
  TorusModel skew = flat_torus(2);
  skew.metric[0][0] = Rat(2);
  skew.metric[0][1] = skew.metric[1][0] = Rat(1, 2);
  skew.metric[1][1] = Rat(3, 2);
  skew.validate();
  for (int lambda = 1; lambda <= 4; ++lambda) {
    CAPTURE(lambda);
    CHECK(torus_a(skew, Rat(lambda)) == oracle::lattice_count_box(skew, Rat(lambda), 40));
  }
}

namespace {

// Norms q(v) <= bound of a one- or two-dimensional factor, enumerated
// independently of the library path.
std::vector<Rat> factor_norms(const std::vector<std::vector<Rat>>& g, const Rat& bound,
                              std::int64_t box) {
  const int n = static_cast<int>(g.size());
  std::vector<Rat> norms;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      Rat q = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) q += g[i][j] * Rat(v[i]) * Rat(v[j]);
      }
      if (q <= bound) norms.push_back(q);
      return;
    }
    for (std::int64_t x = -box; x <= box; ++x) {
      v[static_cast<std::size_t>(depth)] = x;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return norms;
}

}  // namespace

TEST_CASE("torus counts are non-decreasing and split over metric blocks") {
  // Block-diagonal metric: every lattice vector is a pair (v1, v2) with
  // q(v) = q1(v1) + q2(v2), so the count is the convolution of the factor
  // norm lists, scaled by 2^n.
  TorusModel block = flat_torus(2);
  block.metric[0][0] = Rat(1);
  block.metric[1][1] = Rat(3);

  Int prev = -1;
  for (int lambda = 0; lambda <= 5; ++lambda) {
    const Rat bound = Rat(lambda) * lambda * lambda * lambda;
    const Int count = torus_a(block, Rat(lambda));
    CHECK(count >= prev);
    prev = count;

    const auto left = factor_norms({{Rat(1)}}, bound, 30);
    const auto right = factor_norms({{Rat(3)}}, bound, 30);
    Int pairs = 0;
    for (const Rat& a : left) {
      for (const Rat& b : right) {
        if (a + b <= bound) ++pairs;
      }
    }
    CHECK(count == pairs << 2);
  }

  // Three-dimensional block check at small scale: 2 + 1 split.
  TorusModel block3 = flat_torus(3);
  block3.metric[2][2] = Rat(2);
  const Rat bound = Rat(16);
  const auto plane = factor_norms({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, bound, 8);
  const auto line = factor_norms({{Rat(2)}}, bound, 8);
  Int pairs = 0;
  for (const Rat& a : plane) {
    for (const Rat& b : line) {
      if (a + b <= bound) ++pairs;
    }
  }
  CHECK(torus_a(block3, Rat(2)) == pairs << 3);
}

TEST_CASE("fitted torus growth is 2n") {
  const std::vector<Rat> grid = rational_grid(Rat(5), Rat(50), 32);

  const auto g1 = torus_gamma(flat_torus(1), grid);
  REQUIRE(g1.cls == fds::GammaClass::finite);
  CHECK(g1.value == doctest::Approx(2.0).epsilon(0.1));

  const auto g2 = torus_gamma(flat_torus(2), grid);
  CHECK(g2.value == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("metric rescaling is a reindexing: fitted gamma unchanged") {
  const std::vector<Rat> grid = rational_grid(Rat(5), Rat(50), 32);
  TorusModel base = flat_torus(2);
  TorusModel rescaled = flat_torus(2);
  rescaled.metric[0][0] = rescaled.metric[1][1] = Rat(4);
  const double a = torus_gamma(base, grid).value;
  const double b = torus_gamma(rescaled, grid).value;
  CHECK(a == doctest::Approx(b).epsilon(0.0125));  // within 0.05 of 4
}

TEST_CASE("pi1 lower bound reindexes conjugacy counts") {
  std::vector<std::int64_t> constant(16, 3);
  const auto flat = fds::fit_gamma(pi1_lower_bound(constant, Rat(2), Rat(1)));
  REQUIRE(flat.cls == fds::GammaClass::finite);
  CHECK(flat.value == doctest::Approx(0.0).epsilon(0.01));

  std::vector<std::int64_t> quadratic;
  for (int i = 1; i <= 32; ++i) quadratic.push_back(static_cast<std::int64_t>(i) * i);
  const auto one = fds::fit_gamma(pi1_lower_bound(quadratic, Rat(2), Rat(1)));
  const auto two = fds::fit_gamma(pi1_lower_bound(quadratic, Rat(4), Rat(2)));
  CHECK(one.value == doctest::Approx(2.0).epsilon(0.01));
  // Doubling C+P leaves the fit unchanged.
  CHECK(one.value == doctest::Approx(two.value).epsilon(0.0125));

  CHECK_THROWS_AS(pi1_lower_bound(constant, Rat(0), Rat(1)), std::invalid_argument);
}

TEST_CASE("abelian conjugacy growth bounds torus growth") {
  // Gamma^cong(Z^n) fitted from abelian counts is n, below the torus 2n.
  // Desk model for Z: r_i = 2i + 1 words of length <= i up to conjugacy.
  std::vector<std::int64_t> z_counts;
  for (int i = 1; i <= 32; ++i) z_counts.push_back(2 * i + 1);
  const auto lower = fds::fit_gamma(pi1_lower_bound(z_counts, Rat(1), Rat(1)));
  const std::vector<Rat> grid = rational_grid(Rat(5), Rat(50), 32);
  const auto torus = torus_gamma(flat_torus(1), grid);
  REQUIRE(lower.cls == fds::GammaClass::finite);
  REQUIRE(torus.cls == fds::GammaClass::finite);
  CHECK(lower.value < torus.value);
  CHECK(lower.value == doctest::Approx(1.0).epsilon(0.05));
}
