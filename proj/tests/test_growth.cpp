#include "gammakit/growth.hpp"

#include <doctest.h>

#include <cmath>

using namespace gammakit;
using namespace gammakit::fds;

namespace {

SampledGrowth power_growth(int degree, long long xmax) {
  SampledGrowth g;
  g.samples.reserve(static_cast<std::size_t>(xmax));
  for (long long x = 1; x <= xmax; ++x) {
    Int count = 1;
    for (int d = 0; d < degree; ++d) count *= x;
    g.samples.push_back({Rat(x), count});
  }
  return g;
}

}  // namespace

TEST_CASE("polynomial growth fits its degree") {
  for (int degree : {0, 1, 2, 3}) {
    const GammaEstimate est = fit_gamma(power_growth(degree, 2000));
    REQUIRE(est.cls == GammaClass::finite);
    CHECK(est.value == doctest::Approx(degree).epsilon(0.01));
  }
}

TEST_CASE("exponential growth reports +infinity") {
  SampledGrowth g;
  Int count = 1;
  for (long long x = 1; x <= 600; ++x) {
    count <<= 1;
    g.samples.push_back({Rat(x), count});
  }
  const GammaEstimate est = fit_gamma(g);
  CHECK(est.cls == GammaClass::pos_infinity);
  CHECK(est.slope > 50);
}

TEST_CASE("zero tail reports -infinity") {
  SampledGrowth g;
  for (long long x = 1; x <= 64; ++x) g.samples.push_back({Rat(x), Int(0)});
  CHECK(fit_gamma(g).cls == GammaClass::neg_infinity);
}

TEST_CASE("reindexing a'(x) = A a(Bx) leaves the fit unchanged") {
  const SampledGrowth base = power_growth(2, 3000);
  for (int a : {1, 2, 3}) {
    for (int b : {1, 2, 4}) {
      SampledGrowth re;
      for (const auto& s : base.samples) {
        const Rat x = s.x / b;
        if (x < 1) continue;
        re.samples.push_back({x, Int(a) * s.count});
      }
      const double fitted = fit_gamma(re).value;
      CHECK(fitted == doctest::Approx(fit_gamma(base).value).epsilon(0.025));
    }
  }
}

TEST_CASE("window precondition") {
  SampledGrowth g;
  for (long long x = 1; x <= 10; ++x) g.samples.push_back({Rat(x), Int(x)});
  CHECK_THROWS_AS(fit_gamma(g), std::invalid_argument);  // window of 5 < 8
  GammaOptions opts;
  opts.window_fraction = 1.0;
  CHECK_NOTHROW(fit_gamma(g, opts));
}

TEST_CASE("sample validation") {
  SampledGrowth g;
  g.samples.push_back({Rat(2), Int(1)});
  g.samples.push_back({Rat(2), Int(1)});
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.samples[1].x = Rat(1, 2);
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("threshold is configurable") {
  // Slope ~ 8 on this window: finite under the default, +inf under a low bar.
  SampledGrowth g;
  for (long long x = 1; x <= 40; ++x) {
    Int c = 1;
    c <<= static_cast<unsigned>(x);
    g.samples.push_back({Rat(x), c});
  }
  CHECK(fit_gamma(g).cls == GammaClass::finite);
  GammaOptions tight;
  tight.inf_threshold = 4.0;
  CHECK(fit_gamma(g, tight).cls == GammaClass::pos_infinity);
}
