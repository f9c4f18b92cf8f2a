#include "gammakit/divisor.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gammakit;
using namespace gammakit::divisor;

namespace {

// Full intersection simplex on k components in complex dimension n.
DivisorModel simplex_model(int n, int k) {
  DivisorModel d;
  d.n = n;
  d.k = k;
  d.epsilon = 0.45;
  for (Stratum s = 0; s < (Stratum(1) << k); ++s) {
    d.strata.push_back(s);
    if (s != 0) d.morse[s] = 2;
  }
  for (int i = 0; i < k; ++i) d.wrapping.push_back(Rat(-1, 2));
  d.morse_zero_region = 4;
  return d;
}

}  // namespace

TEST_CASE("depth_d reads the deepest stratum") {
  DivisorModel single;
  single.n = 3;
  single.k = 1;
  single.epsilon = 0.45;
  single.strata = {0, 1};
  single.wrapping = {Rat(-1, 2)};
  single.morse[1] = 3;
  REQUIRE(validate(single).ok);
  CHECK(depth_d(single) == 1);

  DivisorModel deep = simplex_model(4, 3);
  REQUIRE(validate(deep).ok);
  CHECK(depth_d(deep) == 3);

  // Full simplex on k = n components: the deepest stratum is a point.
  CHECK(depth_d(simplex_model(3, 3)) == 3);
}

TEST_CASE("depth_d rejects the empty divisor") {
  DivisorModel compact;
  compact.n = 2;
  compact.k = 0;
  compact.epsilon = 0.45;
  compact.strata = {0};
  CHECK_THROWS_AS(depth_d(compact), std::domain_error);
}

TEST_CASE("m_A is the minimum over supplied compactifications") {
  CompactificationSet set;
  set.models = {simplex_model(4, 2), simplex_model(4, 3)};
  CHECK(m_A(set) == 2);

  set.models = {simplex_model(4, 3)};
  CHECK(m_A(set) == 3);

  set.models = {simplex_model(4, 3), simplex_model(4, 3), simplex_model(4, 1)};
  CHECK(m_A(set) == 1);

  CHECK_THROWS_AS(m_A(CompactificationSet{}), std::invalid_argument);

  for (const DivisorModel& m : set.models) {
    CHECK(m_A(set) <= depth_d(m));
  }
}

TEST_CASE("validate flags downward-closure violations") {
  DivisorModel d;
  d.n = 3;
  d.k = 2;
  d.epsilon = 0.45;
  d.strata = {0, 0b11};  // {1,2} without {1} or {2}
  d.wrapping = {Rat(-1, 2), Rat(-1, 2)};
  d.morse[0b11] = 2;
  const Diagnostics diag = validate(d);
  CHECK_FALSE(diag.ok);
  bool found = false;
  for (const auto& issue : diag.issues) {
    if (issue.find("not downward closed") != std::string::npos) found = true;
  }
  CHECK(found);
}

TEST_CASE("validate flags nonnegative wrapping") {
  DivisorModel d = simplex_model(3, 2);
  d.wrapping[1] = 0;
  const Diagnostics diag = validate(d);
  CHECK_FALSE(diag.ok);
  bool found = false;
  for (const auto& issue : diag.issues) {
    if (issue.find("wrapping must be negative") != std::string::npos) found = true;
  }
  CHECK(found);
}

TEST_CASE("validate flags strata deeper than the dimension and missing morse data") {
  DivisorModel d = simplex_model(2, 3);  // {1,2,3} has size 3 > n = 2
  Diagnostics diag = validate(d);
  CHECK_FALSE(diag.ok);

  DivisorModel missing = simplex_model(3, 2);
  missing.morse.erase(0b01);
  diag = validate(missing);
  CHECK_FALSE(diag.ok);
}

TEST_CASE("depth is monotone under adding and removing strata") {
  DivisorModel d = simplex_model(4, 3);
  const int before = depth_d(d);

  // Removing the deepest stratum lowers the depth by one.
  DivisorModel shallower = d;
  shallower.strata.erase(
      std::remove(shallower.strata.begin(), shallower.strata.end(), Stratum(0b111)),
      shallower.strata.end());
  shallower.morse.erase(0b111);
  REQUIRE(validate(shallower).ok);
  CHECK(depth_d(shallower) == before - 1);

  // Adding strata can only deepen.
  CHECK(depth_d(d) >= depth_d(shallower));
}

TEST_CASE("stratum mask helpers") {
  CHECK(stratum_from_indices({1, 3}, 3) == 0b101);
  CHECK(stratum_indices(0b101) == std::vector<int>{1, 3});
  CHECK(stratum_size(0b111) == 3);
  CHECK_THROWS_AS(stratum_from_indices({4}, 3), std::invalid_argument);
}
