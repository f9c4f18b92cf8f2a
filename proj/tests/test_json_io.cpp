#include "gammakit/json_io.hpp"

#include "gammakit/fds_random.hpp"

#include <doctest.h>

#include <random>

using namespace gammakit;

TEST_CASE("FDS exchange format round-trips bit-exactly") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const fds::FiniteFDS f = fds::random_fds(rng);
    const auto j = io::to_json(f);
    const fds::FiniteFDS back = io::fds_from_json(j);
    CHECK(back.breakpoints == f.breakpoints);
    CHECK(back.dims == f.dims);
    CHECK(back.stable_tail == f.stable_tail);
    REQUIRE(back.transitions.size() == f.transitions.size());
    for (std::size_t i = 0; i < f.transitions.size(); ++i) {
      CHECK(back.transitions[i] == f.transitions[i]);
    }
    // Serialized form is stable under a second pass.
    CHECK(io::to_json(back) == j);
  }
}

TEST_CASE("morphism and growth round-trips") {
  std::mt19937_64 rng(5);
  const fds::IsomorphicPair pair = fds::random_isomorphic_pair(rng);
  const auto j = io::to_json(pair.phi);
  const fds::FDSMorphism back = io::morphism_from_json(j);
  CHECK(back.scale == pair.phi.scale);
  REQUIRE(back.maps.size() == pair.phi.maps.size());
  for (std::size_t i = 0; i < back.maps.size(); ++i) CHECK(back.maps[i] == pair.phi.maps[i]);

  fds::SampledGrowth g;
  g.samples = {{Rat(1), Int(0)}, {Rat(5, 2), Int("123456789012345678901234567890")}};
  const fds::SampledGrowth g2 = io::growth_from_json(io::to_json(g));
  CHECK(g2.samples[1].count == g.samples[1].count);
  CHECK(g2.samples[1].x == g.samples[1].x);
}

TEST_CASE("divisor model round-trip preserves rationals and morse table") {
  divisor::DivisorModel d;
  d.n = 3;
  d.k = 2;
  d.epsilon = 0.45;
  d.strata = {0b00, 0b01, 0b10, 0b11};
  d.wrapping = {Rat(-1, 2), Rat(-7, 3)};
  d.morse[0b01] = 4;
  d.morse[0b10] = 4;
  d.morse[0b11] = 2;
  d.morse_zero_region = 6;

  const auto j = io::to_json(d);
  const divisor::DivisorModel back = io::divisor_from_json(j);
  CHECK(back.n == d.n);
  CHECK(back.k == d.k);
  CHECK(back.wrapping == d.wrapping);
  CHECK(back.morse == d.morse);
  CHECK(back.morse_zero_region == d.morse_zero_region);
  CHECK(io::to_json(back) == j);
}

TEST_CASE("profile, torus, and group round-trips") {
  const ham::NuProfile p = ham::NuProfile::make_default();
  const ham::NuProfile p2 = io::profile_from_json(io::profile_to_json(p));
  CHECK(p2.epsilon() == p.epsilon());
  CHECK(p2.support_end() == p.support_end());

  loops::TorusModel t;
  t.n = 2;
  t.metric = {{Rat(2), Rat(1, 2)}, {Rat(1, 2), Rat(3, 2)}};
  const loops::TorusModel t2 = io::torus_from_json(io::to_json(t));
  CHECK(t2.metric == t.metric);

  const conj::FiniteGroupTable g = conj::FiniteGroupTable::cyclic(4);
  const conj::FiniteGroupTable g2 = io::group_from_json(io::to_json(g));
  CHECK(g2.table == g.table);
  CHECK(g2.identity == g.identity);
}

TEST_CASE("malformed inputs raise parse diagnostics") {
  CHECK_THROWS(io::fds_from_json(nlohmann::json::parse(R"({"breakpoints": ["1"]})")));
  CHECK_THROWS_AS(io::mat_from_json(nlohmann::json::parse(
                      R"({"rows": 2, "cols": 2, "entries": ["1"]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::growth_from_json(nlohmann::json::parse(R"({"samples": [["2/0", "1"]]})")),
                  std::invalid_argument);
}

TEST_CASE("census report rows carry the documented fields") {
  divisor::DivisorModel d;
  d.n = 2;
  d.k = 1;
  d.epsilon = 0.45;
  d.strata = {0, 1};
  d.wrapping = {Rat(-1, 2)};
  d.morse[1] = 4;
  d.morse_zero_region = 6;
  const ham::NuProfile p = ham::NuProfile::make_default();
  const ham::OrbitCensus c = ham::census(d, p, 20.0);

  const auto row = io::census_row_json(c);
  for (const char* field :
       {"lambda", "families_by_depth", "nondegenerate_count", "min_action", "max_action",
        "count_bound", "bound_satisfied", "per_axis_count", "per_axis_ok", "action_bound",
        "action_bound_ok", "smallnu_positive"}) {
    CAPTURE(field);
    CHECK(row.contains(field));
  }

  const std::string csv = io::census_csv({c});
  CHECK(csv.find("lambda,families_depth_1,") == 0);
  CHECK(csv.find("\n") != std::string::npos);
}
