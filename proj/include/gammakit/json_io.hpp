#pragma once

#include "gammakit/conjugacy.hpp"
#include "gammakit/divisor.hpp"
#include "gammakit/fds.hpp"
#include "gammakit/hamiltonian.hpp"
#include "gammakit/loopspace.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gammakit::io {

using ordered_json = nlohmann::ordered_json;

// Exchange formats. Rationals travel as "p/q" strings and round-trip
// bit-exactly; counts that can outgrow 64 bits travel as decimal strings.

ordered_json to_json(const MatQ& m);
MatQ mat_from_json(const nlohmann::json& j);

ordered_json to_json(const fds::FiniteFDS& f);
fds::FiniteFDS fds_from_json(const nlohmann::json& j);

ordered_json to_json(const fds::FDSMorphism& m);
fds::FDSMorphism morphism_from_json(const nlohmann::json& j);

ordered_json to_json(const fds::SampledGrowth& g);
fds::SampledGrowth growth_from_json(const nlohmann::json& j);

ordered_json to_json(const divisor::DivisorModel& d);
divisor::DivisorModel divisor_from_json(const nlohmann::json& j);

ordered_json profile_to_json(const ham::NuProfile& p);
ham::NuProfile profile_from_json(const nlohmann::json& j);

ordered_json to_json(const loops::TorusModel& t);
loops::TorusModel torus_from_json(const nlohmann::json& j);

ordered_json to_json(const conj::FiniteGroupTable& g);
conj::FiniteGroupTable group_from_json(const nlohmann::json& j);

ordered_json gamma_to_json(const fds::GammaEstimate& e);

// Census report rows (External interface: per-lambda family counts by
// stratum depth, nondegenerate count, action range, bound and flags).
ordered_json census_row_json(const ham::OrbitCensus& c);
std::string census_csv(const std::vector<ham::OrbitCensus>& sweep);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gammakit::io
