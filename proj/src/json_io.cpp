#include "gammakit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gammakit::io {

namespace {

Rat rat_field(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw std::invalid_argument("expected a rational string or integer");
}

Int int_field(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw std::invalid_argument("expected an integer or integer string");
}

}  // namespace

ordered_json to_json(const MatQ& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(format_rational(m(i, c)));
  }
  j["entries"] = std::move(entries);
  return j;
}

MatQ mat_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("matrix entries length must equal rows*cols");
  }
  MatQ m(rows, cols);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_field(entries[idx++]);
  }
  return m;
}

ordered_json to_json(const fds::FiniteFDS& f) {
  ordered_json j;
  ordered_json bp = ordered_json::array();
  for (const Rat& x : f.breakpoints) bp.push_back(format_rational(x));
  j["breakpoints"] = std::move(bp);
  j["dims"] = f.dims;
  ordered_json tr = ordered_json::array();
  for (const MatQ& t : f.transitions) tr.push_back(to_json(t));
  j["transitions"] = std::move(tr);
  j["tail"] = f.stable_tail;
  return j;
}

fds::FiniteFDS fds_from_json(const nlohmann::json& j) {
  fds::FiniteFDS f;
  for (const auto& x : j.at("breakpoints")) f.breakpoints.push_back(rat_field(x));
  f.dims = j.at("dims").get<std::vector<std::size_t>>();
  for (const auto& t : j.at("transitions")) f.transitions.push_back(mat_from_json(t));
  f.stable_tail = j.at("tail").get<bool>();
  f.validate();
  return f;
}

ordered_json to_json(const fds::FDSMorphism& m) {
  ordered_json j;
  j["C"] = format_rational(m.scale);
  ordered_json maps = ordered_json::array();
  for (const MatQ& a : m.maps) maps.push_back(to_json(a));
  j["maps"] = std::move(maps);
  return j;
}

fds::FDSMorphism morphism_from_json(const nlohmann::json& j) {
  fds::FDSMorphism m;
  m.scale = rat_field(j.at("C"));
  for (const auto& a : j.at("maps")) m.maps.push_back(mat_from_json(a));
  return m;
}

ordered_json to_json(const fds::SampledGrowth& g) {
  ordered_json samples = ordered_json::array();
  for (const auto& s : g.samples) {
    samples.push_back(ordered_json::array({format_rational(s.x), s.count.str()}));
  }
  ordered_json j;
  j["samples"] = std::move(samples);
  return j;
}

fds::SampledGrowth growth_from_json(const nlohmann::json& j) {
  fds::SampledGrowth g;
  for (const auto& s : j.at("samples")) {
    if (!s.is_array() || s.size() != 2) {
      throw std::invalid_argument("growth samples must be [x, count] pairs");
    }
    g.samples.push_back({rat_field(s[0]), int_field(s[1])});
  }
  g.validate();
  return g;
}

ordered_json to_json(const divisor::DivisorModel& d) {
  ordered_json j;
  j["n"] = d.n;
  j["k"] = d.k;
  ordered_json strata = ordered_json::array();
  std::vector<divisor::Stratum> sorted = d.strata;
  std::sort(sorted.begin(), sorted.end(), [](divisor::Stratum a, divisor::Stratum b) {
    const int sa = divisor::stratum_size(a), sb = divisor::stratum_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  for (divisor::Stratum s : sorted) strata.push_back(divisor::stratum_indices(s));
  j["strata"] = std::move(strata);
  ordered_json wrapping = ordered_json::array();
  for (const Rat& w : d.wrapping) wrapping.push_back(format_rational(w));
  j["wrapping"] = std::move(wrapping);
  ordered_json morse = ordered_json::array();
  for (divisor::Stratum s : sorted) {
    if (s == 0) continue;
    const auto it = d.morse.find(s);
    if (it == d.morse.end()) continue;
    ordered_json row;
    row["stratum"] = divisor::stratum_indices(s);
    row["count"] = it->second;
    morse.push_back(std::move(row));
  }
  j["morse"] = std::move(morse);
  j["M_H"] = d.morse_zero_region;
  j["epsilon"] = d.epsilon;
  return j;
}

divisor::DivisorModel divisor_from_json(const nlohmann::json& j) {
  divisor::DivisorModel d;
  d.n = j.at("n").get<int>();
  d.k = j.at("k").get<int>();
  for (const auto& s : j.at("strata")) {
    d.strata.push_back(divisor::stratum_from_indices(s.get<std::vector<int>>(), d.k));
  }
  for (const auto& w : j.at("wrapping")) d.wrapping.push_back(rat_field(w));
  for (const auto& row : j.at("morse")) {
    const auto s = divisor::stratum_from_indices(row.at("stratum").get<std::vector<int>>(), d.k);
    d.morse[s] = row.at("count").get<std::int64_t>();
  }
  d.morse_zero_region = j.at("M_H").get<std::int64_t>();
  d.epsilon = j.at("epsilon").get<double>();
  return d;
}

ordered_json profile_to_json(const ham::NuProfile& p) {
  ordered_json j;
  j["kind"] = "closed_form";
  j["epsilon"] = p.epsilon();
  j["cap_end"] = p.cap_end();
  j["support_end"] = p.support_end();
  return j;
}

ham::NuProfile profile_from_json(const nlohmann::json& j) {
  const std::string kind = j.value("kind", "closed_form");
  if (kind == "closed_form") {
    return ham::NuProfile::closed_form(j.at("epsilon").get<double>(),
                                       j.at("cap_end").get<double>(),
                                       j.at("support_end").get<double>());
  }
  if (kind == "sampled") {
    std::vector<std::pair<double, double>> knots;
    for (const auto& knot : j.at("knots")) {
      knots.emplace_back(knot.at(0).get<double>(), knot.at(1).get<double>());
    }
    return ham::NuProfile::from_samples(j.at("epsilon").get<double>(), std::move(knots));
  }
  throw std::invalid_argument("unknown profile kind: " + kind);
}

ordered_json to_json(const loops::TorusModel& t) {
  ordered_json j;
  j["n"] = t.n;
  ordered_json metric = ordered_json::array();
  for (const auto& row : t.metric) {
    ordered_json r = ordered_json::array();
    for (const Rat& x : row) r.push_back(format_rational(x));
    metric.push_back(std::move(r));
  }
  j["metric"] = std::move(metric);
  return j;
}

loops::TorusModel torus_from_json(const nlohmann::json& j) {
  loops::TorusModel t;
  t.n = j.at("n").get<int>();
  for (const auto& row : j.at("metric")) {
    std::vector<Rat> r;
    for (const auto& x : row) r.push_back(rat_field(x));
    t.metric.push_back(std::move(r));
  }
  t.validate();
  return t;
}

ordered_json to_json(const conj::FiniteGroupTable& g) {
  ordered_json j;
  j["size"] = g.size;
  j["table"] = g.table;
  if (!g.names.empty()) j["names"] = g.names;
  return j;
}

conj::FiniteGroupTable group_from_json(const nlohmann::json& j) {
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return conj::FiniteGroupTable::from_table(j.at("size").get<int>(),
                                            j.at("table").get<std::vector<int>>(),
                                            std::move(names));
}

ordered_json gamma_to_json(const fds::GammaEstimate& e) {
  ordered_json j;
  switch (e.cls) {
    case fds::GammaClass::neg_infinity:
      j["value"] = "-inf";
      break;
    case fds::GammaClass::pos_infinity:
      j["value"] = "+inf";
      break;
    case fds::GammaClass::finite:
      j["value"] = e.value;
      break;
  }
  j["slope"] = e.slope;
  j["residual"] = e.residual;
  j["points"] = e.points;
  return j;
}

ordered_json census_row_json(const ham::OrbitCensus& c) {
  ordered_json j;
  j["lambda"] = c.lambda;
  ordered_json by_depth = ordered_json::object();
  std::map<int, std::int64_t> depth_counts;
  for (const auto& sc : c.strata) {
    depth_counts[divisor::stratum_size(sc.stratum)] += sc.family_count;
  }
  for (const auto& [depth, count] : depth_counts) {
    by_depth[std::to_string(depth)] = count;
  }
  j["families_by_depth"] = std::move(by_depth);
  j["nondegenerate_count"] = c.nondegenerate_count;
  j["min_action"] = c.min_action;
  j["max_action"] = c.max_action;
  j["count_bound"] = c.count_bound;
  j["bound_satisfied"] = c.count_bound_satisfied;
  j["per_axis_count"] = c.axis.solutions.size();
  j["per_axis_ok"] = c.per_axis_bound_satisfied;
  j["action_bound"] = c.action_bound;
  j["action_bound_ok"] = c.action_bound_satisfied;
  j["smallnu_positive"] = c.smallnu_positive;
  return j;
}

std::string census_csv(const std::vector<ham::OrbitCensus>& sweep) {
  int max_depth = 0;
  for (const auto& c : sweep) max_depth = std::max(max_depth, c.depth);
  std::ostringstream out;
  out << "lambda";
  for (int d = 1; d <= max_depth; ++d) out << ",families_depth_" << d;
  out << ",nondegenerate_count,min_action,max_action,count_bound,bound_satisfied,"
         "per_axis_count,per_axis_ok,action_bound,action_bound_ok,smallnu_positive\n";
  out.precision(17);
  for (const auto& c : sweep) {
    std::map<int, std::int64_t> depth_counts;
    for (const auto& sc : c.strata) {
      depth_counts[divisor::stratum_size(sc.stratum)] += sc.family_count;
    }
    out << c.lambda;
    for (int d = 1; d <= max_depth; ++d) out << "," << depth_counts[d];
    out << "," << c.nondegenerate_count << "," << c.min_action << "," << c.max_action << ","
        << c.count_bound << "," << (c.count_bound_satisfied ? 1 : 0) << ","
        << c.axis.solutions.size() << "," << (c.per_axis_bound_satisfied ? 1 : 0) << ","
        << c.action_bound << "," << (c.action_bound_satisfied ? 1 : 0) << ","
        << (c.smallnu_positive ? 1 : 0) << "\n";
  }
  return out.str();
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace gammakit::io
