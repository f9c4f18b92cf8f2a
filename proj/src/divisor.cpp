#include "gammakit/divisor.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gammakit::divisor {

std::vector<int> stratum_indices(Stratum s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1) {
    if (s & 1) out.push_back(i);
  }
  return out;
}

Stratum stratum_from_indices(const std::vector<int>& indices, int k) {
  Stratum s = 0;
  for (int i : indices) {
    if (i < 1 || i > k) throw std::invalid_argument("stratum index out of range");
    s |= Stratum(1) << (i - 1);
  }
  return s;
}

int stratum_size(Stratum s) { return std::popcount(s); }

bool DivisorModel::has_stratum(Stratum s) const {
  return std::find(strata.begin(), strata.end(), s) != strata.end();
}

namespace {

std::string stratum_name(Stratum s) {
  if (s == 0) return "{}";
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i : stratum_indices(s)) {
    if (!first) out << ",";
    out << i;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

Diagnostics validate(const DivisorModel& d) {
  Diagnostics diag;
  auto issue = [&diag](const std::string& msg) {
    diag.ok = false;
    diag.issues.push_back(msg);
  };

  if (d.n < 1) issue("complex dimension n must be positive");
  if (d.k < 0 || d.k > 31) issue("component count k must lie in [0, 31]");
  if (!(d.epsilon > 0)) issue("tube radius epsilon must be positive");
  if (static_cast<int>(d.wrapping.size()) != d.k) {
    issue("wrapping must list exactly k numbers");
  }
  for (std::size_t i = 0; i < d.wrapping.size(); ++i) {
    if (!(d.wrapping[i] < 0)) {
      std::ostringstream msg;
      msg << "wrapping must be negative: kappa_" << i + 1 << " = "
          << format_rational(d.wrapping[i]);
      issue(msg.str());
    }
  }

  if (!d.has_stratum(0)) issue("strata must contain the empty set");
  for (Stratum s : d.strata) {
    if (d.k < 31 && (s >> d.k) != 0) {
      issue("stratum " + stratum_name(s) + " references a component beyond k");
      continue;
    }
    if (stratum_size(s) > d.n) {
      issue("stratum " + stratum_name(s) + " exceeds the complex dimension");
    }
    // Downward closure: drop one component at a time.
    for (int i : stratum_indices(s)) {
      const Stratum sub = s & ~(Stratum(1) << (i - 1));
      if (!d.has_stratum(sub)) {
        issue("not downward closed: " + stratum_name(s) + " present but " + stratum_name(sub) +
              " missing");
      }
    }
    if (s != 0 && d.morse.find(s) == d.morse.end()) {
      issue("missing morse count for stratum " + stratum_name(s));
    }
  }
  for (const auto& [s, count] : d.morse) {
    if (count <= 0) issue("morse count for " + stratum_name(s) + " must be positive");
    if (!d.has_stratum(s)) issue("morse count given for absent stratum " + stratum_name(s));
  }
  if (d.morse_zero_region < 0) issue("M_H must be nonnegative");

  std::vector<Stratum> sorted = d.strata;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    issue("duplicate stratum listed");
  }
  return diag;
}

int depth_d(const DivisorModel& d) {
  int depth = 0;
  for (Stratum s : d.strata) depth = std::max(depth, stratum_size(s));
  if (depth == 0) {
    throw std::domain_error("divisor is empty (no nonempty stratum): variety would be compact");
  }
  return depth;
}

int m_A(const CompactificationSet& c) {
  if (c.models.empty()) throw std::invalid_argument("m_A needs at least one compactification");
  int best = depth_d(c.models.front());
  for (std::size_t i = 1; i < c.models.size(); ++i) {
    best = std::min(best, depth_d(c.models[i]));
  }
  return best;
}

}  // namespace gammakit::divisor
