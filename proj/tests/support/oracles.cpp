#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace gammakit::oracle {

namespace {

std::string pack(const conj::Word& w) {
  std::string s;
  s.reserve(w.size() * 2);
  for (const conj::Letter& l : w) {
    s.push_back(static_cast<char>(l.factor));
    s.push_back(static_cast<char>(l.element));
  }
  return s;
}

std::vector<conj::Letter> generators(const conj::FreeProduct& g) {
  std::vector<conj::Letter> gens;
  for (int f = 0; f < static_cast<int>(g.factor_count()); ++f) {
    const conj::FiniteGroupTable& t = g.factors()[f];
    for (int e = 0; e < t.size; ++e) {
      if (e != t.identity) gens.push_back({f, e});
    }
  }
  return gens;
}

void enumerate_reduced(const conj::FreeProduct& g, int max_len,
                       std::vector<conj::Word>& out) {
  conj::Word word;
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) return;
    for (int factor = 0; factor < static_cast<int>(g.factor_count()); ++factor) {
      if (!word.empty() && word.back().factor == factor) continue;
      const conj::FiniteGroupTable& t = g.factors()[factor];
      for (int e = 0; e < t.size; ++e) {
        if (e == t.identity) continue;
        word.push_back({factor, e});
        out.push_back(word);
        self(self, remaining - 1);
        word.pop_back();
      }
    }
  };
  out.push_back({});  // identity
  dfs(dfs, max_len);
}

}  // namespace

std::vector<std::int64_t> conjugacy_counts_bruteforce(const conj::FreeProduct& g, int max_len) {
  const int budget = max_len + 4;
  std::vector<conj::Word> universe;
  enumerate_reduced(g, budget, universe);
  std::sort(universe.begin(), universe.end(),
            [](const conj::Word& a, const conj::Word& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });

  const std::vector<conj::Letter> gens = generators(g);
  std::map<std::string, int> class_of;
  int next_class = 0;
  for (const conj::Word& start : universe) {
    const std::string key0 = pack(start);
    if (class_of.count(key0)) continue;
    const int cls = next_class++;
    std::deque<conj::Word> queue{start};
    class_of[key0] = cls;
    while (!queue.empty()) {
      const conj::Word w = queue.front();
      queue.pop_front();
      for (const conj::Letter& gen : gens) {
        const conj::Word conj_word = g.conjugate({gen}, w);
        if (static_cast<int>(conj_word.size()) > budget) continue;
        const std::string key = pack(conj_word);
        if (class_of.emplace(key, cls).second) queue.push_back(conj_word);
      }
    }
  }

  std::vector<std::int64_t> r(static_cast<std::size_t>(max_len), 0);
  std::set<int> seen;
  std::size_t idx = 0;
  for (int len = 0; len <= max_len; ++len) {
    while (idx < universe.size() && static_cast<int>(universe[idx].size()) <= len) {
      seen.insert(class_of.at(pack(universe[idx])));
      ++idx;
    }
    if (len >= 1) r[static_cast<std::size_t>(len - 1)] = static_cast<std::int64_t>(seen.size());
  }
  return r;
}

std::vector<std::int64_t> conjugacy_counts_enlarged(const conj::FreeProduct& g, int max_len) {
  std::vector<conj::Word> gens_b;
  for (const conj::Letter& l : generators(g)) gens_b.push_back({l});
  // One extra product: first two default generators multiplied.
  conj::Word extra{gens_b[0][0], gens_b[1][0]};
  gens_b.push_back(g.reduce(extra));

  std::set<std::string> keys;
  keys.insert(g.conjugacy_key({}).key);

  std::vector<std::int64_t> r(static_cast<std::size_t>(max_len), 0);
  std::vector<conj::Word> frontier{conj::Word{}};
  std::set<std::string> reached{pack(conj::Word{})};
  for (int i = 1; i <= max_len; ++i) {
    std::vector<conj::Word> next;
    for (const conj::Word& w : frontier) {
      for (const conj::Word& gen : gens_b) {
        conj::Word raw = w;
        raw.insert(raw.end(), gen.begin(), gen.end());
        conj::Word prod = g.reduce(raw);
        const std::string key = pack(prod);
        if (reached.insert(key).second) {
          keys.insert(g.conjugacy_key(prod).key);
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
    r[static_cast<std::size_t>(i - 1)] = static_cast<std::int64_t>(keys.size());
  }
  return r;
}

std::int64_t necklace_count_burnside(int k) {
  auto phi = [](int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        while (m % p == 0) m /= p;
        result -= result / p;
      }
    }
    if (m > 1) result -= result / m;
    return result;
  };
  std::int64_t total = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    total += static_cast<std::int64_t>(phi(k / d)) << d;
  }
  return total / k;
}

std::int64_t necklace_count_enumerated(int k) {
  std::set<std::uint32_t> canon;
  const std::uint32_t all = (1u << k) - 1;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    std::uint32_t best = mask;
    for (int j = 1; j < k; ++j) {
      const std::uint32_t rot = ((mask << j) | (mask >> (k - j))) & all;
      best = std::min(best, rot);
    }
    canon.insert(best);
  }
  return static_cast<std::int64_t>(canon.size());
}

double angular_speed_central_difference(const ham::NuProfile& p, double r, double h) {
  return -(p.nu(r + h) - p.nu(r - h)) / (2 * h) / (2 * r);
}

double action_quadrature(const ham::NuProfile& p, const divisor::DivisorModel& d,
                         const ham::OrbitFamily& f, double lambda, int steps) {
  const std::vector<int> indices = divisor::stratum_indices(f.stratum);
  // H is constant along the orbit; theta(o'(t)) uses the finite-difference
  // angular speed instead of the winding identity.
  double hamiltonian_term = 0.0;
  double theta_term = 0.0;
  for (int s = 0; s < steps; ++s) {
    double h_val = 0.0;
    double theta_rate = 0.0;
    for (std::size_t j = 0; j < indices.size(); ++j) {
      const double r = f.radii[j];
      const double kappa = to_double(d.wrapping[indices[j] - 1]);
      const double omega_fd = angular_speed_central_difference(p, r, 1e-6);
      h_val += p.nu(r);
      theta_rate += (r * r + kappa) * lambda * omega_fd;
    }
    hamiltonian_term += lambda * h_val / steps;
    theta_term += theta_rate / steps;
  }
  return -hamiltonian_term - theta_term;
}

std::int64_t census_count_direct(const divisor::DivisorModel& d, std::size_t axis_solutions) {
  std::int64_t total = d.morse_zero_region;
  for (divisor::Stratum s : d.strata) {
    if (s == 0) continue;
    const int l = divisor::stratum_size(s);
    std::int64_t families = 1;
    for (int i = 0; i < l; ++i) families *= static_cast<std::int64_t>(axis_solutions);
    total += families * d.morse.at(s) * (1LL << l);
  }
  return total;
}

std::size_t axis_solution_count_grid(const ham::NuProfile& p, double lambda, std::size_t grid) {
  std::size_t count = 0;
  const double b = p.support_end();
  std::vector<double> omega(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const double r = b * (j + 1) / (grid + 1);
    omega[j] = p.nu(r) > 0 ? p.angular_speed(r) : 0.0;
  }
  const int kmax = static_cast<int>(std::floor(lambda * p.omega_max() / (2 * std::numbers::pi))) + 1;
  for (int k = 1; k <= kmax; ++k) {
    const double target = 2 * std::numbers::pi * k / lambda;
    for (std::size_t j = 0; j + 1 < grid; ++j) {
      if ((omega[j] - target) * (omega[j + 1] - target) < 0) ++count;
    }
  }
  return count;
}

Int lattice_count_box(const loops::TorusModel& t, const Rat& lambda, std::int64_t box) {
  const Rat r = lambda * lambda * lambda * lambda;
  const int n = t.n;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
  Int count = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      Rat norm = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          norm += t.metric[i][j] * Rat(v[i]) * Rat(v[j]);
        }
      }
      if (norm <= r) ++count;
      return;
    }
    for (std::int64_t x = -box; x <= box; ++x) {
      v[static_cast<std::size_t>(depth)] = x;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return count << n;
}

}  // namespace gammakit::oracle
