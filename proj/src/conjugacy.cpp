#include "gammakit/conjugacy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gammakit::conj {

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return from_table(n, std::move(table));
}

FiniteGroupTable FiniteGroupTable::from_table(int size, std::vector<int> table,
                                              std::vector<std::string> names) {
  if (size < 1) throw std::invalid_argument("group size must be positive");
  if (table.size() != static_cast<std::size_t>(size) * size) {
    throw std::invalid_argument("group table must be size x size");
  }
  for (int v : table) {
    if (v < 0 || v >= size) throw std::invalid_argument("group table entry out of range");
  }

  FiniteGroupTable g;
  g.size = size;
  g.table = std::move(table);
  g.names = std::move(names);

  // Identity: the unique e with e*a = a*e = a.
  g.identity = -1;
  for (int e = 0; e < size; ++e) {
    bool ok = true;
    for (int a = 0; a < size && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw std::invalid_argument("group table has no identity");

  g.inverse.assign(size, -1);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
        g.inverse[a] = b;
        break;
      }
    }
    if (g.inverse[a] < 0) throw std::invalid_argument("group table element without inverse");
  }

  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      for (int c = 0; c < size; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw std::invalid_argument("group table is not associative");
        }
      }
    }
  }
  return g;
}

FreeProduct::FreeProduct(std::vector<FiniteGroupTable> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("free product needs at least one factor");
  class_rep_.reserve(factors_.size());
  for (const FiniteGroupTable& f : factors_) {
    generator_count_ += static_cast<std::size_t>(f.size - 1);
    std::vector<int> rep(f.size);
    for (int e = 0; e < f.size; ++e) {
      int best = e;
      for (int g = 0; g < f.size; ++g) {
        best = std::min(best, f.mul(f.mul(g, e), f.inv(g)));
      }
      rep[e] = best;
    }
    class_rep_.push_back(std::move(rep));
  }
}

int FreeProduct::factor_class_rep(int factor, int element) const {
  return class_rep_[factor][element];
}

Word FreeProduct::reduce(const Word& raw) const {
  Word out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.factor < 0 || l.factor >= static_cast<int>(factors_.size())) {
      throw std::invalid_argument("letter references an unknown factor");
    }
    const FiniteGroupTable& f = factors_[l.factor];
    if (l.element < 0 || l.element >= f.size) {
      throw std::invalid_argument("letter references an element outside its factor");
    }
    if (l.element == f.identity) continue;
    if (!out.empty() && out.back().factor == l.factor) {
      // Merging keeps the stack reduced: the exposed predecessor always
      // lies in a different factor.
      const int merged = f.mul(out.back().element, l.element);
      out.pop_back();
      if (merged != f.identity) out.push_back({l.factor, merged});
      continue;
    }
    out.push_back(l);
  }
  return out;
}

Word FreeProduct::inverse_word(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->factor, factors_[it->factor].inv(it->element)});
  }
  return out;
}

Word FreeProduct::conjugate(const Word& g, const Word& w) const {
  Word raw = g;
  raw.insert(raw.end(), w.begin(), w.end());
  const Word ginv = inverse_word(g);
  raw.insert(raw.end(), ginv.begin(), ginv.end());
  return reduce(raw);
}

namespace {

std::string pack_word(const Word& w) {
  std::string key;
  key.reserve(w.size() * 2);
  for (const Letter& l : w) {
    key.push_back(static_cast<char>(l.factor));
    key.push_back(static_cast<char>(l.element));
  }
  return key;
}

Word minimal_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

CyclicWord FreeProduct::conjugacy_key(const Word& input) const {
  Word w = reduce(input);
  // Cyclic reduction: strip matching conjugating prefix/suffix.
  while (w.size() >= 2 && w.front().factor == w.back().factor) {
    const int factor = w.front().factor;
    const FiniteGroupTable& f = factors_[factor];
    const int merged = f.mul(w.back().element, w.front().element);
    w.erase(w.begin());
    w.pop_back();
    if (merged != f.identity) {
      w.push_back({factor, merged});
      // The merged letter may now meet a same-factor neighbour at the
      // front on the next pass; the loop handles it.
      if (w.size() == 1) break;
    }
  }

  CyclicWord out;
  if (w.empty()) {
    out.canonical = {};
  } else if (w.size() == 1) {
    out.canonical = {Letter{w[0].factor, class_rep_[w[0].factor][w[0].element]}};
  } else {
    out.canonical = minimal_rotation(w);
  }
  out.key = pack_word(out.canonical);
  return out;
}

std::vector<std::int64_t> FreeProduct::count_classes(int max_len,
                                                     std::int64_t enumeration_cap) const {
  if (max_len < 1) throw std::invalid_argument("count_classes needs max_len >= 1");
  std::vector<std::int64_t> r(static_cast<std::size_t>(max_len));
  std::unordered_set<std::string> seen;
  seen.insert(std::string());  // the identity class
  std::int64_t enumerated = 0;

  // Depth-first over cyclically reduced words (adjacent letters in
  // distinct factors; for length >= 2 also first/last factors distinct),
  // one exact-length shell at a time so r_i is cumulative. Words that are
  // not cyclically reduced have a shorter conjugate counted earlier.
  for (int len = 1; len <= max_len; ++len) {
    Word shell_word;
    auto shell = [&](auto&& self, int depth) -> void {
      if (depth == len) {
        if (shell_word.size() >= 2 && shell_word.front().factor == shell_word.back().factor) {
          return;
        }
        if (++enumerated > enumeration_cap) {
          throw std::length_error("conjugacy enumeration cap exceeded");
        }
        seen.insert(conjugacy_key(shell_word).key);
        return;
      }
      for (int factor = 0; factor < static_cast<int>(factors_.size()); ++factor) {
        if (!shell_word.empty() && shell_word.back().factor == factor) continue;
        const FiniteGroupTable& f = factors_[factor];
        for (int e = 0; e < f.size; ++e) {
          if (e == f.identity) continue;
          shell_word.push_back({factor, e});
          self(self, depth + 1);
          shell_word.pop_back();
        }
      }
    };
    shell(shell, 0);
    r[static_cast<std::size_t>(len - 1)] = static_cast<std::int64_t>(seen.size());
  }
  return r;
}

fds::GammaEstimate gamma_cong(const std::vector<std::int64_t>& r, const fds::GammaOptions* opts) {
  fds::SampledGrowth growth;
  growth.samples.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    growth.samples.push_back({Rat(static_cast<long long>(i + 1)), Int(r[i])});
  }
  fds::GammaOptions defaults;
  defaults.inf_threshold = 4.0;
  return fds::fit_gamma(growth, opts ? *opts : defaults);
}

Witness witness_family(const FreeProduct& g, int k, std::uint32_t subset_mask) {
  if (g.factor_count() < 3) throw std::invalid_argument("witness family needs three factors");
  if (k < 1 || k > 31) throw std::invalid_argument("witness family needs 1 <= k <= 31");
  for (int f = 0; f < 3; ++f) {
    if (g.factors()[f].size < 2) throw std::invalid_argument("witness factors must be nontrivial");
  }
  auto nontrivial = [&](int f) {
    const FiniteGroupTable& t = g.factors()[f];
    for (int e = 0; e < t.size; ++e) {
      if (e != t.identity) return e;
    }
    return -1;
  };
  const Letter a{0, nontrivial(0)}, b{1, nontrivial(1)}, c{2, nontrivial(2)};

  Word raw{b, c};
  int length = 2;
  for (int i = 1; i <= k; ++i) {
    if (subset_mask & (1u << (i - 1))) {
      raw.push_back(a);
      length += 1;
    } else {
      raw.push_back(b);
      raw.push_back(c);
      length += 2;
    }
  }
  return {g.reduce(raw), length};
}

namespace {

std::uint32_t rotate_mask(std::uint32_t mask, int k, int by) {
  const std::uint32_t all = k == 32 ? ~0u : ((1u << k) - 1);
  return ((mask << by) | (mask >> (k - by))) & all;
}

std::uint32_t canonical_rotation(std::uint32_t mask, int k) {
  std::uint32_t best = mask;
  for (int j = 1; j < k; ++j) best = std::min(best, rotate_mask(mask, k, j));
  return best;
}

}  // namespace

WitnessReport verify_lower_bound(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("verify_lower_bound supports 1 <= k <= 16");
  FreeProduct g({FiniteGroupTable::cyclic(k + 1), FiniteGroupTable::cyclic(2),
                 FiniteGroupTable::cyclic(2)});

  WitnessReport report;
  report.k = k;
  report.lower_bound = std::ldexp(1.0, k) / k;

  std::unordered_set<std::string> keys;
  std::unordered_set<std::uint32_t> slot_classes;
  std::unordered_set<std::uint32_t> subset_classes;
  // Equal keys must match rotation of the indicator vector on the k+1
  // slot cycle (the leading bc is one more indistinguishable gap).
  bool exact = true;
  std::unordered_map<std::string, std::uint32_t> key_to_class;
  std::unordered_map<std::uint32_t, std::string> class_to_key;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const Witness w = witness_family(g, k, mask);
    const std::string key = g.conjugacy_key(w.word).key;
    // Slot 0 is the marker gap; subset bit i-1 occupies slot i.
    const std::uint32_t slots = canonical_rotation(mask << 1, k + 1);
    keys.insert(key);
    slot_classes.insert(slots);
    subset_classes.insert(canonical_rotation(mask, k));
    if (auto it = key_to_class.find(key); it != key_to_class.end()) {
      if (it->second != slots) exact = false;
    } else {
      key_to_class.emplace(key, slots);
    }
    if (auto it = class_to_key.find(slots); it != class_to_key.end()) {
      if (it->second != key) exact = false;
    } else {
      class_to_key.emplace(slots, key);
    }
  }
  report.distinct_keys = static_cast<std::int64_t>(keys.size());
  report.slot_rotation_classes = static_cast<std::int64_t>(slot_classes.size());
  report.subset_rotation_classes = static_cast<std::int64_t>(subset_classes.size());
  report.keys_match_slot_classes = exact && keys.size() == slot_classes.size();
  report.count_ok = static_cast<double>(report.distinct_keys) >= report.lower_bound;
  return report;
}

}  // namespace gammakit::conj
