#pragma once

#include "gammakit/growth.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gammakit::conj {

// Multiplication table of a finite group; validated at load.
struct FiniteGroupTable {
  int size = 0;
  std::vector<int> table;  // row-major, table[a*size + b] = a*b
  std::vector<std::string> names;
  int identity = 0;
  std::vector<int> inverse;

  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable from_table(int size, std::vector<int> table,
                                     std::vector<std::string> names = {});

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * size + b]; }
  int inv(int a) const { return inverse[a]; }
};

struct Letter {
  int factor = 0;
  int element = 0;  // never the identity in a reduced word
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Reduced normal form: adjacent letters lie in distinct factors.
using Word = std::vector<Letter>;

// Canonical conjugacy-class key: the cyclic reduction of a word, rotated
// to its lexicographic minimum. Words of length <= 1 are keyed by the
// conjugacy class inside their factor.
struct CyclicWord {
  Word canonical;
  std::string key;  // packed canonical form
  friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.key == b.key; }
};

class FreeProduct {
 public:
  explicit FreeProduct(std::vector<FiniteGroupTable> factors);

  const std::vector<FiniteGroupTable>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  // All nonidentity factor elements (the default generating set).
  std::size_t generator_count() const { return generator_count_; }

  // Multiplies adjacent same-factor letters and deletes identities.
  Word reduce(const Word& raw) const;
  Word inverse_word(const Word& w) const;
  // g w g^-1, reduced.
  Word conjugate(const Word& g, const Word& w) const;

  CyclicWord conjugacy_key(const Word& w) const;

  // r_1..r_L: number of conjugacy classes with a representative of
  // generator length <= i (out[i-1] = r_i). Enumerates cyclically reduced
  // words shell by shell; guarded by a word-count cap.
  std::vector<std::int64_t> count_classes(int max_len,
                                          std::int64_t enumeration_cap = 50'000'000) const;

  // In-factor conjugacy-class representative (minimal element index).
  int factor_class_rep(int factor, int element) const;

 private:
  std::vector<FiniteGroupTable> factors_;
  std::vector<std::vector<int>> class_rep_;
  std::size_t generator_count_ = 0;
};

// Gamma fit of r_i against i. Short integer-index sequences saturate far
// below the x-scale default, so the +infinity cutoff sits at slope 4:
// polynomial desk models stay under 2n <= 3, exponential families fitted
// on i <= 20 already exceed it.
fds::GammaEstimate gamma_cong(const std::vector<std::int64_t>& r,
                              const fds::GammaOptions* opts = nullptr);

struct Witness {
  Word word;
  int generator_length = 0;  // counted in the build letters a, b, c
};

// The word a_I = bc prod_i [a if i in I else bc] in a triple free product;
// subset given as a bitmask over {1..k}. Generator length 2 + 2k - |I|.
Witness witness_family(const FreeProduct& g, int k, std::uint32_t subset_mask);

struct WitnessReport {
  int k = 0;
  std::int64_t distinct_keys = 0;            // distinct witness conjugacy keys
  std::int64_t slot_rotation_classes = 0;    // (k+1)-slot necklace classes realized
  std::int64_t subset_rotation_classes = 0;  // subsets of {1..k} modulo rotation
  double lower_bound = 0.0;                  // 2^k / k
  bool count_ok = false;                     // distinct_keys >= 2^k / k
  bool keys_match_slot_classes = false;      // equal keys <=> (k+1)-slot rotation
};

// Builds all 2^k witnesses in Z/(k+1) * Z/2 * Z/2. The leading bc block is
// indistinguishable from a gap, so the word a_I is the necklace of I's
// indicator vector on k+1 slots (slot 0 forced empty): keys biject with
// binary (k+1)-necklaces other than all-ones, N(k+1) - 1 of them, which is
// at least 2^k / k. The first factor needs order > k so that runs of a's
// stay faithful in the normal form.
WitnessReport verify_lower_bound(int k);

}  // namespace gammakit::conj
