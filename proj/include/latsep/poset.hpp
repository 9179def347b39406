#pragma once

// Finite posets over opaque element ids. The order relation is a bit matrix
// over element indices; indices follow input order, so every set we report
// comes out in input order and runs are reproducible byte for byte.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latsep {

using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

bool mask_has(Mask m, int i);
Mask mask_bit(int i);
int mask_count(Mask m);
int mask_lowest(Mask m);  // -1 if empty
std::vector<int> mask_indices(Mask m);

class FinPoset {
 public:
  FinPoset() = default;

  // up_rows[i] = {j : element i <= element j}. No validation here; feed the
  // result to validate() before trusting it as a partial order.
  FinPoset(std::vector<std::string> ids, std::vector<Mask> up_rows);

  // Builds from relation pairs over ids. Reflexive pairs are implied.
  static FinPoset from_pairs(std::vector<std::string> ids,
                             const std::vector<std::pair<std::string, std::string>>& leq);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int i) const { return ids_[i]; }
  std::optional<int> index_of(const std::string& id) const;

  bool leq(int a, int b) const { return mask_has(up_[a], b); }
  Mask up_of(int i) const { return up_[i]; }      // {j : i <= j}
  Mask down_of(int i) const { return down_[i]; }  // {j : j <= i}
  Mask all() const;

  FinPoset reversed() const;
  // Subposet on the given elements, keeping input order of ids.
  FinPoset induced(Mask subset) const;

 private:
  std::vector<std::string> ids_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

struct OrderViolation {
  std::string axiom;    // "reflexivity" | "antisymmetry" | "transitivity"
  std::string witness;  // offending element(s)
};

// First violated partial-order axiom with a witness, or nullopt if valid.
std::optional<OrderViolation> validate(const FinPoset& p);

Mask up_closure(const FinPoset& p, Mask s);
Mask down_closure(const FinPoset& p, Mask s);
Mask minimals(const FinPoset& p);
Mask maximals(const FinPoset& p);

// All downsets in ascending mask order (bit i = element i). Throws
// std::invalid_argument when the poset exceeds max_elements.
std::vector<Mask> enumerate_downsets(const FinPoset& p, int max_elements = 20);

// Covering pairs (a, b) with a < b and nothing strictly between.
std::vector<std::pair<int, int>> cover_pairs(const FinPoset& p);

std::string format_set(const FinPoset& p, Mask s);

}  // namespace latsep
