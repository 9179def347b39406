#pragma once

// Symbolic subsets of a fan space: a set of named points plus, per fan, a
// finite or cofinite set of member indices. The family is closed under the
// Boolean operations, topological closure/interior, and the order closures,
// and every operation here is exact.

#include <memory>
#include <string>
#include <vector>

#include "latsep/space.hpp"

namespace latsep {

struct FanPart {
  bool cofinite = false;
  std::vector<int> support;  // sorted, unique; members if finite, exclusions if cofinite

  static FanPart fin(std::vector<int> idx);
  static FanPart cofin(std::vector<int> idx);
  static FanPart none() { return fin({}); }
  static FanPart full() { return cofin({}); }

  bool contains(int i) const;
  bool is_empty() const { return !cofinite && support.empty(); }
  bool is_full() const { return cofinite && support.empty(); }
  bool nonempty() const { return cofinite || !support.empty(); }

  bool operator==(const FanPart&) const = default;
};

FanPart part_complement(const FanPart& p);
FanPart part_union(const FanPart& a, const FanPart& b);
FanPart part_intersect(const FanPart& a, const FanPart& b);
bool part_subset(const FanPart& a, const FanPart& b);
bool part_less(const FanPart& a, const FanPart& b);  // ordering for dedup/sorting

class SymSet {
 public:
  SymSet() = default;
  SymSet(std::shared_ptr<const SpaceSpec> space, Mask named, std::vector<FanPart> fans);

  static SymSet empty(std::shared_ptr<const SpaceSpec> space);
  static SymSet full(std::shared_ptr<const SpaceSpec> space);
  static SymSet of_named(std::shared_ptr<const SpaceSpec> space, Mask named);
  static SymSet point(std::shared_ptr<const SpaceSpec> space, const PointClass& p);

  const std::shared_ptr<const SpaceSpec>& space() const { return space_; }
  const SpaceSpec& spec() const { return *space_; }
  Mask named_mask() const { return named_; }
  const FanPart& part(int f) const { return fans_[f]; }

  bool contains_named(int i) const { return mask_has(named_, i); }
  bool contains(const PointClass& p) const;
  bool is_empty_set() const;
  bool is_full_set() const;

  SymSet with_named(Mask named) const;
  SymSet with_part(int f, FanPart part) const;

  bool operator==(const SymSet&) const;

 private:
  std::shared_ptr<const SpaceSpec> space_;
  Mask named_ = 0;
  std::vector<FanPart> fans_;
};

bool sym_less(const SymSet& a, const SymSet& b);

SymSet complement(const SymSet& s);
SymSet set_union(const SymSet& a, const SymSet& b);
SymSet set_intersect(const SymSet& a, const SymSet& b);
SymSet set_difference(const SymSet& a, const SymSet& b);
bool is_subset(const SymSet& a, const SymSet& b);

// Stone topology: a set is open at a named limit iff it holds a cofinite tail
// of every fan converging there; everything else is isolated.
SymSet closure(const SymSet& s);
SymSet interior(const SymSet& s);

// Order closures under the effective order.
SymSet down_closure(const SymSet& s);
SymSet up_closure(const SymSet& s);

// Closure/interior in the open-upset topology (cl1/int1) and the open-downset
// topology (cl2/int2): cl1 = down o cl, int1(S) = X \ down(X \ int S).
SymSet cl1(const SymSet& s);
SymSet cl2(const SymSet& s);
SymSet int1(const SymSet& s);
SymSet int2(const SymSet& s);

bool is_upset(const SymSet& s);
bool is_downset(const SymSet& s);
bool is_open(const SymSet& s);
bool is_closed(const SymSet& s);
bool is_clopen(const SymSet& s);

SymSet min_set(std::shared_ptr<const SpaceSpec> space);
SymSet max_set(std::shared_ptr<const SpaceSpec> space);

// true iff target is contained in closure(s); requires s subset of target.
bool is_dense(const SymSet& s, const SymSet& target);

std::string to_string(const SymSet& s);
// Inverse of to_string; throws std::invalid_argument on malformed input.
SymSet symset_from_string(const std::string& text, std::shared_ptr<const SpaceSpec> space);

}  // namespace latsep
