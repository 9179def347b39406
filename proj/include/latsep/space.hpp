#pragma once

// Finitely presented infinite Priestley spaces: finitely many named points
// plus omega-fans of isolated points, each fan converging to a named limit.
// A fan relates to named points only uniformly: below(f) lies under every
// member, above(f) lies over every member. This family is exactly expressive
// enough for the gallery spaces and keeps every check decidable.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latsep/poset.hpp"

namespace latsep {

struct Fan {
  std::string id;
  int limit = 0;    // named index the members converge to
  Mask below = 0;   // named points below every member
  Mask above = 0;   // named points above every member
};

class SpaceSpec {
 public:
  SpaceSpec(std::vector<std::string> named, std::vector<Mask> named_leq_rows,
            std::vector<Fan> fans);

  static std::shared_ptr<const SpaceSpec> make(
      std::vector<std::string> named,
      const std::vector<std::pair<std::string, std::string>>& leq,
      std::vector<Fan> fans);

  int named_count() const { return named_.size(); }
  int fan_count() const { return static_cast<int>(fans_.size()); }
  const FinPoset& named_order() const { return named_; }
  const std::string& named_id(int i) const { return named_.id(i); }
  std::optional<int> named_index(const std::string& id) const { return named_.index_of(id); }
  const Fan& fan(int f) const { return fans_[f]; }
  std::optional<int> fan_index(const std::string& id) const;

  bool named_leq(int a, int b) const { return named_.leq(a, b); }
  Mask up_named(int i) const { return named_.up_of(i); }
  Mask down_named(int i) const { return named_.down_of(i); }
  Mask all_named() const { return named_.all(); }

  bool is_limit(int named) const { return !limit_fans_[named].empty(); }
  const std::vector<int>& fans_with_limit(int named) const { return limit_fans_[named]; }

 private:
  FinPoset named_;
  std::vector<Fan> fans_;
  std::vector<std::vector<int>> limit_fans_;
};

struct SpaceViolation {
  std::string axiom;
  std::string witness;
};

// All violated SpaceSpec invariants (named order axioms, closedness of the
// order at fan limits, down/up-closedness of fan relations, antisymmetry of
// the effective order, Priestley separation), each with a witness.
std::vector<SpaceViolation> validate_space(const SpaceSpec& spec);

// One representative per orbit of the point set: each named point, and one
// generic member per fan (every implemented pointwise predicate is invariant
// under fan-index permutation).
struct PointClass {
  int named = -1;   // >= 0 for named points
  int fan = -1;     // >= 0 for fan members
  int index = 0;    // member index within the fan

  bool is_named() const { return named >= 0; }
  static PointClass named_point(int i) { return PointClass{i, -1, 0}; }
  static PointClass fan_member(int f, int i) { return PointClass{-1, f, i}; }
  bool operator==(const PointClass&) const = default;
};

std::vector<PointClass> point_classes(const SpaceSpec& spec, int generic_index = 0);
std::string point_label(const SpaceSpec& spec, const PointClass& p);
std::optional<PointClass> parse_point(const SpaceSpec& spec, const std::string& label);

// The effective order on concrete points.
bool point_leq(const SpaceSpec& spec, const PointClass& a, const PointClass& b);

}  // namespace latsep
