#pragma once

// Test-only helpers: seeded generators for posets, spaces, and symbolic sets,
// plus the concrete truncation oracle the symbolic topology is checked
// against. The oracle instantiates each fan with kTrunc concrete members and
// adjoins the limits; it is exact for sets whose Fin/Cofin supports use
// indices below kTrunc/2 (a truncated fan part counts as cofinite iff it
// holds the whole upper half).

#include <random>
#include <vector>

#include "latsep/symset.hpp"

namespace latsep::testutil {

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline FinPoset random_poset(Rng& rng, int max_n = 10) {
  int n = rand_int(rng, 1, max_n);
  // random strict order compatible with the index order, transitively closed
  std::vector<Mask> up(n, 0);
  for (int i = 0; i < n; ++i) up[i] = mask_bit(i);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (rand_int(rng, 0, 2) == 0) up[i] |= up[j];
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = "v" + std::to_string(i);
  return FinPoset(std::move(ids), std::move(up));
}

inline std::shared_ptr<const SpaceSpec> random_space(Rng& rng, int max_named = 6,
                                                     int max_fans = 3) {
  FinPoset order = random_poset(rng, max_named);
  int n = order.size();
  int fan_count = rand_int(rng, 1, max_fans);
  std::vector<Fan> fans;
  // no named point may sit above one fan and below another (members would
  // become comparable across fans); removing an up-closed set from a
  // down-closed one keeps it down-closed, so the trims below are safe
  Mask used_below = 0, used_above = 0;
  for (int f = 0; f < fan_count; ++f) {
    Fan fan;
    fan.id = "f" + std::to_string(f);
    fan.limit = rand_int(rng, 0, n - 1);
    for (int q : mask_indices(order.down_of(fan.limit)))
      if (rand_int(rng, 0, 2) == 0) fan.below |= order.down_of(q);
    fan.below &= ~used_above;
    for (int q : mask_indices(order.up_of(fan.limit)))
      if (rand_int(rng, 0, 2) == 0) fan.above |= order.up_of(q);
    fan.above &= ~(used_below | fan.below);
    used_below |= fan.below;
    used_above |= fan.above;
    fans.push_back(fan);
  }
  std::vector<Mask> rows;
  for (int i = 0; i < n; ++i) rows.push_back(order.up_of(i));
  std::vector<std::string> ids = order.ids();
  return std::make_shared<const SpaceSpec>(std::move(ids), std::move(rows), std::move(fans));
}

constexpr int kTrunc = 12;
constexpr int kMaxSupport = kTrunc / 2;  // exactness domain of the oracle

inline SymSet random_symset(Rng& rng, std::shared_ptr<const SpaceSpec> space) {
  const SpaceSpec& sp = *space;
  Mask named = 0;
  for (int i = 0; i < sp.named_count(); ++i)
    if (rand_int(rng, 0, 1)) named |= mask_bit(i);
  std::vector<FanPart> parts;
  for (int f = 0; f < sp.fan_count(); ++f) {
    std::vector<int> sup;
    for (int i = 0; i < kMaxSupport; ++i)
      if (rand_int(rng, 0, 2) == 0) sup.push_back(i);
    parts.push_back(rand_int(rng, 0, 1) ? FanPart::cofin(std::move(sup))
                                        : FanPart::fin(std::move(sup)));
  }
  return SymSet(std::move(space), named, std::move(parts));
}

// ---------------------------------------------------------------------------
// Concrete truncation oracle

class TruncOracle {
 public:
  explicit TruncOracle(std::shared_ptr<const SpaceSpec> space) : space_(std::move(space)) {
    const SpaceSpec& sp = *space_;
    total_ = sp.named_count() + kTrunc * sp.fan_count();
    if (total_ > 64) throw std::invalid_argument("truncation exceeds 64 points");
    universe_ = (total_ == 64) ? ~Mask{0} : (mask_bit(total_) - 1);
    down_.assign(total_, 0);
    up_.assign(total_, 0);
    for (int p = 0; p < total_; ++p)
      for (int q = 0; q < total_; ++q)
        if (leq(p, q)) {
          up_[p] |= mask_bit(q);
          down_[q] |= mask_bit(p);
        }
  }

  int member_point(int fan, int idx) const { return space_->named_count() + kTrunc * fan + idx; }

  Mask truncate(const SymSet& s) const {
    Mask m = s.named_mask();
    for (int f = 0; f < space_->fan_count(); ++f)
      for (int i = 0; i < kTrunc; ++i)
        if (s.part(f).contains(i)) m |= mask_bit(member_point(f, i));
    return m;
  }

  Mask complement(Mask t) const { return universe_ & ~t; }

  Mask closure(Mask t) const {
    Mask out = t;
    for (int f = 0; f < space_->fan_count(); ++f) {
      bool upper_half = true;
      for (int i = kMaxSupport; i < kTrunc && upper_half; ++i)
        if (!mask_has(t, member_point(f, i))) upper_half = false;
      if (upper_half) out |= mask_bit(space_->fan(f).limit);
    }
    return out;
  }

  Mask interior(Mask t) const { return complement(closure(complement(t))); }

  Mask down(Mask t) const {
    Mask out = 0;
    for (int p : mask_indices(t)) out |= down_[p];
    return out;
  }
  Mask up(Mask t) const {
    Mask out = 0;
    for (int p : mask_indices(t)) out |= up_[p];
    return out;
  }

  Mask cl1(Mask t) const { return down(closure(t)); }
  Mask cl2(Mask t) const { return up(closure(t)); }
  Mask int1(Mask t) const { return complement(down(complement(interior(t)))); }
  Mask int2(Mask t) const { return complement(up(complement(interior(t)))); }

 private:
  bool leq(int p, int q) const {
    const SpaceSpec& sp = *space_;
    int n = sp.named_count();
    auto fan_of = [&](int x) { return (x - n) / kTrunc; };
    bool p_named = p < n, q_named = q < n;
    if (p_named && q_named) return sp.named_leq(p, q);
    if (p_named) return mask_has(sp.fan(fan_of(q)).below, p);
    if (q_named) return mask_has(sp.fan(fan_of(p)).above, q);
    return p == q;
  }

  std::shared_ptr<const SpaceSpec> space_;
  int total_ = 0;
  Mask universe_ = 0;
  std::vector<Mask> down_, up_;
};

}  // namespace latsep::testutil
