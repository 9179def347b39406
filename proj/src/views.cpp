#include "latsep/views.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsep {

const char* view_name(ViewKind k) {
  switch (k) {
    case ViewKind::L: return "L";
    case ViewKind::DM: return "DM";
    case ViewKind::BL: return "BL";
    case ViewKind::OpUp: return "OpUp";
    case ViewKind::Up: return "Up";
    case ViewKind::PH: return "pH";
  }
  return "?";
}

bool is_member(const LatticeView& view, const SymSet& s) {
  if (s.space() != view.space) throw std::invalid_argument("set over a different space");
  switch (view.kind) {
    case ViewKind::L: return is_clopen(s) && is_upset(s);
    case ViewKind::DM: return int1(cl2(s)) == s;
    case ViewKind::BL: return int1(closure(s)) == s;
    case ViewKind::OpUp: return is_open(s) && is_upset(s);
    case ViewKind::Up: return is_upset(s);
    case ViewKind::PH: {
      for (const SymSet& m : ph_members(view.space, view.bound))
        if (m == s) return true;
      return false;
    }
  }
  return false;
}

SymSet bl_join(const std::vector<SymSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("bl_join needs at least one set");
  SymSet acc = sets.front();
  for (size_t i = 1; i < sets.size(); ++i) acc = set_union(acc, sets[i]);
  return int1(closure(acc));
}

SymSet view_join(const LatticeView& view, const std::vector<SymSet>& sets) {
  if (sets.empty()) return SymSet::empty(view.space);
  SymSet acc = sets.front();
  for (size_t i = 1; i < sets.size(); ++i) acc = set_union(acc, sets[i]);
  switch (view.kind) {
    case ViewKind::L:
    case ViewKind::OpUp:
    case ViewKind::Up: return acc;
    case ViewKind::DM: return int1(cl2(acc));
    case ViewKind::BL:
    case ViewKind::PH: return int1(closure(acc));
  }
  return acc;
}

SymSet view_meet(const LatticeView& view, const SymSet& a, const SymSet& b) {
  (void)view;
  return set_intersect(a, b);
}

SymSet bl_pseudocomplement(const SymSet& u) {
  SymSet star = complement(down_closure(closure(u)));
  return int1(closure(star));
}

SymSet rel_annihilator_upset(const SymSet& a, const SymSet& b) {
  if (!(is_clopen(a) && is_upset(a)) || !(is_clopen(b) && is_upset(b)))
    throw std::invalid_argument("relative annihilator needs clopen upsets");
  return complement(down_closure(set_difference(a, b)));
}

SymSet ph_generator(const SymSet& k) {
  if (!is_clopen(k)) throw std::invalid_argument("pH generator needs a clopen set");
  return complement(down_closure(k));
}

std::vector<SymSet> enumerate_all_shapes(std::shared_ptr<const SpaceSpec> space, int bound) {
  if (bound < 1 || bound > 4) throw std::invalid_argument("shape bound must be in 1..4");
  const SpaceSpec& sp = *space;
  const int fans = sp.fan_count();
  const int parts_per_fan = 2 << bound;  // Fin and Cofin over subsets of 0..bound-1

  auto nth_part = [&](int idx) {
    bool cof = idx >= (1 << bound);
    int bits = idx & ((1 << bound) - 1);
    std::vector<int> sup;
    for (int i = 0; i < bound; ++i)
      if ((bits >> i) & 1) sup.push_back(i);
    return cof ? FanPart::cofin(std::move(sup)) : FanPart::fin(std::move(sup));
  };

  std::vector<SymSet> out;
  std::vector<int> digits(fans, 0);
  for (Mask named = 0;; ++named) {
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      std::vector<FanPart> parts;
      parts.reserve(fans);
      for (int f = 0; f < fans; ++f) parts.push_back(nth_part(digits[f]));
      out.emplace_back(space, named, std::move(parts));
      int f = fans - 1;
      while (f >= 0 && digits[f] == parts_per_fan - 1) digits[f--] = 0;
      if (f < 0) break;
      ++digits[f];
    }
    if (named == sp.all_named()) break;
  }
  return out;
}

std::vector<SymSet> enumerate_clopens(std::shared_ptr<const SpaceSpec> space, int bound) {
  std::vector<SymSet> out;
  for (const SymSet& s : enumerate_all_shapes(space, bound))
    if (is_clopen(s)) out.push_back(s);
  return out;
}

std::vector<SymSet> ph_members(std::shared_ptr<const SpaceSpec> space, int bound) {
  std::vector<SymSet> members;
  auto insert = [&](const SymSet& s) {
    auto it = std::lower_bound(members.begin(), members.end(), s, sym_less);
    if (it != members.end() && *it == s) return false;
    members.insert(it, s);
    return true;
  };
  insert(SymSet::empty(space));  // the empty join
  for (const SymSet& k : enumerate_clopens(space, bound)) insert(ph_generator(k));

  // close under binary BL-joins; supports stay inside the generators' span
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SymSet> snapshot = members;
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j)
        if (insert(bl_join({snapshot[i], snapshot[j]}))) grew = true;
  }
  return members;
}

std::vector<SymSet> enumerate_shapes(std::shared_ptr<const SpaceSpec> space, int bound,
                                     ViewKind kind) {
  if (kind == ViewKind::PH) return ph_members(space, bound);
  LatticeView view{space, kind, bound};
  std::vector<SymSet> out;
  for (const SymSet& s : enumerate_all_shapes(space, bound))
    if (is_member(view, s)) out.push_back(s);
  return out;
}

}  // namespace latsep
