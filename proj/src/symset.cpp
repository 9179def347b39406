#include "latsep/symset.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsep {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (int i : v)
    if (i < 0) throw std::invalid_argument("fan member indices must be nonnegative");
  return v;
}

std::vector<int> merge(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> common(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void require_same_space(const SymSet& a, const SymSet& b) {
  if (a.space() != b.space())
    throw std::invalid_argument("symbolic sets over different spaces");
}

}  // namespace

FanPart FanPart::fin(std::vector<int> idx) { return FanPart{false, sorted_unique(std::move(idx))}; }
FanPart FanPart::cofin(std::vector<int> idx) { return FanPart{true, sorted_unique(std::move(idx))}; }

bool FanPart::contains(int i) const {
  bool in_support = std::binary_search(support.begin(), support.end(), i);
  return cofinite ? !in_support : in_support;
}

FanPart part_complement(const FanPart& p) { return FanPart{!p.cofinite, p.support}; }

FanPart part_union(const FanPart& a, const FanPart& b) {
  if (!a.cofinite && !b.cofinite) return FanPart{false, merge(a.support, b.support)};
  if (a.cofinite && b.cofinite) return FanPart{true, common(a.support, b.support)};
  const FanPart& fin = a.cofinite ? b : a;
  const FanPart& cof = a.cofinite ? a : b;
  return FanPart{true, minus(cof.support, fin.support)};
}

FanPart part_intersect(const FanPart& a, const FanPart& b) {
  return part_complement(part_union(part_complement(a), part_complement(b)));
}

bool part_subset(const FanPart& a, const FanPart& b) {
  if (!a.cofinite && !b.cofinite) return includes_all(b.support, a.support);
  if (!a.cofinite && b.cofinite) return common(a.support, b.support).empty();
  if (a.cofinite && !b.cofinite) return false;  // cofinite never fits in finite
  return includes_all(a.support, b.support);
}

bool part_less(const FanPart& a, const FanPart& b) {
  if (a.cofinite != b.cofinite) return !a.cofinite;
  return a.support < b.support;
}

SymSet::SymSet(std::shared_ptr<const SpaceSpec> space, Mask named, std::vector<FanPart> fans)
    : space_(std::move(space)), named_(named), fans_(std::move(fans)) {
  if (!space_) throw std::invalid_argument("symbolic set needs a space");
  if (named_ & ~space_->all_named()) throw std::invalid_argument("named part out of range");
  if (static_cast<int>(fans_.size()) != space_->fan_count())
    throw std::invalid_argument("fan part count mismatch");
}

SymSet SymSet::empty(std::shared_ptr<const SpaceSpec> space) {
  std::vector<FanPart> parts(space->fan_count(), FanPart::none());
  return SymSet(std::move(space), 0, std::move(parts));
}

SymSet SymSet::full(std::shared_ptr<const SpaceSpec> space) {
  Mask named = space->all_named();
  std::vector<FanPart> parts(space->fan_count(), FanPart::full());
  return SymSet(std::move(space), named, std::move(parts));
}

SymSet SymSet::of_named(std::shared_ptr<const SpaceSpec> space, Mask named) {
  std::vector<FanPart> parts(space->fan_count(), FanPart::none());
  return SymSet(std::move(space), named, std::move(parts));
}

SymSet SymSet::point(std::shared_ptr<const SpaceSpec> space, const PointClass& p) {
  if (p.is_named()) return of_named(std::move(space), mask_bit(p.named));
  SymSet s = empty(std::move(space));
  return s.with_part(p.fan, FanPart::fin({p.index}));
}

bool SymSet::contains(const PointClass& p) const {
  if (p.is_named()) return contains_named(p.named);
  return fans_[p.fan].contains(p.index);
}

bool SymSet::is_empty_set() const {
  if (named_) return false;
  for (const FanPart& p : fans_)
    if (p.nonempty()) return false;
  return true;
}

bool SymSet::is_full_set() const {
  if (named_ != space_->all_named()) return false;
  for (const FanPart& p : fans_)
    if (!p.is_full()) return false;
  return true;
}

SymSet SymSet::with_named(Mask named) const { return SymSet(space_, named, fans_); }

SymSet SymSet::with_part(int f, FanPart part) const {
  std::vector<FanPart> parts = fans_;
  parts[f] = std::move(part);
  return SymSet(space_, named_, std::move(parts));
}

bool SymSet::operator==(const SymSet& o) const {
  return space_ == o.space_ && named_ == o.named_ && fans_ == o.fans_;
}

bool sym_less(const SymSet& a, const SymSet& b) {
  if (a.named_mask() != b.named_mask()) return a.named_mask() < b.named_mask();
  for (int f = 0; f < a.spec().fan_count(); ++f) {
    if (a.part(f) == b.part(f)) continue;
    return part_less(a.part(f), b.part(f));
  }
  return false;
}

SymSet complement(const SymSet& s) {
  std::vector<FanPart> parts;
  parts.reserve(s.spec().fan_count());
  for (int f = 0; f < s.spec().fan_count(); ++f) parts.push_back(part_complement(s.part(f)));
  return SymSet(s.space(), s.spec().all_named() & ~s.named_mask(), std::move(parts));
}

SymSet set_union(const SymSet& a, const SymSet& b) {
  require_same_space(a, b);
  std::vector<FanPart> parts;
  parts.reserve(a.spec().fan_count());
  for (int f = 0; f < a.spec().fan_count(); ++f)
    parts.push_back(part_union(a.part(f), b.part(f)));
  return SymSet(a.space(), a.named_mask() | b.named_mask(), std::move(parts));
}

SymSet set_intersect(const SymSet& a, const SymSet& b) {
  require_same_space(a, b);
  std::vector<FanPart> parts;
  parts.reserve(a.spec().fan_count());
  for (int f = 0; f < a.spec().fan_count(); ++f)
    parts.push_back(part_intersect(a.part(f), b.part(f)));
  return SymSet(a.space(), a.named_mask() & b.named_mask(), std::move(parts));
}

SymSet set_difference(const SymSet& a, const SymSet& b) {
  return set_intersect(a, complement(b));
}

bool is_subset(const SymSet& a, const SymSet& b) {
  require_same_space(a, b);
  if (a.named_mask() & ~b.named_mask()) return false;
  for (int f = 0; f < a.spec().fan_count(); ++f)
    if (!part_subset(a.part(f), b.part(f))) return false;
  return true;
}

SymSet closure(const SymSet& s) {
  Mask named = s.named_mask();
  for (int f = 0; f < s.spec().fan_count(); ++f)
    if (s.part(f).cofinite) named |= mask_bit(s.spec().fan(f).limit);
  return s.with_named(named);
}

SymSet interior(const SymSet& s) { return complement(closure(complement(s))); }

SymSet down_closure(const SymSet& s) {
  const SpaceSpec& sp = s.spec();
  Mask named = 0;
  for (int p : mask_indices(s.named_mask())) named |= sp.down_named(p);
  std::vector<FanPart> parts;
  parts.reserve(sp.fan_count());
  for (int f = 0; f < sp.fan_count(); ++f) {
    const Fan& fan = sp.fan(f);
    if (s.part(f).nonempty()) named |= fan.below;
    // every member sits under each named point of above(f)
    parts.push_back((s.named_mask() & fan.above) ? FanPart::full() : s.part(f));
  }
  return SymSet(s.space(), named, std::move(parts));
}

SymSet up_closure(const SymSet& s) {
  const SpaceSpec& sp = s.spec();
  Mask named = 0;
  for (int p : mask_indices(s.named_mask())) named |= sp.up_named(p);
  std::vector<FanPart> parts;
  parts.reserve(sp.fan_count());
  for (int f = 0; f < sp.fan_count(); ++f) {
    const Fan& fan = sp.fan(f);
    if (s.part(f).nonempty()) named |= fan.above;
    parts.push_back((s.named_mask() & fan.below) ? FanPart::full() : s.part(f));
  }
  return SymSet(s.space(), named, std::move(parts));
}

SymSet cl1(const SymSet& s) { return down_closure(closure(s)); }
SymSet cl2(const SymSet& s) { return up_closure(closure(s)); }
SymSet int1(const SymSet& s) { return complement(down_closure(complement(interior(s)))); }
SymSet int2(const SymSet& s) { return complement(up_closure(complement(interior(s)))); }

bool is_upset(const SymSet& s) { return up_closure(s) == s; }
bool is_downset(const SymSet& s) { return down_closure(s) == s; }
bool is_open(const SymSet& s) { return interior(s) == s; }
bool is_closed(const SymSet& s) { return closure(s) == s; }
bool is_clopen(const SymSet& s) { return is_open(s) && is_closed(s); }

SymSet min_set(std::shared_ptr<const SpaceSpec> space) {
  const SpaceSpec& sp = *space;
  Mask above_any = 0;
  for (int f = 0; f < sp.fan_count(); ++f) above_any |= sp.fan(f).above;
  Mask named = 0;
  for (int p = 0; p < sp.named_count(); ++p)
    if (sp.down_named(p) == mask_bit(p) && !mask_has(above_any, p)) named |= mask_bit(p);
  std::vector<FanPart> parts;
  parts.reserve(sp.fan_count());
  for (int f = 0; f < sp.fan_count(); ++f)
    parts.push_back(sp.fan(f).below ? FanPart::none() : FanPart::full());
  return SymSet(std::move(space), named, std::move(parts));
}

SymSet max_set(std::shared_ptr<const SpaceSpec> space) {
  const SpaceSpec& sp = *space;
  Mask below_any = 0;
  for (int f = 0; f < sp.fan_count(); ++f) below_any |= sp.fan(f).below;
  Mask named = 0;
  for (int p = 0; p < sp.named_count(); ++p)
    if (sp.up_named(p) == mask_bit(p) && !mask_has(below_any, p)) named |= mask_bit(p);
  std::vector<FanPart> parts;
  parts.reserve(sp.fan_count());
  for (int f = 0; f < sp.fan_count(); ++f)
    parts.push_back(sp.fan(f).above ? FanPart::none() : FanPart::full());
  return SymSet(std::move(space), named, std::move(parts));
}

bool is_dense(const SymSet& s, const SymSet& target) {
  if (!is_subset(s, target)) throw std::invalid_argument("is_dense needs s subset of target");
  return is_subset(target, closure(s));
}

SymSet symset_from_string(const std::string& text, std::shared_ptr<const SpaceSpec> space) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("malformed symbolic set \"" + text + "\": " + why);
  };
  std::vector<std::string> chunks;
  size_t start = 0;
  while (start <= text.size()) {
    size_t sep = text.find(';', start);
    if (sep == std::string::npos) sep = text.size();
    chunks.push_back(text.substr(start, sep - start));
    start = sep + 1;
  }
  if (chunks.empty() || chunks.front().size() < 2 || chunks.front().front() != '{' ||
      chunks.front().back() != '}')
    throw bad("expected {named,...} first");

  auto split_commas = [](const std::string& body) {
    std::vector<std::string> out;
    size_t s = 0;
    while (s < body.size()) {
      size_t c = body.find(',', s);
      if (c == std::string::npos) c = body.size();
      if (c > s) out.push_back(body.substr(s, c - s));
      s = c + 1;
    }
    return out;
  };

  Mask named = 0;
  for (const std::string& id : split_commas(chunks.front().substr(1, chunks.front().size() - 2))) {
    auto idx = space->named_index(id);
    if (!idx) throw bad("unknown named point " + id);
    named |= mask_bit(*idx);
  }
  std::vector<FanPart> parts(space->fan_count(), FanPart::none());
  for (size_t k = 1; k < chunks.size(); ++k) {
    const std::string& c = chunks[k];
    if (c.empty()) continue;
    size_t colon = c.find(':');
    if (colon == std::string::npos || c.back() != '}') throw bad("expected fan:kind{...}");
    auto f = space->fan_index(c.substr(0, colon));
    if (!f) throw bad("unknown fan in " + c);
    std::string rest = c.substr(colon + 1);
    bool cof;
    if (rest.rfind("cofin{", 0) == 0)
      cof = true;
    else if (rest.rfind("fin{", 0) == 0)
      cof = false;
    else
      throw bad("expected fin{...} or cofin{...}");
    std::string body = rest.substr(rest.find('{') + 1);
    body.pop_back();
    std::vector<int> sup;
    for (const std::string& n : split_commas(body)) sup.push_back(std::stoi(n));
    parts[*f] = cof ? FanPart::cofin(std::move(sup)) : FanPart::fin(std::move(sup));
  }
  return SymSet(std::move(space), named, std::move(parts));
}

std::string to_string(const SymSet& s) {
  const SpaceSpec& sp = s.spec();
  std::string out = "{";
  bool first = true;
  for (int p : mask_indices(s.named_mask())) {
    if (!first) out += ",";
    out += sp.named_id(p);
    first = false;
  }
  out += "}";
  for (int f = 0; f < sp.fan_count(); ++f) {
    const FanPart& part = s.part(f);
    if (part.is_empty()) continue;
    out += ";" + sp.fan(f).id + (part.cofinite ? ":cofin{" : ":fin{");
    for (size_t i = 0; i < part.support.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(part.support[i]);
    }
    out += "}";
  }
  return out;
}

}  // namespace latsep
