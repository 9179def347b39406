#include "latsep/space.hpp"

#include <stdexcept>

namespace latsep {

SpaceSpec::SpaceSpec(std::vector<std::string> named, std::vector<Mask> named_leq_rows,
                     std::vector<Fan> fans)
    : named_(FinPoset(std::move(named), std::move(named_leq_rows))), fans_(std::move(fans)) {
  if (fans_.size() > kMaxElements) throw std::invalid_argument("too many fans");
  limit_fans_.assign(named_.size(), {});
  for (size_t f = 0; f < fans_.size(); ++f) {
    const Fan& fan = fans_[f];
    if (fan.limit < 0 || fan.limit >= named_.size())
      throw std::invalid_argument("fan limit out of range: " + fan.id);
    if ((fan.below | fan.above) & ~named_.all())
      throw std::invalid_argument("fan relation names unknown point: " + fan.id);
    limit_fans_[fan.limit].push_back(static_cast<int>(f));
  }
}

std::shared_ptr<const SpaceSpec> SpaceSpec::make(
    std::vector<std::string> named, const std::vector<std::pair<std::string, std::string>>& leq,
    std::vector<Fan> fans) {
  FinPoset order = FinPoset::from_pairs(named, leq);
  std::vector<Mask> rows;
  rows.reserve(named.size());
  for (int i = 0; i < order.size(); ++i) rows.push_back(order.up_of(i));
  return std::make_shared<const SpaceSpec>(std::move(named), std::move(rows), std::move(fans));
}

std::optional<int> SpaceSpec::fan_index(const std::string& id) const {
  for (int f = 0; f < fan_count(); ++f)
    if (fans_[f].id == id) return f;
  return std::nullopt;
}

std::vector<PointClass> point_classes(const SpaceSpec& spec, int generic_index) {
  std::vector<PointClass> out;
  for (int i = 0; i < spec.named_count(); ++i) out.push_back(PointClass::named_point(i));
  for (int f = 0; f < spec.fan_count(); ++f)
    out.push_back(PointClass::fan_member(f, generic_index));
  return out;
}

std::string point_label(const SpaceSpec& spec, const PointClass& p) {
  if (p.is_named()) return spec.named_id(p.named);
  return spec.fan(p.fan).id + "[" + std::to_string(p.index) + "]";
}

std::optional<PointClass> parse_point(const SpaceSpec& spec, const std::string& label) {
  if (auto n = spec.named_index(label)) return PointClass::named_point(*n);
  auto open = label.find('[');
  if (open == std::string::npos || label.back() != ']') return std::nullopt;
  auto f = spec.fan_index(label.substr(0, open));
  if (!f) return std::nullopt;
  try {
    int idx = std::stoi(label.substr(open + 1, label.size() - open - 2));
    return PointClass::fan_member(*f, idx);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool point_leq(const SpaceSpec& spec, const PointClass& a, const PointClass& b) {
  if (a.is_named() && b.is_named()) return spec.named_leq(a.named, b.named);
  if (a.is_named()) return mask_has(spec.fan(b.fan).below, a.named);
  if (b.is_named()) return mask_has(spec.fan(a.fan).above, b.named);
  return a.fan == b.fan && a.index == b.index;
}

std::vector<SpaceViolation> validate_space(const SpaceSpec& spec) {
  std::vector<SpaceViolation> out;
  const FinPoset& order = spec.named_order();
  if (auto bad = validate(order)) out.push_back({"named order " + bad->axiom, bad->witness});

  for (int f = 0; f < spec.fan_count(); ++f) {
    const Fan& fan = spec.fan(f);
    // closedness of <=: a point under (over) a convergent sequence is under
    // (over) its limit
    for (int q : mask_indices(fan.below))
      if (!order.leq(q, fan.limit))
        out.push_back({"order closedness", "(" + order.id(q) + "," + order.id(fan.limit) +
                                               ") via fan " + fan.id});
    for (int q : mask_indices(fan.above))
      if (!order.leq(fan.limit, q))
        out.push_back({"order closedness", "(" + order.id(fan.limit) + "," + order.id(q) +
                                               ") via fan " + fan.id});
    if (down_closure(order, fan.below) != fan.below)
      out.push_back({"below not down-closed", fan.id});
    if (up_closure(order, fan.above) != fan.above)
      out.push_back({"above not up-closed", fan.id});
    if (fan.below & fan.above)
      out.push_back({"effective order antisymmetry",
                     fan.id + " has " + format_set(order, fan.below & fan.above) +
                         " both below and above its members"});
  }
  // members are incomparable across fans: a named point over one fan and
  // under another would force member-member relations by transitivity
  for (int f = 0; f < spec.fan_count(); ++f)
    for (int g = 0; g < spec.fan_count(); ++g) {
      if (f == g) continue;
      Mask shared = spec.fan(f).above & spec.fan(g).below;
      if (shared)
        out.push_back({"fan incomparability",
                       format_set(order, shared) + " above " + spec.fan(f).id + " and below " +
                           spec.fan(g).id});
    }
  if (!out.empty()) return out;  // separation check assumes a sane order

  // Priestley separation, constructively: for x !<= y the minimal clopen
  // upset around x is up(x) plus cofinite tails at limits; y must be outside
  // its mandatory part (named up-set and full fans).
  auto separated = [&](const PointClass& x, const PointClass& y) {
    Mask named_req;  // named points every clopen upset around x contains
    Mask full_fans = 0;
    if (x.is_named())
      named_req = order.up_of(x.named);
    else
      named_req = up_closure(order, spec.fan(x.fan).above);
    for (int f = 0; f < spec.fan_count(); ++f)
      if (spec.fan(f).below & named_req) full_fans |= mask_bit(f);
    if (y.is_named()) return !mask_has(named_req, y.named);
    if (!x.is_named() && x.fan == y.fan && x.index == y.index) return false;
    // fan tails admit arbitrary finite exclusions, so only full fans trap y
    return !mask_has(full_fans, y.fan);
  };
  for (const PointClass& x : point_classes(spec, 0))
    for (const PointClass& y : point_classes(spec, 0)) {
      PointClass yy = y;
      if (!x.is_named() && !y.is_named() && x.fan == y.fan) yy.index = 1;  // distinct members
      if (x == yy) continue;
      if (point_leq(spec, x, yy)) continue;
      if (!separated(x, yy))
        out.push_back({"Priestley separation",
                       point_label(spec, x) + " vs " + point_label(spec, yy)});
    }
  return out;
}

}  // namespace latsep
