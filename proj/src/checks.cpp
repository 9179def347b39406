#include "latsep/checks.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace latsep {

namespace {

using Space = std::shared_ptr<const SpaceSpec>;

// First point class inside a nonempty symbolic set (named points first).
PointClass first_point(const SymSet& s) {
  int n = mask_lowest(s.named_mask());
  if (n >= 0) return PointClass::named_point(n);
  for (int f = 0; f < s.spec().fan_count(); ++f) {
    const FanPart& p = s.part(f);
    if (p.is_empty()) continue;
    if (!p.cofinite) return PointClass::fan_member(f, p.support.front());
    int i = 0;
    while (p.contains(i) == false) ++i;
    return PointClass::fan_member(f, i);
  }
  throw std::logic_error("first_point on empty set");
}

// Mandatory skeleton of any clopen upset containing the seed named points:
// the named up-set closed under fan limits/aboves, the fans forced in full,
// and the fans forced to hold a cofinite tail (with free finite exclusions).
struct Skeleton {
  Mask named = 0;
  Mask full_fans = 0;
  Mask cof_fans = 0;  // cofinite tails, disjoint from full_fans
};

Skeleton clopen_upset_skeleton(const SpaceSpec& sp, Mask seed) {
  Skeleton sk;
  sk.named = up_closure(sp.named_order(), seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int f = 0; f < sp.fan_count(); ++f) {
      const Fan& fan = sp.fan(f);
      Mask as_full = sk.full_fans | ((fan.below & sk.named) ? mask_bit(f) : 0);
      Mask as_cof = sk.cof_fans | (mask_has(sk.named, fan.limit) ? mask_bit(f) : 0);
      as_cof &= ~as_full;
      Mask named = sk.named;
      if ((as_full | as_cof) & mask_bit(f))
        named |= fan.above | mask_bit(fan.limit);
      named = up_closure(sp.named_order(), named);
      if (as_full != sk.full_fans || as_cof != sk.cof_fans || named != sk.named) {
        sk.full_fans = as_full;
        sk.cof_fans = as_cof;
        sk.named = named;
        grew = true;
      }
    }
  }
  return sk;
}

// Decides membership of a point class in R(U) (bl = false) or R_BL(U)
// (bl = true): is there a clopen upset V containing the point with
// down(V) inside U, resp. int(down(V)) inside U? The minimal V is the
// skeleton around the point; cofinite tails admit arbitrary finite
// exclusions, which only relaxes the fan conditions to "U cofinite there".
bool in_regular_part(const SymSet& u, const PointClass& p, bool bl) {
  const SpaceSpec& sp = u.spec();
  if (!u.contains(p)) return false;

  Skeleton sk;
  Mask member_fan = 0;
  if (p.is_named()) {
    sk = clopen_upset_skeleton(sp, mask_bit(p.named));
  } else {
    sk = clopen_upset_skeleton(sp, sp.fan(p.fan).above);
    if (!mask_has(sk.full_fans | sk.cof_fans, p.fan)) member_fan = mask_bit(p.fan);
  }

  // D = down(V): named part, then per fan full / cofinite / the one member
  Mask d_named = 0;
  for (int q : mask_indices(sk.named)) d_named |= sp.down_named(q);
  Mask forced_full = sk.full_fans;
  for (int f = 0; f < sp.fan_count(); ++f)
    if (sp.fan(f).above & sk.named) forced_full |= mask_bit(f);
  Mask cof_only = sk.cof_fans & ~forced_full;
  for (int f : mask_indices(forced_full | cof_only | member_fan)) d_named |= sp.fan(f).below;

  if (bl) {
    // interior drops named limits whose fans contribute only finite parts
    Mask dropped = 0;
    for (int q : mask_indices(d_named)) {
      for (int f : sp.fans_with_limit(q))
        if (!mask_has(forced_full | cof_only, f)) {
          dropped |= mask_bit(q);
          break;
        }
    }
    d_named &= ~dropped;
  }

  if (d_named & ~u.named_mask()) return false;
  for (int f : mask_indices(forced_full))
    if (!u.part(f).is_full()) return false;
  for (int f : mask_indices(cof_only))
    if (!u.part(f).cofinite) return false;
  return true;  // the member's own index was checked via u.contains(p)
}

SymSet regular_part_impl(const SymSet& u, bool bl) {
  if (!is_clopen(u) || !is_upset(u))
    throw std::invalid_argument("regular part needs a clopen upset");
  const SpaceSpec& sp = u.spec();
  Mask named = 0;
  for (int p = 0; p < sp.named_count(); ++p)
    if (in_regular_part(u, PointClass::named_point(p), bl)) named |= mask_bit(p);
  SymSet out = SymSet::of_named(u.space(), named);
  for (int f = 0; f < sp.fan_count(); ++f) {
    if (u.part(f).is_empty()) continue;
    // membership of a member is its U-membership and an index-free condition
    int witness_idx = 0;
    while (!u.part(f).contains(witness_idx)) ++witness_idx;
    if (in_regular_part(u, PointClass::fan_member(f, witness_idx), bl))
      out = out.with_part(f, u.part(f));
  }
  return out;
}

CheckReport density_report(const char* check, const char* target, const SymSet& dense_candidate,
                           const SymSet& in, const std::string& criterion) {
  CheckReport rep;
  rep.check = check;
  rep.target = target;
  rep.note(criterion);
  if (is_dense(dense_candidate, in)) {
    rep.verdict = Verdict::True;
  } else {
    rep.verdict = Verdict::False;
    SymSet out = set_difference(in, closure(dense_candidate));
    PointClass p = first_point(out);
    rep.witness = point_label(in.spec(), p) + " outside the closure";
    rep.put("point", point_label(in.spec(), p));
    rep.put("candidate", to_string(dense_candidate));
  }
  return rep;
}

}  // namespace

CheckReport check_subfit_L(Space space) {
  return density_report("subfit_L", "L", min_set(space), SymSet::full(space),
                        "criterion: min X dense in X");
}

CheckReport check_wsubfit_L(Space space) {
  return density_report("wsubfit_L", "L", max_set(space), SymSet::full(space),
                        "criterion: max X dense in X");
}

CheckReport check_sigma_subfit(Space space) {
  CheckReport rep;
  rep.check = "sigma_subfit";
  rep.target = "sigma";
  rep.note("criterion: min X = X (order trivial)");
  SymSet mins = min_set(space);
  if (mins.is_full_set()) {
    rep.verdict = Verdict::True;
  } else {
    rep.verdict = Verdict::False;
    PointClass p = first_point(set_difference(SymSet::full(space), mins));
    rep.witness = point_label(*space, p) + " is not minimal";
    rep.put("point", point_label(*space, p));
  }
  return rep;
}

CheckReport check_I_subfit(Space space) {
  CheckReport rep;
  rep.check = "subfit_I";
  rep.target = "I";
  rep.verdict = Verdict::True;
  rep.note("criterion: x in cl(min down(x)) for every point class");
  SymSet mins = min_set(space);
  for (const PointClass& p : point_classes(*space)) {
    SymSet down = down_closure(SymSet::point(space, p));
    SymSet min_below = set_intersect(mins, down);
    rep.note(point_label(*space, p) + ": min down(x) = " + to_string(min_below));
    if (!closure(min_below).contains(p)) {
      rep.verdict = Verdict::False;
      rep.witness = point_label(*space, p) + " not in cl(min down(x))";
      rep.put("point", point_label(*space, p));
      rep.put("min_below", to_string(min_below));
      return rep;
    }
  }
  return rep;
}

CheckReport check_skula_cross(Space space, int bound) {
  CheckReport rep;
  rep.check = "skula_cross";
  rep.target = "I";
  rep.bound = bound;
  rep.note("criterion: min X meets every nonempty U \\ V of enumerated open upsets");
  SymSet mins = min_set(space);
  std::vector<SymSet> opups = enumerate_shapes(space, bound, ViewKind::OpUp);
  for (const SymSet& u : opups)
    for (const SymSet& v : opups) {
      SymSet diff = set_difference(u, v);
      if (diff.is_empty_set()) continue;
      if (set_intersect(mins, diff).is_empty_set()) {
        rep.verdict = Verdict::False;
        rep.witness = "Skula-basic set U \\ V avoids min X";
        rep.put("U", to_string(u));
        rep.put("V", to_string(v));
        return rep;
      }
    }
  rep.verdict = Verdict::VerifiedAtBound;
  return rep;
}

bool rather_below_sym(const SymSet& a, const SymSet& b) {
  if (!is_clopen(a) || !is_upset(a) || !is_clopen(b) || !is_upset(b))
    throw std::invalid_argument("rather_below_sym needs clopen upsets");
  return is_subset(down_closure(a), b);
}

bool rather_below_bl(const SymSet& u, const SymSet& v) {
  if (int1(closure(u)) != u || int1(closure(v)) != v)
    throw std::invalid_argument("rather_below_bl needs BL-members");
  return is_subset(interior(down_closure(closure(u))), closure(v));
}

SymSet regular_part(const SymSet& u) { return regular_part_impl(u, false); }
SymSet regular_part_bl(const SymSet& u) { return regular_part_impl(u, true); }

CheckReport check_regular(Space space, RegularTarget target, int bound) {
  CheckReport rep;
  rep.check = target == RegularTarget::L ? "regular_L" : "regular_BL";
  rep.target = target == RegularTarget::L ? "L" : "BL";
  rep.bound = bound;
  rep.note(target == RegularTarget::L
               ? "criterion: R(U) dense in U for every clopen upset U"
               : "criterion: R_BL(U) dense in U for every clopen upset U");
  for (const SymSet& u : enumerate_shapes(space, bound, ViewKind::L)) {
    SymSet r = target == RegularTarget::L ? regular_part(u) : regular_part_bl(u);
    if (!is_dense(r, u)) {
      rep.verdict = Verdict::False;
      rep.witness = "regular part not dense in U";
      rep.put("U", to_string(u));
      rep.put("R", to_string(r));
      rep.put("missed", to_string(set_difference(u, closure(r))));
      return rep;
    }
  }
  rep.verdict = Verdict::VerifiedAtBound;
  return rep;
}

CheckReport check_A_regular_BL(Space space, int bound) {
  CheckReport inner = check_regular(space, RegularTarget::L, bound);
  CheckReport rep;
  rep.check = "a_regular_BL";
  rep.target = "BL";
  rep.bound = inner.bound;
  rep.verdict = inner.verdict;
  rep.witness = inner.witness;
  rep.detail = inner.detail;
  rep.note("L(X) is join-dense in BL(X), so BL(X) is L(X)-regular iff L(X) is regular");
  for (const std::string& t : inner.trace) rep.note(t);
  return rep;
}

CheckReport check_boolean(Space space, BooleanTarget target) {
  CheckReport rep;
  rep.check = "boolean";
  SymSet full = SymSet::full(space);
  SymSet mins = min_set(space);
  SymSet maxs = max_set(space);
  auto fail_point = [&](const SymSet& missing, const std::string& why) {
    rep.verdict = Verdict::False;
    PointClass p = first_point(missing);
    rep.witness = point_label(*space, p) + " " + why;
    rep.put("point", point_label(*space, p));
  };
  switch (target) {
    case BooleanTarget::L:
      rep.check = "boolean_L";
      rep.target = "L";
      rep.note("criterion: max X = X");
      if (maxs.is_full_set())
        rep.verdict = Verdict::True;
      else
        fail_point(set_difference(full, maxs), "is not maximal");
      break;
    case BooleanTarget::BL:
      rep.check = "boolean_BL";
      rep.target = "BL";
      rep.note("criterion: max X dense in X");
      return [&] {
        CheckReport r = density_report("boolean_BL", "BL", maxs, full,
                                       "criterion: max X dense in X");
        return r;
      }();
    case BooleanTarget::DM:
      rep.check = "boolean_DM";
      rep.target = "DM";
      rep.note("criterion: min X and max X dense in X");
      if (!is_dense(mins, full)) {
        fail_point(set_difference(full, closure(mins)), "outside cl(min X)");
      } else if (!is_dense(maxs, full)) {
        fail_point(set_difference(full, closure(maxs)), "outside cl(max X)");
      } else {
        rep.verdict = Verdict::True;
      }
      break;
    case BooleanTarget::Sigma:
      rep.check = "boolean_sigma";
      rep.target = "sigma";
      rep.note("criterion: max X = X");
      if (maxs.is_full_set())
        rep.verdict = Verdict::True;
      else
        fail_point(set_difference(full, maxs), "is not maximal");
      break;
    case BooleanTarget::I:
      rep.check = "boolean_I";
      rep.target = "I";
      rep.note("criterion: max X = X and X finite (no fans)");
      if (space->fan_count() > 0) {
        rep.verdict = Verdict::False;
        rep.witness = "space is infinite (fan " + space->fan(0).id + ")";
      } else if (maxs.is_full_set()) {
        rep.verdict = Verdict::True;
      } else {
        fail_point(set_difference(full, maxs), "is not maximal");
      }
      break;
  }
  return rep;
}

CheckReport check_proheyting(Space space, int bound) {
  CheckReport rep;
  rep.check = "proheyting";
  rep.target = "L";
  rep.bound = bound;
  rep.note("criterion: X \\ down(a \\ b) is a DM-upset for enumerated clopen upsets a, b");
  std::vector<SymSet> clups = enumerate_shapes(space, bound, ViewKind::L);
  for (const SymSet& a : clups)
    for (const SymSet& b : clups) {
      SymSet u = rel_annihilator_upset(a, b);
      if (int1(cl2(u)) != u) {
        rep.verdict = Verdict::False;
        rep.witness = "relative annihilator upset is not a DM-upset";
        rep.put("a", to_string(a));
        rep.put("b", to_string(b));
        rep.put("annihilator", to_string(u));
        return rep;
      }
    }
  rep.verdict = Verdict::VerifiedAtBound;
  return rep;
}

namespace {

// Candidate points of U \ V, fans first; mirrors the case split used to
// witness subfitness on these spaces.
std::vector<PointClass> candidate_points(const SymSet& diff) {
  std::vector<PointClass> out;
  const SpaceSpec& sp = diff.spec();
  for (int f = 0; f < sp.fan_count(); ++f) {
    const FanPart& p = diff.part(f);
    if (p.is_empty()) continue;
    if (!p.cofinite) {
      for (int i : p.support) out.push_back(PointClass::fan_member(f, i));
    } else {
      int i = 0;
      while (!p.contains(i)) ++i;
      out.push_back(PointClass::fan_member(f, i));
    }
  }
  for (int n : mask_indices(diff.named_mask())) out.push_back(PointClass::named_point(n));
  return out;
}

struct PairSearch {
  bool all_witnessed = true;
  std::string unwitnessed;  // description of the first failing pair
  std::vector<std::array<std::string, 4>> witnesses;  // U, V, point, W
};

PairSearch subfit_pair_search(const LatticeView& view, int bound) {
  PairSearch out;
  SymSet full = SymSet::full(view.space);
  std::vector<SymSet> shapes = enumerate_shapes(view.space, bound, view.kind);
  int esc_bound = std::min(2 * bound, 4);
  std::vector<SymSet> escalated;  // filled lazily

  auto works = [&](const SymSet& u, const SymSet& v, const SymSet& w) {
    return view_join(view, {u, w}) == full && !(view_join(view, {v, w}) == full);
  };

  for (const SymSet& u : shapes)
    for (const SymSet& v : shapes) {
      if (is_subset(u, v)) continue;
      SymSet diff = set_difference(u, v);
      bool found = false;
      for (const PointClass& p : candidate_points(diff)) {
        SymSet w = complement(down_closure(SymSet::point(view.space, p)));
        if (is_member(view, w) && works(u, v, w)) {
          out.witnesses.push_back({to_string(u), to_string(v), point_label(*view.space, p),
                                   to_string(w)});
          found = true;
          break;
        }
      }
      if (!found)
        for (const SymSet& w : shapes)
          if (works(u, v, w)) {
            out.witnesses.push_back({to_string(u), to_string(v), "", to_string(w)});
            found = true;
            break;
          }
      if (!found && esc_bound > bound) {
        if (escalated.empty()) escalated = enumerate_shapes(view.space, esc_bound, view.kind);
        for (const SymSet& w : escalated)
          if (works(u, v, w)) {
            out.witnesses.push_back({to_string(u), to_string(v), "", to_string(w)});
            found = true;
            break;
          }
      }
      if (!found) {
        out.all_witnessed = false;
        out.unwitnessed = "U=" + to_string(u) + " V=" + to_string(v);
        return out;
      }
    }
  return out;
}

}  // namespace

CheckReport check_subfit_view(Space space, ViewKind kind, int bound) {
  if (kind == ViewKind::L || kind == ViewKind::Up)
    throw std::invalid_argument("check_subfit_view supports DM, BL, pH, OpUp");
  CheckReport rep;
  rep.check = std::string("subfit_") + view_name(kind);
  rep.target = view_name(kind);
  rep.bound = bound;

  LatticeView view{space, kind, bound};
  PairSearch search = subfit_pair_search(view, bound);
  for (const auto& w : search.witnesses)
    rep.put("witness", "U=" + w[0] + " V=" + w[1] + (w[2].empty() ? "" : " point=" + w[2]) +
                           " W=" + w[3]);
  rep.note(search.all_witnessed
               ? "witness search: every enumerated pair witnessed"
               : "witness search: unwitnessed pair " + search.unwitnessed);

  if (kind == ViewKind::DM) {
    CheckReport base = check_subfit_L(space);
    rep.verdict = base.verdict;
    rep.witness = base.witness;
    for (auto& d : base.detail) rep.detail.push_back(d);
    rep.note("DM(X) is subfit iff L(X) is subfit (join- and meet-dense extension)");
    return rep;
  }
  if (kind == ViewKind::OpUp) {
    CheckReport base = check_I_subfit(space);
    rep.verdict = base.verdict;
    rep.witness = base.witness;
    for (auto& d : base.detail) rep.detail.push_back(d);
    rep.note("OpUp(X) subfitness decided by the pointwise criterion x in cl(min down(x))");
    return rep;
  }
  // BL / pH: no pointwise criterion; bounded semi-decision only
  if (search.all_witnessed) {
    rep.verdict = Verdict::VerifiedAtBound;
  } else {
    rep.verdict = Verdict::Unknown;
    rep.witness = "pair without witness up to escalated bound: " + search.unwitnessed;
  }
  return rep;
}

}  // namespace latsep
