#include "latsep/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsep {

namespace {

std::shared_ptr<const SpaceSpec> make_space(
    std::vector<std::string> named, std::vector<std::pair<std::string, std::string>> leq,
    std::vector<std::tuple<std::string, std::string, std::vector<std::string>,
                           std::vector<std::string>>>
        fans) {
  // resolve fan relations after the named order exists
  FinPoset order = FinPoset::from_pairs(named, leq);
  std::vector<Fan> out;
  for (auto& [id, limit, below, above] : fans) {
    Fan f;
    f.id = id;
    f.limit = *order.index_of(limit);
    for (const std::string& q : below) f.below |= mask_bit(*order.index_of(q));
    for (const std::string& q : above) f.above |= mask_bit(*order.index_of(q));
    out.push_back(f);
  }
  auto spec = SpaceSpec::make(std::move(named), leq, std::move(out));
  if (!validate_space(*spec).empty()) throw std::logic_error("built-in space invalid");
  return spec;
}

FinDLat make_chain(int n) {
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i)
    ids[i] = i == 0 ? "0" : (i == n - 1 ? "1" : std::string(1, char('a' + i - 1)));
  if (n == 1) ids[0] = "0";
  std::vector<Mask> rows(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) rows[i] |= mask_bit(j);
  return FinDLat::from_poset(FinPoset(std::move(ids), std::move(rows)));
}

FinDLat make_bool_cube(int k) {
  std::vector<std::string> ids(k);
  for (int i = 0; i < k; ++i) ids[i] = "g" + std::to_string(i);
  std::vector<Mask> rows(k, 0);
  for (int i = 0; i < k; ++i) rows[i] = mask_bit(i);
  return lattice_of_downsets(FinPoset(std::move(ids), std::move(rows)));
}

FinDLat make_kite() {
  // downsets of the poset c < a, c < b: a five-element non-Boolean lattice
  FinPoset v = FinPoset::from_pairs({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}});
  return lattice_of_downsets(v);
}

}  // namespace

std::shared_ptr<const SpaceSpec> space_fig1() {
  return make_space({"x_inf", "y"}, {{"x_inf", "y"}}, {{"x", "x_inf", {}, {}}});
}

std::shared_ptr<const SpaceSpec> space_fig2() {
  return make_space({"x_inf", "y_inf"}, {{"x_inf", "y_inf"}},
                    {{"x", "x_inf", {}, {}}, {"y", "y_inf", {}, {}}});
}

std::shared_ptr<const SpaceSpec> space_fig3() {
  return make_space({"x_inf"}, {}, {{"x", "x_inf", {"x_inf"}, {}}});
}

std::shared_ptr<const SpaceSpec> space_fig4() {
  return make_space({"x_inf", "y_inf", "z"}, {{"x_inf", "y_inf"}, {"z", "y_inf"}},
                    {{"x", "x_inf", {}, {}}, {"y", "y_inf", {}, {}}});
}

std::shared_ptr<const SpaceSpec> space_cofinite_N() {
  // order-reversal of fig3: fan members below their limit; the clopen upsets
  // form the lattice of the empty set plus the cofinite subsets
  return make_space({"x_inf"}, {}, {{"x", "x_inf", {}, {"x_inf"}}});
}

std::shared_ptr<const SpaceSpec> space_fan_disc() {
  // one-point compactification of a countable discrete set, trivial order
  return make_space({"x_inf"}, {}, {{"x", "x_inf", {}, {}}});
}

std::vector<std::string> space_check_names() {
  return {"subfit_L",   "wsubfit_L",  "sigma_subfit", "subfit_I",   "skula_cross",
          "subfit_DM",  "subfit_BL",  "subfit_pH",    "subfit_OpUp", "regular_L",
          "regular_BL", "a_regular_BL", "boolean_L",  "boolean_DM", "boolean_BL",
          "boolean_I",  "boolean_sigma", "proheyting"};
}

std::vector<std::string> lattice_check_names() {
  return {"vsubfit", "wsubfit", "regular", "boolean", "heyting", "proheyting"};
}

CheckReport run_space_check(std::shared_ptr<const SpaceSpec> space, const std::string& name,
                            int bound) {
  if (name == "subfit_L") return check_subfit_L(space);
  if (name == "wsubfit_L") return check_wsubfit_L(space);
  if (name == "sigma_subfit") return check_sigma_subfit(space);
  if (name == "subfit_I") return check_I_subfit(space);
  if (name == "skula_cross") return check_skula_cross(space, bound);
  if (name == "subfit_DM") return check_subfit_view(space, ViewKind::DM, bound);
  if (name == "subfit_BL") return check_subfit_view(space, ViewKind::BL, bound);
  if (name == "subfit_pH") return check_subfit_view(space, ViewKind::PH, bound);
  if (name == "subfit_OpUp") return check_subfit_view(space, ViewKind::OpUp, bound);
  if (name == "regular_L") return check_regular(space, RegularTarget::L, bound);
  if (name == "regular_BL") return check_regular(space, RegularTarget::BL, bound);
  if (name == "a_regular_BL") return check_A_regular_BL(space, bound);
  if (name == "boolean_L") return check_boolean(space, BooleanTarget::L);
  if (name == "boolean_DM") return check_boolean(space, BooleanTarget::DM);
  if (name == "boolean_BL") return check_boolean(space, BooleanTarget::BL);
  if (name == "boolean_I") return check_boolean(space, BooleanTarget::I);
  if (name == "boolean_sigma") return check_boolean(space, BooleanTarget::Sigma);
  if (name == "proheyting") return check_proheyting(space, bound);
  throw std::invalid_argument("unknown check: " + name);
}

CheckReport run_lattice_check(const FinDLat& L, const std::string& name) {
  auto ax = axiom_from_name(name);
  if (!ax) throw std::invalid_argument("unknown check: " + name);
  CheckReport rep = check_axiom_def(L, *ax);
  CheckReport dual = dual_axiom_check(L, *ax);
  rep.note("dual-space criterion: " + verdict_name(dual.verdict) +
           (dual.verdict == rep.verdict ? " (agrees)" : " (DISAGREES)"));
  return rep;
}

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = [] {
    std::vector<GalleryEntry> g;

    auto space_entry = [&](std::string id, std::string title,
                           std::shared_ptr<const SpaceSpec> sp,
                           std::vector<Expected> exp) {
      g.push_back({std::move(id), std::move(title), std::move(sp), std::nullopt, std::move(exp)});
    };
    auto lattice_entry = [&](std::string id, std::string title, FinDLat L,
                             std::vector<Expected> exp) {
      g.push_back({std::move(id), std::move(title), nullptr, std::move(L), std::move(exp)});
    };

    space_entry(
        "fig1", "fan converging to x_inf with one extra point above the limit",
        space_fig1(),
        {{"subfit_L", Verdict::False, "L(X) is not subfit: min X misses y"},
         {"subfit_BL", Verdict::VerifiedAtBound, "BL(X) is subfit"},
         {"subfit_DM", Verdict::False, "DM(X) subfit iff L(X) subfit"},
         {"wsubfit_L", Verdict::True, "max X is dense"},
         {"boolean_BL", Verdict::True, "BL(X) is Boolean"},
         {"boolean_L", Verdict::False, "x_inf is not maximal"},
         {"boolean_DM", Verdict::False, "min X is not dense"},
         {"subfit_I", Verdict::False, "y fails the pointwise criterion"},
         {"skula_cross", Verdict::False, "a Skula-basic set avoids min X"},
         {"sigma_subfit", Verdict::False, "the order is not trivial"},
         {"boolean_I", Verdict::False, "the space is infinite"},
         {"regular_L", Verdict::False, "L(X) is not regular (not subfit)"},
         {"regular_BL", Verdict::VerifiedAtBound, "BL(X) is Boolean, hence regular"},
         {"a_regular_BL", Verdict::False, "L(X) is not regular"},
         {"proheyting", Verdict::False, "some annihilator upset is not a DM-upset"}});

    space_entry(
        "fig2", "two fans with x_inf below y_inf",
        space_fig2(),
        {{"subfit_L", Verdict::True, "min X is dense"},
         {"subfit_I", Verdict::False, "y_inf fails: min of its down-set is {x_inf}"},
         {"subfit_OpUp", Verdict::False, "OpUp(X) subfitness = ideal-completion subfitness"},
         {"skula_cross", Verdict::False, "a Skula neighborhood isolates y_inf from min X"},
         {"wsubfit_L", Verdict::True, "max X is dense"},
         {"boolean_BL", Verdict::True, "max X dense"},
         {"boolean_DM", Verdict::True, "min and max are dense"},
         {"boolean_L", Verdict::False, "x_inf not maximal"},
         {"sigma_subfit", Verdict::False, "y_inf is not minimal"},
         {"regular_L", Verdict::VerifiedAtBound, "L(X) is regular"},
         {"regular_BL", Verdict::VerifiedAtBound, "BL(X) is regular"},
         {"a_regular_BL", Verdict::VerifiedAtBound, "L(X) regular"},
         {"subfit_DM", Verdict::True, "L(X) subfit"},
         {"subfit_BL", Verdict::VerifiedAtBound, "subfitness is preserved upward"},
         {"proheyting", Verdict::VerifiedAtBound, "subfit implies proHeyting"},
         {"boolean_I", Verdict::False, "the space is infinite"}});

    space_entry(
        "fig3", "fan above its own limit: finite sets of naturals plus the whole set",
        space_fig3(),
        {{"subfit_L", Verdict::False, "min X = {x_inf} is not dense"},
         {"boolean_BL", Verdict::True, "BL(X) is the full powerset of the members"},
         {"boolean_L", Verdict::False, "x_inf is not maximal"},
         {"wsubfit_L", Verdict::True, "max X = members is dense"},
         {"subfit_DM", Verdict::False, "L(X) not subfit"},
         {"subfit_BL", Verdict::VerifiedAtBound, "BL(X) Boolean, hence subfit"},
         {"regular_L", Verdict::False, "not subfit, so not regular"},
         {"regular_BL", Verdict::VerifiedAtBound, "BL(X) Boolean, hence regular"},
         {"a_regular_BL", Verdict::False, "L(X) not regular"},
         {"subfit_I", Verdict::False, "members fail the pointwise criterion"},
         {"skula_cross", Verdict::False, "a Skula-basic set avoids min X"},
         {"sigma_subfit", Verdict::False, "members are not minimal"},
         {"proheyting", Verdict::False, "DM(X) and BL(X) differ"},
         {"boolean_DM", Verdict::False, "min X not dense"},
         {"boolean_I", Verdict::False, "the space is infinite"},
         {"boolean_sigma", Verdict::False, "the order is not trivial"}});

    space_entry(
        "fig4", "two fans and an extra isolated point under y_inf",
        space_fig4(),
        {{"subfit_L", Verdict::True, "min X is dense (only y_inf is non-minimal)"},
         {"regular_L", Verdict::False, "R(U) omits z for U = y-tail + {y_inf, z}"},
         {"regular_BL", Verdict::VerifiedAtBound, "BL(X) is regular"},
         {"a_regular_BL", Verdict::False, "BL(X) regular but not L(X)-regular"},
         {"subfit_BL", Verdict::VerifiedAtBound, "BL(X) regular, hence subfit"},
         {"subfit_DM", Verdict::True, "L(X) subfit"},
         {"wsubfit_L", Verdict::False, "z is outside the closure of max X"},
         {"boolean_BL", Verdict::False, "max X not dense"},
         {"boolean_L", Verdict::False, "x_inf not maximal"},
         {"boolean_DM", Verdict::False, "max X not dense"},
         {"subfit_I", Verdict::False, "y_inf fails the pointwise criterion"},
         {"skula_cross", Verdict::False, "a Skula-basic set avoids min X"},
         {"sigma_subfit", Verdict::False, "y_inf not minimal"},
         {"proheyting", Verdict::VerifiedAtBound, "subfit implies proHeyting"},
         {"boolean_I", Verdict::False, "the space is infinite"}});

    space_entry(
        "cofinite_N", "fan below its limit: the empty set plus the cofinite subsets",
        space_cofinite_N(),
        {{"subfit_L", Verdict::True, "min X = members is dense"},
         {"sigma_subfit", Verdict::False, "x_inf is not minimal"},
         {"subfit_I", Verdict::True, "every ideal is principal"},
         {"skula_cross", Verdict::VerifiedAtBound, "consistent with the pointwise criterion"},
         {"wsubfit_L", Verdict::False, "max X = {x_inf} is not dense"},
         {"boolean_BL", Verdict::False, "max X not dense"},
         {"regular_L", Verdict::False, "only 0 and 1 have witnesses"},
         {"regular_BL", Verdict::False, "BL(X) is the same lattice, still not regular"},
         {"subfit_DM", Verdict::True, "L(X) subfit"},
         {"subfit_BL", Verdict::VerifiedAtBound, "subfitness is preserved upward"},
         {"proheyting", Verdict::VerifiedAtBound, "subfit implies proHeyting"},
         {"boolean_L", Verdict::False, "members are not maximal"},
         {"boolean_I", Verdict::False, "the space is infinite"}});

    space_entry(
        "fan_disc", "one-point compactification with trivial order",
        space_fan_disc(),
        {{"subfit_L", Verdict::True, "min X = X"},
         {"wsubfit_L", Verdict::True, "max X = X"},
         {"boolean_L", Verdict::True, "the order is trivial"},
         {"boolean_BL", Verdict::True, "max X dense"},
         {"boolean_DM", Verdict::True, "min and max dense"},
         {"sigma_subfit", Verdict::True, "min X = X"},
         {"boolean_sigma", Verdict::True, "max X = X"},
         {"boolean_I", Verdict::False, "Boolean but infinite"},
         {"subfit_I", Verdict::True, "every point is minimal"},
         {"skula_cross", Verdict::VerifiedAtBound, "consistent with the pointwise criterion"},
         {"regular_L", Verdict::VerifiedAtBound, "Boolean, hence regular"},
         {"subfit_BL", Verdict::VerifiedAtBound, "Boolean, hence subfit"},
         {"proheyting", Verdict::VerifiedAtBound, "Boolean, hence proHeyting"}});

    lattice_entry("chain2", "two-element chain", make_chain(2),
                  {{"vsubfit", Verdict::True, "the two-element chain is Boolean"},
                   {"boolean", Verdict::True, "0 and 1 are complements"},
                   {"regular", Verdict::True, "Boolean, hence regular"}});
    lattice_entry("chain3", "three-element chain", make_chain(3),
                  {{"vsubfit", Verdict::False, "no witness for (a,0)"},
                   {"wsubfit", Verdict::False, "no witness for (1,a)"},
                   {"boolean", Verdict::False, "a has no complement"},
                   {"regular", Verdict::False, "only 0 is rather below a"},
                   {"heyting", Verdict::True, "finite distributive lattices are Heyting"},
                   {"proheyting", Verdict::True, "Heyting implies proHeyting"}});
    lattice_entry("chain4", "four-element chain", make_chain(4),
                  {{"vsubfit", Verdict::False, "chains above size 2 are not subfit"},
                   {"boolean", Verdict::False, "inner elements lack complements"},
                   {"heyting", Verdict::True, "finite distributive lattices are Heyting"}});
    lattice_entry("bool4", "Boolean square 2^2", make_bool_cube(2),
                  {{"vsubfit", Verdict::True, "Boolean lattices satisfy every axiom here"},
                   {"wsubfit", Verdict::True, "Boolean"},
                   {"regular", Verdict::True, "Boolean"},
                   {"boolean", Verdict::True, "every element complemented"}});
    lattice_entry("bool8", "Boolean cube 2^3", make_bool_cube(3),
                  {{"vsubfit", Verdict::True, "Boolean"},
                   {"boolean", Verdict::True, "Boolean"},
                   {"regular", Verdict::True, "Boolean"}});
    lattice_entry("kite", "downsets of the poset c < a, c < b", make_kite(),
                  {{"boolean", Verdict::False, "the atom has no complement"},
                   {"vsubfit", Verdict::False, "finite subfit equals Boolean"},
                   {"heyting", Verdict::True, "finite distributive lattices are Heyting"}});

    return g;
  }();
  return entries;
}

const GalleryEntry* gallery_find(const std::string& id) {
  for (const GalleryEntry& e : gallery())
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

int exit_code_for(const std::vector<CheckReport>& reports,
                  const std::vector<std::string>& mismatches, bool compare_expected) {
  for (const CheckReport& r : reports)
    if (r.verdict == Verdict::Unknown) return 2;
  if (compare_expected) return mismatches.empty() ? 0 : 1;
  for (const CheckReport& r : reports)
    if (r.verdict == Verdict::False) return 1;
  return 0;
}

RunResult run_reports(std::vector<CheckReport> reports, const std::vector<Expected>* expected) {
  RunResult out;
  out.reports = std::move(reports);
  if (expected) {
    for (const Expected& e : *expected) {
      const CheckReport* found = nullptr;
      for (const CheckReport& r : out.reports)
        if (r.check == e.check) found = &r;
      if (!found) continue;  // expectation for a check that was not requested
      if (found->verdict != e.outcome)
        out.mismatches.push_back(e.check + ": expected " + verdict_name(e.outcome) + ", got " +
                                 verdict_name(found->verdict, found->bound) + " [" + e.note + "]");
    }
  }
  out.exit_code = exit_code_for(out.reports, out.mismatches, expected != nullptr);
  return out;
}

}  // namespace

RunResult run_space(std::shared_ptr<const SpaceSpec> space, const std::vector<std::string>& checks,
                    int bound, const std::vector<Expected>* expected) {
  std::vector<CheckReport> reports;
  for (const std::string& name : checks) reports.push_back(run_space_check(space, name, bound));
  return run_reports(std::move(reports), expected);
}

RunResult run_lattice(const FinDLat& L, const std::vector<std::string>& checks,
                      const std::vector<Expected>* expected) {
  std::vector<CheckReport> reports;
  for (const std::string& name : checks) reports.push_back(run_lattice_check(L, name));
  return run_reports(std::move(reports), expected);
}

RunResult run_entry(const GalleryEntry& entry, const std::vector<std::string>& checks, int bound) {
  if (entry.space) return run_space(entry.space, checks, bound, &entry.expected);
  return run_lattice(*entry.lattice, checks, &entry.expected);
}

// ---------------------------------------------------------------------------
// Summary-table verification on finite lattices

namespace {

bool holds(const FinDLat& L, Axiom ax) {
  return verdict_truthy(check_axiom_def(L, ax).verdict);
}

// every ideal is an intersection of maximal ideals
bool ideals_are_maximal_intersections(const FinDLat& L) {
  std::vector<Mask> ideals = ideals_of(L);
  Mask carrier = L.order().all();
  std::vector<Mask> maximal;
  for (Mask i : ideals) {
    if (i == carrier) continue;
    bool is_max = true;
    for (Mask j : ideals)
      if (j != carrier && j != i && (i & ~j) == 0) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(i);
  }
  for (Mask i : ideals) {
    Mask cap = carrier;
    for (Mask m : maximal)
      if ((i & ~m) == 0) cap &= m;
    if (cap != i) return false;
  }
  return true;
}

// dual regular part over the finite dual: R(V) = {x : down(up(x)) in V}
bool dual_regular_parts_full(const PriestleyDual& d, const FinDLat& L) {
  for (int a = 0; a < L.size(); ++a) {
    Mask v = d.stone[a];
    for (int x : mask_indices(v))
      if ((down_closure(d.space, d.space.up_of(x)) & ~v) != 0) return false;
  }
  return true;
}

bool is_A_regular(const FinDLat& B, Mask sub) {
  auto rb_in_sub = [&](int x, int y) {
    for (int c : mask_indices(sub))
      if (B.meet(x, c) == B.bottom() && B.join(y, c) == B.top()) return true;
    return false;
  };
  auto a_below = [&](int a, int b) {
    for (int c : mask_indices(sub))
      if (rb_in_sub(a, c) && B.leq(c, b)) return true;
    return false;
  };
  for (int b = 0; b < B.size(); ++b)
    for (int d = 0; d < B.size(); ++d) {
      if (B.leq(b, d)) continue;
      bool found = false;
      for (int a : mask_indices(sub))
        if (a_below(a, b) && !B.leq(a, d)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace

MatrixReport verify_matrix(int max_size) {
  if (max_size < 1 || max_size > 8)
    throw std::invalid_argument("verify_matrix supports sizes 1..8");
  MatrixReport out;
  int index = 0;
  for (const FinDLat& L : enumerate_dlats(max_size)) {
    ++out.lattices;
    std::string tag = "lattice#" + std::to_string(index++) + " (size " +
                      std::to_string(L.size()) + ")";
    auto row = [&](const std::string& name, std::initializer_list<bool> conditions) {
      ++out.rows_checked;
      bool first = *conditions.begin();
      for (bool c : conditions)
        if (c != first) {
          out.disagreements.push_back(tag + ": " + name);
          return;
        }
    };

    PriestleyDual dual = prime_filters(L);
    bool min_full = minimals(dual.space) == dual.space.all();
    bool max_full = maximals(dual.space) == dual.space.all();
    bool r_full = dual_regular_parts_full(dual, L);

    Completion dm = completion(L, CompletionKind::DM);
    Completion bl = completion(L, CompletionKind::BL);
    Completion ideal = completion(L, CompletionKind::Ideal);
    Completion canon = completion(L, CompletionKind::Canonical);
    Completion ph = completion(L, CompletionKind::PH);
    Mask bl_image = 0;
    for (int e : bl.embedding) bl_image |= mask_bit(e);

    bool pX_min_full = [&] {
      PriestleyDual pd = prime_filters(ph.lattice);
      return minimals(pd.space) == pd.space.all();
    }();

    // subfitness rows: completion condition vs dual condition vs lattice
    row("BL-subfit <-> pH subfit <-> min pX = X",
        {holds(bl.lattice, Axiom::VSubfit), holds(ph.lattice, Axiom::VSubfit), pX_min_full});
    row("DM-subfit <-> subfit <-> min X = X",
        {holds(dm.lattice, Axiom::VSubfit), holds(L, Axiom::VSubfit), min_full});
    row("I-subfit <-> ideals are intersections of maximal ideals <-> min X = X (finite Skula)",
        {holds(ideal.lattice, Axiom::VSubfit), ideals_are_maximal_intersections(L), min_full});
    row("sigma-subfit <-> Boolean <-> min X = X",
        {holds(canon.lattice, Axiom::VSubfit), holds(L, Axiom::Boolean), min_full});

    // regularity rows
    row("BL-regular <-> pH regular <-> regular parts full",
        {holds(bl.lattice, Axiom::Regular), holds(ph.lattice, Axiom::Regular), r_full});
    row("DM-regular <-> BL-regular and subfit",
        {holds(dm.lattice, Axiom::Regular),
         holds(bl.lattice, Axiom::Regular) && holds(L, Axiom::VSubfit),
         r_full && min_full});
    row("regular <-> BL is A-regular <-> regular parts full",
        {holds(L, Axiom::Regular), is_A_regular(bl.lattice, bl_image), r_full});
    row("I-regular <-> sigma-regular <-> Boolean",
        {holds(ideal.lattice, Axiom::Regular), holds(canon.lattice, Axiom::Regular),
         holds(L, Axiom::Boolean), r_full});

    // Booleanness rows
    row("BL-Boolean <-> wsubfit <-> max X = X (finite density)",
        {holds(bl.lattice, Axiom::Boolean), holds(L, Axiom::WSubfit), max_full});
    row("DM-Boolean <-> vsubfit and wsubfit <-> min and max X = X",
        {holds(dm.lattice, Axiom::Boolean),
         holds(L, Axiom::VSubfit) && holds(L, Axiom::WSubfit), min_full && max_full});
    row("sigma-Boolean <-> Boolean <-> max X = X",
        {holds(canon.lattice, Axiom::Boolean), holds(L, Axiom::Boolean), max_full});
    row("I-Boolean <-> finite Boolean <-> max X = X and X finite",
        {holds(ideal.lattice, Axiom::Boolean), holds(L, Axiom::Boolean), max_full});
  }
  return out;
}

}  // namespace latsep
