#pragma once

// Separation-axiom checkers on fan spaces. Where a pointwise criterion
// exists (density of min/max X, the ideal-completion criterion, regular
// parts) the verdict is exact; elsewhere the check is a bounded witness
// search that reports verified-at-bound or unknown, never a guessed false.

#include <memory>

#include "latsep/report.hpp"
#include "latsep/views.hpp"

namespace latsep {

CheckReport check_subfit_L(std::shared_ptr<const SpaceSpec> space);
CheckReport check_wsubfit_L(std::shared_ptr<const SpaceSpec> space);
// Subfitness of the canonical completion collapses to the order being
// trivial: min X = X.
CheckReport check_sigma_subfit(std::shared_ptr<const SpaceSpec> space);

// Ideal completion: x in cl(min down(x)) for every point class; exact.
CheckReport check_I_subfit(std::shared_ptr<const SpaceSpec> space);

// Bounded cross-check of the same criterion through the Skula topology:
// every nonempty difference of enumerated open upsets must meet min X.
CheckReport check_skula_cross(std::shared_ptr<const SpaceSpec> space, int bound);

// a << b for clopen upsets: down(a) inside b.
bool rather_below_sym(const SymSet& a, const SymSet& b);
// U <<_BL V for BL-members: int down cl U inside cl V.
bool rather_below_bl(const SymSet& u, const SymSet& v);

// R(U): union of the clopen upsets whose down-closure stays inside U.
SymSet regular_part(const SymSet& u);
// R_BL(U): union of the clopen upsets rather below U in BL(X).
SymSet regular_part_bl(const SymSet& u);

enum class RegularTarget { L, BL };
CheckReport check_regular(std::shared_ptr<const SpaceSpec> space, RegularTarget target,
                          int bound);
// BL(X) is L(X)-regular iff L(X) is regular (join-density); delegates.
CheckReport check_A_regular_BL(std::shared_ptr<const SpaceSpec> space, int bound);

enum class BooleanTarget { L, DM, BL, I, Sigma };
CheckReport check_boolean(std::shared_ptr<const SpaceSpec> space, BooleanTarget target);

// Every relative-annihilator upset of enumerated clopen-upset pairs must be
// a DM-upset; a failing pair is an exact counterexample.
CheckReport check_proheyting(std::shared_ptr<const SpaceSpec> space, int bound);

// Subfitness of a completion lattice. DM and OpUp carry exact criteria; BL
// and pH run the witness search over enumerated members with one x2 bound
// escalation, then report unknown rather than false.
CheckReport check_subfit_view(std::shared_ptr<const SpaceSpec> space, ViewKind kind, int bound);

}  // namespace latsep
