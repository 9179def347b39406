#pragma once

// Completions of L(X) realized as lattices of symbolic sets: clopen upsets
// L(X), fixpoints of int1 o cl2 (DM) and of the nucleus int1 o cl (BL), open
// upsets, all upsets, and the sublattice pH(X) generated inside BL(X) by the
// sets X \ down(K) for clopen K.

#include <memory>
#include <string>
#include <vector>

#include "latsep/symset.hpp"

namespace latsep {

enum class ViewKind { L, DM, BL, OpUp, Up, PH };

const char* view_name(ViewKind k);

struct LatticeView {
  std::shared_ptr<const SpaceSpec> space;
  ViewKind kind = ViewKind::L;
  int bound = 2;  // shape bound used by the PH membership search
};

bool is_member(const LatticeView& view, const SymSet& s);

// Joins: unions for L/OpUp/Up, int1(cl2(union)) for DM, int1(cl(union)) for
// BL and pH. Meets are intersections for every kind.
SymSet view_join(const LatticeView& view, const std::vector<SymSet>& sets);
SymSet view_meet(const LatticeView& view, const SymSet& a, const SymSet& b);

SymSet bl_join(const std::vector<SymSet>& sets);
SymSet bl_pseudocomplement(const SymSet& u);  // int1 cl (X \ down cl U)

// Dual of the relative annihilator <a,b>: the open upset X \ down(a \ b).
// Throws unless a and b are clopen upsets.
SymSet rel_annihilator_upset(const SymSet& a, const SymSet& b);

// Generator X \ down(K) of pH(X); throws unless K is clopen.
SymSet ph_generator(const SymSet& k);

// All finite BL-joins of generators built from clopen sets at the bound.
std::vector<SymSet> ph_members(std::shared_ptr<const SpaceSpec> space, int bound);

// Every symbolic set whose fan supports use indices < bound, in a fixed
// order: named masks ascending, then per fan Fin parts by support mask, then
// Cofin parts by support mask.
std::vector<SymSet> enumerate_all_shapes(std::shared_ptr<const SpaceSpec> space, int bound);
std::vector<SymSet> enumerate_clopens(std::shared_ptr<const SpaceSpec> space, int bound);
// Shapes filtered to members of the view kind (PH uses ph_members).
std::vector<SymSet> enumerate_shapes(std::shared_ptr<const SpaceSpec> space, int bound,
                                     ViewKind kind);

}  // namespace latsep
