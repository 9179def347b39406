#pragma once

// Exact engine: finite bounded distributive lattices, their finite duals via
// prime filters, definition-level separation-axiom checkers, and the five
// completions. Everything here is brute force on purpose; these routines are
// the oracles the symbolic engine is validated against.

#include <optional>
#include <string>
#include <vector>

#include "latsep/poset.hpp"
#include "latsep/report.hpp"

namespace latsep {

struct LatticeViolation {
  std::string axiom;    // "lattice" | "bounds" | "distributivity"
  std::string witness;
};

class FinDLat {
 public:
  FinDLat() = default;

  // Throws std::invalid_argument (with the violation text) unless the poset
  // is a bounded distributive lattice.
  static FinDLat from_poset(const FinPoset& order);

  const FinPoset& order() const { return order_; }
  int size() const { return order_.size(); }
  const std::string& id(int i) const { return order_.id(i); }
  bool leq(int a, int b) const { return order_.leq(a, b); }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int meet_of(Mask s) const;  // meet over a set; top for the empty set
  int join_of(Mask s) const;  // join over a set; bottom for the empty set

 private:
  FinPoset order_;
  std::vector<int> meet_, join_;
  int bottom_ = 0, top_ = 0;
};

// Checks lattice existence, bounds, and distributivity; names the failing
// pair/triple otherwise. from_poset is this check plus table construction.
std::optional<LatticeViolation> validate_dlat(const FinPoset& order);

// ---------------------------------------------------------------------------
// Ideals, filters, relative annihilators

struct IdealOrFilter {
  bool is_filter = false;
  Mask members = 0;
};

std::vector<Mask> ideals_of(const FinDLat& L);   // downsets closed under join
std::vector<Mask> filters_of(const FinDLat& L);  // upsets closed under meet

struct RelAnnihilator {
  Mask members = 0;
  bool principal = false;
  int generator = -1;  // the maximum when principal
  bool normal = false; // equal to the lower bounds of its upper bounds
};

// <a,b> = {x : a n x <= b}, always an ideal in a distributive lattice.
RelAnnihilator relative_annihilator(const FinDLat& L, int a, int b);

// ---------------------------------------------------------------------------
// Priestley dual of a finite lattice (discrete topology)

struct PriestleyDual {
  FinPoset space;            // prime filters ordered by inclusion
  std::vector<Mask> stone;   // stone[a] = {prime filters containing a}
  std::vector<Mask> filter;  // filter[x] = member mask of prime filter x
};

PriestleyDual prime_filters(const FinDLat& L);

// ---------------------------------------------------------------------------
// Separation axioms

enum class Axiom { VSubfit, WSubfit, Regular, Boolean, Heyting, ProHeyting };

const char* axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

bool rather_below_def(const FinDLat& L, int a, int b);

// Definition-level checker; on failure the report carries the witness pair
// (a, b) for which no witness c exists. For Regular, a passing report lists
// the full rather-below relation in the trace.
CheckReport check_axiom_def(const FinDLat& L, Axiom axiom);

// Same verdicts computed on the finite Priestley dual, where density means
// equality. Must agree with check_axiom_def (tested exhaustively).
CheckReport dual_axiom_check(const FinDLat& L, Axiom axiom);

// ---------------------------------------------------------------------------
// Completions

enum class CompletionKind { DM, BL, Ideal, Canonical, PH };

const char* completion_name(CompletionKind k);

struct Completion {
  FinDLat lattice;
  std::vector<int> embedding;  // original element -> completion element
};

Completion completion(const FinDLat& L, CompletionKind kind);

// ---------------------------------------------------------------------------
// Sublattices

std::vector<Mask> bounded_sublattices(const FinDLat& L);
FinDLat sublattice(const FinDLat& L, Mask sub);  // throws unless bounded sublattice

struct SublatticeReport {
  bool valid = false;
  std::string violation;
  bool join_dense = false;
  bool meet_dense = false;
  bool rather_below_agrees = false;  // a <<_A b iff a <<_B b for a,b in A
  bool property_sub = false;         // the property for A
  bool property_ambient = false;     // the property for B
  bool respected = true;             // the preservation/reflection implications hold
  std::vector<std::string> trace;
};

// property must be VSubfit or Regular.
SublatticeReport sublattice_experiment(const FinDLat& ambient, Mask sub, Axiom property);

// ---------------------------------------------------------------------------
// Enumeration & isomorphism

// Downset lattice of a poset (Birkhoff), elements in ascending mask order.
FinDLat lattice_of_downsets(const FinPoset& p);

// Every bounded distributive lattice with <= max_size elements, one per
// isomorphism class, in a deterministic order. max_size <= 10.
std::vector<FinDLat> enumerate_dlats(int max_size);

bool is_isomorphic(const FinDLat& a, const FinDLat& b);

// Canonical key of the join-irreducible poset; equal keys iff isomorphic.
std::vector<Mask> canonical_key(const FinDLat& L);

}  // namespace latsep
