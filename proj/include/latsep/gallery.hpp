#pragma once

// Built-in instances, the scenario runner, and the summary-table
// cross-verifier over every enumerated finite distributive lattice.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latsep/checks.hpp"
#include "latsep/dlat.hpp"

namespace latsep {

struct Expected {
  std::string check;
  Verdict outcome;   // expected verdict class (bound is not compared)
  std::string note;  // the claim this verdict pins down
};

struct GalleryEntry {
  std::string id;
  std::string title;
  std::shared_ptr<const SpaceSpec> space;  // null for finite lattice entries
  std::optional<FinDLat> lattice;
  std::vector<Expected> expected;
};

const std::vector<GalleryEntry>& gallery();
const GalleryEntry* gallery_find(const std::string& id);

// Gallery space constructors, exposed for tests.
std::shared_ptr<const SpaceSpec> space_fig1();
std::shared_ptr<const SpaceSpec> space_fig2();
std::shared_ptr<const SpaceSpec> space_fig3();
std::shared_ptr<const SpaceSpec> space_fig4();
std::shared_ptr<const SpaceSpec> space_cofinite_N();
std::shared_ptr<const SpaceSpec> space_fan_disc();

std::vector<std::string> space_check_names();
std::vector<std::string> lattice_check_names();

CheckReport run_space_check(std::shared_ptr<const SpaceSpec> space, const std::string& name,
                            int bound);
CheckReport run_lattice_check(const FinDLat& L, const std::string& name);

struct RunResult {
  std::vector<CheckReport> reports;
  std::vector<std::string> mismatches;  // expected-vs-actual discrepancies
  int exit_code = 0;  // 0 ok, 1 false/mismatch, 2 unknown verdict, 3 input error
};

RunResult run_space(std::shared_ptr<const SpaceSpec> space, const std::vector<std::string>& checks,
                    int bound, const std::vector<Expected>* expected = nullptr);
RunResult run_lattice(const FinDLat& L, const std::vector<std::string>& checks,
                      const std::vector<Expected>* expected = nullptr);
RunResult run_entry(const GalleryEntry& entry, const std::vector<std::string>& checks, int bound);

// Evaluates every summary-table row (lattice condition vs dual-space
// condition vs completion condition) on every enumerated distributive
// lattice with at most max_size elements. Expected: no disagreements.
struct MatrixReport {
  int lattices = 0;
  int rows_checked = 0;
  std::vector<std::string> disagreements;
};

MatrixReport verify_matrix(int max_size);

}  // namespace latsep
