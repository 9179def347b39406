#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "latsep/dot.hpp"
#include "latsep/gallery.hpp"
#include "latsep/json_io.hpp"

using namespace latsep;

namespace {

int default_bound() {
  if (const char* env = std::getenv("LATSEP_BOUND")) {
    int b = std::atoi(env);
    if (b >= 1 && b <= 4) return b;
  }
  return 2;
}

std::vector<std::string> split_checks(const std::string& arg, bool space_subject) {
  if (arg == "all") return space_subject ? space_check_names() : lattice_check_names();
  std::vector<std::string> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_md(const RunResult& result) {
  std::cout << "| check | target | verdict | witness |\n";
  std::cout << "|---|---|---|---|\n";
  for (const CheckReport& r : result.reports)
    std::cout << "| " << r.check << " | " << r.target << " | "
              << verdict_name(r.verdict, r.bound) << " | "
              << (r.witness.empty() ? "-" : r.witness) << " |\n";
  for (const std::string& m : result.mismatches) std::cout << "MISMATCH: " << m << "\n";
}

void print_json(const RunResult& result) {
  nlohmann::json j;
  j["reports"] = nlohmann::json::array();
  for (const CheckReport& r : result.reports) j["reports"].push_back(report_to_json(r));
  j["mismatches"] = result.mismatches;
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latsep: completions and separation axioms of bounded distributive lattices"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "list built-in instances");

  std::string describe_id;
  auto* describe_cmd = app.add_subcommand("describe", "show one built-in instance");
  describe_cmd->add_option("id", describe_id)->required();

  std::string run_id, run_file, run_checks = "all", run_format = "md";
  int run_bound = default_bound();
  int fan_sample = 4;
  auto* run_cmd = app.add_subcommand("run", "run checks on an instance or an input file");
  run_cmd->add_option("id", run_id, "built-in instance id");
  run_cmd->add_option("--file", run_file, "JSON input (lattice or space schema)");
  run_cmd->add_option("--checks", run_checks, "comma-separated check names, or 'all'");
  run_cmd->add_option("--bound", run_bound, "shape bound for bounded checks")
      ->check(CLI::Range(1, 4));
  run_cmd->add_option("--format", run_format, "json | md | dot")
      ->check(CLI::IsMember({"json", "md", "dot"}));
  run_cmd->add_option("--fan-sample", fan_sample, "members drawn per fan in dot output")
      ->check(CLI::Range(1, 16));

  int matrix_size = 6;
  auto* matrix_cmd = app.add_subcommand("verify-matrix",
                                        "cross-check the summary tables on every "
                                        "enumerated finite distributive lattice");
  matrix_cmd->add_option("--max-size", matrix_size)->check(CLI::Range(1, 8));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list_cmd) {
      for (const GalleryEntry& e : gallery())
        std::cout << e.id << (e.space ? "  [space]   " : "  [lattice] ") << e.title << "\n";
      return 0;
    }

    if (*describe_cmd) {
      const GalleryEntry* e = gallery_find(describe_id);
      if (!e) {
        std::cerr << "unknown instance: " << describe_id << "\n";
        return 3;
      }
      std::cout << e->id << ": " << e->title << "\n";
      if (e->space)
        std::cout << space_to_json(*e->space).dump(2) << "\n";
      else
        std::cout << lattice_to_json(*e->lattice).dump(2) << "\n";
      std::cout << "expected verdicts:\n";
      for (const Expected& x : e->expected)
        std::cout << "  " << x.check << " = " << verdict_name(x.outcome) << "  (" << x.note
                  << ")\n";
      return 0;
    }

    if (*run_cmd) {
      if (run_id.empty() == run_file.empty()) {
        std::cerr << "run needs exactly one of <id> or --file\n";
        return 3;
      }

      std::shared_ptr<const SpaceSpec> space;
      std::optional<FinDLat> lattice;
      const std::vector<Expected>* expected = nullptr;
      if (!run_id.empty()) {
        const GalleryEntry* e = gallery_find(run_id);
        if (!e) {
          std::cerr << "unknown instance: " << run_id << "\n";
          return 3;
        }
        space = e->space;
        lattice = e->lattice;
        expected = &e->expected;
      } else {
        std::ifstream in(run_file);
        if (!in) {
          std::cerr << "cannot open " << run_file << "\n";
          return 3;
        }
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.contains("named"))
          space = space_from_json(j);
        else
          lattice = dlat_from_json(j);
      }

      if (run_format == "dot") {
        std::cout << (space ? space_dot(*space, fan_sample) : lattice_dot(*lattice));
        return 0;
      }

      std::vector<std::string> checks = split_checks(run_checks, space != nullptr);
      RunResult result = space ? run_space(space, checks, run_bound, expected)
                               : run_lattice(*lattice, checks, expected);
      if (run_format == "json")
        print_json(result);
      else
        print_md(result);
      return result.exit_code;
    }

    if (*matrix_cmd) {
      MatrixReport m = verify_matrix(matrix_size);
      std::cout << "lattices checked: " << m.lattices << "\n";
      std::cout << "table rows checked: " << m.rows_checked << "\n";
      if (m.disagreements.empty()) {
        std::cout << "disagreements: none\n";
        return 0;
      }
      for (const std::string& d : m.disagreements) std::cout << "DISAGREEMENT: " << d << "\n";
      return 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
