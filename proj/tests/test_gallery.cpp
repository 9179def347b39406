#include <doctest.h>

#include "latsep/dot.hpp"
#include "latsep/gallery.hpp"
#include "latsep/json_io.hpp"

using namespace latsep;

TEST_CASE("gallery has enough entries of both kinds") {
  int spaces = 0, lattices = 0;
  for (const GalleryEntry& e : gallery()) {
    (e.space ? spaces : lattices)++;
    CHECK(!e.expected.empty());
    for (const Expected& x : e.expected) CHECK(!x.note.empty());
  }
  CHECK(spaces >= 5);
  CHECK(lattices >= 5);
}

TEST_CASE("every expected verdict is reproduced") {
  for (const GalleryEntry& e : gallery()) {
    std::vector<std::string> checks;
    for (const Expected& x : e.expected) checks.push_back(x.check);
    RunResult result = run_entry(e, checks, 2);
    for (const std::string& m : result.mismatches) {
      CAPTURE(e.id);
      CAPTURE(m);
      CHECK(false);
    }
    CHECK(result.exit_code == 0);
  }
}

TEST_CASE("exit codes") {
  // all-true file-style run
  const GalleryEntry* bool4 = gallery_find("bool4");
  REQUIRE(bool4);
  RunResult ok = run_lattice(*bool4->lattice, lattice_check_names());
  CHECK(ok.exit_code == 0);
  // a false verdict without expectations exits 1
  const GalleryEntry* chain3 = gallery_find("chain3");
  RunResult f = run_lattice(*chain3->lattice, {"vsubfit"});
  CHECK(f.exit_code == 1);
  // matching expectations exit 0 even when the verdict is false
  RunResult matched = run_entry(*chain3, {"vsubfit"}, 2);
  CHECK(matched.exit_code == 0);
}

TEST_CASE("json round trips") {
  const GalleryEntry* fig4 = gallery_find("fig4");
  REQUIRE(fig4);
  auto restored = space_from_json(space_to_json(*fig4->space));
  CHECK(restored->named_count() == fig4->space->named_count());
  CHECK(restored->fan_count() == fig4->space->fan_count());
  RunResult a = run_space(fig4->space, {"subfit_L", "regular_L"}, 2);
  RunResult b = run_space(restored, {"subfit_L", "regular_L"}, 2);
  for (size_t i = 0; i < a.reports.size(); ++i)
    CHECK(report_to_json(a.reports[i]) == report_to_json(b.reports[i]));

  const GalleryEntry* kite = gallery_find("kite");
  FinDLat kite2 = dlat_from_json(lattice_to_json(*kite->lattice));
  CHECK(is_isomorphic(kite2, *kite->lattice));

  SymSet u = SymSet::full(fig4->space).with_part(0, FanPart::cofin({1, 2}));
  CHECK(symset_from_json(symset_to_json(u), fig4->space) == u);

  nlohmann::json rj = report_to_json(a.reports[0]);
  CHECK(rj.contains("axiom"));
  CHECK(rj.contains("verdict"));
  CHECK(rj.contains("witness"));
  CHECK(rj.contains("trace"));
}

TEST_CASE("schema errors are rejected") {
  CHECK_THROWS_AS(poset_from_json(nlohmann::json{{"leq", nlohmann::json::array()}}),
                  std::invalid_argument);
  nlohmann::json cyclic = {{"elements", {"a", "b"}}, {"leq", {{"a", "b"}, {"b", "a"}}}};
  CHECK_THROWS_AS(poset_from_json(cyclic), std::invalid_argument);
  nlohmann::json bad_space = {{"named", {"p"}},
                              {"fans", {{{"id", "f"}, {"limit", "q"}}}}};
  CHECK_THROWS_AS(space_from_json(bad_space), std::invalid_argument);
}

TEST_CASE("reports are byte-stable across runs") {
  const GalleryEntry* fig1 = gallery_find("fig1");
  std::vector<std::string> checks = {"subfit_L", "subfit_BL", "regular_BL", "proheyting"};
  RunResult a = run_space(fig1->space, checks, 2);
  RunResult b = run_space(fig1->space, checks, 2);
  REQUIRE(a.reports.size() == b.reports.size());
  for (size_t i = 0; i < a.reports.size(); ++i)
    CHECK(report_to_json(a.reports[i]).dump() == report_to_json(b.reports[i]).dump());
}

TEST_CASE("dot emitters") {
  const GalleryEntry* fig1 = gallery_find("fig1");
  std::string dot = space_dot(*fig1->space);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"x_inf\"") != std::string::npos);
  CHECK(dot.find("x[3]") != std::string::npos);   // sampled fan prefix of 4
  CHECK(dot.find("x[4]") == std::string::npos);
  CHECK(dot.find("lim") != std::string::npos);
  CHECK(dot == space_dot(*fig1->space));

  const GalleryEntry* chain3 = gallery_find("chain3");
  std::string ldot = lattice_dot(*chain3->lattice);
  CHECK(ldot.find("\"a\" -> \"1\"") != std::string::npos);
  CHECK(ldot.find("\"0\" -> \"1\"") == std::string::npos);  // covers only
}

TEST_CASE("verify_matrix finds no disagreements at size 5") {
  MatrixReport m = verify_matrix(5);
  CHECK(m.lattices == 7);  // sizes 2..5: 1 + 1 + 2 + 3
  CHECK(m.rows_checked == m.lattices * 12);
  CHECK(m.disagreements.empty());
}
