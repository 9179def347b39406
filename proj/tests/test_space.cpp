#include <doctest.h>

#include "latsep/gallery.hpp"
#include "latsep/space.hpp"
#include "testutil.hpp"

using namespace latsep;

TEST_CASE("gallery spaces validate") {
  for (auto space : {space_fig1(), space_fig2(), space_fig3(), space_fig4(), space_cofinite_N(),
                     space_fan_disc()})
    CHECK(validate_space(*space).empty());
}

TEST_CASE("closedness violations are reported with witnesses") {
  // fan related below to a point that is not under the limit
  auto order = FinPoset::from_pairs({"x_inf", "y"}, {});
  std::vector<Mask> rows = {order.up_of(0), order.up_of(1)};
  Fan f;
  f.id = "x";
  f.limit = 0;
  f.below = mask_bit(1);  // y under every member, but y !<= x_inf
  SpaceSpec spec({"x_inf", "y"}, rows, {f});
  auto bad = validate_space(spec);
  REQUIRE(!bad.empty());
  bool found = false;
  for (const auto& v : bad)
    if (v.axiom == "order closedness" && v.witness.find("y") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("removing reflexivity at the limit trips closedness") {
  // fig3-shaped space whose named order is missing x_inf <= x_inf
  std::vector<Mask> rows = {Mask{0}};
  Fan f;
  f.id = "x";
  f.limit = 0;
  f.below = mask_bit(0);
  SpaceSpec spec({"x_inf"}, rows, {f});
  auto bad = validate_space(spec);
  REQUIRE(!bad.empty());
  bool closedness = false, reflexivity = false;
  for (const auto& v : bad) {
    if (v.axiom == "order closedness") closedness = true;
    if (v.axiom.find("reflexivity") != std::string::npos) reflexivity = true;
  }
  CHECK(closedness);
  CHECK(reflexivity);
}

TEST_CASE("below and above must not meet") {
  std::vector<Mask> rows = {mask_bit(0)};
  Fan f;
  f.id = "x";
  f.limit = 0;
  f.below = mask_bit(0);
  f.above = mask_bit(0);
  SpaceSpec spec({"x_inf"}, rows, {f});
  auto bad = validate_space(spec);
  bool antisym = false;
  for (const auto& v : bad)
    if (v.axiom == "effective order antisymmetry") antisym = true;
  CHECK(antisym);
}

TEST_CASE("effective order on point classes") {
  auto fig4 = space_fig4();
  PointClass xinf = PointClass::named_point(*fig4->named_index("x_inf"));
  PointClass yinf = PointClass::named_point(*fig4->named_index("y_inf"));
  PointClass z = PointClass::named_point(*fig4->named_index("z"));
  PointClass m = PointClass::fan_member(*fig4->fan_index("x"), 3);
  CHECK(point_leq(*fig4, xinf, yinf));
  CHECK(point_leq(*fig4, z, yinf));
  CHECK(!point_leq(*fig4, yinf, z));
  CHECK(point_leq(*fig4, m, m));
  CHECK(!point_leq(*fig4, m, xinf));
  CHECK(!point_leq(*fig4, xinf, m));

  auto fig3 = space_fig3();
  PointClass lim = PointClass::named_point(0);
  PointClass mem = PointClass::fan_member(0, 5);
  CHECK(point_leq(*fig3, lim, mem));
  CHECK(!point_leq(*fig3, mem, lim));
}

TEST_CASE("point labels round-trip") {
  auto fig2 = space_fig2();
  for (const PointClass& p : point_classes(*fig2, 7)) {
    auto back = parse_point(*fig2, point_label(*fig2, p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  CHECK(!parse_point(*fig2, "nope").has_value());
}

TEST_CASE("random fan spaces validate") {
  testutil::Rng rng(20250809);
  for (int round = 0; round < 150; ++round) {
    auto spec = testutil::random_space(rng);
    auto bad = validate_space(*spec);
    if (!bad.empty()) {
      CAPTURE(bad.front().axiom);
      CAPTURE(bad.front().witness);
    }
    CHECK(bad.empty());
  }
}
