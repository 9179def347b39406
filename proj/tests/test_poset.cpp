#include <doctest.h>

#include "latsep/poset.hpp"
#include "testutil.hpp"

using namespace latsep;

namespace {

FinPoset chain(int n) {
  std::vector<std::string> ids(n);
  std::vector<Mask> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    ids[i] = "c" + std::to_string(i);
    for (int j = i; j < n; ++j) rows[i] |= mask_bit(j);
  }
  return FinPoset(std::move(ids), std::move(rows));
}

FinPoset antichain(int n) {
  std::vector<std::string> ids(n);
  std::vector<Mask> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    ids[i] = "a" + std::to_string(i);
    rows[i] = mask_bit(i);
  }
  return FinPoset(std::move(ids), std::move(rows));
}

FinPoset diamond() {
  return FinPoset::from_pairs({"0", "a", "b", "1"},
                              {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}, {"0", "1"}});
}

}  // namespace

TEST_CASE("validate accepts partial orders and names violations") {
  CHECK(!validate(chain(2)).has_value());

  FinPoset cyc({"a", "b"}, {mask_bit(0) | mask_bit(1), mask_bit(0) | mask_bit(1)});
  auto bad = validate(cyc);
  REQUIRE(bad.has_value());
  CHECK(bad->axiom == "antisymmetry");
  CHECK(bad->witness == "a,b");

  FinPoset irrefl({"a"}, {Mask{0}});
  auto bad2 = validate(irrefl);
  REQUIRE(bad2.has_value());
  CHECK(bad2->axiom == "reflexivity");
  CHECK(bad2->witness == "a");

  FinPoset intrans({"a", "b", "c"},
                   {mask_bit(0) | mask_bit(1), mask_bit(1) | mask_bit(2), mask_bit(2)});
  auto bad3 = validate(intrans);
  REQUIRE(bad3.has_value());
  CHECK(bad3->axiom == "transitivity");
}

TEST_CASE("from_pairs applies reflexive closure") {
  FinPoset p = FinPoset::from_pairs({"x", "y"}, {{"x", "y"}});
  CHECK(!validate(p).has_value());
  CHECK(p.leq(0, 0));
  CHECK(p.leq(0, 1));
  CHECK(!p.leq(1, 0));
}

TEST_CASE("order closures on chains and diamonds") {
  FinPoset c3 = chain(3);
  CHECK(up_closure(c3, mask_bit(1)) == (mask_bit(1) | mask_bit(2)));
  CHECK(up_closure(c3, 0) == 0);
  FinPoset d = diamond();
  int a = *d.index_of("a");
  CHECK(down_closure(d, mask_bit(a)) == (mask_bit(*d.index_of("0")) | mask_bit(a)));
}

TEST_CASE("minimals and maximals") {
  FinPoset c3 = chain(3);
  CHECK(minimals(c3) == mask_bit(0));
  CHECK(maximals(c3) == mask_bit(2));
  FinPoset a4 = antichain(4);
  CHECK(minimals(a4) == a4.all());
  CHECK(maximals(a4) == a4.all());
  CHECK(minimals(diamond()) == mask_bit(0));
}

TEST_CASE("downset enumeration is lexicographic and complete") {
  std::vector<Mask> two = enumerate_downsets(chain(2));
  CHECK(two == std::vector<Mask>{0, 1, 3});
  CHECK(enumerate_downsets(antichain(3)).size() == 8);
  // independent oracle: scan all subsets for the downset property
  FinPoset c3 = chain(3);
  int count = 0;
  for (Mask m = 0; m < 8; ++m) {
    bool ok = true;
    for (int i : mask_indices(m))
      if (c3.down_of(i) & ~m) ok = false;
    if (ok) ++count;
  }
  CHECK(count == 4);
  CHECK(enumerate_downsets(c3).size() == 4);
  CHECK_THROWS_AS(enumerate_downsets(antichain(4), 3), std::invalid_argument);
}

TEST_CASE("downsets of an antichain form the powerset") {
  for (int n = 1; n <= 12; ++n)
    CHECK(enumerate_downsets(antichain(n)).size() == (size_t{1} << n));
}

TEST_CASE("closure-operator laws on random posets") {
  testutil::Rng rng(20240811);
  for (int round = 0; round < 200; ++round) {
    FinPoset p = testutil::random_poset(rng, 10);
    REQUIRE(!validate(p).has_value());
    Mask s = testutil::rand_int(rng, 0, int(p.all() & 0x3ff)) & p.all();
    Mask t = testutil::rand_int(rng, 0, int(p.all() & 0x3ff)) & p.all();
    Mask up1 = up_closure(p, s);
    CHECK((s & ~up1) == 0);                       // extensive
    CHECK(up_closure(p, up1) == up1);             // idempotent
    CHECK((up_closure(p, s & t) & ~up1) == 0);    // monotone
    Mask dn1 = down_closure(p, s);
    CHECK((s & ~dn1) == 0);
    CHECK(down_closure(p, dn1) == dn1);
    CHECK((down_closure(p, s & t) & ~dn1) == 0);
    // every element sits above some minimal element
    CHECK(up_closure(p, minimals(p)) == p.all());
    if (p.size() > 0) CHECK(minimals(p) != 0);
  }
}
