#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "zcohom/monoid.hpp"

#include <random>

using namespace zcohom;

TEST_CASE("the two-element monoid validates") {
  MonoidWithZero m = validate({"1", "0"}, 0, 1, {{0, 1}, {1, 1}});
  CHECK(m.size() == 2);
  CHECK(m.mul(0, 1) == 1);
}

TEST_CASE("validate reports associativity violations with a witness") {
  // 1 fixed, 0 absorbing, but a·a = 1 with a·0-row corrupted on purpose:
  // build a genuinely non-associative table around valid identity/zero rows
  std::vector<std::vector<ElementId>> table = {
      {0, 1, 2, 3}, {1, 2, 0, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}};
  try {
    validate({"1", "a", "b", "0"}, 0, 3, table);
    FAIL("expected NotAssociative");
  } catch (const NotAssociative& e) {
    ElementId a = e.a, b = e.b, c = e.c;
    CHECK(table[table[a][b]][c] != table[a][table[b][c]]);
  }
}

TEST_CASE("validate reports identity and zero violations") {
  CHECK_THROWS_AS(validate({"1", "a", "0"}, 0, 2, {{0, 1, 2}, {0, 1, 2}, {2, 2, 2}}), BadIdentity);
  CHECK_THROWS_AS(validate({"1", "a", "0"}, 0, 2, {{0, 1, 2}, {1, 0, 2}, {2, 1, 2}}), BadZero);
  CHECK_THROWS_AS(validate({"1", "0"}, 0, 0, {{0, 1}, {1, 1}}), IdentityEqualsZero);
}

TEST_CASE("the example monoid validates and multiplies as printed") {
  MonoidWithZero m = example_uvw();
  CHECK(m.size() == 5);
  ElementId u = 1, v = 2, w = 3;
  CHECK(m.mul(u, v) == w);
  CHECK(m.mul(u, w) == m.zero);
  CHECK(m.mul(w, w) == m.zero);
  for (ElementId a = 0; a < m.size(); ++a)
    for (ElementId b = 0; b < m.size(); ++b) CHECK(m.mul(a, b) == m.mul(b, a));
}

TEST_CASE("adjoin_zero on the trivial group gives the two-element monoid") {
  MonoidWithZero m = adjoin_zero(RawTable{{"1"}, {{0}}});
  CHECK(m.size() == 2);
  CHECK(m.identity == 0);
  CHECK(m.zero == 1);
}

TEST_CASE("adjoin_zero on Z/2 keeps the group multiplication") {
  MonoidWithZero m = adjoin_zero(RawTable{{"1", "g"}, {{0, 1}, {1, 0}}});
  CHECK(m.size() == 3);
  CHECK(m.mul(1, 1) == 0);
  CHECK(m.mul(1, 2) == 2);
}

TEST_CASE("free monoids are rejected without a truncation bound") {
  CHECK_THROWS_AS(free_truncation({"x"}, std::nullopt), InfiniteInput);
}

TEST_CASE("adjoin_identity always prepends a fresh identity") {
  // the u,v,w example semigroup gains element "1"
  MonoidWithZero e4 = example_uvw();
  CHECK(e4.name_of(0) == "1");

  // a table that already is a monoid still gets a fresh identity
  RawTable z2{{"1", "g"}, {{0, 1}, {1, 0}}};
  RawTable out = adjoin_identity(z2);
  CHECK(out.names.size() == 3);
  CHECK(out.names[0] == "1'");
  CHECK(out.table[1][2] == 2);  // old products shifted but unchanged

  // one idempotent element
  RawTable single{{"z"}, {{0}}};
  RawTable lifted = adjoin_identity(single);
  CHECK(lifted.names == std::vector<std::string>{"1", "z"});
  CHECK(lifted.table[1][1] == 1);
}

TEST_CASE("zero_free builds the monogenic truncation m3") {
  MonoidWithZero m = zero_free({{"x"}, {"", "x", "xx"}});
  CHECK(m.names == std::vector<std::string>{"1", "x", "xx", "0"});
  CHECK(m.mul(1, 1) == 2);          // x·x = xx
  CHECK(m.mul(1, 2) == m.zero);     // x·xx = 0
  CHECK(m.mul(2, 2) == m.zero);
}

TEST_CASE("zero_free with two letters of length one kills all letter products") {
  MonoidWithZero m = zero_free({{"x", "y"}, {"", "x", "y"}});
  CHECK(m.size() == 4);
  for (ElementId a = 1; a <= 2; ++a)
    for (ElementId b = 1; b <= 2; ++b) CHECK(m.mul(a, b) == m.zero);
}

TEST_CASE("zero_free rejects word sets that are not factor-closed") {
  try {
    zero_free({{"x"}, {"", "xx"}});
    FAIL("expected NotFactorClosed");
  } catch (const NotFactorClosed& e) {
    CHECK(e.word == "xx");
    CHECK(e.factor == "x");
  }
}

TEST_CASE("groups with zero are 0-cancellative") {
  CHECK(is_zero_cancellative(builtin_monoid("z2-with-zero")).cancellative);
  CHECK(is_zero_cancellative(builtin_monoid("trivial")).cancellative);
  CHECK(is_zero_cancellative(builtin_monoid("m3")).cancellative);
}

TEST_CASE("the example monoid is not 0-cancellative, witness u·u = v·u") {
  auto result = is_zero_cancellative(example_uvw());
  CHECK(!result.cancellative);
  REQUIRE(result.witness.has_value());
  MonoidWithZero m = example_uvw();
  CHECK(m.name_of(result.witness->a) == "u");
  CHECK(m.name_of(result.witness->b) == "v");
  CHECK(m.name_of(result.witness->x) == "u");
  CHECK(result.witness->right);
}

TEST_CASE("every builtin resolves and validates") {
  for (const std::string& name : builtin_monoid_names()) {
    MonoidWithZero m = builtin_monoid(name);
    CHECK(m.size() >= 2);
    // revalidation is idempotent
    CHECK_NOTHROW(validate(m.names, m.identity, m.zero, m.table));
  }
  CHECK_THROWS_AS(builtin_monoid("no-such-monoid"), Error);
}

TEST_CASE("validate agrees with direct law checking on random tables") {
  std::mt19937_64 rng(31);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t m = 2 + rng() % 2;
    std::vector<std::vector<ElementId>> table(m, std::vector<ElementId>(m));
    for (auto& row : table)
      for (auto& cell : row) cell = rng() % m;
    ElementId identity = rng() % m, zero = rng() % m;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("e" + std::to_string(i));

    bool expect = identity != zero;
    for (ElementId a = 0; a < m && expect; ++a)
      expect = table[identity][a] == a && table[a][identity] == a && table[zero][a] == zero &&
               table[a][zero] == zero;
    for (ElementId a = 0; a < m && expect; ++a)
      for (ElementId b = 0; b < m && expect; ++b)
        for (ElementId c = 0; c < m && expect; ++c)
          expect = table[table[a][b]][c] == table[a][table[b][c]];

    bool got;
    try {
      validate(names, identity, zero, table);
      got = true;
      ++accepted;
    } catch (const Error&) {
      got = false;
    }
    CHECK(got == expect);
  }
  CHECK(accepted > 0);  // the fuzz actually hits valid tables
}

TEST_CASE("constructions commute with relabeling") {
  RawTable s{{"u", "v", "w", "0"}, {{2, 2, 3, 3}, {2, 2, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3}}};
  // relabel the semigroup first
  std::vector<ElementId> sigma{2, 0, 3, 1};
  RawTable s_perm;
  s_perm.names.resize(4);
  s_perm.table.assign(4, std::vector<ElementId>(4));
  for (ElementId a = 0; a < 4; ++a) s_perm.names[sigma[a]] = s.names[a];
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = 0; b < 4; ++b) s_perm.table[sigma[a]][sigma[b]] = sigma[s.table[a][b]];

  RawTable lifted = adjoin_identity(s);
  RawTable lifted_perm = adjoin_identity(s_perm);
  // the induced relabeling fixes the fresh identity and shifts the rest
  std::vector<ElementId> tau{0, sigma[0] + 1, sigma[1] + 1, sigma[2] + 1, sigma[3] + 1};
  for (ElementId a = 0; a < 5; ++a) {
    CHECK(lifted_perm.names[tau[a]] == lifted.names[a]);
    for (ElementId b = 0; b < 5; ++b)
      CHECK(lifted_perm.table[tau[a]][tau[b]] == tau[lifted.table[a][b]]);
  }

  // both orders validate to isomorphic monoids with zero
  MonoidWithZero direct = validate(lifted.names, 0, 4, lifted.table);
  MonoidWithZero relabeled = validate(lifted_perm.names, 0, tau[4], lifted_perm.table);
  for (ElementId a = 0; a < direct.size(); ++a)
    for (ElementId b = 0; b < direct.size(); ++b)
      CHECK(tau[direct.mul(a, b)] == relabeled.mul(tau[a], tau[b]));
  CHECK(relabeled.identity == tau[direct.identity]);
  CHECK(relabeled.zero == tau[direct.zero]);
}
