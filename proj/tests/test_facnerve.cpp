#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zcohom/facnerve.hpp"

using namespace zcohom;

TEST_CASE("every hom set Mor(a,a) contains the identity morphism") {
  for (const std::string& name : builtin_monoid_names()) {
    MonoidWithZero m = builtin_monoid(name);
    for (ElementId a : m.nonzero_elements()) {
      auto mor = morphisms(m, a, a);
      bool found = false;
      for (const FacMorphism& f : mor)
        if (f.alpha == m.identity && f.beta == m.identity) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("Mor(u, w) in the example monoid") {
  MonoidWithZero m = example_uvw();
  ElementId u = 1, v = 2, w = 3;
  auto mor = morphisms(m, u, w);
  REQUIRE(mor.size() == 4);
  // lexicographic (alpha, beta) order
  CHECK((mor[0].alpha == m.identity && mor[0].beta == u));
  CHECK((mor[1].alpha == m.identity && mor[1].beta == v));
  CHECK((mor[2].alpha == u && mor[2].beta == m.identity));
  CHECK((mor[3].alpha == v && mor[3].beta == m.identity));
}

TEST_CASE("the trivial monoid has a single endomorphism of 1") {
  MonoidWithZero m = builtin_monoid("trivial");
  auto mor = morphisms(m, m.identity, m.identity);
  REQUIRE(mor.size() == 1);
  CHECK(mor[0].alpha == m.identity);
}

TEST_CASE("zero is not an object") {
  MonoidWithZero m = builtin_monoid("trivial");
  CHECK_THROWS_AS(morphisms(m, m.zero, m.identity), ZeroObject);
  CHECK_THROWS_AS(morphisms(m, m.identity, m.zero), ZeroObject);
}

TEST_CASE("composition follows the factorization rule") {
  MonoidWithZero m = example_uvw();
  ElementId u = 1, v = 2, w = 3;
  FacMorphism first{u, m.identity, m.identity, u};   // (u,1): 1 -> u
  FacMorphism second{v, u, m.identity, w};           // (v,1): u -> w
  FacMorphism composite = compose(m, second, first);
  CHECK(composite.alpha == w);  // v·u = w
  CHECK(composite.a == m.identity);
  CHECK(composite.beta == m.identity);
  CHECK(composite.target == w);

  CHECK_THROWS_AS(compose(m, first, second), NotComposable);
}

TEST_CASE("identity composition and the two factorization orders") {
  for (const std::string& name : {"example-uvw", "m3"}) {
    MonoidWithZero m = builtin_monoid(name);
    for (ElementId a : m.nonzero_elements())
      for (const FacMorphism& f : morphisms_from(m, a)) {
        FacMorphism id_src{m.identity, a, m.identity, a};
        CHECK(compose(m, f, id_src) == f);
        FacMorphism id_tgt{m.identity, f.target, m.identity, f.target};
        CHECK(compose(m, id_tgt, f) == f);
        // (alpha, beta) = (alpha, 1)(1, beta) = (1, beta)(alpha, 1)
        ElementId mid_right = m.mul(a, f.beta);
        if (!m.is_zero(mid_right)) {
          FacMorphism right_part{m.identity, a, f.beta, mid_right};
          FacMorphism left_part{f.alpha, mid_right, m.identity, f.target};
          CHECK(compose(m, left_part, right_part) == f);
        }
        ElementId mid_left = m.mul(f.alpha, a);
        if (!m.is_zero(mid_left)) {
          FacMorphism left_part{f.alpha, a, m.identity, mid_left};
          FacMorphism right_part{m.identity, mid_left, f.beta, f.target};
          CHECK(compose(m, right_part, left_part) == f);
        }
      }
  }
}

TEST_CASE("composition is associative on all composable triples") {
  MonoidWithZero m = example_uvw();
  std::vector<FacMorphism> all;
  for (ElementId a : m.nonzero_elements())
    for (const FacMorphism& f : morphisms_from(m, a)) all.push_back(f);
  for (const FacMorphism& f : all)
    for (const FacMorphism& g : all) {
      if (g.a != f.target) continue;
      for (const FacMorphism& h : all) {
        if (h.a != g.target) continue;
        CHECK(compose(m, h, compose(m, g, f)) == compose(m, compose(m, h, g), f));
      }
    }
}

TEST_CASE("nerve sizes match brute-force enumeration") {
  MonoidWithZero m = example_uvw();
  CHECK(nerve(m, 0).size() == 1);
  CHECK(nerve(m, 1).size() == 4);
  CHECK(nerve(m, 2).size() == 11);

  for (std::size_t n = 1; n <= 3; ++n) {
    // odometer over all id tuples, counting nonzero products
    std::size_t count = 0;
    std::vector<ElementId> t(n, 0);
    for (;;) {
      ElementId p = m.identity;
      for (ElementId e : t) p = m.mul(p, e);
      if (!m.is_zero(p)) ++count;
      std::size_t i = n;
      while (i > 0 && ++t[--i] == m.size()) t[i] = 0;
      if (i == 0 && t[0] == 0) break;
    }
    CHECK(nerve(m, n).size() == count);
  }
}

TEST_CASE("nerve of the trivial monoid is a point in every degree") {
  MonoidWithZero m = builtin_monoid("trivial");
  for (std::size_t n = 0; n <= 4; ++n) REQUIRE(nerve(m, n).size() == 1);
}

TEST_CASE("nerve growth bound, with equality for groups with zero") {
  for (const std::string& name : builtin_monoid_names()) {
    MonoidWithZero m = builtin_monoid(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t bound = 1;
      for (std::size_t i = 0; i < n; ++i) bound *= m.size() - 1;
      CHECK(nerve(m, n).size() <= bound);
    }
  }
  // the nonzero part of z2-with-zero is closed under multiplication
  MonoidWithZero g = builtin_monoid("z2-with-zero");
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t bound = 1;
    for (std::size_t i = 0; i < n; ++i) bound *= g.size() - 1;
    CHECK(nerve(g, n).size() == bound);
  }
}

TEST_CASE("nerve tuples come out in lexicographic order") {
  MonoidWithZero m = example_uvw();
  auto ner2 = nerve(m, 2);
  for (std::size_t i = 1; i < ner2.size(); ++i) CHECK(ner2[i - 1] < ner2[i]);
  CHECK(ner2.front() == NerveTuple{0, 0});
}
