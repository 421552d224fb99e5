#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "asphere/theory.hpp"

using namespace asphere;

namespace {

CoeffWord cw(std::initializer_list<SignedSym> syms) {
  CoeffWord w;
  w.syms = syms;
  return w;
}

}  // namespace

TEST_CASE("relation parsing") {
  Relation r = Relation::parse("a=d^-1");
  CHECK(r.left == "a");
  CHECK(r.right == SignedSym{"d", -1});
  CHECK(Relation::parse(" h = e ").str() == "h=e");
  CHECK_THROWS_AS(Relation::parse("a"), std::invalid_argument);
}

TEST_CASE("contradictory pairs report the stated witness") {
  struct Case {
    const char* r1;
    const char* r2;
    const char* witness;
  };
  const Case cases[] = {
      {"a=d^-1", "a=d", "d^2=1"}, {"a=g^-1", "a=g", "g^2=1"}, {"d=g^-1", "d=g", "g^2=1"},
      {"c=f^-1", "c=f", "f^2=1"}, {"c=i^-1", "c=i", "i^2=1"}, {"f=i^-1", "f=i", "i^2=1"},
  };
  for (const auto& c : cases) {
    auto th = CoefficientTheory::base().add(c.r1).add(c.r2).close();
    CHECK(th.contradictory());
    REQUIRE(th.witness().has_value());
    CHECK(th.witness()->str() == c.witness);
  }
}

TEST_CASE("entailed-third triples") {
  struct Triple {
    const char* a;
    const char* b;
    const char* c;
  };
  const Triple triples[] = {
      {"a=d^-1", "a=g^-1", "d=g"}, {"a=d^-1", "a=g", "d=g^-1"}, {"a=d", "a=g^-1", "d=g^-1"},
      {"a=d", "a=g", "d=g"},       {"c=i^-1", "c=f^-1", "f=i"}, {"c=i^-1", "c=f", "f=i^-1"},
      {"c=i", "c=f^-1", "f=i^-1"}, {"c=i", "c=f", "f=i"},       {"h=e", "h=b", "e=b"},
  };
  for (const auto& t : triples) {
    const std::vector<const char*> rels = {t.a, t.b, t.c};
    // closing any two entails the third
    for (int skip = 0; skip < 3; ++skip) {
      auto th = CoefficientTheory::base();
      for (int i = 0; i < 3; ++i)
        if (i != skip) th.add(rels[i]);
      auto closed = th.close();
      REQUIRE(closed.consistent());
      CHECK(closed.entails(Relation::parse(rels[skip])));
    }
  }
}

TEST_CASE("sample entailments and non-entailments") {
  auto th = CoefficientTheory::base().add("a=d^-1").add("a=g^-1").close();
  CHECK(th.entails(Relation::parse("d=g")));
  CHECK(CoefficientTheory::base().add("c=i").add("c=f").close().entails(Relation::parse("f=i")));
  CHECK_FALSE(CoefficientTheory::base().close().entails(Relation::parse("a=d")));
  auto contradictory = CoefficientTheory::base().add("a=d").add("a=d^-1").close();
  CHECK_THROWS_AS(contradictory.entails(Relation::parse("a=d")), std::logic_error);
}

TEST_CASE("at most three of each six-relation family are jointly consistent") {
  const std::vector<std::string> adg = {"a=d^-1", "a=d", "a=g^-1", "a=g", "d=g^-1", "d=g"};
  const std::vector<std::string> cfi = {"c=f^-1", "c=f", "c=i^-1", "c=i", "f=i^-1", "f=i"};
  for (const auto& fam : {adg, cfi}) {
    for (unsigned mask = 0; mask < 64; ++mask) {
      auto th = CoefficientTheory::base();
      int size = 0;
      for (int i = 0; i < 6; ++i)
        if (mask & (1u << i)) {
          th.add(fam[i]);
          ++size;
        }
      if (th.close().consistent()) CHECK(size <= 3);
    }
  }
}

TEST_CASE("close is idempotent and order-independent") {
  const std::vector<std::string> pool = {"a=d^-1", "a=g^-1", "d=g", "h=e", "h=b",
                                         "c=i",    "c=f",    "f=i", "e=b"};
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> rels = pool;
    std::shuffle(rels.begin(), rels.end(), rng);
    size_t n = std::uniform_int_distribution<size_t>(0, 4)(rng);
    rels.resize(n);

    auto th1 = CoefficientTheory::base();
    for (const auto& r : rels) th1.add(r);
    auto c1 = th1.close();

    std::shuffle(rels.begin(), rels.end(), rng);
    auto th2 = CoefficientTheory::base();
    for (const auto& r : rels) th2.add(r);
    auto c2 = th2.close();

    CHECK(c1.consistent() == c2.consistent());
    if (c1.consistent()) {
      // same partition: identical representatives on the whole signed alphabet
      for (const auto& s : c1.alphabet())
        for (int sign : {+1, -1})
          CHECK(c1.rep({s, sign}) == c2.rep({s, sign}));
      // idempotence: closing again changes nothing
      auto c1again = c1.close();
      for (const auto& s : c1.alphabet())
        for (int sign : {+1, -1})
          CHECK(c1.rep({s, sign}) == c1again.rep({s, sign}));
    }
  }
}

TEST_CASE("closure is symmetric under inversion") {
  auto th = CoefficientTheory::base().add("a=d^-1").add("h=e").add("c=f").close();
  REQUIRE(th.consistent());
  for (const auto& s : th.alphabet())
    for (int sign : {+1, -1}) {
      SignedSym r = th.rep({s, sign});
      CHECK(th.rep(SignedSym{s, -sign}) == r.inverse());
    }
}

TEST_CASE("normalize_word classification") {
  auto th0 = CoefficientTheory::base().close();
  auto trivial = th0.normalize_word(cw({{"b", 1}}));
  CHECK(trivial.trivial());

  auto th = CoefficientTheory::base().add("a=d^-1").close();
  CHECK(th.normalize_word(cw({{"a", 1}, {"d", 1}})).trivial());

  auto p = th0.normalize_word(cw({{"a", 1}, {"a", 1}, {"a", 1}}));
  CHECK(p.nontrivial_power());
  CHECK(p.symbol == "a");
  CHECK(p.exponent == 3);

  auto neg = th0.normalize_word(cw({{"d", -1}, {"d", -1}}));
  CHECK(neg.nontrivial_power());
  CHECK(neg.symbol == "d");
  CHECK(neg.exponent == -2);

  CHECK(th0.normalize_word(cw({{"f", 1}, {"b", 1}, {"g", 1}})).kind == WordClass::Unknown);
  // e and h are not assumed nontrivial: their powers stay unknown
  CHECK(th0.normalize_word(cw({{"e", 1}, {"e", 1}})).kind == WordClass::Unknown);
  // a power of d is a power of the class witness under a = d^-1
  auto pw = th.normalize_word(cw({{"d", 1}, {"d", 1}}));
  CHECK(pw.nontrivial_power());
  CHECK(pw.symbol == "a");
  CHECK(pw.exponent == -2);
}

TEST_CASE("relations through b mean h = 1 without contradiction") {
  auto th = CoefficientTheory::base().add("h=b").add("e=b").close();
  REQUIRE(th.consistent());
  CHECK(th.entails(Relation::parse("h=e")));
  CHECK(th.normalize_word(cw({{"h", 1}})).trivial());
}

TEST_CASE("theory JSON shape") {
  auto th = CoefficientTheory::base().add("a=d^-1").close();
  auto j = th.to_json();
  CHECK(j["status"] == "consistent");
  CHECK(j["relations"][0] == "a=d^-1");
  auto bad = CoefficientTheory::base().add("a=d").add("a=d^-1").close();
  CHECK(bad.to_json()["status"] == "contradictory");
  CHECK(bad.to_json()["witness"] == "d^2=1");
}
