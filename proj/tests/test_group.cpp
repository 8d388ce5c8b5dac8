#include <doctest.h>

#include <random>

#include "bsrig/checks/oracles.hpp"
#include "bsrig/checks/sampling.hpp"
#include "bsrig/group.hpp"

using namespace bsrig;

namespace {

NormalForm nf(const char* text, const BsPresentation& g) { return element(text, g); }

}  // namespace

TEST_CASE("presentation parameters") {
  BsPresentation g(4, -6);
  CHECK(g.k() == 2);
  CHECK(g.n0() == 2);
  CHECK(g.m0() == -3);
  CHECK(g.standing_hypothesis());
  CHECK_FALSE(BsPresentation(1, 2).standing_hypothesis());
  CHECK_FALSE(BsPresentation(3, 2).standing_hypothesis());
  CHECK_THROWS_AS(BsPresentation(0, 3), DomainError);
  CHECK(g.to_string() == "BS(4,-6)");
}

TEST_CASE("parsing words") {
  GroupWord w = parse_word("b a^2 B");
  REQUIRE(w.syllables().size() == 3);
  CHECK(w.syllables()[0] == Syllable{Letter::B, 1});
  CHECK(w.syllables()[1] == Syllable{Letter::A, 2});
  CHECK(w.syllables()[2] == Syllable{Letter::B, -1});

  CHECK(parse_word("a^3 a^-3").empty());

  GroupWord v = parse_word("A^2 b^2");
  REQUIRE(v.syllables().size() == 2);
  CHECK(v.syllables()[0] == Syllable{Letter::A, -2});
  CHECK(v.syllables()[1] == Syllable{Letter::B, 2});

  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK(format(parse_word("b^-1 a^12345678901234567890")) == "b^-1 a^12345678901234567890");

  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("a^"), ParseError);
  CHECK_THROWS_AS(parse_word("a^-"), ParseError);
}

TEST_CASE("normal forms") {
  BsPresentation g23(2, 3);
  CHECK(format(nf("b a^2 b^-1", g23)) == "a^3");
  CHECK(format(nf("b^-1 a^3 b", g23)) == "a^2");

  NormalForm x = nf("a^7 b", g23);
  REQUIRE(x.prefix().size() == 1);
  CHECK(x.prefix()[0] == Crossing{1, 1});
  CHECK(x.tail() == 4);
  CHECK(format(x) == "a b a^4");

  CHECK(format(NormalForm()) == "e");
  CHECK(nf("e", g23).is_identity());
}

TEST_CASE("identity problem") {
  BsPresentation g23(2, 3);
  CHECK(is_identity(parse_word("b a^2 b^-1 a^-3"), g23));
  CHECK_FALSE(is_identity(parse_word("b a b^-1 a^-1"), g23));
  CHECK(is_identity(parse_word("b a^2 b^-1 a^2"), BsPresentation(2, -2)));
}

TEST_CASE("multiplication and inverses") {
  BsPresentation g23(2, 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    NormalForm u = sampling::random_element(rng, g23, {5, 1000});
    NormalForm v = sampling::random_element(rng, g23, {5, 1000});
    NormalForm w = sampling::random_element(rng, g23, {5, 1000});
    CHECK(multiply(NormalForm(), u, g23) == u);
    CHECK(multiply(u, NormalForm(), g23) == u);
    CHECK(invert(invert(u, g23), g23) == u);
    CHECK(multiply(u, invert(u, g23), g23).is_identity());
    CHECK(multiply(multiply(u, v, g23), w, g23) == multiply(u, multiply(v, w, g23), g23));
  }
  CHECK(multiply(nf("b", g23), nf("b^-1", g23), g23).is_identity());
  CHECK(power(nf("b", g23), -3, g23) == nf("B B B", g23));
  CHECK(power(nf("a b", g23), 0, g23).is_identity());
}

TEST_CASE("b-length") {
  BsPresentation g23(2, 3);
  CHECK(b_length(parse_word("b a b^-1"), g23) == 2);
  CHECK(b_length(parse_word("b a^2 b^-1"), g23) == 0);
  CHECK(b_length(parse_word("b^3 a b^-1"), g23) == 4);

  std::mt19937_64 rng(11);
  CHECK(oracle::b_length(parse_word("b^3 a b^-1"), g23, rng) == 4);
}

TEST_CASE("cyclic reduction") {
  BsPresentation g23(2, 3);
  CyclicReduction r = cyclically_reduce(nf("a^5", g23), g23);
  CHECK(r.conjugator.is_identity());
  CHECK(r.core == nf("a^5", g23));

  r = cyclically_reduce(nf("b a B", g23), g23);
  CHECK(r.core == nf("a", g23));
  CHECK(r.conjugator == nf("b", g23));

  CHECK(cyclically_reduce(nf("a b", g23), g23).core.b_length() == 1);

  std::mt19937_64 rng(3);
  for (const auto& group : {BsPresentation(2, 3), BsPresentation(2, -2), BsPresentation(3, 6)}) {
    for (int i = 0; i < 300; ++i) {
      NormalForm g = sampling::random_element(rng, group, {6, 100});
      CyclicReduction c = cyclically_reduce(g, group);
      CHECK(multiply(multiply(invert(c.conjugator, group), g, group), c.conjugator, group) ==
            c.core);
      CHECK(c.core.b_length() <= g.b_length());
    }
  }
}

TEST_CASE("abelianization") {
  BsPresentation g23(2, 3);
  AbelianImage id = abelianization_image(parse_word("b a^2 b^-1 a^-3"), g23);
  CHECK(id == AbelianImage{0, 0, 1});
  CHECK(abelianization_image(parse_word("a^4"), BsPresentation(2, 5)) == AbelianImage{0, 1, 3});
  CHECK(abelianization_image(parse_word("b^2 a^7"), BsPresentation(2, 2)) ==
        AbelianImage{2, 7, 0});
}

TEST_CASE("normal form agrees with the pinch oracle and survives relator insertion") {
  std::mt19937_64 rng(20240101);
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {2, -2}, {3, 6}, {1, 2}, {4, -6}}) {
    BsPresentation group(n, m);
    for (int i = 0; i < 500; ++i) {
      GroupWord w = sampling::random_word(rng, {6, 1000000});
      NormalForm x = normalize(w, group);
      CHECK(normalize(parse_word(format(x)), group) == x);
      CHECK(oracle::is_identity(w * to_word(x).inverse(), group, rng));
      CHECK(oracle::b_length(w, group, rng) == x.b_length());
      CHECK(normalize(sampling::insert_relators(w, 3, rng, group), group) == x);
      if (is_identity(w, group)) {
        CHECK(abelianization_image(w, group).b_sum == 0);
        CHECK(abelianization_image(w, group).a_residue == 0);
      }
    }
  }
}

TEST_CASE("normal form constraints hold") {
  std::mt19937_64 rng(5);
  BsPresentation group(3, -5);
  for (int i = 0; i < 500; ++i) {
    NormalForm x = sampling::random_element(rng, group);
    const auto& p = x.prefix();
    for (std::size_t j = 0; j < p.size(); ++j) {
      BigInt bound = p[j].b_sign > 0 ? abs(group.m()) : abs(group.n());
      CHECK(p[j].a_power >= 0);
      CHECK(p[j].a_power < bound);
      if (j + 1 < p.size() && p[j].b_sign == -p[j + 1].b_sign) CHECK(p[j + 1].a_power != 0);
    }
  }
}

TEST_CASE("big exponents do not overflow") {
  BsPresentation group(2, 3);
  // b^k a^(2^k) b^-k collapses to a^(3^k).
  const int k = 80;
  GroupWord w = GroupWord::b(k);
  w.append(Letter::A, pow(BigInt(2), k));
  w.append(Letter::B, -k);
  NormalForm x = normalize(w, group);
  CHECK(x.b_length() == 0);
  CHECK(x.tail() == pow(BigInt(3), k));
}
