#include <doctest.h>

#include <random>
#include <vector>

#include "bsrig/checks/oracles.hpp"
#include "bsrig/checks/sampling.hpp"
#include "bsrig/hecke.hpp"

using namespace bsrig;

namespace {

NormalForm nf(const char* text, const BsPresentation& g) { return element(text, g); }

CosetProfile prof(const BigInt& l, const BigInt& r, const BigInt& L) { return {l, r, L}; }

}  // namespace

TEST_CASE("coset profiles of the generators") {
  for (int n = 2; n <= 5; ++n) {
    for (int am = n; am <= 6; ++am) {
      for (int m : {am, -am}) {
        BsPresentation g(n, m);
        CHECK(coset_profile(nf("b", g), g) == prof(n, am, (m > 0 ? 1 : -1) * n));
        CHECK(coset_profile(nf("B", g), g) == prof(am, n, m));
      }
    }
  }
  BsPresentation g23(2, 3);
  CHECK(coset_profile(nf("a^5", g23), g23) == prof(1, 1, 1));
  CHECK(coset_profile(nf("b a B", g23), g23) == prof(3, 3, 3));
  CHECK(coset_profile(nf("b^2", g23), g23) == prof(4, 9, 4));
}

TEST_CASE("coset profiles agree with search and satisfy their defining relation") {
  std::mt19937_64 rng(17);
  for (const auto& group : {BsPresentation(2, 3), BsPresentation(2, -3), BsPresentation(4, 6)}) {
    for (int i = 0; i < 150; ++i) {
      NormalForm g = sampling::random_element(rng, group, {3, 50});
      CosetProfile p = coset_profile(g, group);
      CHECK(abs(p.L) == p.l);
      CHECK(coset_profile(invert(g, group), group).l == p.r);
      NormalForm lhs = multiply(multiply(g, normalize(GroupWord::a(p.L), group), group),
                                invert(g, group), group);
      CHECK(lhs == normalize(GroupWord::a(p.r), group));
      auto searched = oracle::profile_by_search(to_word(g), group, rng);
      REQUIRE(searched.has_value());
      CHECK(*searched == p);
      if (p.l != 1) CHECK(f_set_member(p.l, group));
      if (p.r != 1) CHECK(f_set_member(p.r, group));
      // Constant on double cosets.
      NormalForm shifted = multiply(multiply(normalize(GroupWord::a(i - 70), group), g, group),
                                    normalize(GroupWord::a(3 * i + 1), group), group);
      CHECK(coset_profile(shifted, group) == p);
    }
  }
}

TEST_CASE("F membership") {
  CHECK(f_set_member(2, BsPresentation(2, 3)));
  CHECK_FALSE(f_set_member(5, BsPresentation(2, 3)));
  CHECK_FALSE(f_set_member(1, BsPresentation(2, 3)));
  CHECK(f_set_member(6, BsPresentation(4, 6)));
  CHECK_FALSE(f_set_member(3, BsPresentation(4, 6)));
  CHECK(f_set_member(2, BsPresentation(2, 2)));
  CHECK_FALSE(f_set_member(4, BsPresentation(2, 2)));
  CHECK_THROWS_AS(f_set_member(0, BsPresentation(2, 3)), DomainError);
  CHECK_THROWS_AS(f_set_member(2, BsPresentation(1, 3)), DomainError);

  std::set<BigInt> f = f_set(2, BsPresentation(2, 3));
  CHECK(f == std::set<BigInt>{2, 3, 4, 6, 9});
}

TEST_CASE("double cosets") {
  BsPresentation g23(2, 3);
  CHECK(double_coset(nf("a^2 b a^5", g23), g23).representative == nf("b", g23));
  CHECK_FALSE(same_double_coset(nf("b", g23), nf("B", g23), g23));
  std::mt19937_64 rng(23);
  CHECK_FALSE(oracle::double_coset_contains_by_search(parse_word("b"), parse_word("B"), g23, 12,
                                                      rng));

  for (const auto& group : {BsPresentation(2, 3), BsPresentation(3, -4), BsPresentation(2, -2)}) {
    for (int i = 0; i < 150; ++i) {
      NormalForm g = sampling::random_element(rng, group, {4, 200});
      NormalForm a = nf("a", group);
      CHECK(same_double_coset(g, multiply(multiply(a, g, group), invert(a, group), group), group));
      NormalForm rep = double_coset_representative(g, group);
      CHECK(rep.tail() == 0);
      CHECK(rep == oracle::double_coset_rep_by_enumeration(g, group));
    }
  }
}

TEST_CASE("quasi-centralizer") {
  BsPresentation g23(2, 3);
  CHECK(qc_member(nf("a^17", g23), g23));
  CHECK(qc_member(nf("b", BsPresentation(2, 2)), BsPresentation(2, 2)));
  CHECK_FALSE(qc_member(nf("b", BsPresentation(2, -2)), BsPresentation(2, -2)));
  CHECK(qc_member(nf("b a B", g23), g23));

  CHECK(centralizes(nf("a", g23), 5, g23));
  CHECK(centralizes(nf("b^2", BsPresentation(2, -2)), 2, BsPresentation(2, -2)));
  CHECK_FALSE(centralizes(nf("b", g23), 2, g23));
}

TEST_CASE("quasi-centralizer is a normal subgroup on samples") {
  std::mt19937_64 rng(29);
  for (const auto& group : {BsPresentation(2, 3), BsPresentation(2, -2)}) {
    std::vector<NormalForm> members;
    while (members.size() < 40) {
      NormalForm g = sampling::random_element(rng, group, {4, 20});
      if (qc_member(g, group)) members.push_back(g);
    }
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      const NormalForm& g = members[i];
      const NormalForm& h = members[i + 1];
      CHECK(qc_member(multiply(g, h, group), group));
      CHECK(qc_member(invert(g, group), group));
      NormalForm x = sampling::random_element(rng, group, {3, 20});
      CHECK(qc_member(conjugate(g, x, group), group));
    }
  }
}

TEST_CASE("amalgam embedding") {
  BsPresentation g23(2, 3);
  CHECK(format(amalgam_embed("c^2", g23)) == "a^2");
  CHECK(format(amalgam_embed("d", g23)) == "b^-1 a b");
  BsPresentation g34(3, 4);
  CHECK(is_identity(amalgam_embed("c^3 d^-4", g34), g34));
  CHECK_THROWS_AS(amalgam_embed("c", BsPresentation(2, 2)), DomainError);

  // Reduced amalgam words with interior exponents outside nZ and mZ have nontrivial images.
  std::mt19937_64 rng(31);
  for (const auto& group : {BsPresentation(2, 3), BsPresentation(3, -4), BsPresentation(3, 5)}) {
    int n = static_cast<int>(group.n());
    int am = static_cast<int>(abs(group.m()));
    for (int trial = 0; trial < 200; ++trial) {
      std::string w;
      int blocks = 1 + static_cast<int>(rng() % 4);
      auto exponent = [&](int modulus) {
        int e = 0;
        while (e % modulus == 0) e = static_cast<int>(rng() % 13) - 6;
        return e;
      };
      for (int i = 0; i < blocks; ++i) {
        w += "c^" + std::to_string(exponent(n)) + " d^" + std::to_string(exponent(am)) + " ";
      }
      CHECK_FALSE(is_identity(amalgam_embed(w, group), group));
    }
  }
}

TEST_CASE("lcm of l-values") {
  BsPresentation g23(2, 3);
  std::vector<NormalForm> single{nf("a", g23)};
  CHECK(lcm_l_values(single, g23) == 1);
  std::vector<NormalForm> both{nf("b", g23), nf("B", g23)};
  CHECK(lcm_l_values(both, g23) == 6);
  std::vector<NormalForm> conj{nf("b a B", g23)};
  CHECK(lcm_l_values(conj, g23) == 3);
}

TEST_CASE("Hecke convolution") {
  BsPresentation g23(2, 3);
  auto T = [&](const char* w) { return HeckeElement::basis(double_coset(nf(w, g23), g23)); };

  HeckeElement tb = T("b");
  CHECK(hecke_convolve(HeckeElement::unit(), tb, g23) == tb);
  CHECK(hecke_convolve(tb, HeckeElement::unit(), g23) == tb);

  HeckeElement product = hecke_convolve(tb, T("B"), g23);
  CHECK(product == HeckeElement::unit() + T("b a B") + T("e") + T("e"));
  CHECK(product.coefficient(double_coset(NormalForm(), g23)) == 3);
  CHECK(product.coefficient(double_coset(nf("b a B", g23), g23)) == 1);

  std::mt19937_64 rng(37);
  for (const auto& group : {BsPresentation(2, 3), BsPresentation(2, -2), BsPresentation(3, 4)}) {
    for (int i = 0; i < 40; ++i) {
      NormalForm d = sampling::random_element(rng, group, {2, 30});
      NormalForm e = sampling::random_element(rng, group, {2, 30});
      DoubleCoset D = double_coset(d, group);
      DoubleCoset E = double_coset(e, group);
      HeckeElement z = hecke_convolve(HeckeElement::basis(D), HeckeElement::basis(E), group);
      BigInt total = 0;
      for (const auto& [F, c] : z.terms()) {
        CHECK(c > 0);
        total += F.profile.l * c;
        CHECK(c == oracle::convolution_coefficient_by_left_cosets(D.representative,
                                                                  E.representative,
                                                                  F.representative, group));
      }
      CHECK(total == D.profile.l * E.profile.l);

      // Representative independence.
      NormalForm d2 = multiply(normalize(GroupWord::a(5), group), d, group);
      NormalForm e2 = multiply(e, normalize(GroupWord::a(-7), group), group);
      HeckeElement z2 = hecke_convolve(HeckeElement::basis(double_coset(d2, group)),
                                       HeckeElement::basis(double_coset(e2, group)), group);
      CHECK(z2 == z);
    }
    for (int i = 0; i < 10; ++i) {
      auto pick = [&] {
        return HeckeElement::basis(
            double_coset(sampling::random_element(rng, group, {1, 10}), group));
      };
      HeckeElement x = pick(), y = pick(), w = pick();
      CHECK(hecke_convolve(hecke_convolve(x, y, group), w, group) ==
            hecke_convolve(x, hecke_convolve(y, w, group), group));
    }
  }
}
