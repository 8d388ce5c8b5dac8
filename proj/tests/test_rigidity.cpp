#include <doctest.h>

#include <random>
#include <vector>

#include "bsrig/checks/oracles.hpp"
#include "bsrig/checks/sampling.hpp"
#include "bsrig/rigidity.hpp"

using namespace bsrig;

TEST_CASE("canonical parameters") {
  CHECK(canonicalize(-2, -3) == Parameters{2, 3});
  CHECK(canonicalize(3, 2) == Parameters{2, 3});
  CHECK(canonicalize(-3, 2) == Parameters{2, -3});
  CHECK(canonicalize(2, -3) == Parameters{2, -3});
  for (int n = -6; n <= 6; ++n) {
    for (int m = -6; m <= 6; ++m) {
      if (n == 0 || m == 0) continue;
      Parameters c = canonicalize(n, m);
      CHECK(canonicalize(c.n, c.m) == c);
      CHECK(c.n >= 1);
      CHECK(c.n <= abs(c.m));
      CHECK(is_isomorphic(n, m, c.n, c.m));
    }
  }
}

TEST_CASE("isomorphism and amenability") {
  CHECK(is_isomorphic(2, 3, 3, 2));
  CHECK_FALSE(is_isomorphic(2, 3, 2, -3));
  CHECK(is_isomorphic(2, 3, 2, 3));
  CHECK(is_isomorphic(2, -3, -3, 2));
  CHECK(is_amenable(1, 5));
  CHECK_FALSE(is_amenable(2, 2));
  CHECK(is_amenable(-1, 7));
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      for (int c = -4; c <= 4; ++c) {
        for (int d = -4; d <= 4; ++d) {
          if (a * b * c * d == 0) continue;
          CHECK(is_isomorphic(a, b, c, d) == oracle::moldavanskii_by_multiset(a, b, c, d));
          CHECK(is_isomorphic(a, b, c, d) == is_isomorphic(c, d, a, b));
        }
      }
    }
  }
}

TEST_CASE("recovering parameters from profiles") {
  std::vector<IndexPair> s23{{2, 3}, {3, 2}, {4, 9}, {1, 1}};
  CHECK(recover_parameters(s23) == RecoveredParameters{2, 3});
  std::vector<IndexPair> s22{{2, 2}, {4, 4}};
  CHECK(recover_parameters(s22) == RecoveredParameters{2, 2});
  std::vector<IndexPair> s46{{4, 6}, {6, 4}};
  CHECK(recover_parameters(s46) == RecoveredParameters{4, 6});

  std::mt19937_64 rng(67);
  for (int n = 2; n <= 6; ++n) {
    for (int am = n; am <= 6; ++am) {
      for (int m : {am, -am}) {
        BsPresentation group(n, m);
        std::vector<IndexPair> sample;
        for (int i = 0; i < 60; ++i) {
          CosetProfile p = coset_profile(sampling::random_element(rng, group, {3, 30}), group);
          sample.push_back({p.l, p.r});
        }
        for (const char* w : {"b", "B"}) {
          CosetProfile p = coset_profile(element(w, group), group);
          sample.push_back({p.l, p.r});
        }
        CHECK(recover_parameters(sample) == RecoveredParameters{n, am});
      }
    }
  }
}

TEST_CASE("sign witness") {
  SignWitness w = sign_witness(2, 3);
  CHECK(w.t == 1);
  CHECK(w.omega == RootOfUnity(1, 12));
  CHECK(w.mu == RootOfUnity(1, 18));
  CHECK(w.omega.pow(2) == w.mu.pow(3));
  CHECK_FALSE(w.mu.pow(6).is_trivial());

  w = sign_witness(2, 4);
  CHECK(w.t == 2);
  CHECK(w.omega == RootOfUnity(1, 8));
  CHECK(w.mu == RootOfUnity(1, 16));

  CHECK_THROWS_AS(sign_witness(2, 2), DomainError);

  for (int n = 2; n <= 9; ++n) {
    for (int am = n + 1; am <= 12; ++am) {
      for (int m : {am, -am}) {
        SignWitness s = sign_witness(n, m);
        CHECK(s.omega.pow(n) == s.mu.pow(m));
        CHECK_FALSE(s.mu.pow(2 * m).is_trivial());
      }
    }
  }
}

TEST_CASE("obstruction verdicts") {
  CHECK(obstruction_verdict(2, 3, 2, 3).kind == VerdictKind::NoObstruction);
  RigidityVerdict v = obstruction_verdict(2, 3, 2, -3);
  CHECK(v.kind == VerdictKind::SignMismatch);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->omega == RootOfUnity(1, 12));
  CHECK(v.witness->mu == RootOfUnity(1, 18));
  CHECK(obstruction_verdict(2, 2, 2, -2).kind == VerdictKind::NoObstruction);
  CHECK(obstruction_verdict(2, 3, 2, 5).kind == VerdictKind::AbsMMismatch);
  CHECK(obstruction_verdict(2, 4, 3, 4).kind == VerdictKind::NMismatch);
  CHECK(verdict_name(VerdictKind::SignMismatch) == "sign_mismatch");

  for (int n1 = 2; n1 <= 6; ++n1) {
    for (int a1 = n1; a1 <= 6; ++a1) {
      for (int m1 : {a1, -a1}) {
        for (int n2 = 2; n2 <= 6; ++n2) {
          for (int a2 = n2; a2 <= 6; ++a2) {
            for (int m2 : {a2, -a2}) {
              RigidityVerdict r = obstruction_verdict(n1, m1, n2, m2);
              CHECK(r.kind == oracle::obstruction_case(n1, m1, n2, m2));
              CHECK(r.witness.has_value() == (r.kind == VerdictKind::SignMismatch));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("character relation along an element") {
  BsPresentation g23(2, 3);
  BsPresentation g2m3(2, -3);
  CHECK(w_relation(RootOfUnity(), RootOfUnity(), element("b a b", g23), g23));
  CHECK(w_relation(RootOfUnity(1, 12), RootOfUnity(1, 18), element("B", g23), g23));
  CHECK_FALSE(w_relation(RootOfUnity(1, 12), RootOfUnity(1, 18), element("B", g2m3), g2m3));
  CHECK_THROWS_AS(w_relation(RootOfUnity(1, 5), RootOfUnity(), element("B", g23), g23),
                  DomainError);
}
