#include "bsrig/checks/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "bsrig/bass_serre.hpp"
#include "bsrig/checks/oracles.hpp"
#include "bsrig/checks/sampling.hpp"
#include "bsrig/fusion.hpp"
#include "bsrig/group.hpp"
#include "bsrig/hecke.hpp"
#include "bsrig/rigidity.hpp"

namespace bsrig::acceptance {

namespace {

// Collects the first failing check of a criterion.
class Tally {
 public:
  void require(bool condition, const std::string& what) {
    ++checks_;
    if (!condition && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  std::string summary() const {
    return ok() ? std::to_string(checks_) + " checks" : "FAILED: " + failure_;
  }

 private:
  std::size_t checks_ = 0;
  std::string failure_;
};

// Canonical-chamber groups 2 <= n <= |m| <= 6, both signs of m.
std::vector<BsPresentation> chamber_groups() {
  std::vector<BsPresentation> out;
  for (int n = 2; n <= 6; ++n) {
    for (int am = n; am <= 6; ++am) {
      out.emplace_back(n, am);
      out.emplace_back(n, -am);
    }
  }
  return out;
}

std::string show(const GroupWord& w) { return format(w); }

void word_problem(Tally& t, std::mt19937_64& rng) {
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {2, -2}, {3, 6}, {1, 2}}) {
    BsPresentation group(n, m);
    const std::string tag = group.to_string() + " ";
    for (int i = 0; i < 10000; ++i) {
      GroupWord w = sampling::random_word(rng);
      NormalForm nf = normalize(w, group);
      GroupWord nf_word = to_word(nf);
      t.require(normalize(parse_word(format(nf)), group) == nf, tag + "idempotence " + show(w));
      t.require(oracle::is_identity(w * nf_word.inverse(), group, rng),
                tag + "normal form differs from word per pinch oracle: " + show(w));
      t.require(oracle::b_length(w, group, rng) == nf.b_length(), tag + "b-length " + show(w));
      GroupWord w2 = sampling::insert_relators(w, 2, rng, group);
      t.require(normalize(w2, group) == nf, tag + "relator insertion changed form " + show(w));
      GroupWord trivial = w * w2.inverse();
      bool identity = is_identity(trivial, group);
      t.require(identity && oracle::is_identity(trivial, group, rng),
                tag + "w w'^-1 not identity " + show(w));
      t.require(is_identity(w, group) == oracle::is_identity(w, group, rng),
                tag + "is_identity disagrees with oracle " + show(w));
      AbelianImage ab = abelianization_image(w, group);
      t.require(abelianization_image(nf_word, group) == ab, tag + "abelianization " + show(w));
      AbelianImage zero{0, 0, ab.modulus};
      t.require(abelianization_image(trivial, group) == zero,
                tag + "identity word with nonzero abelian image " + show(trivial));
    }
  }
}

void hecke_profiles(Tally& t, std::mt19937_64& rng) {
  for (const auto& group : chamber_groups()) {
    const BigInt& n = group.n();
    const BigInt& m = group.m();
    t.require(coset_profile(element("b", group), group) == CosetProfile{n, abs(m), sign(m) * n},
              "profile(b) in " + group.to_string());
    t.require(coset_profile(element("B", group), group) == CosetProfile{abs(m), n, m},
              "profile(b^-1) in " + group.to_string());
  }
  std::vector<BsPresentation> groups{{2, 3}, {2, -3}, {3, 6}, {2, 2}, {4, 6}};
  for (int i = 0; i < 1000; ++i) {
    const BsPresentation& group = groups[static_cast<std::size_t>(i) % groups.size()];
    NormalForm g = sampling::random_element(rng, group, {5, 1000});
    CosetProfile p = coset_profile(g, group);
    CosetProfile q = coset_profile(invert(g, group), group);
    t.require(p.l == q.r && p.r == q.l, "l(g) != r(g^-1) for " + format(g));
    t.require(abs(p.L) == p.l, "|L| != l for " + format(g));
    GroupWord probe = to_word(g) * GroupWord::a(p.L) * to_word(g).inverse() * GroupWord::a(-p.r);
    t.require(oracle::is_identity(probe, group, rng),
              "g a^L g^-1 != a^r for " + format(g) + " in " + group.to_string());
  }
}

void f_coverage(Tally& t, std::mt19937_64& rng) {
  BsPresentation group(2, 3);
  std::set<BigInt> seen;
  const std::set<BigInt> members = f_set(16, group);
  for (int i = 0; i < 3000; ++i) {
    NormalForm g = sampling::random_element(rng, group, {4, 6});
    BigInt l = coset_profile(g, group).l;
    seen.insert(l);
    t.require(l == 1 || (f_set_member(l, group) && members.contains(l)),
              "l-value " + l.str() + " outside F for " + format(g));
  }
  for (int expected : {1, 2, 3, 4, 6, 9}) {
    t.require(seen.contains(expected), "l-value " + std::to_string(expected) + " never observed");
  }
}

void self_inverse_bookkeeping(Tally& t, std::mt19937_64& rng) {
  for (const BsPresentation& group : {BsPresentation(2, 3), BsPresentation(2, -3)}) {
    for (int i = 0; i < 100; ++i) {
      NormalForm g = sampling::random_element(rng, group, {3, 50});
      CosetProfile p = coset_profile(g, group);
      BimoduleSum sum = decompose_self_inverse(g, group);
      const std::string tag = format(g) + " in " + group.to_string();
      t.require(sum.left_dim() == p.l * p.r, "left dimension for " + tag);
      t.require(sum.right_dim() == p.l * p.r, "right dimension for " + tag);
      const auto& terms = sum.terms();
      for (std::size_t x = 0; x < terms.size(); ++x) {
        for (std::size_t y = x + 1; y < terms.size(); ++y) {
          t.require(!isomorphic(terms[x], terms[y], group), "isomorphic terms for " + tag);
        }
      }
    }
  }
  BsPresentation group(2, 3);
  BimoduleSum expected({Irreducible::character({0, 1}), Irreducible::character({1, 3}),
                        Irreducible::character({2, 3}),
                        Irreducible::coset(double_coset(element("b a B", group), group))});
  t.require(decompose_self_inverse(element("b", group), group) == expected,
            "decomposition of K_b (x) K_b^-1");
}

void exchange_agreement(Tally& t, std::mt19937_64& rng) {
  BsPresentation group(2, 3);
  constexpr std::int64_t kMaxDen = 216;
  const std::vector<int> dens{1, 2, 3, 4, 6, 9, 12, 18, 36};
  std::uniform_int_distribution<std::size_t> pick_den(0, dens.size() - 1);
  for (int i = 0; i < 50; ++i) {
    int den = dens[pick_den(rng)];
    RootOfUnity w(std::uniform_int_distribution<int>(0, den - 1)(rng), den);
    NormalForm g = sampling::random_element(rng, group, {2, 20});
    CosetProfile p = coset_profile(g, group);
    std::vector<RootOfUnity> fast = exchange_partners(w, g, group);
    std::vector<RootOfUnity> window;
    for (const auto& mu : fast) {
      t.require(mu.pow(p.L) == w.pow(p.r), "partner fails relation for " + format(g));
      if (mu.den() <= kMaxDen) window.push_back(mu);
    }
    std::vector<RootOfUnity> brute = oracle::exchange_by_enumeration(w, p.r, p.L, group, kMaxDen);
    t.require(window == brute, "exchange partners disagree for w=" + w.to_string() +
                                   ", g=" + format(g));
  }
}

void rigidity_matrix(Tally& t) {
  std::vector<std::pair<int, int>> chamber;
  for (int n = 2; n <= 6; ++n) {
    for (int am = n; am <= 6; ++am) {
      chamber.emplace_back(n, am);
      chamber.emplace_back(n, -am);
    }
  }
  for (const auto& [n1, m1] : chamber) {
    for (const auto& [n2, m2] : chamber) {
      RigidityVerdict v = obstruction_verdict(n1, m1, n2, m2);
      const std::string tag = "(" + std::to_string(n1) + "," + std::to_string(m1) + ") vs (" +
                              std::to_string(n2) + "," + std::to_string(m2) + ")";
      t.require(v.kind == oracle::obstruction_case(n1, m1, n2, m2), "verdict for " + tag);
      t.require(v.witness.has_value() == (v.kind == VerdictKind::SignMismatch),
                "witness presence for " + tag);
      if (v.witness) {
        t.require(v.witness->omega.pow(n1) == v.witness->mu.pow(m1) &&
                      !v.witness->mu.pow(2 * m1).is_trivial(),
                  "witness relations for " + tag);
      }
    }
  }
  RigidityVerdict v = obstruction_verdict(2, 3, 2, -3);
  t.require(v.kind == VerdictKind::SignMismatch && v.witness && v.witness->t == 1 &&
                v.witness->omega == RootOfUnity(1, 12) && v.witness->mu == RootOfUnity(1, 18),
            "(2,3) vs (2,-3) witness");
  if (v.witness) {
    t.require(v.witness->omega.pow(2) == v.witness->mu.pow(3), "w^2 = mu^3");
    t.require(!v.witness->mu.pow(6).is_trivial(), "mu^6 != 1");
  }
  t.require(obstruction_verdict(2, 2, 2, -2).kind == VerdictKind::NoObstruction,
            "(2,2) vs (2,-2)");
}

void moldavanskii(Tally& t) {
  std::vector<int> values;
  for (int x = -6; x <= 6; ++x) {
    if (x != 0) values.push_back(x);
  }
  for (int n1 : values) {
    for (int m1 : values) {
      Parameters c = canonicalize(n1, m1);
      t.require(canonicalize(c.n, c.m) == c, "canonicalize not idempotent");
      t.require(c.n >= 1 && c.n <= abs(c.m), "canonical form outside chamber");
      t.require(is_isomorphic(n1, m1, c.n, c.m), "canonical form not isomorphic to input");
      for (int n2 : values) {
        for (int m2 : values) {
          t.require(is_isomorphic(n1, m1, n2, m2) == oracle::moldavanskii_by_multiset(n1, m1, n2, m2),
                    "is_isomorphic disagrees with multiset criterion");
        }
      }
    }
  }
}

void bass_serre_checks(Tally& t, std::mt19937_64& rng) {
  BsPresentation group(2, 3);
  Classification cb = classify(element("b", group), group);
  t.require(std::holds_alternative<Hyperbolic>(cb) &&
                std::get<Hyperbolic>(cb).translation_length == 1,
            "classify(b) = Hyperbolic(1)");
  Classification ce = classify(element("b a B", group), group);
  t.require(std::holds_alternative<Elliptic>(ce) &&
                std::get<Elliptic>(ce).witness == element("b", group),
            "classify(b a b^-1) = Elliptic(b)");

  int hyperbolic = 0;
  while (hyperbolic < 100) {
    NormalForm g = sampling::random_element(rng, group, {4, 30});
    if (is_elliptic(g, group)) continue;
    ++hyperbolic;
    for (int z = -3; z <= 3; ++z) {
      if (z == 0) continue;
      t.require(!is_elliptic(power(g, z, group), group),
                "power " + std::to_string(z) + " of hyperbolic " + format(g) + " is elliptic");
    }
  }

  int pairs = 0;
  std::uniform_int_distribution<int> small(-12, 12);
  std::bernoulli_distribution shared(0.5);
  while (pairs < 100) {
    NormalForm x = sampling::random_element(rng, group, {2, 5});
    NormalForm y = shared(rng) ? NormalForm() : sampling::random_element(rng, group, {2, 5});
    NormalForm g = conjugate(normalize(GroupWord::a(small(rng)), group), x, group);
    NormalForm h = conjugate(normalize(GroupWord::a(small(rng)), group), multiply(x, y, group),
                             group);
    if (!is_elliptic(multiply(g, h, group), group)) continue;
    ++pairs;
    auto found = common_fixed_vertex({g, h}, group, 8);
    t.require(found.has_value() && fixes_vertex(g, found->vertex, group) &&
                  fixes_vertex(h, found->vertex, group),
              "no common fixed vertex within radius 8 for " + format(g) + ", " + format(h));
  }

  for (const auto& ball_group : chamber_groups()) {
    TreeBall ball = tree_ball(TreeVertex{}, 1, ball_group);
    t.require(static_cast<std::int64_t>(ball.vertices.size()) ==1 + to_int64(ball_group.n() + abs(ball_group.m())),
              "radius-1 ball size in " + ball_group.to_string());
  }
}

void quasi_centralizer(Tally& t, std::mt19937_64& rng) {
  BsPresentation group(2, -2);
  t.require(!qc_member(element("b", group), group), "b in QC of BS(2,-2)");
  t.require(qc_member(element("b^2", group), group), "b^2 not in QC of BS(2,-2)");
  const NormalForm b = element("b", group);
  for (int i = 0; i < 100; ++i) {
    NormalForm g = sampling::random_element(rng, group, {5, 50});
    bool in_c = centralizes(g, 2, group);
    bool gb_in_c = centralizes(multiply(g, b, group), 2, group);
    t.require(in_c != gb_in_c, "index-2 centralizer split fails for " + format(g));
  }
  for (const BsPresentation& g_group : {BsPresentation(2, -2), BsPresentation(2, 3)}) {
    std::vector<NormalForm> members;
    while (members.size() < 40) {
      NormalForm g = sampling::random_element(rng, g_group, {4, 20});
      if (qc_member(g, g_group)) members.push_back(g);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const NormalForm& g = members[i];
      const NormalForm& h = members[(i * 7 + 3) % members.size()];
      NormalForm x = sampling::random_element(rng, g_group, {4, 20});
      const std::string tag = format(g) + " in " + g_group.to_string();
      t.require(qc_member(multiply(g, h, g_group), g_group), "QC not closed under product: " + tag);
      t.require(qc_member(invert(g, g_group), g_group), "QC not closed under inverse: " + tag);
      t.require(qc_member(conjugate(g, x, g_group), g_group), "QC not normal: " + tag);
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<void(Tally&, std::mt19937_64&)> body;
};

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed, int only) {
  const std::vector<Criterion> criteria{
      {1, "word problem soundness", 10.0, word_problem},
      {2, "Hecke profiles", 5.0, hecke_profiles},
      {3, "F coverage", 5.0, f_coverage},
      {4, "self-inverse decomposition bookkeeping", 5.0, self_inverse_bookkeeping},
      {5, "exchange criterion vs enumeration", 10.0, exchange_agreement},
      {6, "rigidity matrix", 1.0, [](Tally& t, std::mt19937_64&) { rigidity_matrix(t); }},
      {7, "Moldavanskii criterion", 1.0, [](Tally& t, std::mt19937_64&) { moldavanskii(t); }},
      {8, "Bass-Serre classification", 10.0, bass_serre_checks},
      {9, "quasi-centralizer", 5.0, quasi_centralizer},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(c.id));
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(tally, rng);
    } catch (const std::exception& e) {
      tally.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds <= c.budget;
    std::string detail = tally.summary();
    if (tally.ok() && !in_time) detail = "over time budget";
    results.push_back({c.id, c.title, tally.ok() && in_time, detail, seconds, c.budget});
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %g s", r.seconds, r.budget_seconds);
  std::ostringstream out;
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << timing << ") "
      << r.detail;
  return out.str();
}

}  // namespace bsrig::acceptance
