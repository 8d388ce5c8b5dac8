#include "bsrig/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "bsrig/hecke.hpp"

namespace bsrig {

using Rational = boost::multiprecision::cpp_rational;

Parameters canonicalize(const BigInt& n, const BigInt& m) {
  if (n == 0 || m == 0) throw DomainError("canonicalize requires nonzero parameters");
  for (const Parameters& p : {Parameters{n, m}, Parameters{-n, -m}, Parameters{m, n},
                              Parameters{-m, -n}}) {
    if (p.n >= 1 && p.n <= abs(p.m)) return p;
  }
  throw std::logic_error("canonicalize: no candidate in the chamber");
}

bool is_isomorphic(const BigInt& n1, const BigInt& m1, const BigInt& n2, const BigInt& m2) {
  if (n1 == 0 || m1 == 0 || n2 == 0 || m2 == 0) {
    throw DomainError("is_isomorphic requires nonzero parameters");
  }
  for (int e : {1, -1}) {
    BigInt x = e * n2, y = e * m2;
    if ((n1 == x && m1 == y) || (n1 == y && m1 == x)) return true;
  }
  return false;
}

bool is_amenable(const BigInt& n, const BigInt& m) {
  if (n == 0 || m == 0) throw DomainError("is_amenable requires nonzero parameters");
  return abs(n) == 1 || abs(m) == 1;
}

RecoveredParameters recover_parameters(std::span<const IndexPair> profiles) {
  std::optional<BigInt> n;
  std::optional<Rational> rho;
  for (const auto& p : profiles) {
    if (p.l <= 0 || p.r <= 0) throw DomainError("recover_parameters: indices must be positive");
    if (p.l > 1 && (!n || p.l < *n)) n = p.l;
    Rational ratio(p.l, p.r);
    if (ratio > 1) ratio = 1 / ratio;
    if (ratio < 1 && (!rho || ratio > *rho)) rho = ratio;
  }
  if (!n) throw DomainError("recover_parameters: every profile is (1,1)");
  if (!rho) return {*n, *n};
  Rational abs_m = Rational(*n) / *rho;
  if (denominator(abs_m) != 1) {
    throw DomainError("recover_parameters: ratios inconsistent with a BS(n,m) sample");
  }
  return {*n, numerator(abs_m)};
}

SignWitness sign_witness(const BigInt& n, const BigInt& m) {
  BsPresentation group(n, m);
  group.require_standing_hypothesis("sign_witness");
  if (n == abs(m)) throw DomainError("sign_witness requires n != |m|");
  const BigInt& k = group.k();
  const BigInt& n0 = group.n0();
  const BigInt& m0 = group.m0();
  unsigned t = 1;
  while (abs(pow(n0 * m0, t)) <= 2) ++t;
  // Signed m0 in both denominators keeps w^n = mu^m for negative m.
  SignWitness w{t, RootOfUnity(1, k * pow(n0, t + 1) * pow(m0, t)),
                RootOfUnity(1, k * pow(n0, t) * pow(m0, t + 1))};
  if (w.omega.pow(n) != w.mu.pow(m) || w.mu.pow(2 * m).is_trivial() ||
      !omega_member(w.omega, group) || !omega_member(w.mu, group)) {
    throw std::logic_error("sign_witness failed verification for " + group.to_string());
  }
  return w;
}

std::string_view verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::NoObstruction: return "no_obstruction";
    case VerdictKind::NMismatch: return "n_mismatch";
    case VerdictKind::AbsMMismatch: return "abs_m_mismatch";
    case VerdictKind::SignMismatch: return "sign_mismatch";
  }
  return "unknown";
}

RigidityVerdict obstruction_verdict(const BigInt& n1, const BigInt& m1, const BigInt& n2,
                                    const BigInt& m2) {
  auto in_chamber = [](const BigInt& n, const BigInt& m) { return n >= 2 && n <= abs(m); };
  if (!in_chamber(n1, m1) || !in_chamber(n2, m2)) {
    throw DomainError("obstruction requires both pairs with 2 <= n <= |m|");
  }
  if (n1 != n2) return {VerdictKind::NMismatch, std::nullopt};
  if (abs(m1) != abs(m2)) return {VerdictKind::AbsMMismatch, std::nullopt};
  if (n1 != abs(m1) && m1 != m2) {
    SignWitness w = sign_witness(n1, m1);
    // The witness relation holds in BS(n1,m1) but not with m replaced by m2 = -m1.
    if (w.omega.pow(n1) != w.mu.pow(m1) || w.mu.pow(2 * m1).is_trivial()) {
      throw std::logic_error("sign witness re-verification failed");
    }
    return {VerdictKind::SignMismatch, w};
  }
  return {VerdictKind::NoObstruction, std::nullopt};
}

bool w_relation(const RootOfUnity& w, const RootOfUnity& u, const NormalForm& g,
                const BsPresentation& group) {
  if (!omega_member(w, group) || !omega_member(u, group)) {
    throw DomainError("w_relation requires both roots in Omega");
  }
  CosetProfile p = coset_profile(g, group);
  return w.pow(p.r) == u.pow(p.L);
}

}  // namespace bsrig
