#pragma once

// Isomorphism classes of BS(n,m) and the obstructions that Hecke-pair invariants place on
// stable isomorphism of the associated crossed products.

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "bsrig/fusion.hpp"
#include "bsrig/group.hpp"

namespace bsrig {

struct Parameters {
  BigInt n;
  BigInt m;
  friend bool operator==(const Parameters&, const Parameters&) = default;
};

/// Sign flip and/or swap into 1 <= n <= |m|.
Parameters canonicalize(const BigInt& n, const BigInt& m);

/// {n1, m1} = {e n2, e m2} for some e in {+1, -1}.
bool is_isomorphic(const BigInt& n1, const BigInt& m1, const BigInt& n2, const BigInt& m2);

bool is_amenable(const BigInt& n, const BigInt& m);

struct IndexPair {
  BigInt l;
  BigInt r;
};

struct RecoveredParameters {
  BigInt n;
  BigInt abs_m;
  friend bool operator==(const RecoveredParameters&, const RecoveredParameters&) = default;
};

/// n = least l > 1, |m| = n / rho where rho < 1 generates the observed ratios l/r.
RecoveredParameters recover_parameters(std::span<const IndexPair> profiles);

struct SignWitness {
  unsigned t;
  RootOfUnity omega;
  RootOfUnity mu;
};

/// The pair with w^n = mu^m and mu^{2m} != 1, for the least t with |n0^t m0^t| > 2.
/// Requires 2 <= n <= |m| and n != |m|.
SignWitness sign_witness(const BigInt& n, const BigInt& m);

enum class VerdictKind { NoObstruction, NMismatch, AbsMMismatch, SignMismatch };

std::string_view verdict_name(VerdictKind kind);

/// NoObstruction is agnostic: it only says the invariants here do not separate the pair.
struct RigidityVerdict {
  VerdictKind kind;
  std::optional<SignWitness> witness;  // present iff kind == SignMismatch
};

RigidityVerdict obstruction_verdict(const BigInt& n1, const BigInt& m1, const BigInt& n2,
                                    const BigInt& m2);

/// w^{r(g)} == u^{L(g)}.
bool w_relation(const RootOfUnity& w, const RootOfUnity& u, const NormalForm& g,
                const BsPresentation& group);

}  // namespace bsrig
