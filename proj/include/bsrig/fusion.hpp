#pragma once

// Symbolic fusion calculus of the coset bimodules K_g and character twists K_w of the pair
// (BS(n,m), <a>). Only integer dimensions and exact roots of unity are tracked.

#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bsrig/group.hpp"
#include "bsrig/hecke.hpp"

namespace bsrig {

/// exp(2 pi i * num/den) with 0 <= num < den and gcd(num, den) = 1.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  /// Any integer fraction p/q, q != 0; reduced mod 1.
  RootOfUnity(const BigInt& p, const BigInt& q);

  /// Parses "p/q" (p may be negative) or a plain integer.
  static RootOfUnity parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_trivial() const { return num_ == 0; }

  RootOfUnity pow(const BigInt& exponent) const { return {num_ * exponent, den_}; }
  RootOfUnity inverse() const { return {-num_, den_}; }

  std::string to_string() const { return num_.str() + "/" + den_.str(); }

  friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
  }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  /// Orders by angle in [0, 1).
  friend std::strong_ordering operator<=>(const RootOfUnity& x, const RootOfUnity& y);

 private:
  BigInt num_{0};
  BigInt den_{1};
};

/// Fraction addition mod 1.
RootOfUnity char_product(const RootOfUnity& x, const RootOfUnity& y);

/// Order of w divides some element of {k n0^s |m0|^t : s+t > 0}.
bool omega_member(const RootOfUnity& w, const BsPresentation& group);

/// exp(2 pi i / r(g)).
RootOfUnity char_of(const NormalForm& g, const BsPresentation& group);

/// An irreducible K_D (double coset D) or K_w (character w). K_{<a>} is stored as K_1.
class Irreducible {
 public:
  static Irreducible coset(DoubleCoset d);
  static Irreducible character(RootOfUnity w);

  bool is_character() const { return std::holds_alternative<RootOfUnity>(kind_); }
  const RootOfUnity& as_character() const { return std::get<RootOfUnity>(kind_); }
  const DoubleCoset& as_coset() const { return std::get<DoubleCoset>(kind_); }

  const BigInt& left_dim() const { return left_dim_; }
  const BigInt& right_dim() const { return right_dim_; }

  /// Characters first (by angle), then cosets (by representative).
  friend std::strong_ordering operator<=>(const Irreducible& x, const Irreducible& y);
  friend bool operator==(const Irreducible& x, const Irreducible& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

 private:
  Irreducible(std::variant<RootOfUnity, DoubleCoset> kind, BigInt left, BigInt right)
      : kind_(std::move(kind)), left_dim_(std::move(left)), right_dim_(std::move(right)) {}

  std::variant<RootOfUnity, DoubleCoset> kind_;
  BigInt left_dim_;
  BigInt right_dim_;
};

bool isomorphic(const Irreducible& x, const Irreducible& y, const BsPresentation& group);

/// Direct sum of irreducibles, kept sorted.
class BimoduleSum {
 public:
  BimoduleSum() = default;
  explicit BimoduleSum(std::vector<Irreducible> terms);

  const std::vector<Irreducible>& terms() const { return terms_; }
  BigInt left_dim() const;
  BigInt right_dim() const;

  friend bool operator==(const BimoduleSum&, const BimoduleSum&) = default;

 private:
  std::vector<Irreducible> terms_;
};

struct Dimensions {
  BigInt left;
  BigInt right;
  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

Dimensions tensor_dims(const BimoduleSum& x, const BimoduleSum& y);

/// K_g (x) K_{g^-1} = (+)_{i<r(g)} K_{w_g^i} (+) (+)_{0<i<l(g)} K_{g a^i g^-1}.
BimoduleSum decompose_self_inverse(const NormalForm& g, const BsPresentation& group);

/// All mu in Omega with mu^{L(g)} = w^{r(g)}, sorted by angle.
std::vector<RootOfUnity> exchange_partners(const RootOfUnity& w, const NormalForm& g,
                                           const BsPresentation& group);

}  // namespace bsrig
