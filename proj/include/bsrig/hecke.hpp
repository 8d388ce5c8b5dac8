#pragma once

// Hecke pair (BS(n,m), <a>): coset indices, double cosets, quasi-centralizer and convolution.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string_view>

#include "bsrig/group.hpp"

namespace bsrig {

/// l(g), r(g) and the signed exponent L(g) with g a^{L} g^-1 = a^{r}.
struct CosetProfile {
  BigInt l;
  BigInt r;
  BigInt L;
  friend bool operator==(const CosetProfile&, const CosetProfile&) = default;
};

CosetProfile coset_profile(const NormalForm& g, const BsPresentation& group);

/// Membership in {k n0^s |m0|^t : s,t >= 0, s+t > 0}. Throws DomainError for z <= 0.
bool f_set_member(const BigInt& z, const BsPresentation& group);
/// All members with s + t <= depth.
std::set<BigInt> f_set(unsigned depth, const BsPresentation& group);

/// <a> g <a>, keyed by a canonical tail-free representative.
struct DoubleCoset {
  NormalForm representative;
  CosetProfile profile;

  friend bool operator==(const DoubleCoset& x, const DoubleCoset& y) {
    return x.representative == y.representative;
  }
  friend std::strong_ordering operator<=>(const DoubleCoset& x, const DoubleCoset& y) {
    return x.representative <=> y.representative;
  }
};

/// Least normal form (in NormalForm order) among the left cosets a^i g <a>.
NormalForm double_coset_representative(const NormalForm& g, const BsPresentation& group);
DoubleCoset double_coset(const NormalForm& g, const BsPresentation& group);
bool same_double_coset(const NormalForm& g, const NormalForm& h, const BsPresentation& group);

bool qc_member(const NormalForm& g, const BsPresentation& group);
/// g a^z g^-1 == a^z
bool centralizes(const NormalForm& g, const BigInt& z, const BsPresentation& group);

/// Image of a word over {c, d} (C, D inverse) under c -> a, d -> b^-1 a b.
/// Requires 2 <= n <= |m| and |m| != 2.
GroupWord amalgam_embed(std::string_view text, const BsPresentation& group);

BigInt lcm_l_values(std::span<const NormalForm> elements, const BsPresentation& group);

/// Finite integer combination of double cosets; zero coefficients are never stored.
class HeckeElement {
 public:
  using Coefficient = std::int64_t;

  HeckeElement() = default;
  static HeckeElement basis(DoubleCoset coset);
  /// T_{<a>}, the unit of the convolution.
  static HeckeElement unit();

  HeckeElement& add(const DoubleCoset& coset, Coefficient coeff);
  HeckeElement& operator+=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement x, const HeckeElement& y) { return x += y; }

  Coefficient coefficient(const DoubleCoset& coset) const;
  const std::map<DoubleCoset, Coefficient>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  std::map<DoubleCoset, Coefficient> terms_;
};

/// Bilinear convolution: T_D * T_E = sum_F #{ j < l(d) : (d a^j)^-1 f in E } T_F.
HeckeElement hecke_convolve(const HeckeElement& x, const HeckeElement& y,
                            const BsPresentation& group);

}  // namespace bsrig
