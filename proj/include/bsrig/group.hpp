#pragma once

// Words, Britton normal forms and the word problem for BS(n,m) = <a,b | b a^n b^-1 = a^m>.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsrig/integer.hpp"

namespace bsrig {

/// Parameters of BS(n,m) together with k = gcd(|n|,|m|), n = k*n0, m = k*m0.
class BsPresentation {
 public:
  BsPresentation(BigInt n, BigInt m);

  const BigInt& n() const { return n_; }
  const BigInt& m() const { return m_; }
  const BigInt& k() const { return k_; }
  const BigInt& n0() const { return n0_; }
  const BigInt& m0() const { return m0_; }

  /// 2 <= n <= |m|, the chamber in which every nonamenable BS group has a representative.
  bool standing_hypothesis() const { return n_ >= 2 && n_ <= abs(m_); }

  /// Throws DomainError naming `what` unless the standing hypothesis holds.
  void require_standing_hypothesis(const char* what) const;

  std::string to_string() const;

  friend bool operator==(const BsPresentation&, const BsPresentation&) = default;

 private:
  BigInt n_, m_, k_, n0_, m0_;
};

enum class Letter : char { A = 'a', B = 'b' };

struct Syllable {
  Letter letter;
  BigInt exponent;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Free word over {a,b} stored as merged syllables with nonzero exponents.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord a(BigInt exponent);
  static GroupWord b(BigInt exponent);

  /// Right-multiplies by letter^exponent, merging and freely cancelling.
  GroupWord& append(Letter letter, const BigInt& exponent);
  GroupWord& append(const GroupWord& other);

  GroupWord inverse() const;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend GroupWord operator*(GroupWord lhs, const GroupWord& rhs) { return lhs.append(rhs); }

 private:
  std::vector<Syllable> syllables_;
};

/// Malformed word text; offset() is the byte position of the first bad character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar: term* with term := letter ('^' '-'? digits)?, letters a b A B (A = a^-1, B = b^-1),
/// optional whitespace between terms. A lone "e" denotes the empty word.
GroupWord parse_word(std::string_view text);

/// Canonical spelling: "a^3 b b^-1"-style, exponent 1 omitted, "e" for the empty word.
std::string format(const GroupWord& w);

/// One a^power b^sign block of a normal form.
struct Crossing {
  BigInt a_power;
  int b_sign;  // +1 or -1
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Right-pushed Britton normal form a^{s1} b^{e1} ... a^{sk} b^{ek} a^{tail}.
///
/// Each s_i lies in [0,|m|) when e_i = +1 and in [0,|n|) when e_i = -1, and no
/// pinch b^{e} a^0 b^{-e} occurs. Under these constraints every group element
/// has exactly one normal form, so equality of elements is field equality.
class NormalForm {
 public:
  NormalForm() = default;
  NormalForm(std::vector<Crossing> prefix, BigInt tail)
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

  const std::vector<Crossing>& prefix() const { return prefix_; }
  const BigInt& tail() const { return tail_; }

  std::size_t b_length() const { return prefix_.size(); }
  bool is_identity() const { return prefix_.empty() && tail_ == 0; }

  /// Same element with the trailing a-power removed (canonical left <a>-coset representative).
  NormalForm without_tail() const { return NormalForm(prefix_, 0); }
  NormalForm with_tail(BigInt tail) const { return NormalForm(prefix_, std::move(tail)); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  /// Orders by b-length, then prefix fields left to right, then tail.
  friend std::strong_ordering operator<=>(const NormalForm& x, const NormalForm& y);

 private:
  std::vector<Crossing> prefix_;
  BigInt tail_{0};
};

/// Incremental right-multiplication that keeps a normal form reduced.
class Reducer {
 public:
  explicit Reducer(const BsPresentation& group) : group_(&group) {}
  Reducer(const BsPresentation& group, NormalForm start)
      : group_(&group), prefix_(start.prefix()), tail_(start.tail()) {}

  Reducer& push_a(const BigInt& exponent);
  Reducer& push_b(int b_sign);
  Reducer& push(const GroupWord& w);
  Reducer& push(const NormalForm& g);

  NormalForm result() const& { return NormalForm(prefix_, tail_); }
  NormalForm result() && { return NormalForm(std::move(prefix_), std::move(tail_)); }

 private:
  const BsPresentation* group_;
  std::vector<Crossing> prefix_;
  BigInt tail_{0};
};

NormalForm normalize(const GroupWord& w, const BsPresentation& group);

GroupWord to_word(const NormalForm& g);
std::string format(const NormalForm& g);

/// Parses then normalizes; convenience used throughout tests and the CLI.
NormalForm element(std::string_view text, const BsPresentation& group);

bool is_identity(const GroupWord& w, const BsPresentation& group);

NormalForm multiply(const NormalForm& u, const NormalForm& v, const BsPresentation& group);
NormalForm invert(const NormalForm& u, const BsPresentation& group);
NormalForm power(const NormalForm& u, const BigInt& exponent, const BsPresentation& group);
/// x g x^-1
NormalForm conjugate(const NormalForm& g, const NormalForm& x, const BsPresentation& group);

std::size_t b_length(const GroupWord& w, const BsPresentation& group);

struct CyclicReduction {
  NormalForm conjugator;  // conjugator^-1 * g * conjugator == core
  NormalForm core;
};

/// Conjugates g so that no cyclic rotation of the result admits a pinch.
CyclicReduction cyclically_reduce(const NormalForm& g, const BsPresentation& group);

/// Image in BS(n,m)^ab = Z x Z/|m-n|; modulus 0 means the a-part is a free integer.
struct AbelianImage {
  BigInt b_sum;
  BigInt a_residue;
  BigInt modulus;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

AbelianImage abelianization_image(const GroupWord& w, const BsPresentation& group);

}  // namespace bsrig
