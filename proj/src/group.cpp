#include "bsrig/group.hpp"

#include <cctype>

namespace bsrig {

BsPresentation::BsPresentation(BigInt n, BigInt m) : n_(std::move(n)), m_(std::move(m)) {
  if (n_ == 0 || m_ == 0) {
    throw DomainError("BS(n,m) requires n != 0 and m != 0");
  }
  k_ = gcd(n_, m_);
  n0_ = n_ / k_;
  m0_ = m_ / k_;
}

void BsPresentation::require_standing_hypothesis(const char* what) const {
  if (!standing_hypothesis()) {
    throw DomainError(std::string(what) + " requires 2 <= n <= |m|, got " + to_string());
  }
}

std::string BsPresentation::to_string() const {
  return "BS(" + n_.str() + "," + m_.str() + ")";
}

// ---------------------------------------------------------------------------
// GroupWord

GroupWord GroupWord::a(BigInt exponent) { return GroupWord().append(Letter::A, exponent); }
GroupWord GroupWord::b(BigInt exponent) { return GroupWord().append(Letter::B, exponent); }

GroupWord& GroupWord::append(Letter letter, const BigInt& exponent) {
  if (exponent == 0) return *this;
  if (!syllables_.empty() && syllables_.back().letter == letter) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
  } else {
    syllables_.push_back({letter, exponent});
  }
  return *this;
}

GroupWord& GroupWord::append(const GroupWord& other) {
  for (const auto& s : other.syllables_) append(s.letter, s.exponent);
  return *this;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.append(it->letter, -it->exponent);
  }
  return out;
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument(message + " at byte " + std::to_string(offset)), offset_(offset) {}

GroupWord parse_word(std::string_view text) {
  GroupWord w;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_space();
    if (pos != text.size()) throw ParseError("unexpected input after identity 'e'", pos);
    return w;
  }
  while (pos < text.size()) {
    Letter letter;
    int sign = 1;
    switch (text[pos]) {
      case 'a': letter = Letter::A; break;
      case 'b': letter = Letter::B; break;
      case 'A': letter = Letter::A; sign = -1; break;
      case 'B': letter = Letter::B; sign = -1; break;
      default: throw ParseError("expected one of a, b, A, B", pos);
    }
    ++pos;
    BigInt exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected digits after '^'", pos);
      exponent = BigInt(std::string(text.substr(start, pos - start)));
      if (negative) exponent = -exponent;
    }
    w.append(letter, sign * exponent);
    skip_space();
  }
  return w;
}

std::string format(const GroupWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(s.letter);
    if (s.exponent != 1) out += "^" + s.exponent.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// NormalForm

std::strong_ordering operator<=>(const NormalForm& x, const NormalForm& y) {
  if (auto c = x.prefix_.size() <=> y.prefix_.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.prefix_.size(); ++i) {
    const auto& p = x.prefix_[i];
    const auto& q = y.prefix_[i];
    if (p.a_power != q.a_power) {
      return p.a_power < q.a_power ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = p.b_sign <=> q.b_sign; c != 0) return c;
  }
  if (x.tail_ != y.tail_) {
    return x.tail_ < y.tail_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Reducer& Reducer::push_a(const BigInt& exponent) {
  tail_ += exponent;
  return *this;
}

Reducer& Reducer::push_b(int b_sign) {
  const BigInt& n = group_->n();
  const BigInt& m = group_->m();
  if (!prefix_.empty() && prefix_.back().b_sign == -b_sign) {
    // b a^{nj} b^-1 = a^{mj}  and  b^-1 a^{mj} b = a^{nj}
    const BigInt& inner = prefix_.back().b_sign > 0 ? n : m;
    const BigInt& outer = prefix_.back().b_sign > 0 ? m : n;
    if (tail_ % inner == 0) {
      tail_ = prefix_.back().a_power + outer * (tail_ / inner);
      prefix_.pop_back();
      return *this;
    }
  }
  // a^{|m|} b = b a^{sign(m) n}  and  a^{|n|} b^-1 = b^-1 a^{sign(n) m}
  const BigInt& modulus = b_sign > 0 ? m : n;
  const BigInt& image = b_sign > 0 ? n : m;
  BigInt quotient = floor_div(tail_, modulus);
  prefix_.push_back({floor_mod(tail_, modulus), b_sign});
  tail_ = quotient * sign(modulus) * image;
  return *this;
}

Reducer& Reducer::push(const GroupWord& w) {
  for (const auto& s : w.syllables()) {
    if (s.letter == Letter::A) {
      push_a(s.exponent);
      continue;
    }
    int step = s.exponent > 0 ? 1 : -1;
    for (BigInt i = abs(s.exponent); i > 0; --i) push_b(step);
  }
  return *this;
}

Reducer& Reducer::push(const NormalForm& g) {
  for (const auto& c : g.prefix()) {
    push_a(c.a_power);
    push_b(c.b_sign);
  }
  return push_a(g.tail());
}

NormalForm normalize(const GroupWord& w, const BsPresentation& group) {
  return Reducer(group).push(w).result();
}

GroupWord to_word(const NormalForm& g) {
  GroupWord w;
  for (const auto& c : g.prefix()) {
    w.append(Letter::A, c.a_power);
    w.append(Letter::B, c.b_sign);
  }
  w.append(Letter::A, g.tail());
  return w;
}

std::string format(const NormalForm& g) { return format(to_word(g)); }

NormalForm element(std::string_view text, const BsPresentation& group) {
  return normalize(parse_word(text), group);
}

bool is_identity(const GroupWord& w, const BsPresentation& group) {
  return normalize(w, group).is_identity();
}

NormalForm multiply(const NormalForm& u, const NormalForm& v, const BsPresentation& group) {
  return Reducer(group, u).push(v).result();
}

NormalForm invert(const NormalForm& u, const BsPresentation& group) {
  Reducer r(group);
  r.push_a(-u.tail());
  const auto& prefix = u.prefix();
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    r.push_b(-it->b_sign);
    r.push_a(-it->a_power);
  }
  return std::move(r).result();
}

NormalForm power(const NormalForm& u, const BigInt& exponent, const BsPresentation& group) {
  NormalForm base = exponent < 0 ? invert(u, group) : u;
  BigInt e = abs(exponent);
  NormalForm acc;
  while (e > 0) {
    if ((e & 1) != 0) acc = multiply(acc, base, group);
    e >>= 1;
    if (e > 0) base = multiply(base, base, group);
  }
  return acc;
}

NormalForm conjugate(const NormalForm& g, const NormalForm& x, const BsPresentation& group) {
  return multiply(multiply(x, g, group), invert(x, group), group);
}

std::size_t b_length(const GroupWord& w, const BsPresentation& group) {
  return normalize(w, group).b_length();
}

CyclicReduction cyclically_reduce(const NormalForm& g, const BsPresentation& group) {
  NormalForm conjugator;
  NormalForm core = g;
  while (core.b_length() > 0) {
    // Rotate the leading a-power to the end: the core now starts with a b-letter.
    NormalForm lead = normalize(GroupWord::a(core.prefix().front().a_power), group);
    core = conjugate(core, invert(lead, group), group);
    conjugator = multiply(conjugator, lead, group);

    const auto& first = core.prefix().front();
    const auto& last = core.prefix().back();
    if (core.b_length() < 2 || last.b_sign != -first.b_sign) break;
    const BigInt& inner = last.b_sign > 0 ? group.n() : group.m();
    if (core.tail() % inner != 0) break;

    // Wrap-around pinch b^{e} a^{tail} b^{-e}: move the last block to the front.
    GroupWord block = GroupWord::b(last.b_sign).append(Letter::A, core.tail());
    NormalForm d = normalize(block, group);
    core = conjugate(core, d, group);
    conjugator = multiply(conjugator, invert(d, group), group);
  }
  return {std::move(conjugator), std::move(core)};
}

AbelianImage abelianization_image(const GroupWord& w, const BsPresentation& group) {
  AbelianImage image{0, 0, abs(group.m() - group.n())};
  for (const auto& s : w.syllables()) {
    (s.letter == Letter::A ? image.a_residue : image.b_sum) += s.exponent;
  }
  if (image.modulus != 0) image.a_residue = floor_mod(image.a_residue, image.modulus);
  return image;
}

}  // namespace bsrig
