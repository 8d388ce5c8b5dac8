#include "bsrig/fusion.hpp"

#include <algorithm>

namespace bsrig {

RootOfUnity::RootOfUnity(const BigInt& p, const BigInt& q) {
  if (q == 0) throw DomainError("root of unity with zero denominator");
  BigInt num = q < 0 ? BigInt(-p) : p;
  BigInt den = abs(q);
  num = floor_mod(num, den);
  BigInt d = gcd(num, den);
  num_ = num / d;
  den_ = den / d;
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return {BigInt(text), 1};
    return {BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))};
  } catch (const std::runtime_error&) {
    throw DomainError("malformed root of unity '" + text + "', expected p/q");
  }
}

std::strong_ordering operator<=>(const RootOfUnity& x, const RootOfUnity& y) {
  BigInt lhs = x.num_ * y.den_;
  BigInt rhs = y.num_ * x.den_;
  if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RootOfUnity char_product(const RootOfUnity& x, const RootOfUnity& y) { return x * y; }

bool omega_member(const RootOfUnity& w, const BsPresentation& group) {
  group.require_standing_hypothesis("omega_member");
  BigInt rest = w.den();
  const BigInt base = abs(group.n0() * group.m0());
  for (BigInt d = gcd(rest, base); d > 1; d = gcd(rest, base)) rest /= d;
  return group.k() % rest == 0;
}

RootOfUnity char_of(const NormalForm& g, const BsPresentation& group) {
  return {1, coset_profile(g, group).r};
}

// ---------------------------------------------------------------------------

Irreducible Irreducible::coset(DoubleCoset d) {
  if (d.representative.is_identity()) return character(RootOfUnity());
  BigInt l = d.profile.l, r = d.profile.r;
  return Irreducible(std::move(d), std::move(l), std::move(r));
}

Irreducible Irreducible::character(RootOfUnity w) { return Irreducible(std::move(w), 1, 1); }

std::strong_ordering operator<=>(const Irreducible& x, const Irreducible& y) {
  if (x.is_character() != y.is_character()) {
    return x.is_character() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.is_character()) return x.as_character() <=> y.as_character();
  return x.as_coset() <=> y.as_coset();
}

bool isomorphic(const Irreducible& x, const Irreducible& y, const BsPresentation& group) {
  if (x.is_character() != y.is_character()) return false;
  if (x.is_character()) return x.as_character() == y.as_character();
  return same_double_coset(x.as_coset().representative, y.as_coset().representative, group);
}

BimoduleSum::BimoduleSum(std::vector<Irreducible> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
}

BigInt BimoduleSum::left_dim() const {
  BigInt total = 0;
  for (const auto& t : terms_) total += t.left_dim();
  return total;
}

BigInt BimoduleSum::right_dim() const {
  BigInt total = 0;
  for (const auto& t : terms_) total += t.right_dim();
  return total;
}

Dimensions tensor_dims(const BimoduleSum& x, const BimoduleSum& y) {
  return {x.left_dim() * y.left_dim(), x.right_dim() * y.right_dim()};
}

BimoduleSum decompose_self_inverse(const NormalForm& g, const BsPresentation& group) {
  group.require_standing_hypothesis("decompose_self_inverse");
  CosetProfile p = coset_profile(g, group);
  const std::int64_t l = to_int64(p.l, "l(g)");
  const std::int64_t r = to_int64(p.r, "r(g)");
  std::vector<Irreducible> terms;
  terms.reserve(static_cast<std::size_t>(l + r - 1));
  for (std::int64_t i = 0; i < r; ++i) terms.push_back(Irreducible::character({i, p.r}));
  const NormalForm g_inv = invert(g, group);
  for (std::int64_t i = 1; i < l; ++i) {
    NormalForm h = multiply(Reducer(group, g).push_a(i).result(), g_inv, group);
    terms.push_back(Irreducible::coset(double_coset(h, group)));
  }
  return BimoduleSum(std::move(terms));
}

std::vector<RootOfUnity> exchange_partners(const RootOfUnity& w, const NormalForm& g,
                                           const BsPresentation& group) {
  if (!omega_member(w, group)) {
    throw DomainError("exchange_partners: " + w.to_string() + " is not in Omega");
  }
  CosetProfile p = coset_profile(g, group);
  // |L| * angle(mu) = sign(L) * r * angle(w)  (mod 1)
  RootOfUnity target = w.pow(sign(p.L) * p.r);
  const std::int64_t count = to_int64(p.l, "l(g)");
  std::vector<RootOfUnity> out;
  for (std::int64_t j = 0; j < count; ++j) {
    RootOfUnity mu(target.num() + j * target.den(), target.den() * p.l);
    if (omega_member(mu, group)) out.push_back(mu);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bsrig
