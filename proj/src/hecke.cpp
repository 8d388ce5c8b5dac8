#include "bsrig/hecke.hpp"

#include <cctype>
#include <string>

namespace bsrig {

namespace {

// Inverse of x modulo mod (mod >= 1, gcd(x, mod) == 1).
BigInt mod_inverse(const BigInt& x, const BigInt& mod) {
  BigInt old_r = floor_mod(x, mod), r = mod;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return floor_mod(old_s, mod);
}

// Modulus a-powers are reduced by before b^{b_sign}, and the exponent a^{modulus} becomes
// after crossing.
struct CrossingRule {
  BigInt modulus;
  BigInt image;
};

CrossingRule crossing_rule(int b_sign, const BsPresentation& group) {
  if (b_sign > 0) return {abs(group.m()), sign(group.m()) * group.n()};
  return {abs(group.n()), sign(group.n()) * group.m()};
}

}  // namespace

CosetProfile coset_profile(const NormalForm& g, const BsPresentation& group) {
  // g a^{A} g^-1 = a^{E}, propagated inward-out across the b-letters of g.
  BigInt A = 1, E = 1;
  const auto& prefix = g.prefix();
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    const BigInt& inner = it->b_sign > 0 ? group.n() : group.m();
    const BigInt& outer = it->b_sign > 0 ? group.m() : group.n();
    BigInt c = abs(inner);
    BigInt j = c / gcd(c, E);
    A *= j;
    E = E * j / inner * outer;
  }
  return {A, abs(E), sign(E) * A};
}

bool f_set_member(const BigInt& z, const BsPresentation& group) {
  if (z <= 0) throw DomainError("f_set_member requires z > 0, got " + z.str());
  group.require_standing_hypothesis("f_set_member");
  if (z % group.k() != 0) return false;
  BigInt rest = z / group.k();
  const BigInt n0 = abs(group.n0());
  const BigInt m0 = abs(group.m0());
  bool stripped = false;
  for (const BigInt& p : {n0, m0}) {
    if (p == 1) continue;
    while (rest % p == 0) {
      rest /= p;
      stripped = true;
    }
  }
  if (rest != 1) return false;
  // s + t > 0 is free when a factor equals 1.
  return stripped || n0 == 1 || m0 == 1;
}

std::set<BigInt> f_set(unsigned depth, const BsPresentation& group) {
  group.require_standing_hypothesis("f_set");
  std::set<BigInt> out;
  const BigInt n0 = abs(group.n0());
  const BigInt m0 = abs(group.m0());
  for (unsigned s = 0; s <= depth; ++s) {
    for (unsigned t = 0; s + t <= depth; ++t) {
      if (s + t == 0) continue;
      out.insert(group.k() * pow(n0, s) * pow(m0, t));
    }
  }
  return out;
}

NormalForm double_coset_representative(const NormalForm& g, const BsPresentation& group) {
  // The left translates a^x g with x in offset + step*Z; minimize each a-power in turn.
  BigInt offset = 0, step = 1;
  std::vector<Crossing> prefix;
  prefix.reserve(g.b_length());
  for (const auto& c : g.prefix()) {
    auto [modulus, image] = crossing_rule(c.b_sign, group);
    BigInt shift = c.a_power + offset;
    BigInt d = gcd(step, modulus);
    BigInt least = floor_mod(shift, d);
    BigInt cycle = modulus / d;
    BigInt j = cycle == 1 ? BigInt(0)
                          : floor_mod((least - shift) / d * mod_inverse(step / d, cycle), cycle);
    BigInt carried = (shift + step * j - least) / modulus;
    prefix.push_back({least, c.b_sign});
    offset = carried * image;
    step = abs(step / d * image);
  }
  return NormalForm(std::move(prefix), 0);
}

DoubleCoset double_coset(const NormalForm& g, const BsPresentation& group) {
  return {double_coset_representative(g, group), coset_profile(g, group)};
}

bool same_double_coset(const NormalForm& g, const NormalForm& h, const BsPresentation& group) {
  return double_coset_representative(g, group) == double_coset_representative(h, group);
}

bool qc_member(const NormalForm& g, const BsPresentation& group) {
  CosetProfile p = coset_profile(g, group);
  return p.L == p.l && p.r == p.l;
}

bool centralizes(const NormalForm& g, const BigInt& z, const BsPresentation& group) {
  NormalForm az = normalize(GroupWord::a(z), group);
  return conjugate(az, g, group) == az;
}

GroupWord amalgam_embed(std::string_view text, const BsPresentation& group) {
  group.require_standing_hypothesis("amalgam_embed");
  if (abs(group.m()) == 2) throw DomainError("amalgam_embed requires |m| != 2");
  GroupWord out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    char ch = text[pos];
    int sign = (ch == 'C' || ch == 'D') ? -1 : 1;
    bool is_c = ch == 'c' || ch == 'C';
    if (!is_c && ch != 'd' && ch != 'D') throw ParseError("expected one of c, d, C, D", pos);
    ++pos;
    BigInt exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = pos < text.size() && text[pos] == '-';
      if (negative) ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected digits after '^'", pos);
      exponent = BigInt(std::string(text.substr(start, pos - start)));
      if (negative) exponent = -exponent;
    }
    exponent *= sign;
    if (is_c) {
      out.append(Letter::A, exponent);
    } else {
      out.append(Letter::B, -1).append(Letter::A, exponent).append(Letter::B, 1);
    }
    skip_space();
  }
  return out;
}

BigInt lcm_l_values(std::span<const NormalForm> elements, const BsPresentation& group) {
  if (elements.empty()) throw DomainError("lcm_l_values requires a nonempty set");
  BigInt out = 1;
  for (const auto& g : elements) out = lcm(out, coset_profile(g, group).l);
  return out;
}

// ---------------------------------------------------------------------------
// HeckeElement

HeckeElement HeckeElement::basis(DoubleCoset coset) {
  HeckeElement x;
  x.add(coset, 1);
  return x;
}

HeckeElement HeckeElement::unit() { return basis({NormalForm(), {1, 1, 1}}); }

HeckeElement& HeckeElement::add(const DoubleCoset& coset, Coefficient coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(coset, coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  return *this;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [coset, coeff] : other.terms_) add(coset, coeff);
  return *this;
}

HeckeElement::Coefficient HeckeElement::coefficient(const DoubleCoset& coset) const {
  auto it = terms_.find(coset);
  return it == terms_.end() ? 0 : it->second;
}

namespace {

// T_D * T_E for single double cosets. E = disjoint union of <a> e a^j over j < l(e), and the
// coefficient of T_F counts the j with f (e a^j)^-1 in D.
HeckeElement convolve_basis(const DoubleCoset& D, const DoubleCoset& E,
                            const BsPresentation& group) {
  const NormalForm& d = D.representative;
  const NormalForm& e = E.representative;
  const std::int64_t ld = to_int64(D.profile.l, "l(d)");
  const std::int64_t le = to_int64(E.profile.l, "l(e)");
  const NormalForm d_rep = double_coset_representative(d, group);

  std::set<DoubleCoset> support;
  for (std::int64_t i = 0; i < ld; ++i) {
    NormalForm h = multiply(multiply(d, normalize(GroupWord::a(i), group), group), e, group);
    support.insert(double_coset(h, group));
  }

  const NormalForm e_inv = invert(e, group);
  HeckeElement out;
  for (const auto& F : support) {
    HeckeElement::Coefficient count = 0;
    for (std::int64_t j = 0; j < le; ++j) {
      NormalForm x = multiply(normalize(GroupWord::a(-j), group), e_inv, group);
      if (double_coset_representative(multiply(F.representative, x, group), group) == d_rep) {
        ++count;
      }
    }
    out.add(F, count);
  }
  return out;
}

}  // namespace

HeckeElement hecke_convolve(const HeckeElement& x, const HeckeElement& y,
                            const BsPresentation& group) {
  HeckeElement out;
  for (const auto& [D, cx] : x.terms()) {
    for (const auto& [E, cy] : y.terms()) {
      HeckeElement product = convolve_basis(D, E, group);
      for (const auto& [F, c] : product.terms()) out.add(F, cx * cy * c);
    }
  }
  return out;
}

}  // namespace bsrig
