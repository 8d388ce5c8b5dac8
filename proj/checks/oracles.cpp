#include "bsrig/checks/oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace bsrig::oracle {

namespace {

void push_token(std::vector<Token>& out, Token t) {
  if (!t.is_b && t.value == 0) return;
  if (!t.is_b && !out.empty() && !out.back().is_b) {
    out.back().value += t.value;
    if (out.back().value == 0) out.pop_back();
    return;
  }
  out.push_back(std::move(t));
}

std::vector<Token> expand(const GroupWord& w) {
  std::vector<Token> out;
  for (const auto& s : w.syllables()) {
    if (s.letter == Letter::A) {
      push_token(out, {false, s.exponent});
      continue;
    }
    int step = s.exponent > 0 ? 1 : -1;
    for (BigInt i = abs(s.exponent); i > 0; --i) push_token(out, {true, step});
  }
  return out;
}

// A pinch starting at token i: b^e a^x b^-e (x possibly absent, i.e. 0).
struct Pinch {
  std::size_t begin;
  std::size_t end;  // one past the closing b
  BigInt image;     // exponent of the collapsed a-power
};

std::vector<Pinch> find_pinches(const std::vector<Token>& t, const BsPresentation& group) {
  std::vector<Pinch> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_b) continue;
    std::size_t j = i + 1;
    BigInt x = 0;
    if (j < t.size() && !t[j].is_b) x = t[j++].value;
    if (j >= t.size() || !t[j].is_b || t[j].value != -t[i].value) continue;
    // b a^x b^-1 needs n | x; b^-1 a^x b needs m | x
    const BigInt& inner = t[i].value > 0 ? group.n() : group.m();
    const BigInt& outer = t[i].value > 0 ? group.m() : group.n();
    if (x % inner != 0) continue;
    out.push_back({i, j + 1, x / inner * outer});
  }
  return out;
}

// den divides k n0^s |m0|^t for some s + t > 0, by direct search over s, t <= 24.
bool in_omega_by_search(std::int64_t den, const BsPresentation& group) {
  const BigInt n0 = abs(group.n0());
  const BigInt m0 = abs(group.m0());
  for (unsigned s = 0; s <= 24; ++s) {
    for (unsigned t = 0; t <= 24; ++t) {
      if (s + t > 0 && (group.k() * pow(n0, s) * pow(m0, t)) % den == 0) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Token> pinch_eliminate(const GroupWord& w, const BsPresentation& group,
                                   std::mt19937_64& rng) {
  std::vector<Token> tokens = expand(w);
  for (;;) {
    auto pinches = find_pinches(tokens, group);
    if (pinches.empty()) return tokens;
    std::uniform_int_distribution<std::size_t> pick(0, pinches.size() - 1);
    const Pinch& p = pinches[pick(rng)];
    std::vector<Token> next(tokens.begin(), tokens.begin() + static_cast<long>(p.begin));
    push_token(next, {false, p.image});
    for (std::size_t i = p.end; i < tokens.size(); ++i) push_token(next, tokens[i]);
    tokens = std::move(next);
  }
}

bool is_identity(const GroupWord& w, const BsPresentation& group, std::mt19937_64& rng) {
  return pinch_eliminate(w, group, rng).empty();
}

std::size_t b_length(const GroupWord& w, const BsPresentation& group, std::mt19937_64& rng) {
  auto tokens = pinch_eliminate(w, group, rng);
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.is_b; }));
}

std::optional<BigInt> a_exponent(const GroupWord& w, const BsPresentation& group,
                                 std::mt19937_64& rng) {
  auto tokens = pinch_eliminate(w, group, rng);
  if (tokens.empty()) return BigInt(0);
  if (tokens.size() == 1 && !tokens.front().is_b) return tokens.front().value;
  return std::nullopt;
}

std::optional<CosetProfile> profile_by_search(const GroupWord& g, const BsPresentation& group,
                                              std::mt19937_64& rng, std::int64_t limit) {
  const GroupWord g_inv = g.inverse();
  for (std::int64_t z = 1; z <= limit; ++z) {
    GroupWord probe = g * GroupWord::a(z) * g_inv;
    if (auto power = a_exponent(probe, group, rng)) {
      BigInt l = z;
      return CosetProfile{l, abs(*power), sign(*power) * l};
    }
  }
  return std::nullopt;
}

NormalForm double_coset_rep_by_enumeration(const NormalForm& g, const BsPresentation& group) {
  const NormalForm start = g.without_tail();
  NormalForm best = start;
  for (BigInt i = 1;; ++i) {
    NormalForm translate = normalize(GroupWord::a(i) * to_word(g), group).without_tail();
    if (translate == start) return best;
    best = std::min(best, translate);
  }
}

bool double_coset_contains_by_search(const GroupWord& g, const GroupWord& h,
                                     const BsPresentation& group, std::int64_t bound,
                                     std::mt19937_64& rng) {
  const GroupWord h_inv = h.inverse();
  for (std::int64_t i = -bound; i <= bound; ++i) {
    for (std::int64_t j = -bound; j <= bound; ++j) {
      if (is_identity(GroupWord::a(i) * g * GroupWord::a(j) * h_inv, group, rng)) return true;
    }
  }
  return false;
}

std::int64_t convolution_coefficient_by_left_cosets(const NormalForm& d, const NormalForm& e,
                                                    const NormalForm& f,
                                                    const BsPresentation& group) {
  const GroupWord dw = to_word(d);
  const GroupWord fw = to_word(f);
  const NormalForm e_rep = double_coset_rep_by_enumeration(e, group);
  const NormalForm d_vertex = d.without_tail();
  std::int64_t count = 0;
  for (std::int64_t i = 0;; ++i) {
    if (i > 0 && normalize(GroupWord::a(i) * dw, group).without_tail() == d_vertex) break;
    NormalForm x = normalize(dw.inverse() * GroupWord::a(-i) * fw, group);
    if (double_coset_rep_by_enumeration(x, group) == e_rep) ++count;
  }
  return count;
}

std::vector<RootOfUnity> exchange_by_enumeration(const RootOfUnity& w, const BigInt& r,
                                                 const BigInt& L, const BsPresentation& group,
                                                 std::int64_t max_den) {
  // w^r as an angle p/q in lowest terms, compared by cross-multiplication mod 1
  const RootOfUnity lhs = w.pow(r);
  std::vector<RootOfUnity> out;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    if (!in_omega_by_search(q, group)) continue;
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      RootOfUnity mu(p, q);
      BigInt diff = BigInt(p) * L * lhs.den() - lhs.num() * q;
      if (diff % (BigInt(q) * lhs.den()) == 0) out.push_back(mu);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool moldavanskii_by_multiset(std::int64_t n1, std::int64_t m1, std::int64_t n2,
                              std::int64_t m2) {
  std::array<std::int64_t, 2> lhs{n1, m1};
  std::sort(lhs.begin(), lhs.end());
  for (std::int64_t e : {1, -1}) {
    std::array<std::int64_t, 2> rhs{e * n2, e * m2};
    std::sort(rhs.begin(), rhs.end());
    if (lhs == rhs) return true;
  }
  return false;
}

VerdictKind obstruction_case(std::int64_t n1, std::int64_t m1, std::int64_t n2, std::int64_t m2) {
  auto absolute = [](std::int64_t x) { return x < 0 ? -x : x; };
  if (n1 != n2) return VerdictKind::NMismatch;
  if (absolute(m1) != absolute(m2)) return VerdictKind::AbsMMismatch;
  if (n1 == absolute(m1)) return VerdictKind::NoObstruction;
  return m1 == m2 ? VerdictKind::NoObstruction : VerdictKind::SignMismatch;
}

}  // namespace bsrig::oracle
