#pragma once

// Brute-force reference computations. None of these route through Reducer or the
// propagation/greedy algorithms they are used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bsrig/fusion.hpp"
#include "bsrig/group.hpp"
#include "bsrig/hecke.hpp"
#include "bsrig/rigidity.hpp"

namespace bsrig::oracle {

/// One letter of an expanded word: a^{value} or b^{value} with value = +-1.
struct Token {
  bool is_b;
  BigInt value;
};

/// Britton reduction by repeatedly collapsing a randomly chosen pinch
/// b a^{nj} b^-1 -> a^{mj} or b^-1 a^{mj} b -> a^{nj} until none remain.
std::vector<Token> pinch_eliminate(const GroupWord& w, const BsPresentation& group,
                                   std::mt19937_64& rng);

bool is_identity(const GroupWord& w, const BsPresentation& group, std::mt19937_64& rng);
std::size_t b_length(const GroupWord& w, const BsPresentation& group, std::mt19937_64& rng);
/// The exponent z when w equals a^z, otherwise nullopt.
std::optional<BigInt> a_exponent(const GroupWord& w, const BsPresentation& group,
                                 std::mt19937_64& rng);

/// (l, r, L) by searching z = 1, 2, ... for g a^z g^-1 in <a>; nullopt past `limit`.
std::optional<CosetProfile> profile_by_search(const GroupWord& g, const BsPresentation& group,
                                              std::mt19937_64& rng, std::int64_t limit = 100000);

/// Least tail-free normal form over the r(g) translates a^i g, enumerated one by one.
NormalForm double_coset_rep_by_enumeration(const NormalForm& g, const BsPresentation& group);

/// Searches h = a^i g a^j with |i|, |j| <= bound using the pinch oracle.
bool double_coset_contains_by_search(const GroupWord& g, const GroupWord& h,
                                     const BsPresentation& group, std::int64_t bound,
                                     std::mt19937_64& rng);

/// Coefficient of T_F in T_D * T_E via left cosets: #{ i < r(d) : d^-1 a^-i f in E }.
std::int64_t convolution_coefficient_by_left_cosets(const NormalForm& d, const NormalForm& e,
                                                    const NormalForm& f,
                                                    const BsPresentation& group);

/// All mu = p/q with q <= max_den in Omega and mu^{L} = w^{r}.
std::vector<RootOfUnity> exchange_by_enumeration(const RootOfUnity& w, const BigInt& r,
                                                 const BigInt& L, const BsPresentation& group,
                                                 std::int64_t max_den);

/// Sorted-multiset comparison of {n1, m1} against {e n2, e m2}.
bool moldavanskii_by_multiset(std::int64_t n1, std::int64_t m1, std::int64_t n2, std::int64_t m2);

/// The obstruction case split, computed by comparing parameters directly.
VerdictKind obstruction_case(std::int64_t n1, std::int64_t m1, std::int64_t n2, std::int64_t m2);

}  // namespace bsrig::oracle
