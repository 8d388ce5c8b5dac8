#pragma once

// Seeded random words and elements for property checks.

#include <cstdint>
#include <random>

#include "bsrig/group.hpp"

namespace bsrig::sampling {

struct WordShape {
  unsigned max_b_length = 6;
  std::int64_t max_exponent = 1000000;
};

/// Alternating a-powers and single b-letters; b-letter count uniform in [0, max_b_length].
GroupWord random_word(std::mt19937_64& rng, const WordShape& shape = {});

NormalForm random_element(std::mt19937_64& rng, const BsPresentation& group,
                          const WordShape& shape = {});

/// x R^{+-1} x^-1 with R = b a^n b^-1 a^-m and x a short random word.
GroupWord relator_conjugate(std::mt19937_64& rng, const BsPresentation& group);

/// Inserts `count` relator conjugates at random syllable boundaries of w.
GroupWord insert_relators(const GroupWord& w, unsigned count, std::mt19937_64& rng,
                          const BsPresentation& group);

}  // namespace bsrig::sampling
