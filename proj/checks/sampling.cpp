#include "bsrig/checks/sampling.hpp"

namespace bsrig::sampling {

GroupWord random_word(std::mt19937_64& rng, const WordShape& shape) {
  std::uniform_int_distribution<unsigned> b_count(0, shape.max_b_length);
  std::uniform_int_distribution<std::int64_t> exponent(-shape.max_exponent, shape.max_exponent);
  std::bernoulli_distribution coin(0.5);
  GroupWord w;
  unsigned letters = b_count(rng);
  w.append(Letter::A, exponent(rng));
  for (unsigned i = 0; i < letters; ++i) {
    w.append(Letter::B, coin(rng) ? 1 : -1);
    w.append(Letter::A, exponent(rng));
  }
  return w;
}

NormalForm random_element(std::mt19937_64& rng, const BsPresentation& group,
                          const WordShape& shape) {
  return normalize(random_word(rng, shape), group);
}

GroupWord relator_conjugate(std::mt19937_64& rng, const BsPresentation& group) {
  GroupWord relator = GroupWord::b(1) * GroupWord::a(group.n()) * GroupWord::b(-1) *
                      GroupWord::a(-group.m());
  if (std::bernoulli_distribution(0.5)(rng)) relator = relator.inverse();
  GroupWord x = random_word(rng, {2, 7});
  return x * relator * x.inverse();
}

GroupWord insert_relators(const GroupWord& w, unsigned count, std::mt19937_64& rng,
                          const BsPresentation& group) {
  std::vector<GroupWord> pieces;
  for (const auto& s : w.syllables()) pieces.push_back(GroupWord().append(s.letter, s.exponent));
  for (unsigned c = 0; c < count; ++c) {
    std::uniform_int_distribution<std::size_t> at(0, pieces.size());
    pieces.insert(pieces.begin() + static_cast<long>(at(rng)), relator_conjugate(rng, group));
  }
  GroupWord out;
  for (const auto& p : pieces) out.append(p);
  return out;
}

}  // namespace bsrig::sampling
