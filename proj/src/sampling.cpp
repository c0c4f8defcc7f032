#include "cext/sampling.hpp"

#include <vector>

namespace cext {

Word random_reduced_word(const AlphabetPtr& alphabet, std::size_t length, std::mt19937_64& rng) {
  const int keys = static_cast<int>(2 * alphabet->size());
  std::uniform_int_distribution<int> pick(0, keys - 1);
  std::vector<Letter> letters;
  while (letters.size() < length) {
    const Letter x = Letter::from_order_key(pick(rng));
    if (!letters.empty() && letters.back() == x.inverse()) continue;
    letters.push_back(x);
  }
  return Word(alphabet, letters);
}

Word random_relation(const Presentation& p, const RelationSampler& s, std::mt19937_64& rng) {
  const std::size_t top = std::min(s.max_index, p.size() - 1);
  std::uniform_int_distribution<std::size_t> factors(1, s.max_factors);
  std::uniform_int_distribution<std::size_t> index(0, top);
  std::uniform_int_distribution<std::size_t> length(0, s.max_conjugator);
  std::bernoulli_distribution invert_it(0.5);
  Word w(p.alphabet());
  const std::size_t count = factors(rng);
  for (std::size_t f = 0; f < count; ++f) {
    const Word c = random_reduced_word(p.alphabet(), length(rng), rng);
    const Word& r = p.relator(index(rng));
    w = product({w, c, invert_it(rng) ? invert(r) : r, invert(c)});
  }
  return w;
}

}  // namespace cext
