#pragma once

// Random elements of the normal closure of the relators, for property tests.

#include <cstddef>
#include <random>

#include "cext/presentations.hpp"
#include "cext/words.hpp"

namespace cext {

struct RelationSampler {
  std::size_t max_factors = 4;
  std::size_t max_index = 5;
  std::size_t max_conjugator = 6;
};

// Uniformly random freely reduced word of the given length.
Word random_reduced_word(const AlphabetPtr& alphabet, std::size_t length, std::mt19937_64& rng);

// Product of 1..max_factors conjugates c r_i^(+-1) c^-1 with i <= max_index and
// |c| <= max_conjugator, freely reduced.
Word random_relation(const Presentation& p, const RelationSampler& s, std::mt19937_64& rng);

}  // namespace cext
