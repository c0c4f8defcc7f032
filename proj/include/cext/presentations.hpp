#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cext/numeric.hpp"
#include "cext/words.hpp"

namespace cext {

// How the relator family is spelled. `consistent` conjugates every a_j by
// t_j^i (r_i = h_i([b1,b2][b3,b4])); `literal` reproduces the displayed
// formula with t_2^{-i} a_2 t_2^{-i} and t_4^{-i} a_4 t_4^{-i}.
enum class RelatorForm { consistent, literal };

std::string to_string(RelatorForm form);
RelatorForm parse_relator_form(std::string_view text);

inline constexpr std::size_t kDefaultTruncation = 64;

// [b1,b2][b3,b4] over the surface alphabet.
Word surface_relator();

// Substitutes b_j -> t_j^i a_j t_j^-i.
Word h_image(std::size_t i, const Word& w);

// r_i over {a1..a4, t1..t4}; length 16i+8.
Word paper_relator(std::size_t i, RelatorForm form = RelatorForm::consistent);

class Presentation {
 public:
  static Presentation paper_family(std::size_t truncation = kDefaultTruncation,
                                   RelatorForm form = RelatorForm::consistent);
  // Relators must be nonempty and cyclically reduced.
  static Presentation from_relators(AlphabetPtr alphabet, std::vector<Word> relators);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  bool is_family() const noexcept { return family_; }
  RelatorForm form() const noexcept { return form_; }
  // Number of relators available (truncation + 1 for the family).
  std::size_t size() const noexcept { return relators_.size(); }
  std::optional<std::size_t> truncation() const {
    return family_ ? std::optional<std::size_t>(relators_.size() - 1) : std::nullopt;
  }
  const Word& relator(std::size_t index) const;
  const std::vector<Word>& relators() const noexcept { return relators_; }

  // Area weight of one relator occurrence: 2i+1.
  static std::int64_t weight(std::size_t index) { return 2 * static_cast<std::int64_t>(index) + 1; }

  // Parses a word; tokens "r<i>" / "r<i>-" expand to relators of this presentation.
  Word parse(std::string_view text) const;

 private:
  Presentation(AlphabetPtr alphabet, std::vector<Word> relators, bool family, RelatorForm form);

  AlphabetPtr alphabet_;
  std::vector<Word> relators_;
  bool family_ = false;
  RelatorForm form_ = RelatorForm::consistent;
};

struct PieceReport {
  std::size_t first = 0;   // relator index i
  std::size_t second = 0;  // relator index k
  bool inverse = false;    // piece found between r_i and r_k^-1
  Word piece;
  std::size_t length = 0;
  Rational ratio_first;   // |p| / |r_i|
  Rational ratio_second;  // |p| / |r_k|

  Rational worst_ratio() const { return ratio_first > ratio_second ? ratio_first : ratio_second; }
};

// Longest common subword of a cyclic permutation of u and one of v, over
// alignments whose rotations differ as words (so u against itself only
// sees distinct occurrences). Both inputs must be cyclically reduced.
Word max_piece(const Word& u, const Word& v);

struct SmallCancellationReport {
  bool holds = false;
  Rational lambda;
  std::size_t max_index = 0;
  PieceReport worst;        // over every pair i <= k, with inverses
  PieceReport worst_cross;  // restricted to distinct relators i < k
  PieceReport worst_self;   // a relator against itself and its inverse
};

// Exhaustive piece scan of relators 0..max_index against each other and
// their inverses; holds iff every piece p of a relator r has |p| < lambda|r|.
SmallCancellationReport check_small_cancellation(const Presentation& p, const Rational& lambda,
                                                 std::size_t max_index);

}  // namespace cext
