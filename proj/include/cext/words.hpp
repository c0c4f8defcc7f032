#pragma once

// Free-group words over a finite symmetric alphabet.
//
// A Word is always freely reduced: every constructor and operation reduces
// its result. Letters are signed generator indices; the textual form is a
// whitespace-separated token list ("a1 t2- a3^2"), with "1" for the identity.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cext/error.hpp"

namespace cext {

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t generator) const { return names_.at(generator); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Index of a generator name, or -1.
  int find(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  // a1..a4, t1..t4: the generators of the counterexample group.
  static std::shared_ptr<const Alphabet> paper();
  // b1..b4: standard generators of the genus-2 surface group.
  static std::shared_ptr<const Alphabet> surface();

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign)
      : code_(static_cast<std::int16_t>(sign > 0 ? generator + 1 : -(generator + 1))) {}

  constexpr int generator() const noexcept { return (code_ > 0 ? code_ : -code_) - 1; }
  constexpr int sign() const noexcept { return code_ > 0 ? 1 : -1; }
  constexpr Letter inverse() const noexcept { return from_code(static_cast<std::int16_t>(-code_)); }
  constexpr std::int16_t code() const noexcept { return code_; }
  // Shortlex letter order: x1 < x1^-1 < x2 < x2^-1 < ...
  constexpr int order_key() const noexcept { return 2 * generator() + (code_ < 0 ? 1 : 0); }

  static constexpr Letter from_code(std::int16_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }
  static constexpr Letter from_order_key(int key) { return Letter(key / 2, key % 2 == 0 ? 1 : -1); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }

 private:
  std::int16_t code_ = 1;
};

using AbelianVector = std::vector<std::int64_t>;

class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  // Freely reduces the given letter sequence.
  Word(AlphabetPtr alphabet, std::span<const Letter> letters);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Letters only; callers compare alphabets separately when it matters.
  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

  // Shortlex: shorter first, then lexicographic by Letter::order_key.
  friend bool shortlex_less(const Word& a, const Word& b);

  std::size_t hash() const noexcept;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

struct AbelianHash {
  std::size_t operator()(const AbelianVector& v) const noexcept;
};

Word parse_word(std::string_view text, const AlphabetPtr& alphabet);
std::string to_string(const Word& w);

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, std::int64_t k);
// Product of several words (all on the same alphabet).
Word product(std::initializer_list<Word> words);

// Subword [begin, begin+count) of w, freely reduced (subwords of reduced words already are).
Word subword(const Word& w, std::size_t begin, std::size_t count);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);
// Rotation starting at position `shift` of a cyclically reduced word.
Word rotate(const Word& w, std::size_t shift);
std::vector<Word> cyclic_permutations(const Word& w);

AbelianVector abelianize(const Word& w);

}  // namespace cext
