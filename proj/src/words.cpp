#include "cext/words.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace cext {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || n == "1" || n.find_first_of("-^ \t\n") != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "invalid generator name '" + n + "'");
    }
    if (!index_.emplace(n, static_cast<int>(i)).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate generator name '" + n + "'");
    }
  }
}

int Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

std::shared_ptr<const Alphabet> Alphabet::paper() {
  static const auto instance = std::make_shared<const Alphabet>(
      std::vector<std::string>{"a1", "a2", "a3", "a4", "t1", "t2", "t3", "t4"});
  return instance;
}

std::shared_ptr<const Alphabet> Alphabet::surface() {
  static const auto instance =
      std::make_shared<const Alphabet>(std::vector<std::string>{"b1", "b2", "b3", "b4"});
  return instance;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void require_same(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, "words over different alphabets");
  }
}

}  // namespace

Word::Word(AlphabetPtr alphabet, std::span<const Letter> letters) : alphabet_(std::move(alphabet)) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (alphabet_ && static_cast<std::size_t>(l.generator()) >= alphabet_->size()) {
      throw Error(ErrorCode::UnknownToken, "generator index out of range");
    }
    push_reduced(letters_, l);
  }
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    const int ka = a[i].order_key();
    const int kb = b[i].order_key();
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::size_t Word::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Letter l : letters_) {
    h ^= static_cast<std::uint16_t>(l.code());
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ letters_.size());
}

std::size_t AbelianHash::operator()(const AbelianVector& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto x : v) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::int64_t exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      std::string_view exp_text = token.substr(caret + 1);
      token = token.substr(0, caret);
      if (!exp_text.empty() && exp_text[0] == '+') exp_text.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (exp_text.empty() || ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
        throw Error(ErrorCode::MalformedPower, "non-integer exponent in '" + std::string(token) + "^" +
                                                   std::string(exp_text) + "'");
      }
    }
    if (token == "1") continue;  // identity
    int sign = 1;
    if (!token.empty() && token.back() == '-') {
      sign = -1;
      token.remove_suffix(1);
    }
    const int gen = alphabet->find(token);
    if (gen < 0) throw Error(ErrorCode::UnknownToken, "unknown token '" + std::string(token) + "'");
    if (exponent < 0) {
      sign = -sign;
      exponent = -exponent;
    }
    for (std::int64_t k = 0; k < exponent; ++k) letters.emplace_back(gen, sign);
  }
  return Word(alphabet, letters);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += w.alphabet()->name(static_cast<std::size_t>(w[i].generator()));
    if (w[i].sign() < 0) out += '-';
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  require_same(u, v);
  std::vector<Letter> letters(u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), letters);
}

Word invert(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (std::size_t i = w.length(); i-- > 0;) letters.push_back(w[i].inverse());
  return Word(w.alphabet(), letters);
}

Word power(const Word& w, std::int64_t k) {
  const Word base = k < 0 ? invert(w) : w;
  const std::int64_t n = k < 0 ? -k : k;
  std::vector<Letter> letters;
  for (std::int64_t i = 0; i < n; ++i) letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return Word(w.alphabet(), letters);
}

Word product(std::initializer_list<Word> words) {
  if (words.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty product needs an alphabet");
  const Word& first = *words.begin();
  std::vector<Letter> letters;
  for (const Word& w : words) {
    require_same(first, w);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  }
  return Word(first.alphabet(), letters);
}

Word subword(const Word& w, std::size_t begin, std::size_t count) {
  if (begin + count > w.length()) throw Error(ErrorCode::InvalidArgument, "subword out of range");
  return Word(w.alphabet(), w.letters().subspan(begin, count));
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t k = 0;
  const std::size_t n = w.length();
  while (2 * k + 1 < n && w[k] == w[n - 1 - k].inverse()) ++k;
  return {subword(w, k, n - 2 * k), subword(w, 0, k)};
}

bool is_cyclically_reduced(const Word& w) { return w.length() < 2 || !(w[0] == w[w.length() - 1].inverse()); }

Word rotate(const Word& w, std::size_t shift) {
  const std::size_t n = w.length();
  if (n == 0) return w;
  shift %= n;
  std::vector<Letter> letters;
  letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) letters.push_back(w[(shift + i) % n]);
  return Word(w.alphabet(), letters);
}

std::vector<Word> cyclic_permutations(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    throw Error(ErrorCode::NotCyclicallyReduced, "'" + to_string(w) + "' is not cyclically reduced");
  }
  if (w.empty()) return {w};
  std::vector<Word> out;
  out.reserve(w.length());
  for (std::size_t s = 0; s < w.length(); ++s) out.push_back(rotate(w, s));
  return out;
}

AbelianVector abelianize(const Word& w) {
  AbelianVector v(w.alphabet() ? w.alphabet()->size() : 0, 0);
  for (Letter l : w.letters()) v[static_cast<std::size_t>(l.generator())] += l.sign();
  return v;
}

}  // namespace cext
