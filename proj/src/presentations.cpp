#include "cext/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cext {

std::string to_string(RelatorForm form) { return form == RelatorForm::literal ? "literal" : "consistent"; }

RelatorForm parse_relator_form(std::string_view text) {
  if (text == "consistent") return RelatorForm::consistent;
  if (text == "literal") return RelatorForm::literal;
  throw Error(ErrorCode::InvalidArgument, "unknown relator form '" + std::string(text) + "'");
}

namespace {

void append_power(std::vector<Letter>& out, int generator, std::int64_t exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.emplace_back(generator, sign);
}

// t^e1 a t^e2 with a = a_j, t = t_j (generators j and j+4 of the a/t alphabet).
std::vector<Letter> conjugated_a(int j, std::int64_t e1, std::int64_t e2, int a_sign = 1) {
  std::vector<Letter> out;
  append_power(out, 4 + j, e1);
  out.emplace_back(j, a_sign);
  append_power(out, 4 + j, e2);
  return out;
}

Word commutator_product(const std::vector<Word>& x) {
  return product({x[0], x[1], invert(x[0]), invert(x[1]), x[2], x[3], invert(x[2]), invert(x[3])});
}

}  // namespace

Word surface_relator() { return parse_word("b1 b2 b1- b2- b3 b4 b3- b4-", Alphabet::surface()); }

Word h_image(std::size_t i, const Word& w) {
  if (!same_alphabet(w.alphabet(), Alphabet::surface())) {
    throw Error(ErrorCode::AlphabetMismatch, "h_image expects a word over b1..b4");
  }
  const auto e = static_cast<std::int64_t>(i);
  std::vector<Letter> letters;
  for (Letter l : w.letters()) {
    auto block = conjugated_a(l.generator(), e, -e, l.sign());
    letters.insert(letters.end(), block.begin(), block.end());
  }
  return Word(Alphabet::paper(), letters);
}

Word paper_relator(std::size_t i, RelatorForm form) {
  if (form == RelatorForm::consistent) return h_image(i, surface_relator());
  const auto e = static_cast<std::int64_t>(i);
  const auto alphabet = Alphabet::paper();
  std::vector<Word> x;
  x.emplace_back(alphabet, conjugated_a(0, e, -e));
  x.emplace_back(alphabet, conjugated_a(1, -e, -e));
  x.emplace_back(alphabet, conjugated_a(2, e, -e));
  x.emplace_back(alphabet, conjugated_a(3, -e, -e));
  return commutator_product(x);
}

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Word> relators, bool family, RelatorForm form)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)), family_(family), form_(form) {}

Presentation Presentation::paper_family(std::size_t truncation, RelatorForm form) {
  std::vector<Word> relators;
  relators.reserve(truncation + 1);
  for (std::size_t i = 0; i <= truncation; ++i) relators.push_back(paper_relator(i, form));
  return Presentation(Alphabet::paper(), std::move(relators), true, form);
}

Presentation Presentation::from_relators(AlphabetPtr alphabet, std::vector<Word> relators) {
  for (const Word& r : relators) {
    if (!same_alphabet(r.alphabet(), alphabet)) throw Error(ErrorCode::AlphabetMismatch, "relator alphabet");
    if (r.empty()) throw Error(ErrorCode::InvalidArgument, "empty relator");
    if (!is_cyclically_reduced(r)) {
      throw Error(ErrorCode::NotCyclicallyReduced, "relator '" + to_string(r) + "' is not cyclically reduced");
    }
  }
  return Presentation(std::move(alphabet), std::move(relators), false, RelatorForm::consistent);
}

const Word& Presentation::relator(std::size_t index) const {
  if (index >= relators_.size()) {
    throw Error(ErrorCode::TruncationExceeded,
                "relator index " + std::to_string(index) + " beyond bound " + std::to_string(relators_.size() - 1));
  }
  return relators_[index];
}

Word Presentation::parse(std::string_view text) const {
  // Expand r<i> tokens textually, then parse as an ordinary word.
  std::string expanded;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string piece(token);
    if (token.size() >= 2 && token[0] == 'r' && alphabet_->find(token) < 0) {
      std::string_view body = token.substr(1);
      bool inverse = false;
      if (!body.empty() && body.back() == '-') {
        inverse = true;
        body.remove_suffix(1);
      }
      std::size_t index = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), index);
      if (ec == std::errc() && ptr == body.data() + body.size() && !body.empty()) {
        const Word& r = relator(index);
        piece = to_string(inverse ? invert(r) : r);
      }
    }
    expanded += piece;
    expanded += ' ';
    pos = end;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  return parse_word(expanded, alphabet_);
}

namespace {

struct Alignment {
  std::size_t length = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

// Longest piece between cyclic words u and v; alignments reproducing the
// same rotation (same word) are excluded.
Alignment longest_alignment(const Word& u, const Word& v) {
  const std::size_t la = u.length();
  const std::size_t lb = v.length();
  Alignment best;
  if (la == 0 || lb == 0) return best;
  const std::size_t cap = std::min(la, lb);
  const std::size_t ra = la + cap;
  const std::size_t rb = lb + cap;
  // dp[a][b] = common prefix length of u(a..) and v(b..) over the unrolled words.
  std::vector<std::uint32_t> next(rb + 1, 0), cur(rb + 1, 0);
  std::vector<std::uint32_t> row_best;
  for (std::size_t a = ra; a-- > 0;) {
    const Letter la_letter = u[a % la];
    for (std::size_t b = rb; b-- > 0;) {
      cur[b] = (la_letter == v[b % lb]) ? next[b + 1] + 1 : 0;
    }
    if (a < la) {
      for (std::size_t b = 0; b < lb; ++b) {
        std::size_t len = std::min<std::size_t>(cur[b], cap);
        if (la == lb && len >= la) continue;  // identical rotations
        if (len > best.length) best = {len, a, b};
      }
    }
    std::swap(cur, next);
    cur[rb] = 0;
  }
  return best;
}

PieceReport make_report(std::size_t i, std::size_t k, bool inverse, const Word& u, const Alignment& al,
                        std::size_t len_i, std::size_t len_k) {
  PieceReport r;
  r.first = i;
  r.second = k;
  r.inverse = inverse;
  r.length = al.length;
  std::vector<Letter> letters;
  for (std::size_t t = 0; t < al.length; ++t) letters.push_back(u[(al.a + t) % u.length()]);
  r.piece = Word(u.alphabet(), letters);
  r.ratio_first = Rational(static_cast<long long>(al.length), static_cast<long long>(len_i));
  r.ratio_second = Rational(static_cast<long long>(al.length), static_cast<long long>(len_k));
  return r;
}

}  // namespace

Word max_piece(const Word& u, const Word& v) {
  if (!is_cyclically_reduced(u) || !is_cyclically_reduced(v)) {
    throw Error(ErrorCode::NotCyclicallyReduced, "max_piece expects cyclically reduced words");
  }
  if (!same_alphabet(u.alphabet(), v.alphabet())) throw Error(ErrorCode::AlphabetMismatch, "max_piece");
  const Alignment al = longest_alignment(u, v);
  std::vector<Letter> letters;
  for (std::size_t t = 0; t < al.length; ++t) letters.push_back(u[(al.a + t) % u.length()]);
  return Word(u.alphabet(), letters);
}

SmallCancellationReport check_small_cancellation(const Presentation& p, const Rational& lambda,
                                                 std::size_t max_index) {
  if (lambda <= 0 || lambda >= 1) throw Error(ErrorCode::InvalidArgument, "lambda must lie in (0,1)");
  if (max_index >= p.size()) {
    throw Error(ErrorCode::TruncationExceeded, "max index " + std::to_string(max_index) + " beyond presentation");
  }
  SmallCancellationReport report;
  report.lambda = lambda;
  report.max_index = max_index;
  bool have_cross = false, have_self = false;
  std::vector<Word> inverses;
  for (std::size_t i = 0; i <= max_index; ++i) inverses.push_back(invert(p.relator(i)));

  for (std::size_t i = 0; i <= max_index; ++i) {
    const Word& ri = p.relator(i);
    for (std::size_t k = i; k <= max_index; ++k) {
      const Word& rk = p.relator(k);
      for (bool inverse : {false, true}) {
        const Word& other = inverse ? inverses[k] : rk;
        const Alignment al = longest_alignment(ri, other);
        PieceReport rep = make_report(i, k, inverse, ri, al, ri.length(), rk.length());
        PieceReport& slot = (i == k) ? report.worst_self : report.worst_cross;
        bool& have = (i == k) ? have_self : have_cross;
        if (!have || rep.worst_ratio() > slot.worst_ratio()) {
          slot = rep;
          have = true;
        }
      }
    }
  }
  if (!have_cross) report.worst = report.worst_self;
  else report.worst = report.worst_self.worst_ratio() > report.worst_cross.worst_ratio() ? report.worst_self
                                                                                         : report.worst_cross;
  report.holds = report.worst.worst_ratio() < lambda;
  return report;
}

}  // namespace cext
