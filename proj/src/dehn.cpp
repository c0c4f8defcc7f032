#include "cext/dehn.hpp"

#include <algorithm>
#include <mutex>

namespace cext {

namespace {

constexpr std::uint64_t kMod = (1ull << 61) - 1;
constexpr std::uint64_t kBase = 1000003;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>((p & kMod) + (p >> 61));
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t letter_value(Letter l) { return static_cast<std::uint64_t>(l.code() + 64); }

// Prefix hashes over the word repeated twice, for cyclic windows.
struct CyclicHasher {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> power;

  explicit CyclicHasher(const Word& w) {
    const std::size_t n = w.length();
    prefix.assign(2 * n + 1, 0);
    power.assign(2 * n + 1, 1);
    for (std::size_t i = 0; i < 2 * n; ++i) {
      prefix[i + 1] = (mul_mod(prefix[i], kBase) + letter_value(w[i % n])) % kMod;
      power[i + 1] = mul_mod(power[i], kBase);
    }
  }

  std::uint64_t window(std::size_t start, std::size_t len) const {
    const std::uint64_t sub = mul_mod(prefix[start], power[len]);
    return (prefix[start + len] + kMod - sub) % kMod;
  }
};

std::size_t min_match_length(std::size_t relator_length) { return (4 * relator_length) / 7 + 1; }

bool better(const GreendlingerMatch& a, const GreendlingerMatch& b) {
  if (a.replacement_length != b.replacement_length) return a.replacement_length < b.replacement_length;
  if (a.relator_index != b.relator_index) return a.relator_index < b.relator_index;
  if (a.rotation != b.rotation) return a.rotation < b.rotation;
  if (a.sign != b.sign) return a.sign > b.sign;
  return a.shift < b.shift;
}

}  // namespace

DehnSolver::DehnSolver(std::shared_ptr<const Presentation> presentation) : presentation_(std::move(presentation)) {
  const auto& rels = presentation_->relators();
  index_.resize(rels.size());
  inverses_.reserve(rels.size());
  for (std::size_t j = 0; j < rels.size(); ++j) {
    const Word& r = rels[j];
    inverses_.push_back(invert(r));
    WindowIndex& idx = index_[j];
    idx.min_match = min_match_length(r.length());
    for (int inv = 0; inv < 2; ++inv) {
      const Word& form = inv ? inverses_.back() : r;
      const CyclicHasher hasher(form);
      for (std::size_t s = 0; s < form.length(); ++s) {
        idx.windows[hasher.window(s, idx.min_match)].push_back(static_cast<std::uint32_t>(s << 1 | inv));
      }
    }
  }
}

std::size_t DehnSolver::candidate_bound(std::size_t length, bool& any) const {
  const Presentation& p = *presentation_;
  any = false;
  std::size_t bound = 0;
  for (std::size_t j = 0; j < index_.size(); ++j) {
    if (index_[j].min_match <= length) {
      any = true;
      bound = j;
    } else if (p.is_family()) {
      break;  // family lengths increase with the index
    }
  }
  if (p.is_family()) {
    const std::size_t next = p.size();  // first index beyond the truncation
    if (min_match_length(16 * next + 8) <= length) {
      throw Error(ErrorCode::TruncationExceeded, "a word of length " + std::to_string(length) +
                                                     " may contain more than 4/7 of relator " +
                                                     std::to_string(next) + ", beyond the truncation bound " +
                                                     std::to_string(next - 1));
    }
  }
  return bound;
}

std::vector<GreendlingerMatch> DehnSolver::all_matches(const Word& w) const {
  std::vector<GreendlingerMatch> out;
  const std::size_t n = w.length();
  if (n == 0) return out;
  if (!is_cyclically_reduced(w)) {
    throw Error(ErrorCode::NotCyclicallyReduced, "greendlinger_step expects a cyclically reduced word");
  }
  bool any = false;
  const std::size_t bound = candidate_bound(n, any);
  if (!any) return out;
  const CyclicHasher hasher(w);
  const auto& rels = presentation_->relators();
  for (std::size_t j = 0; j <= bound; ++j) {
    const WindowIndex& idx = index_[j];
    if (idx.min_match > n) continue;
    const Word& r = rels[j];
    const std::size_t len = r.length();
    for (std::size_t s = 0; s < n; ++s) {
      auto it = idx.windows.find(hasher.window(s, idx.min_match));
      if (it == idx.windows.end()) continue;
      for (std::uint32_t code : it->second) {
        const std::size_t shift = code >> 1;
        const bool inverse = code & 1;
        const Word& form = inverse ? inverses_[j] : r;
        std::size_t k = 0;
        const std::size_t cap = std::min(n, len);
        while (k < cap && w[(s + k) % n] == form[(shift + k) % len]) ++k;
        if (k < idx.min_match) continue;  // hash collision
        // Extend only forward; a longer match starting earlier shows up at another rotation.
        GreendlingerMatch m;
        m.rotation = s;
        m.relator_index = j;
        m.sign = inverse ? -1 : 1;
        m.shift = shift;
        m.matched = k;
        m.replacement_length = len - k;
        // v^-1 u where r' = w0 v and rot(w, s) = w0 u.
        std::vector<Letter> letters;
        letters.reserve(len - k + n - k);
        for (std::size_t t = len; t-- > k;) letters.push_back(form[(shift + t) % len].inverse());
        for (std::size_t t = k; t < n; ++t) letters.push_back(w[(s + t) % n]);
        m.result = Word(w.alphabet(), letters);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::optional<GreendlingerMatch> DehnSolver::step(const Word& w, ReductionStrategy* strategy) const {
  auto matches = all_matches(w);
  if (matches.empty()) return std::nullopt;
  if (strategy && strategy->randomized()) return std::move(matches[strategy->pick(matches.size())]);
  auto best = std::min_element(matches.begin(), matches.end(), better);
  return std::move(*best);
}

std::optional<AreaCertificate> DehnSolver::try_certificate(const Word& w, ReductionStrategy* strategy,
                                                           ReductionTrace* trace) const {
  AreaCertificate cert;
  cert.word = w;
  Word prefix(w.alphabet());  // T: w == (factors so far) * T X T^-1
  Word current = w;          // X
  while (!current.empty()) {
    const CyclicReduction cr = cyclic_reduce(current);
    auto match = step(cr.core, strategy);
    if (!match) return std::nullopt;
    const Word& form = match->sign > 0 ? presentation_->relator(match->relator_index)
                                       : inverses_[match->relator_index];
    const Word rotation_prefix = subword(cr.core, 0, match->rotation);  // P
    const Word relator_prefix = subword(form, 0, match->shift);         // A
    const Word moved = product({prefix, cr.conjugator, rotation_prefix});
    cert.factors.push_back({concat(moved, invert(relator_prefix)), match->relator_index, match->sign});
    cert.weight = checked_add(cert.weight, Presentation::weight(match->relator_index));
    if (trace) {
      trace->push_back({current, cr.core, match->relator_index, match->rotation, match->shift, match->matched,
                        match->sign, match->result});
    }
    prefix = moved;
    current = std::move(match->result);
  }
  return cert;
}

AreaCertificate DehnSolver::area_certificate(const Word& w, ReductionStrategy* strategy,
                                             ReductionTrace* trace) const {
  auto cert = try_certificate(w, strategy, trace);
  if (!cert) throw Error(ErrorCode::NotTrivial, "'" + to_string(w) + "' does not represent the identity");
  return std::move(*cert);
}

bool DehnSolver::is_trivial(const Word& w) const {
  if (w.empty()) return true;
  {
    std::shared_lock lock(memo_mutex_);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  }
  // Only the conjugacy class matters for triviality: reduce the cyclic core.
  Word current = cyclic_reduce(w).core;
  bool trivial = true;
  while (!current.empty()) {
    auto match = step(current);
    if (!match) {
      trivial = false;
      break;
    }
    current = cyclic_reduce(match->result).core;
  }
  std::unique_lock lock(memo_mutex_);
  memo_.insert_or_assign(w, trivial);
  return trivial;
}

bool DehnSolver::are_equal(const Word& u, const Word& v) const { return is_trivial(concat(u, invert(v))); }

std::int64_t DehnSolver::lift_value(const Word& w, const SlowClass& alpha, ReductionStrategy* strategy) const {
  return certificate_lift(area_certificate(w, strategy), alpha);
}

std::size_t DehnSolver::memo_size() const {
  std::shared_lock lock(memo_mutex_);
  return memo_.size();
}

std::optional<GreendlingerMatch> greendlinger_step(const Word& w, const DehnSolver& solver,
                                                   ReductionStrategy* strategy) {
  return solver.step(w, strategy);
}

bool is_trivial(const Word& w, const DehnSolver& solver) { return solver.is_trivial(w); }

bool are_equal(const Word& u, const Word& v, const DehnSolver& solver) { return solver.are_equal(u, v); }

AreaCertificate area_certificate(const Word& w, const DehnSolver& solver) { return solver.area_certificate(w); }

bool verify_certificate(const Word& w, const AreaCertificate& c, const Presentation& p) {
  std::int64_t weight = 0;
  std::vector<Letter> letters;
  for (const auto& f : c.factors) {
    if (f.index >= p.size() || (f.sign != 1 && f.sign != -1)) return false;
    if (!same_alphabet(f.conjugator.alphabet(), p.alphabet()) && !f.conjugator.empty()) return false;
    const Word r = f.sign > 0 ? p.relator(f.index) : invert(p.relator(f.index));
    letters.insert(letters.end(), f.conjugator.letters().begin(), f.conjugator.letters().end());
    letters.insert(letters.end(), r.letters().begin(), r.letters().end());
    const Word ci = invert(f.conjugator);
    letters.insert(letters.end(), ci.letters().begin(), ci.letters().end());
    weight += Presentation::weight(f.index);
  }
  return weight == c.weight && Word(p.alphabet(), letters) == w && c.word == w;
}

std::int64_t certificate_lift(const AreaCertificate& c, const SlowClass& alpha) {
  std::int64_t total = 0;
  for (const auto& f : c.factors) {
    const std::int64_t a = alpha.value(f.index);
    total = f.sign > 0 ? checked_add(total, a) : checked_sub(total, a);
  }
  return total;
}

std::int64_t lift_value(const Word& w, const SlowClass& alpha, const DehnSolver& solver) {
  return solver.lift_value(w, alpha);
}

}  // namespace cext
