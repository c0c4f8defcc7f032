#pragma once

// Dehn algorithm for the weighted presentations: a trivial word always
// contains more than 4/7 of some relator r_i inside a cyclic permutation;
// replacing that subword by the shorter complement strictly reduces length.
// Unwinding the replacements yields an area certificate of weight <= |w|.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "cext/presentations.hpp"
#include "cext/slow_class.hpp"
#include "cext/words.hpp"

namespace cext {

struct GreendlingerMatch {
  std::size_t rotation = 0;      // start of the matched cyclic permutation of w
  std::size_t relator_index = 0;
  int sign = 1;                  // +1 matches r_i, -1 matches r_i^-1
  std::size_t shift = 0;         // r' = rotation of r_i^sign starting at `shift`
  std::size_t matched = 0;       // |w0|
  std::size_t replacement_length = 0;  // |v| = |r_i| - |w0|
  Word result;                   // freely reduced v^-1 u, strictly shorter than w
};

struct CertificateFactor {
  Word conjugator;
  std::size_t index = 0;
  int sign = 1;

  friend bool operator==(const CertificateFactor&, const CertificateFactor&) = default;
};

// w = prod conjugator * r_index^sign * conjugator^-1, with weight sum(2 index + 1).
struct AreaCertificate {
  Word word;
  std::vector<CertificateFactor> factors;
  std::int64_t weight = 0;
};

struct ReductionStep {
  Word before;       // word handed to this step (freely reduced)
  Word core;         // its cyclic reduction, where the match was found
  std::size_t relator_index = 0;
  std::size_t rotation = 0;
  std::size_t shift = 0;
  std::size_t matched = 0;
  int sign = 1;
  Word after;
};

using ReductionTrace = std::vector<ReductionStep>;

// Tie-breaking among simultaneous matches. The deterministic order is:
// smallest replacement, lowest relator index, leftmost rotation. The seeded
// mode picks uniformly among all matches.
class ReductionStrategy {
 public:
  ReductionStrategy() = default;
  explicit ReductionStrategy(std::uint64_t seed) : rng_(seed), randomized_(true) {}

  bool randomized() const noexcept { return randomized_; }
  std::size_t pick(std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
  }

 private:
  std::mt19937_64 rng_;
  bool randomized_ = false;
};

class DehnSolver {
 public:
  explicit DehnSolver(std::shared_ptr<const Presentation> presentation);

  const Presentation& presentation() const noexcept { return *presentation_; }
  std::shared_ptr<const Presentation> presentation_ptr() const noexcept { return presentation_; }

  // w must be cyclically reduced.
  std::optional<GreendlingerMatch> step(const Word& w, ReductionStrategy* strategy = nullptr) const;
  // Every match (maximal per rotation and relator permutation).
  std::vector<GreendlingerMatch> all_matches(const Word& w) const;

  bool is_trivial(const Word& w) const;
  bool are_equal(const Word& u, const Word& v) const;

  // Reduction to the empty word; nullopt if the word is not trivial.
  std::optional<AreaCertificate> try_certificate(const Word& w, ReductionStrategy* strategy = nullptr,
                                                 ReductionTrace* trace = nullptr) const;
  AreaCertificate area_certificate(const Word& w, ReductionStrategy* strategy = nullptr,
                                   ReductionTrace* trace = nullptr) const;

  std::int64_t lift_value(const Word& w, const SlowClass& alpha, ReductionStrategy* strategy = nullptr) const;

  std::size_t memo_size() const;

 private:
  struct WindowIndex {
    std::size_t min_match = 0;  // floor(4|r|/7) + 1
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> windows;  // hash -> (shift << 1 | inverse)
  };

  // Highest relator index whose minimal match fits into `length` letters.
  std::size_t candidate_bound(std::size_t length, bool& any) const;

  std::shared_ptr<const Presentation> presentation_;
  std::vector<WindowIndex> index_;
  std::vector<Word> inverses_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<Word, bool, WordHash> memo_;
};

// Free-function forms over a solver.
std::optional<GreendlingerMatch> greendlinger_step(const Word& w, const DehnSolver& solver,
                                                   ReductionStrategy* strategy = nullptr);
bool is_trivial(const Word& w, const DehnSolver& solver);
bool are_equal(const Word& u, const Word& v, const DehnSolver& solver);
AreaCertificate area_certificate(const Word& w, const DehnSolver& solver);
bool verify_certificate(const Word& w, const AreaCertificate& c, const Presentation& p);
std::int64_t lift_value(const Word& w, const SlowClass& alpha, const DehnSolver& solver);
// Sum of sign * alpha(index) over the factors.
std::int64_t certificate_lift(const AreaCertificate& c, const SlowClass& alpha);

}  // namespace cext
