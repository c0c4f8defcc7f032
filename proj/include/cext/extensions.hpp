#pragma once

// Central extensions of a presented group by Z or Z/m, realized on a finite
// ball: 2-cocycles evaluated on pairs of ball elements, extension
// multiplication, growth profiles, and the maximizing section attached to a
// slow class.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cext/cayley.hpp"
#include "cext/dehn.hpp"
#include "cext/slow_class.hpp"
#include "cext/words.hpp"

namespace cext {

using BallPtr = std::shared_ptr<const Ball>;

// Integers (modulus 0) or integers mod m.
struct Coefficients {
  std::int64_t modulus = 0;

  std::int64_t reduce(std::int64_t v) const {
    if (modulus == 0) return v;
    const std::int64_t r = v % modulus;
    return r < 0 ? r + modulus : r;
  }
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

class Cocycle2 {
 public:
  using Evaluator = std::function<std::int64_t(std::size_t g, std::size_t h)>;

  Cocycle2(BallPtr ball, Coefficients coefficients, Evaluator evaluator, bool normalized);

  std::int64_t operator()(std::size_t g, std::size_t h) const;
  std::int64_t operator()(const ElementHandle& g, const ElementHandle& h) const { return (*this)(g.index, h.index); }

  const Ball& ball() const noexcept { return *ball_; }
  const BallPtr& ball_ptr() const noexcept { return ball_; }
  const Coefficients& coefficients() const noexcept { return coefficients_; }
  bool normalized() const noexcept { return normalized_; }
  std::size_t memo_size() const;

  // Pointwise sum; the normalized flag survives only if both carry it.
  Cocycle2 plus(const Cocycle2& other) const;
  // Same table with one entry shifted by delta (for negative tests).
  Cocycle2 with_bump(std::size_t g, std::size_t h, std::int64_t delta) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, std::int64_t> values;
  };

  BallPtr ball_;
  Coefficients coefficients_;
  Evaluator evaluator_;
  bool normalized_ = false;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// One word per ball element spelling it; the canonical section uses the
// shortlex representatives.
using Section = std::vector<Word>;
Section canonical_section(const Ball& ball);

// omega(g,h) = lift of sigma(g) sigma(h) sigma(gh)^-1; products must stay in the ball.
Cocycle2 cocycle_from_section(BallPtr ball, Section sigma, const SlowClass& alpha,
                              Coefficients coefficients = {});
Cocycle2 cocycle_from_section(BallPtr ball, const SlowClass& alpha, Coefficients coefficients = {});

struct CocycleViolation {
  std::size_t g = 0, h = 0, k = 0;
  std::int64_t defect = 0;  // omega(h,k) - omega(gh,k) + omega(g,hk) - omega(g,h)
};

struct CocycleCheckReport {
  bool passed = true;
  std::size_t element_radius = 0;
  std::size_t triples_checked = 0;
  std::vector<CocycleViolation> violations;  // capped at max_reported
  std::size_t violation_count = 0;
  bool normalization_checked = false;
  std::size_t normalization_failures = 0;
};

// Checks the identity on all triples from ball(element_radius) whose partial
// products lie in the ball; element_radius defaults to radius / 3.
CocycleCheckReport check_cocycle(const Cocycle2& omega, std::optional<std::size_t> element_radius = std::nullopt,
                                 std::size_t max_reported = 16);

// Every triple with norm(g) + norm(h) + norm(k) <= radius, so all products are
// defined. element_radius in the report is the ball radius.
CocycleCheckReport check_cocycle_admissible(const Cocycle2& omega, std::size_t max_reported = 16);

// delta f(g,h) = f(h) - f(gh) + f(g); f is indexed by ball element.
Cocycle2 coboundary(BallPtr ball, std::vector<std::int64_t> f, Coefficients coefficients = {});

struct ExtElement {
  std::int64_t z = 0;
  std::size_t g = 0;  // ball element index

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

ExtElement ext_multiply(const ExtElement& x, const ExtElement& y, const Cocycle2& omega);
// Two-sided inverse for a normalized cocycle.
ExtElement ext_inverse(const ExtElement& x, const Cocycle2& omega);

struct ProfileRow {
  std::size_t element = 0;
  std::size_t norm = 0;
  std::int64_t max_abs = 0;  // over g with ||g|| + ||h|| <= radius
  std::int64_t bound = 0;    // 2 C ||h||
  bool within_bound = true;
};

struct WeakBoundednessProfile {
  std::vector<std::pair<Letter, std::int64_t>> generator_maxima;  // M_x over g in ball(radius - 1)
  std::int64_t c = 0;
  std::vector<ProfileRow> rows;
  bool all_within_bound = true;
};

WeakBoundednessProfile weak_boundedness_profile(const Cocycle2& omega);

// Evaluation of omega on the bar cycle of a word that is trivial in the group:
// positive letters contribute omega(g_{j-1}, x), inverse letters -omega(g_j, y).
// Every prefix of the word must lie in the ball.
std::int64_t loop_value(const Cocycle2& omega, const Word& loop);

// Value of the class on the i-th relator surface.
std::int64_t pullback_euler(std::size_t i, const SlowClass& alpha, const DehnSolver& solver);

// Reduced words of length <= max_length that are trivial in the group,
// indexed by (length, first k letters) for k <= max_prefix.
class RelationIndex {
 public:
  RelationIndex(std::shared_ptr<const DehnSolver> solver, std::size_t max_length, std::size_t max_prefix);

  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t max_prefix() const noexcept { return max_prefix_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Word& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Word>& elements() const noexcept { return elements_; }

  // Relations of the given length starting with `prefix` (|prefix| <= max_prefix).
  const std::vector<std::uint32_t>& lookup(std::size_t length, std::span<const Letter> prefix) const;

 private:
  std::uint64_t key(std::size_t length, std::span<const Letter> prefix) const;

  std::size_t max_length_ = 0;
  std::size_t max_prefix_ = 0;
  std::vector<Word> elements_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

struct SectionValue {
  std::int64_t lower = 0;  // best lift(w gamma^-1) - Lambda_int |w| found
  Word witness;            // the maximizing spelling w
  std::int64_t upper = 0;  // Lambda_int ||g||
};

// The capped maximizing section on a ball: the fiber coordinate of s(g)
// relative to the lift of the canonical spelling gamma of g.
class MaximizingSection {
 public:
  MaximizingSection(BallPtr ball, SlowClass alpha, std::size_t cap_slack);
  // Uses a caller-built index; it must cover max norm + max cap.
  MaximizingSection(BallPtr ball, SlowClass alpha, std::size_t cap_slack,
                    std::shared_ptr<const RelationIndex> relations);

  const Ball& ball() const noexcept { return *ball_; }
  const SlowClass& alpha() const noexcept { return alpha_; }
  std::size_t cap_slack() const noexcept { return cap_slack_; }
  const RelationIndex& relations() const noexcept { return *relations_; }

  // cap = ||g|| + cap_slack
  const SectionValue& value(std::size_t element) const;
  SectionValue value_with_cap(std::size_t element, std::size_t cap) const;

 private:
  BallPtr ball_;
  SlowClass alpha_;
  std::size_t cap_slack_;
  std::shared_ptr<const RelationIndex> relations_;
  mutable std::vector<std::optional<std::int64_t>> relation_lifts_;
  mutable std::vector<std::optional<SectionValue>> values_;
};

// Single-element form; builds its own relation index.
SectionValue maximizing_section(const ElementHandle& g, const SlowClass& alpha, std::size_t cap, BallPtr ball);

struct DefectPair {
  std::size_t element = 0;
  Letter generator;
  std::int64_t defect = 0;
};

struct DefectReport {
  std::size_t pairs_checked = 0;
  std::int64_t defect_max = 0;
  std::int64_t k = 0;  // max over generators of |s(x)|
  std::int64_t lambda_int = 0;
  std::int64_t theoretical_bound = 0;  // K + Lambda_int
  std::vector<DefectPair> excess;      // pairs above the bound (reported, not asserted)
  bool bracket_ok = true;              // lower <= upper everywhere
};

// Fiber defect of the capped section over pairs (g, x) with g and gx in the ball.
DefectReport section_defect_stats(const MaximizingSection& section);

// Cocycles with coefficients Z^k + Z/m, handled one component at a time.
struct SplitCocycle {
  std::vector<Cocycle2> free_parts;
  std::optional<Cocycle2> torsion_part;
};

bool check_split_cocycle(const SplitCocycle& omega, std::optional<std::size_t> element_radius = std::nullopt);

}  // namespace cext
