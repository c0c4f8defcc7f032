#include "cext/extensions.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "cext/numeric.hpp"

namespace cext {

namespace {

std::size_t require_in_ball(const Ball& ball, const Word& w) {
  if (auto idx = ball.find(w)) return *idx;
  throw Error(ErrorCode::OutOfBall, "element " + to_string(w) + " is outside the ball of radius " +
                                        std::to_string(ball.radius()));
}

std::size_t letter_element(const Ball& ball, Letter x) {
  const Letter one[] = {x};
  return require_in_ball(ball, Word(ball.alphabet(), one));
}

Word append_letter(const Word& w, Letter x) {
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  letters.push_back(x);
  return Word(w.alphabet(), letters);
}

std::int64_t abs_checked(std::int64_t v) {
  if (v == INT64_MIN) throw Error(ErrorCode::Overflow, "cocycle value overflow");
  return v < 0 ? -v : v;
}

}  // namespace

Cocycle2::Cocycle2(BallPtr ball, Coefficients coefficients, Evaluator evaluator, bool normalized)
    : ball_(std::move(ball)), coefficients_(coefficients), evaluator_(std::move(evaluator)), normalized_(normalized) {
  if (!ball_) throw Error(ErrorCode::InvalidArgument, "cocycle needs a ball");
  if (coefficients_.modulus < 0) throw Error(ErrorCode::InvalidArgument, "negative modulus");
}

std::int64_t Cocycle2::operator()(std::size_t g, std::size_t h) const {
  if (g >= ball_->size() || h >= ball_->size()) throw Error(ErrorCode::OutOfBall, "element index outside the ball");
  const std::uint64_t key = (static_cast<std::uint64_t>(g) << 32) | h;
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->values.find(key); it != memo_->values.end()) return it->second;
  }
  const std::int64_t value = coefficients_.reduce(evaluator_(g, h));
  // Idempotent insertion: concurrent evaluators compute the same value.
  std::lock_guard lock(memo_->mutex);
  memo_->values.emplace(key, value);
  return value;
}

std::size_t Cocycle2::memo_size() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->values.size();
}

Cocycle2 Cocycle2::plus(const Cocycle2& other) const {
  if (ball_ != other.ball_ || !(coefficients_ == other.coefficients_)) {
    throw Error(ErrorCode::InvalidArgument, "cocycles live on different balls or coefficient groups");
  }
  Cocycle2 a = *this, b = other;
  return Cocycle2(ball_, coefficients_,
                  [a, b](std::size_t g, std::size_t h) { return checked_add(a(g, h), b(g, h)); },
                  normalized_ && other.normalized_);
}

Cocycle2 Cocycle2::with_bump(std::size_t g, std::size_t h, std::int64_t delta) const {
  Cocycle2 base = *this;
  const bool still_normalized = normalized_ && g != 0 && h != 0;
  return Cocycle2(ball_, coefficients_,
                  [base, g, h, delta](std::size_t x, std::size_t y) {
                    const std::int64_t v = base(x, y);
                    return (x == g && y == h) ? checked_add(v, delta) : v;
                  },
                  still_normalized);
}

Section canonical_section(const Ball& ball) { return ball.representatives(); }

Cocycle2 cocycle_from_section(BallPtr ball, Section sigma, const SlowClass& alpha, Coefficients coefficients) {
  if (sigma.size() != ball->size()) {
    throw Error(ErrorCode::InvalidArgument, "section size does not match the ball");
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!ball->solver().are_equal(sigma[i], ball->representative(i))) {
      throw Error(ErrorCode::InvalidArgument, "section word " + to_string(sigma[i]) + " does not spell element " +
                                                  to_string(ball->representative(i)));
    }
  }
  const bool normalized = sigma[0].empty();
  auto words = std::make_shared<const Section>(std::move(sigma));
  const Ball* raw = ball.get();
  return Cocycle2(
      ball, coefficients,
      [raw, words, alpha](std::size_t g, std::size_t h) {
        const Word& rep_g = raw->representative(g);
        const Word& rep_h = raw->representative(h);
        const std::size_t gh = require_in_ball(*raw, concat(rep_g, rep_h));
        const Word loop = product({(*words)[g], (*words)[h], invert((*words)[gh])});
        return raw->solver().lift_value(loop, alpha);
      },
      normalized);
}

Cocycle2 cocycle_from_section(BallPtr ball, const SlowClass& alpha, Coefficients coefficients) {
  Section sigma = canonical_section(*ball);
  return cocycle_from_section(std::move(ball), std::move(sigma), alpha, coefficients);
}

CocycleCheckReport check_cocycle(const Cocycle2& omega, std::optional<std::size_t> element_radius,
                                 std::size_t max_reported) {
  const Ball& ball = omega.ball();
  CocycleCheckReport report;
  report.element_radius = element_radius.value_or(ball.radius() / 3);
  const std::size_t n = ball.prefix_size(report.element_radius);
  const Coefficients& coeff = omega.coefficients();

  std::vector<std::vector<std::optional<std::size_t>>> table(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      table[g][h] = ball.find(concat(ball.representative(g), ball.representative(h)));
    }
  }

  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const auto gh = table[g][h];
      if (!gh) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const auto hk = table[h][k];
        if (!hk) continue;
        if (!ball.find(concat(ball.representative(*gh), ball.representative(k)))) continue;
        ++report.triples_checked;
        const std::int64_t defect = coeff.reduce(
            checked_add(checked_sub(omega(h, k), omega(*gh, k)), checked_sub(omega(g, *hk), omega(g, h))));
        if (defect != 0) {
          ++report.violation_count;
          if (report.violations.size() < max_reported) report.violations.push_back({g, h, k, defect});
        }
      }
    }
  }

  if (omega.normalized()) {
    report.normalization_checked = true;
    for (std::size_t g = 0; g < ball.size(); ++g) {
      if (omega(0, g) != 0) ++report.normalization_failures;
      if (g != 0 && omega(g, 0) != 0) ++report.normalization_failures;
    }
  }
  report.passed = report.violation_count == 0 && report.normalization_failures == 0;
  return report;
}

CocycleCheckReport check_cocycle_admissible(const Cocycle2& omega, std::size_t max_reported) {
  const Ball& ball = omega.ball();
  const std::size_t radius = ball.radius();
  CocycleCheckReport report;
  report.element_radius = radius;
  const Coefficients& coeff = omega.coefficients();

  // Right multiplication by one generator, for elements that stay inside.
  const std::vector<Letter> letters = generator_letters(*ball.alphabet());
  const std::size_t inner = radius == 0 ? 0 : ball.prefix_size(radius - 1);
  const std::size_t stride = letters.size();
  std::vector<std::size_t> step(inner * stride, 0);
  for (std::size_t g = 0; g < inner; ++g) {
    for (Letter x : letters) {
      const Letter one[] = {x};
      step[g * stride + x.order_key()] = *ball.find(concat(ball.representative(g), Word(ball.alphabet(), one)));
    }
  }
  // g * h by walking the letters of h; valid when norm(g) + norm(h) <= radius.
  auto mul = [&](std::size_t g, std::size_t h) {
    for (Letter x : ball.representative(h).letters()) g = step[g * stride + x.order_key()];
    return g;
  };

  for (std::size_t g = 0; g < ball.size(); ++g) {
    const std::size_t ng = ball.norm(g);
    for (std::size_t h = 0; h < ball.prefix_size(radius - ng); ++h) {
      const std::size_t gh = mul(g, h);
      const std::size_t rest = radius - ng - ball.norm(h);
      for (std::size_t k = 0; k < ball.prefix_size(rest); ++k) {
        const std::size_t hk = mul(h, k);
        ++report.triples_checked;
        const std::int64_t defect =
            coeff.reduce(checked_add(checked_sub(omega(h, k), omega(gh, k)), checked_sub(omega(g, hk), omega(g, h))));
        if (defect != 0) {
          ++report.violation_count;
          if (report.violations.size() < max_reported) report.violations.push_back({g, h, k, defect});
        }
      }
    }
  }

  if (omega.normalized()) {
    report.normalization_checked = true;
    for (std::size_t g = 0; g < ball.size(); ++g) {
      if (omega(0, g) != 0) ++report.normalization_failures;
      if (g != 0 && omega(g, 0) != 0) ++report.normalization_failures;
    }
  }
  report.passed = report.violation_count == 0 && report.normalization_failures == 0;
  return report;
}

Cocycle2 coboundary(BallPtr ball, std::vector<std::int64_t> f, Coefficients coefficients) {
  if (f.size() != ball->size()) throw Error(ErrorCode::OutOfBall, "cochain is not defined on the whole ball");
  const bool normalized = f[0] == 0 || coefficients.reduce(f[0]) == 0;
  auto values = std::make_shared<const std::vector<std::int64_t>>(std::move(f));
  const Ball* raw = ball.get();
  return Cocycle2(
      ball, coefficients,
      [raw, values](std::size_t g, std::size_t h) {
        const std::size_t gh = require_in_ball(*raw, concat(raw->representative(g), raw->representative(h)));
        return checked_add(checked_sub((*values)[h], (*values)[gh]), (*values)[g]);
      },
      normalized);
}

ExtElement ext_multiply(const ExtElement& x, const ExtElement& y, const Cocycle2& omega) {
  const Ball& ball = omega.ball();
  const std::size_t gh = require_in_ball(ball, concat(ball.representative(x.g), ball.representative(y.g)));
  const std::int64_t z = checked_add(checked_add(x.z, y.z), omega(x.g, y.g));
  return {omega.coefficients().reduce(z), gh};
}

ExtElement ext_inverse(const ExtElement& x, const Cocycle2& omega) {
  const Ball& ball = omega.ball();
  const std::size_t inv = require_in_ball(ball, invert(ball.representative(x.g)));
  const std::int64_t z = checked_sub(checked_sub(0, x.z), omega(x.g, inv));
  return {omega.coefficients().reduce(z), inv};
}

WeakBoundednessProfile weak_boundedness_profile(const Cocycle2& omega) {
  const Ball& ball = omega.ball();
  const std::size_t radius = ball.radius();
  WeakBoundednessProfile profile;
  const std::size_t inner = radius == 0 ? 0 : ball.prefix_size(radius - 1);
  for (Letter x : generator_letters(*ball.alphabet())) {
    std::int64_t best = 0;
    if (radius > 0) {
      const std::size_t xi = letter_element(ball, x);
      for (std::size_t g = 0; g < inner; ++g) best = std::max(best, abs_checked(omega(g, xi)));
    }
    profile.generator_maxima.emplace_back(x, best);
    profile.c = std::max(profile.c, best);
  }
  for (std::size_t h = 0; h < ball.size(); ++h) {
    ProfileRow row;
    row.element = h;
    row.norm = ball.norm(h);
    const std::size_t span = ball.prefix_size(radius - row.norm);
    for (std::size_t g = 0; g < span; ++g) row.max_abs = std::max(row.max_abs, abs_checked(omega(g, h)));
    row.bound = checked_mul(checked_mul(2, profile.c), static_cast<std::int64_t>(row.norm));
    row.within_bound = row.max_abs <= row.bound;
    profile.all_within_bound = profile.all_within_bound && row.within_bound;
    profile.rows.push_back(row);
  }
  return profile;
}

std::int64_t loop_value(const Cocycle2& omega, const Word& loop) {
  const Ball& ball = omega.ball();
  std::size_t current = 0;
  std::int64_t total = 0;
  for (Letter x : loop.letters()) {
    const std::size_t next = require_in_ball(ball, append_letter(ball.representative(current), x));
    if (x.sign() > 0) {
      total = checked_add(total, omega(current, letter_element(ball, x)));
    } else {
      total = checked_sub(total, omega(next, letter_element(ball, x.inverse())));
    }
    current = next;
  }
  if (current != 0) throw Error(ErrorCode::NotTrivial, "loop " + to_string(loop) + " does not close up");
  return omega.coefficients().reduce(total);
}

std::int64_t pullback_euler(std::size_t i, const SlowClass& alpha, const DehnSolver& solver) {
  return solver.lift_value(solver.presentation().relator(i), alpha);
}

RelationIndex::RelationIndex(std::shared_ptr<const DehnSolver> solver, std::size_t max_length,
                             std::size_t max_prefix)
    : max_length_(max_length), max_prefix_(std::min<std::size_t>(max_prefix, 8)) {
  const Presentation& p = solver->presentation();
  const AlphabetPtr& alphabet = p.alphabet();
  if (alphabet->size() > 32) throw Error(ErrorCode::InvalidArgument, "relation index supports at most 32 generators");
  if (max_length > 255) throw Error(ErrorCode::InvalidArgument, "relation index length limited to 255");

  // A reduced relation of length <= L arises from a shorter one by multiplying
  // with a relator permutation sharing more than 4/7 of its letters with the
  // result, followed by letter conjugations; only relators whose minimal
  // match fits into L letters can contribute.
  std::vector<std::vector<Letter>> perms;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Word& r = p.relator(j);
    if (4 * r.length() / 7 + 1 > max_length) continue;
    for (const Word& base : {r, invert(r)}) {
      for (const Word& rot : cyclic_permutations(base)) perms.emplace_back(rot.letters().begin(), rot.letters().end());
    }
  }
  const auto letters = generator_letters(*alphabet);

  std::unordered_set<Word, WordHash> seen;
  std::deque<std::size_t> queue;
  auto admit = [&](std::vector<Letter>&& spelled) {
    Word w(alphabet, spelled);
    if (w.length() > max_length_) return;
    if (seen.insert(w).second) {
      elements_.push_back(std::move(w));
      queue.push_back(elements_.size() - 1);
    }
  };
  admit({});
  std::vector<Letter> buffer;
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const auto n = elements_[idx].letters();
    for (Letter x : letters) {
      buffer.assign(1, x);
      buffer.insert(buffer.end(), n.begin(), n.end());
      buffer.push_back(x.inverse());
      admit(std::move(buffer));
    }
    for (const auto& r : perms) {
      std::size_t k = 0;
      while (k < r.size() && k < n.size() && r[r.size() - 1 - k] == n[k].inverse()) ++k;
      if (r.size() + n.size() - 2 * k > max_length_) continue;
      buffer.assign(r.begin(), r.end() - static_cast<std::ptrdiff_t>(k));
      buffer.insert(buffer.end(), n.begin() + static_cast<std::ptrdiff_t>(k), n.end());
      admit(std::move(buffer));
    }
  }

  std::sort(elements_.begin(), elements_.end(), [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Word& w = elements_[i];
    const auto l = w.letters();
    for (std::size_t k = 0; k <= std::min(max_prefix_, l.size()); ++k) {
      buckets_[key(l.size(), l.subspan(0, k))].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

std::uint64_t RelationIndex::key(std::size_t length, std::span<const Letter> prefix) const {
  std::uint64_t k = (static_cast<std::uint64_t>(length) << 56) | (static_cast<std::uint64_t>(prefix.size()) << 52);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    k |= static_cast<std::uint64_t>(prefix[i].order_key()) << (6 * i);
  }
  return k;
}

const std::vector<std::uint32_t>& RelationIndex::lookup(std::size_t length, std::span<const Letter> prefix) const {
  static const std::vector<std::uint32_t> empty;
  if (prefix.size() > max_prefix_) throw Error(ErrorCode::InvalidArgument, "prefix longer than the index supports");
  auto it = buckets_.find(key(length, prefix));
  return it == buckets_.end() ? empty : it->second;
}

MaximizingSection::MaximizingSection(BallPtr ball, SlowClass alpha, std::size_t cap_slack)
    : MaximizingSection(ball, std::move(alpha), cap_slack,
                        std::make_shared<const RelationIndex>(ball->solver_ptr(), 2 * ball->radius() + cap_slack,
                                                              ball->radius())) {}

MaximizingSection::MaximizingSection(BallPtr ball, SlowClass alpha, std::size_t cap_slack,
                                     std::shared_ptr<const RelationIndex> relations)
    : ball_(std::move(ball)),
      alpha_(std::move(alpha)),
      cap_slack_(cap_slack),
      relations_(std::move(relations)),
      relation_lifts_(relations_->size()),
      values_(ball_->size()) {}

const SectionValue& MaximizingSection::value(std::size_t element) const {
  auto& slot = values_.at(element);
  if (!slot) slot = value_with_cap(element, ball_->norm(element) + cap_slack_);
  return *slot;
}

SectionValue MaximizingSection::value_with_cap(std::size_t element, std::size_t cap) const {
  const Word& gamma = ball_->representative(element);
  const std::size_t norm = gamma.length();
  if (cap < norm) {
    throw Error(ErrorCode::CapTooSmall,
                "cap " + std::to_string(cap) + " is below the norm " + std::to_string(norm) + " of the element");
  }
  if (norm + cap > relations_->max_length()) {
    throw Error(ErrorCode::InvalidArgument, "relation index of length " + std::to_string(relations_->max_length()) +
                                                " cannot serve norm + cap = " + std::to_string(norm + cap));
  }
  const std::int64_t lambda = alpha_.lambda_int();
  const Word gamma_inv = invert(gamma);
  const auto gamma_inv_letters = gamma_inv.letters();

  SectionValue best;
  best.witness = gamma;
  best.lower = checked_mul(-lambda, static_cast<std::int64_t>(norm));
  best.upper = checked_mul(lambda, static_cast<std::int64_t>(norm));

  // w = gamma n with n a relation; |w| <= cap forces n to start with the
  // inverse of the last k0 letters of gamma.
  for (std::size_t length = 0; length <= norm + cap; ++length) {
    const std::ptrdiff_t excess = static_cast<std::ptrdiff_t>(norm + length) - static_cast<std::ptrdiff_t>(cap);
    const std::size_t k0 = excess <= 0 ? 0 : static_cast<std::size_t>((excess + 1) / 2);
    if (k0 > std::min(norm, length)) continue;
    const std::size_t kq = std::min(k0, relations_->max_prefix());
    for (std::uint32_t idx : relations_->lookup(length, gamma_inv_letters.subspan(0, kq))) {
      const Word& n = relations_->element(idx);
      Word w = concat(gamma, n);
      if (w.length() > cap) continue;
      auto& lift = relation_lifts_[idx];
      if (!lift) lift = ball_->solver().lift_value(n, alpha_);
      const std::int64_t v = checked_sub(*lift, checked_mul(lambda, static_cast<std::int64_t>(w.length())));
      const bool better = v > best.lower ||
                          (v == best.lower && (w.length() < best.witness.length() ||
                                               (w.length() == best.witness.length() && shortlex_less(w, best.witness))));
      if (better) {
        best.lower = v;
        best.witness = std::move(w);
      }
    }
  }
  return best;
}

SectionValue maximizing_section(const ElementHandle& g, const SlowClass& alpha, std::size_t cap, BallPtr ball) {
  const std::size_t norm = g.norm();
  if (cap < norm) {
    throw Error(ErrorCode::CapTooSmall,
                "cap " + std::to_string(cap) + " is below the norm " + std::to_string(norm) + " of the element");
  }
  auto relations = std::make_shared<const RelationIndex>(ball->solver_ptr(), norm + cap, norm);
  MaximizingSection section(ball, alpha, cap - norm, relations);
  return section.value(g.index);
}

DefectReport section_defect_stats(const MaximizingSection& section) {
  const Ball& ball = section.ball();
  DefectReport report;
  report.lambda_int = section.alpha().lambda_int();
  const auto letters = generator_letters(*ball.alphabet());
  std::vector<std::size_t> letter_elements;
  for (Letter x : letters) {
    letter_elements.push_back(letter_element(ball, x));
    report.k = std::max(report.k, abs_checked(section.value(letter_elements.back()).lower));
  }
  report.theoretical_bound = checked_add(report.k, report.lambda_int);

  for (std::size_t g = 0; g < ball.size(); ++g) {
    const SectionValue& sg = section.value(g);
    if (sg.lower > sg.upper) report.bracket_ok = false;
    for (std::size_t j = 0; j < letters.size(); ++j) {
      const Word step = append_letter(ball.representative(g), letters[j]);
      const auto gx = ball.find(step);
      if (!gx) continue;
      ++report.pairs_checked;
      const std::int64_t omega =
          ball.solver().lift_value(concat(step, invert(ball.representative(*gx))), section.alpha());
      const std::int64_t defect = checked_sub(
          checked_add(checked_add(omega, sg.lower), section.value(letter_elements[j]).lower), section.value(*gx).lower);
      const std::int64_t magnitude = abs_checked(defect);
      report.defect_max = std::max(report.defect_max, magnitude);
      if (magnitude > report.theoretical_bound) report.excess.push_back({g, letters[j], defect});
    }
  }
  return report;
}

bool check_split_cocycle(const SplitCocycle& omega, std::optional<std::size_t> element_radius) {
  for (const Cocycle2& part : omega.free_parts) {
    if (part.coefficients().modulus != 0) throw Error(ErrorCode::InvalidArgument, "free component must be integral");
    if (!check_cocycle(part, element_radius).passed) return false;
  }
  if (omega.torsion_part) {
    if (omega.torsion_part->coefficients().modulus == 0) {
      throw Error(ErrorCode::InvalidArgument, "torsion component needs a modulus");
    }
    if (!check_cocycle(*omega.torsion_part, element_radius).passed) return false;
  }
  return true;
}

}  // namespace cext
