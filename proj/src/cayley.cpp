#include "cext/cayley.hpp"

#include <cstdlib>
#include <string>

namespace cext {

std::size_t max_ball_radius() {
  if (const char* env = std::getenv("CEXT_MAX_RADIUS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("CEXT_MAX_RADIUS is not a number: ") + env);
    }
  }
  return kDefaultMaxRadius;
}

std::vector<Letter> generator_letters(const Alphabet& alphabet) {
  std::vector<Letter> out;
  for (int key = 0; key < static_cast<int>(2 * alphabet.size()); ++key) out.push_back(Letter::from_order_key(key));
  return out;
}

std::size_t Ball::prefix_size(std::size_t r) const {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= r && k < sphere_sizes_.size(); ++k) total += sphere_sizes_[k];
  return total;
}

std::optional<std::size_t> Ball::find(const Word& w) const {
  {
    std::lock_guard lock(lookup_->mutex);
    if (auto it = lookup_->map.find(w); it != lookup_->map.end()) return it->second;
  }
  std::optional<std::size_t> result;
  // Length parity and abelianization are invariants of the group element.
  if (auto it = buckets_.find(abelianize(w)); it != buckets_.end()) {
    for (std::size_t idx : it->second) {
      const Word& rep = representatives_[idx];
      if ((rep.length() + w.length()) % 2 != 0) continue;
      if (solver_->are_equal(w, rep)) {
        result = idx;
        break;
      }
    }
  }
  std::lock_guard lock(lookup_->mutex);
  lookup_->map.emplace(w, result);
  return result;
}

Ball enumerate_ball(std::size_t radius, std::shared_ptr<const DehnSolver> solver) {
  const std::size_t guard = max_ball_radius();
  if (radius > guard) {
    throw Error(ErrorCode::InvalidArgument, "radius " + std::to_string(radius) + " exceeds the memory guard " +
                                                std::to_string(guard) + " (set CEXT_MAX_RADIUS to override)");
  }
  Ball ball;
  ball.radius_ = radius;
  ball.solver_ = std::move(solver);
  const AlphabetPtr alphabet = ball.solver_->presentation().alphabet();
  const auto letters = generator_letters(*alphabet);

  const Word identity(alphabet);
  ball.representatives_.push_back(identity);
  ball.sphere_sizes_.push_back(1);
  ball.buckets_[abelianize(identity)].push_back(0);
  ball.lookup_->map.emplace(identity, 0);

  std::size_t level_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    const std::size_t level_end = ball.representatives_.size();
    std::size_t added = 0;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const Word base = ball.representatives_[i];
      for (Letter x : letters) {
        if (!base.empty() && base[base.length() - 1] == x.inverse()) continue;
        std::vector<Letter> spelled(base.letters().begin(), base.letters().end());
        spelled.push_back(x);
        Word candidate(alphabet, spelled);
        auto& bucket = ball.buckets_[abelianize(candidate)];
        std::optional<std::size_t> equal;
        for (std::size_t idx : bucket) {
          const Word& rep = ball.representatives_[idx];
          if ((rep.length() + candidate.length()) % 2 != 0) continue;
          if (ball.solver_->are_equal(candidate, rep)) {
            equal = idx;
            break;
          }
        }
        if (!equal) {
          equal = ball.representatives_.size();
          bucket.push_back(*equal);
          ball.representatives_.push_back(candidate);
          ++added;
        }
        ball.lookup_->map.emplace(std::move(candidate), equal);
      }
    }
    ball.sphere_sizes_.push_back(added);
    level_begin = level_end;
  }
  return ball;
}

ElementHandle canonical(const Word& w, const Ball& b) {
  if (!same_alphabet(w.alphabet(), b.alphabet()) && !w.empty()) {
    throw Error(ErrorCode::AlphabetMismatch, "word and ball use different alphabets");
  }
  const Word reduced = w.alphabet() ? w : Word(b.alphabet());
  auto idx = b.find(reduced);
  if (!idx) throw Error(ErrorCode::OutOfBall, "'" + to_string(w) + "' lies outside the ball of radius " +
                                                  std::to_string(b.radius()));
  return b.handle(*idx);
}

ElementHandle multiply(const ElementHandle& g, const ElementHandle& h, const Ball& b) {
  return canonical(concat(g.word, h.word), b);
}

ElementHandle inverse(const ElementHandle& g, const Ball& b) { return canonical(invert(g.word), b); }

}  // namespace cext
