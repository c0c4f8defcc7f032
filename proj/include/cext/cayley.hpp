#pragma once

// Exact balls in the Cayley graph of a presented group. Elements are stored
// in breadth-first (shortlex) order; each carries its shortlex-least spelling,
// which gives a normalized section (identity -> empty word).

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cext/dehn.hpp"
#include "cext/words.hpp"

namespace cext {

inline constexpr std::size_t kDefaultMaxRadius = 4;

// Memory guard for ball enumeration; CEXT_MAX_RADIUS overrides the default.
std::size_t max_ball_radius();

struct ElementHandle {
  std::size_t index = 0;
  Word word;  // canonical spelling; its length is the word norm

  std::size_t norm() const noexcept { return word.length(); }
  friend bool operator==(const ElementHandle& a, const ElementHandle& b) { return a.index == b.index; }
};

class Ball {
 public:
  std::size_t radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return representatives_.size(); }
  const Word& representative(std::size_t index) const { return representatives_.at(index); }
  const std::vector<Word>& representatives() const noexcept { return representatives_; }
  std::size_t norm(std::size_t index) const { return representatives_.at(index).length(); }
  // sphere_sizes()[r] = number of elements at distance exactly r.
  const std::vector<std::size_t>& sphere_sizes() const noexcept { return sphere_sizes_; }
  // Elements of norm <= r occupy indices [0, prefix_size(r)).
  std::size_t prefix_size(std::size_t r) const;

  ElementHandle handle(std::size_t index) const { return {index, representatives_.at(index)}; }
  ElementHandle identity() const { return handle(0); }

  const DehnSolver& solver() const noexcept { return *solver_; }
  std::shared_ptr<const DehnSolver> solver_ptr() const noexcept { return solver_; }
  const AlphabetPtr& alphabet() const noexcept { return solver_->presentation().alphabet(); }

  // Element index of the group element spelled by w, if it lies in the ball.
  std::optional<std::size_t> find(const Word& w) const;

 private:
  friend Ball enumerate_ball(std::size_t radius, std::shared_ptr<const DehnSolver> solver);

  std::size_t radius_ = 0;
  std::shared_ptr<const DehnSolver> solver_;
  std::vector<Word> representatives_;
  std::vector<std::size_t> sphere_sizes_;
  std::unordered_map<AbelianVector, std::vector<std::size_t>, AbelianHash> buckets_;
  struct LookupCache {
    std::mutex mutex;
    std::unordered_map<Word, std::optional<std::size_t>, WordHash> map;
  };
  std::unique_ptr<LookupCache> lookup_ = std::make_unique<LookupCache>();
};

// Breadth-first enumeration over the symmetric generating set.
Ball enumerate_ball(std::size_t radius, std::shared_ptr<const DehnSolver> solver);

ElementHandle canonical(const Word& w, const Ball& b);
ElementHandle multiply(const ElementHandle& g, const ElementHandle& h, const Ball& b);
ElementHandle inverse(const ElementHandle& g, const Ball& b);

// All generator letters in shortlex order.
std::vector<Letter> generator_letters(const Alphabet& alphabet);

}  // namespace cext
