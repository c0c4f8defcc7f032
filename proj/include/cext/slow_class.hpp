#pragma once

// Integer sequences (alpha_i) describing classes of the counterexample group
// through their values on the relator surfaces, with the slope constant
// Lambda = sup |alpha_i| / (2i+1).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cext/numeric.hpp"

namespace cext {

enum class TailRule { zero, linear, constant };

class SlowClass {
 public:
  // alpha_i = prefix[i] for i < prefix.size(), then the tail rule
  // (0, coefficient*i, or coefficient). A lambda_int override must be >= ceil(Lambda).
  static SlowClass make(std::vector<std::int64_t> prefix, TailRule tail, std::int64_t coefficient = 0,
                        std::optional<std::int64_t> lambda_int = std::nullopt);

  // "i", "3i", "-i", "0", "5" (constant), "prefix:5,3,2;tail:zero",
  // "prefix:1;tail:linear:2", "prefix:;tail:constant:4", optional ";lambda:3".
  static SlowClass parse(std::string_view formula);

  std::int64_t value(std::size_t i) const;
  const Rational& lambda() const noexcept { return lambda_; }
  std::int64_t lambda_int() const noexcept { return lambda_int_; }
  const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
  TailRule tail() const noexcept { return tail_; }
  std::int64_t coefficient() const noexcept { return coefficient_; }

  SlowClass negated() const;
  // Canonical formula text; parse(to_string()) reproduces the class.
  std::string to_string() const;

 private:
  std::vector<std::int64_t> prefix_;
  TailRule tail_ = TailRule::zero;
  std::int64_t coefficient_ = 0;
  Rational lambda_;
  std::int64_t lambda_int_ = 0;
};

}  // namespace cext
