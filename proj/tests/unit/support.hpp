#pragma once

#include <memory>

#include "cext/cayley.hpp"
#include "cext/dehn.hpp"
#include "cext/presentations.hpp"

namespace cext::testing {

inline std::shared_ptr<const Presentation> family() {
  static const auto p = std::make_shared<const Presentation>(Presentation::paper_family());
  return p;
}

inline std::shared_ptr<const DehnSolver> solver() {
  static const auto s = std::make_shared<const DehnSolver>(family());
  return s;
}

inline std::shared_ptr<const Ball> ball(std::size_t radius) {
  static std::shared_ptr<const Ball> cache[5];
  if (!cache[radius]) cache[radius] = std::make_shared<const Ball>(enumerate_ball(radius, solver()));
  return cache[radius];
}

inline Word w(const char* text) { return family()->parse(text); }

}  // namespace cext::testing
