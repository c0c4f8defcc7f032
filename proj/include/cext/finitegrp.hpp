#pragma once

// Bar-complex cohomology of finite groups with trivial coefficients, by
// exact integer and rational linear algebra.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cext/intmatrix.hpp"
#include "cext/numeric.hpp"

namespace cext {

inline constexpr std::size_t kDefaultMaxGroupOrder = 12;

// Guard for cochain-space sizes; CEXT_MAX_GROUP_ORDER overrides the default.
std::size_t max_group_order();

class FiniteGroup {
 public:
  // Validates closure, associativity, identity and inverses.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  // Symmetries of the n-gon, order 2n; rotation r^k is k, reflection s r^k is n + k.
  static FiniteGroup dihedral(std::size_t n);
  // Dicyclic group of order 4n; n = 2 gives the quaternion group.
  static FiniteGroup dicyclic(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // "trivial", "cyclic:4", "dihedral:3", "quaternion", "dicyclic:3", products joined by 'x'
  // ("cyclic:2xcyclic:2"), or a JSON object {"table": [[...]], "labels": [...]}.
  static FiniteGroup parse(std::string_view spec);

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t element_order(std::size_t a) const;

  // The same group with element i renamed perm[i].
  FiniteGroup relabeled(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::size_t identity_ = 0;
  std::string name_ = "table";
};

// Number of elements of each order.
std::map<std::size_t, std::size_t> order_census(const FiniteGroup& g);

struct CoefficientRing {
  enum class Kind { integers, modular, rationals };
  Kind kind = Kind::integers;
  std::int64_t modulus = 0;

  static CoefficientRing integers() { return {Kind::integers, 0}; }
  static CoefficientRing modular(std::int64_t m);
  static CoefficientRing rationals() { return {Kind::rationals, 0}; }
  // "Z", "Q", "Z/4" (or "Z4").
  static CoefficientRing parse(std::string_view text);
  std::string to_string() const;

  Rational normalize(const Rational& v) const;
  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

// Values indexed row-major by tuples in G^degree.
struct CochainVector {
  std::size_t degree = 0;
  CoefficientRing coefficients;
  std::vector<Rational> values;

  static CochainVector zero(const FiniteGroup& g, std::size_t degree, CoefficientRing coefficients);
  const Rational& at(const FiniteGroup& g, std::initializer_list<std::size_t> tuple) const;
  friend bool operator==(const CochainVector&, const CochainVector&) = default;
};

std::size_t tuple_index(std::size_t order, std::span<const std::size_t> tuple);
std::vector<std::size_t> tuple_of(std::size_t order, std::size_t degree, std::size_t index);

// Matrix of delta: C^d -> C^{d+1}, d in {1, 2, 3}; entries reduced mod m for Z/m.
IntMatrix coboundary_matrix(const FiniteGroup& g, std::size_t degree, CoefficientRing coefficients);

// delta f for a cochain of any degree.
CochainVector apply_coboundary(const FiniteGroup& g, const CochainVector& f);

bool is_cocycle(const FiniteGroup& g, const CochainVector& omega);

struct H2Description {
  CoefficientRing coefficients;
  std::vector<Integer> invariant_factors;  // 0 marks a free factor
  std::vector<CochainVector> representatives;

  // Reduction data: kernel coordinates of a cocycle, then class coordinates.
  IntMatrix kernel_q_inv;
  std::vector<Integer> kernel_scale;     // per coordinate: 0 = outside the kernel, else the divisor e_i
  std::vector<std::size_t> kernel_slots; // coordinates spanning the cocycle lattice
  IntMatrix class_p;                     // row transform of the relation lattice
  std::vector<Integer> class_factors;    // factor per class coordinate (1 = trivial)
};

H2Description h2(const FiniteGroup& g, CoefficientRing coefficients);

// Coordinates of [omega] relative to the invariant factors (reduced mod each factor).
std::vector<Integer> class_coordinates(const CochainVector& omega, const H2Description& d);
// Order of [omega] in H^2; 0 for infinite order.
Integer class_order(const CochainVector& omega, const H2Description& d);
bool is_coboundary(const CochainVector& omega, const H2Description& d);

// omega - omega(1,1): a normalized cocycle in the same class.
CochainVector normalize_cocycle(const FiniteGroup& g, const CochainVector& omega);

// E = Z/m x G with (z1,g1)(z2,g2) = (z1 + z2 + omega(g1,g2), g1 g2); element (z, g) has index g*m + z.
FiniteGroup extension_table(const FiniteGroup& g, std::int64_t m, const CochainVector& omega);

struct Subgroup {
  FiniteGroup group;                  // elements renumbered 0..|H|-1
  std::vector<std::size_t> elements;  // ambient index of each subgroup element, increasing
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::size_t> elements);
CochainVector restrict_cocycle(const FiniteGroup& g, const CochainVector& omega, const Subgroup& h);
// Coset-sum transfer over right cosets with least-index representatives.
CochainVector transfer_cocycle(const FiniteGroup& g, const Subgroup& h, const CochainVector& omega_h);

// f with delta f = omega, f(g2..gn) = average over x of omega(x, g2..gn); rational coefficients.
CochainVector averaging_primitive(const FiniteGroup& g, const CochainVector& omega);

// phi(g1..g_{n-1})(h) = omega(h^-1, g1..g_{n-1}); values indexed by (tuple, h).
struct FunctionCochain {
  std::size_t degree = 0;
  CoefficientRing coefficients;
  std::vector<Rational> values;  // size order^degree * order
};

FunctionCochain linfty_primitive(const FiniteGroup& g, const CochainVector& omega);

struct PrimitiveCheck {
  std::size_t points = 0;
  std::size_t failures = 0;
  bool ok() const noexcept { return failures == 0; }
};

// delta phi = iota(omega) with the left action (g.f)(h) = f(g^-1 h), at every (g1..gn, h).
PrimitiveCheck verify_linfty_primitive(const FiniteGroup& g, const FunctionCochain& phi, const CochainVector& omega);
// delta f = omega at every tuple.
PrimitiveCheck verify_primitive(const FiniteGroup& g, const CochainVector& f, const CochainVector& omega);

CochainVector round_real_cochain(const CochainVector& f);

}  // namespace cext
