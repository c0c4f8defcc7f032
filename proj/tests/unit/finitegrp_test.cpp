#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cext/finitegrp.hpp"

namespace cext {
namespace {

CochainVector cochain(std::size_t degree, CoefficientRing ring, std::vector<long long> values) {
  CochainVector f{degree, ring, {}};
  for (long long v : values) f.values.push_back(ring.normalize(Rational(v)));
  return f;
}

std::vector<Integer> factors(std::initializer_list<int> xs) {
  std::vector<Integer> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

CochainVector random_cochain(const FiniteGroup& g, std::size_t degree, CoefficientRing ring, std::mt19937_64& rng) {
  CochainVector f = CochainVector::zero(g, degree, ring);
  for (auto& v : f.values) v = ring.normalize(Rational(static_cast<long long>(rng() % 13) - 6));
  return f;
}

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out = {FiniteGroup::trivial()};
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(FiniteGroup::cyclic(n));
  out.push_back(FiniteGroup::parse("cyclic:2xcyclic:2"));
  out.push_back(FiniteGroup::parse("cyclic:2xcyclic:4"));
  out.push_back(FiniteGroup::parse("cyclic:2xcyclic:2xcyclic:2"));
  out.push_back(FiniteGroup::dihedral(3));
  out.push_back(FiniteGroup::dihedral(4));
  out.push_back(FiniteGroup::parse("quaternion"));
  return out;
}

TEST(Groups, BuiltinsAreValidTables) {
  for (const auto& g : small_groups()) EXPECT_NO_THROW(FiniteGroup::from_table(g.table())) << g.name();
  EXPECT_EQ(FiniteGroup::parse("dihedral:4").order(), 8u);
  EXPECT_EQ(FiniteGroup::parse("dicyclic:3").order(), 12u);
  EXPECT_EQ(order_census(FiniteGroup::parse("quaternion")), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(order_census(FiniteGroup::dihedral(4)), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}}));
}

TEST(Groups, InvalidTablesAreRejected) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), Error);
  EXPECT_THROW(FiniteGroup::parse("cyclic:0"), Error);
  EXPECT_THROW(FiniteGroup::parse("moonshine:3"), Error);
  EXPECT_THROW(h2(FiniteGroup::cyclic(13), CoefficientRing::integers()), Error);
}

TEST(Groups, JsonTable) {
  const auto g = FiniteGroup::parse(R"({"table": [[0,1,2],[1,2,0],[2,0,1]]})");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.element_order(1), 3u);
}

// Unnormalized bar cochains: the alternating sum leaves f(1,..,1) in odd degrees.
TEST(CoboundaryMatrix, TrivialGroup) {
  const auto Z = CoefficientRing::integers();
  for (std::size_t d = 1; d <= 3; ++d) {
    const IntMatrix m = coboundary_matrix(FiniteGroup::trivial(), d, Z);
    ASSERT_EQ(m.rows(), 1u);
    ASSERT_EQ(m.cols(), 1u);
    EXPECT_EQ(m(0, 0), d % 2 == 1 ? 1 : 0) << d;
  }
  EXPECT_TRUE(h2(FiniteGroup::trivial(), Z).representatives.empty());
}

TEST(CoboundaryMatrix, SquaresToZero) {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::dihedral(3)}) {
    for (std::size_t d = 1; d <= 2; ++d) {
      const IntMatrix a = coboundary_matrix(g, d, CoefficientRing::integers());
      const IntMatrix b = coboundary_matrix(g, d + 1, CoefficientRing::integers());
      EXPECT_TRUE((b * a).is_zero()) << g.name() << " " << d;
    }
  }
}

TEST(CoboundaryMatrix, DegreeGuard) {
  try {
    coboundary_matrix(FiniteGroup::cyclic(2), 4, CoefficientRing::integers());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeUnsupported);
  }
}

// Values from tests/oracles/finite.py.
TEST(CoboundaryMatrix, RankOfTheFirstDifferentialOverZ2) {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  EXPECT_EQ(integer_rank(coboundary_matrix(g, 1, CoefficientRing::integers())), 2u);
  // Over Z/2 the image has two elements, so the rank there is 1.
  std::set<std::vector<Rational>> image;
  for (long long a = 0; a < 2; ++a) {
    for (long long b = 0; b < 2; ++b) image.insert(apply_coboundary(g, cochain(1, CoefficientRing::modular(2), {a, b})).values);
  }
  EXPECT_EQ(image.size(), 2u);
}

TEST(H2, Z2WithZ2CoefficientsByBruteForce) {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  const auto ring = CoefficientRing::modular(2);
  const H2Description d = h2(g, ring);
  EXPECT_EQ(d.invariant_factors, factors({2}));
  std::size_t cocycles = 0, coboundaries = 0;
  for (int mask = 0; mask < 16; ++mask) {
    const auto f = cochain(2, ring, {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1});
    if (!is_cocycle(g, f)) continue;
    ++cocycles;
    if (is_coboundary(f, d)) ++coboundaries;
  }
  EXPECT_EQ(cocycles, 4u);
  EXPECT_EQ(coboundaries, 2u);
}

TEST(H2, CyclicGroupsWithIntegerCoefficients) {
  for (int n : {2, 3, 4, 6}) {
    const H2Description d = h2(FiniteGroup::cyclic(n), CoefficientRing::integers());
    EXPECT_EQ(d.invariant_factors, factors({n})) << n;
    ASSERT_EQ(d.representatives.size(), 1u);
    EXPECT_EQ(class_order(d.representatives[0], d), n);
  }
}

TEST(H2, OtherGroups) {
  const auto Z = CoefficientRing::integers();
  const auto Z2 = CoefficientRing::modular(2);
  EXPECT_EQ(h2(FiniteGroup::parse("cyclic:2xcyclic:2"), Z).invariant_factors, factors({2, 2}));
  EXPECT_EQ(h2(FiniteGroup::dihedral(3), Z).invariant_factors, factors({2}));
  EXPECT_EQ(h2(FiniteGroup::parse("quaternion"), Z).invariant_factors, factors({2, 2}));
  EXPECT_TRUE(h2(FiniteGroup::cyclic(3), Z2).invariant_factors.empty());
  EXPECT_EQ(h2(FiniteGroup::cyclic(4), Z2).invariant_factors, factors({2}));
  EXPECT_EQ(h2(FiniteGroup::parse("cyclic:2xcyclic:2"), Z2).invariant_factors, factors({2, 2, 2}));
  EXPECT_TRUE(h2(FiniteGroup::trivial(), Z).invariant_factors.empty());
}

TEST(H2, InvariantUnderRelabeling) {
  const FiniteGroup g = FiniteGroup::dihedral(3);
  const FiniteGroup h = g.relabeled({0, 3, 5, 1, 4, 2});
  EXPECT_EQ(h2(h, CoefficientRing::integers()).invariant_factors, h2(g, CoefficientRing::integers()).invariant_factors);
}

TEST(ClassOrder, GeneratorAndMultiples) {
  const FiniteGroup g = FiniteGroup::cyclic(4);
  const H2Description d = h2(g, CoefficientRing::integers());
  const CochainVector gen = d.representatives.at(0);
  EXPECT_EQ(class_order(gen, d), 4);
  CochainVector twice = gen;
  for (auto& v : twice.values) v *= 2;
  EXPECT_EQ(class_order(twice, d), 2);
  std::mt19937_64 rng(1);
  const CochainVector cob = apply_coboundary(g, random_cochain(g, 1, CoefficientRing::integers(), rng));
  EXPECT_EQ(class_order(cob, d), 1);
  EXPECT_TRUE(is_coboundary(cob, d));
  // The carry cocycle generates as well.
  CochainVector carry = CochainVector::zero(g, 2, CoefficientRing::integers());
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) carry.values[a * 4 + b] = a + b >= 4 ? 1 : 0;
  }
  EXPECT_EQ(class_order(carry, d), 4);
  CochainVector broken = carry;
  broken.values[5] += 1;
  EXPECT_THROW(class_coordinates(broken, d), Error);
}

TEST(Extensions, CensusSeparatesTheTwoClasses) {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  const auto ring = CoefficientRing::modular(2);
  const H2Description d = h2(g, ring);
  const FiniteGroup e = extension_table(g, 2, d.representatives.at(0));
  EXPECT_EQ(order_census(e), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 2}}));
  const FiniteGroup split = extension_table(g, 2, CochainVector::zero(g, 2, ring));
  EXPECT_EQ(order_census(split), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}}));
  const FiniteGroup nonnormalized = extension_table(g, 2, cochain(2, ring, {1, 1, 1, 1}));
  EXPECT_EQ(order_census(nonnormalized), order_census(split));
}

TEST(Extensions, ZeroCocycleGivesTheDirectProduct) {
  const FiniteGroup g = FiniteGroup::dihedral(3);
  const FiniteGroup e = extension_table(g, 3, CochainVector::zero(g, 2, CoefficientRing::modular(3)));
  const FiniteGroup p = FiniteGroup::direct_product(g, FiniteGroup::cyclic(3));
  EXPECT_EQ(e.table(), p.table());
}

TEST(Extensions, NonCocycleIsRejected) {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  CochainVector f = CochainVector::zero(g, 2, CoefficientRing::modular(3));
  f.values[1] = 1;
  try {
    extension_table(g, 3, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACocycle);
  }
}

TEST(Transfer, WholeGroupAndTrivialSubgroup) {
  const FiniteGroup g = FiniteGroup::cyclic(6);
  const H2Description d = h2(g, CoefficientRing::integers());
  const CochainVector omega = d.representatives.at(0);
  const Subgroup whole = make_subgroup(g, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(transfer_cocycle(g, whole, restrict_cocycle(g, omega, whole)), omega);
  const Subgroup trivial = make_subgroup(g, {0});
  const CochainVector r = restrict_cocycle(g, normalize_cocycle(g, omega), trivial);
  for (const auto& v : r.values) EXPECT_EQ(v, 0);
  EXPECT_THROW(make_subgroup(g, {0, 1}), Error);
}

TEST(Transfer, RestrictionThenTransferMultipliesByTheIndex) {
  struct Case {
    FiniteGroup g;
    std::vector<std::size_t> h;
  };
  const std::vector<Case> cases = {{FiniteGroup::cyclic(4), {0, 2}},
                                   {FiniteGroup::cyclic(6), {0, 3}},
                                   {FiniteGroup::dihedral(3), {0, 1, 2}},
                                   {FiniteGroup::dihedral(4), {0, 4}}};
  std::mt19937_64 rng(9);
  for (const auto& c : cases) {
    const auto ring = CoefficientRing::integers();
    const H2Description d = h2(c.g, ring);
    const Subgroup h = make_subgroup(c.g, c.h);
    const long long index = static_cast<long long>(c.g.order() / c.h.size());
    for (CochainVector omega : d.representatives) {
      const CochainVector shift = apply_coboundary(c.g, random_cochain(c.g, 1, ring, rng));
      for (std::size_t i = 0; i < omega.values.size(); ++i) omega.values[i] += shift.values[i];
      const CochainVector tr = transfer_cocycle(c.g, h, restrict_cocycle(c.g, omega, h));
      ASSERT_TRUE(is_cocycle(c.g, tr));
      CochainVector diff = tr;
      for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= Rational(index) * omega.values[i];
      EXPECT_TRUE(is_coboundary(diff, d)) << c.g.name();
    }
  }
}

TEST(Transfer, WorksInHigherDegree) {
  const FiniteGroup g = FiniteGroup::cyclic(4);
  const Subgroup h = make_subgroup(g, {0, 2});
  std::mt19937_64 rng(3);
  const CochainVector f = random_cochain(h.group, 2, CoefficientRing::integers(), rng);
  const CochainVector omega = apply_coboundary(h.group, f);
  EXPECT_TRUE(is_cocycle(g, transfer_cocycle(g, h, omega)));
}

TEST(Averaging, ZeroAndHalfIntegerCocycle) {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  const auto Q = CoefficientRing::rationals();
  const CochainVector zero = CochainVector::zero(g, 2, Q);
  for (const auto& v : averaging_primitive(g, zero).values) EXPECT_EQ(v, 0);
  CochainVector half = cochain(2, Q, {0, 0, 0, 1});
  half.values[3] = Rational(1, 2);
  const CochainVector f = averaging_primitive(g, half);
  EXPECT_TRUE(verify_primitive(g, f, half).ok());
  EXPECT_EQ(f.values, (std::vector<Rational>{0, Rational(1, 4)}));
}

TEST(Averaging, IdentityOnAllSmallGroups) {
  std::mt19937_64 rng(21);
  for (const auto& g : small_groups()) {
    const H2Description d = h2(g, CoefficientRing::integers());
    std::vector<CochainVector> inputs = d.representatives;
    inputs.push_back(apply_coboundary(g, random_cochain(g, 1, CoefficientRing::integers(), rng)));
    if (g.order() <= 4) inputs.push_back(apply_coboundary(g, random_cochain(g, 2, CoefficientRing::integers(), rng)));
    for (CochainVector omega : inputs) {
      omega.coefficients = CoefficientRing::rationals();
      const CochainVector f = averaging_primitive(g, omega);
      const auto check = verify_primitive(g, f, omega);
      EXPECT_TRUE(check.ok()) << g.name();
      EXPECT_EQ(check.points, omega.values.size());
    }
  }
}

TEST(Averaging, RejectsModularAndNonCocycles) {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  EXPECT_THROW(averaging_primitive(g, CochainVector::zero(g, 2, CoefficientRing::modular(3))), Error);
  CochainVector f = CochainVector::zero(g, 2, CoefficientRing::rationals());
  f.values[1] = 1;
  try {
    averaging_primitive(g, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACocycle);
  }
}

TEST(LinftyPrimitive, PointCounts) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const CochainVector omega = h2(z2, CoefficientRing::integers()).representatives.at(0);
  const auto check = verify_linfty_primitive(z2, linfty_primitive(z2, omega), omega);
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.points, 8u);

  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  std::mt19937_64 rng(6);
  CochainVector random = h2(z3, CoefficientRing::integers()).representatives.at(0);
  const CochainVector shift = apply_coboundary(z3, random_cochain(z3, 1, CoefficientRing::integers(), rng));
  for (std::size_t i = 0; i < random.values.size(); ++i) random.values[i] += shift.values[i];
  const auto c3 = verify_linfty_primitive(z3, linfty_primitive(z3, random), random);
  EXPECT_TRUE(c3.ok());
  EXPECT_EQ(c3.points, 27u);

  const CochainVector zero = CochainVector::zero(z3, 2, CoefficientRing::integers());
  for (const auto& v : linfty_primitive(z3, zero).values) EXPECT_EQ(v, 0);
}

TEST(LinftyPrimitive, IdentityOnAllSmallGroups) {
  for (const auto& g : small_groups()) {
    for (const auto ring : {CoefficientRing::integers(), CoefficientRing::modular(2)}) {
      for (const auto& omega : h2(g, ring).representatives) {
        EXPECT_TRUE(verify_linfty_primitive(g, linfty_primitive(g, omega), omega).ok()) << g.name();
      }
    }
  }
}

TEST(LinftyPrimitive, CorruptedPrimitiveFails) {
  const FiniteGroup g = FiniteGroup::cyclic(4);
  const CochainVector omega = h2(g, CoefficientRing::integers()).representatives.at(0);
  FunctionCochain phi = linfty_primitive(g, omega);
  phi.values[5] += 1;
  EXPECT_FALSE(verify_linfty_primitive(g, phi, omega).ok());
}

TEST(Rounding, FloorsValues) {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  const CochainVector ints = cochain(1, CoefficientRing::rationals(), {3, -2});
  EXPECT_EQ(round_real_cochain(ints).values, ints.values);
  CochainVector half = CochainVector::zero(g, 1, CoefficientRing::rationals());
  for (auto& v : half.values) v = Rational(1, 2);
  const CochainVector r = round_real_cochain(half);
  for (const auto& v : r.values) EXPECT_EQ(v, 0);
  for (const auto& v : apply_coboundary(g, r).values) EXPECT_EQ(v, 0);
}

TEST(Coefficients, Parsing) {
  EXPECT_EQ(CoefficientRing::parse("Z"), CoefficientRing::integers());
  EXPECT_EQ(CoefficientRing::parse("Q"), CoefficientRing::rationals());
  EXPECT_EQ(CoefficientRing::parse("Z/4"), CoefficientRing::modular(4));
  EXPECT_EQ(CoefficientRing::parse("Z4"), CoefficientRing::modular(4));
  EXPECT_EQ(CoefficientRing::modular(5).normalize(Rational(-7)), 3);
  EXPECT_THROW(CoefficientRing::parse("R"), Error);
}

}  // namespace
}  // namespace cext
