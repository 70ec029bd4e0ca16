#include <gtest/gtest.h>

#include "esc/core.hpp"
#include "oracle.hpp"

using esc::EscSolution;
using esc::Failure;
using esc::Nat;
using esc::SolutionKind;

namespace {

std::vector<Nat> odd_primes_below(std::uint64_t limit) {
  std::vector<Nat> out;
  for (std::uint64_t n = 3; n < limit; n += 2) {
    if (oracle::is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST(VerifyIdentity, Examples) {
  EXPECT_TRUE(esc::verify_identity(3, 1, 4, 12));
  EXPECT_FALSE(esc::verify_identity(3, 1, 4, 13));
  EXPECT_TRUE(esc::verify_identity(2, 1, 2, 2));
  EXPECT_THROW(esc::verify_identity(3, 0, 4, 12), std::invalid_argument);
}

TEST(TrivialSolutions, Examples) {
  EXPECT_EQ(esc::trivial_solutions(2), (std::vector<EscSolution>{{2, 1, 2, 2}}));
  EXPECT_EQ(esc::trivial_solutions(7), (std::vector<EscSolution>{{7, 4, 4, 14}, {7, 2, 28, 28}}));
  EXPECT_TRUE(esc::trivial_solutions(5).empty());
  EXPECT_THROW(esc::trivial_solutions(9), std::invalid_argument);
}

TEST(TrivialSolutions, HoldForPrimesThreeModFour) {
  for (const Nat& p : odd_primes_below(10'000)) {
    const auto sols = esc::trivial_solutions(p);
    if (p % 4 != 3) {
      EXPECT_TRUE(sols.empty()) << p;
      continue;
    }
    ASSERT_EQ(sols.size(), 2u) << p;
    for (const auto& s : sols) {
      EXPECT_TRUE(esc::verify_identity(s)) << p;
      EXPECT_EQ(esc::classify(s), SolutionKind::Trivial) << p;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(esc::classify({5, 2, 4, 20}), SolutionKind::TypeI);
  EXPECT_EQ(esc::classify({5, 2, 5, 10}), SolutionKind::TypeII);
  EXPECT_EQ(esc::classify({7, 4, 4, 14}), SolutionKind::Trivial);
  EXPECT_EQ(esc::classify({5, 2, 4, 21}), SolutionKind::Invalid);
  EXPECT_EQ(esc::classify({5, 4, 2, 20}), SolutionKind::Invalid);  // ordering
  EXPECT_EQ(esc::classify({5, 0, 4, 20}), SolutionKind::Invalid);
}

TEST(RecoverZ, Examples) {
  EXPECT_EQ(*esc::recover_z(5, 2, 4), Nat(20));
  EXPECT_EQ(*esc::recover_z(3, 1, 4), Nat(12));
  const auto none = esc::recover_z(5, 2, 3);
  ASSERT_FALSE(none);
  EXPECT_EQ(none.failure(), Failure::IdentityFails);
  EXPECT_THROW(esc::recover_z(5, 4, 2), std::invalid_argument);
}

TEST(RecoverZ, NoIntegerCompletesFiveTwoThree) {
  // 4/5 - 1/2 - 1/3 = -1/30 < 0, so no positive z exists at all.
  for (std::uint64_t z = 1; z < 10'000; ++z) EXPECT_FALSE(esc::verify_identity(5, 2, 3, z));
}

TEST(RecoverY, Examples) {
  EXPECT_EQ(*esc::recover_y(5, 2, 10, 5), Nat(5));
  EXPECT_EQ(*esc::recover_y(7, 3, 14, 1), Nat(6));
  const auto wrong = esc::recover_y(5, 2, 10, 1);
  ASSERT_FALSE(wrong);
  EXPECT_EQ(wrong.failure(), Failure::IdentityFails);
  EXPECT_THROW(esc::recover_y(5, 2, 10, 3), std::invalid_argument);
}

TEST(RecoverX, Examples) {
  EXPECT_EQ(*esc::recover_x(3, 4, 12), Nat(1));
  EXPECT_EQ(*esc::recover_x(13, 10, 130), Nat(5));
  const auto none = esc::recover_x(3, 4, 11);
  ASSERT_FALSE(none);
  EXPECT_EQ(none.failure(), Failure::NotIntegral);
  for (std::uint64_t x = 1; x < 1000; ++x) EXPECT_FALSE(esc::verify_identity(3, x, 4, 11));
}

TEST(NecessaryConditions, Eq5Examples) {
  const auto a = esc::check_eq5(7, 3, 6);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.numerator, esc::Int(1));
  EXPECT_EQ(a.denominator, Nat(1));
  const auto b = esc::check_eq5(5, 2, 4);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.numerator, esc::Int(1));
  const auto c = esc::check_eq5(5, 2, 3);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.numerator, esc::Int(-1));
}

TEST(NecessaryConditions, Eq6Examples) {
  EXPECT_TRUE(esc::check_eq6(7, 3, 14, 1).holds);
  EXPECT_EQ(esc::check_eq6(7, 3, 14, 1).numerator, esc::Int(49));
  EXPECT_TRUE(esc::check_eq6(5, 2, 10, 5).holds);
  EXPECT_FALSE(esc::check_eq6(7, 3, 13, 1).holds);
}

TEST(NecessaryConditions, Eq7Examples) {
  EXPECT_TRUE(esc::check_eq7(7, 6, 14).holds);
  EXPECT_TRUE(esc::check_eq7(3, 4, 12).holds);
  EXPECT_FALSE(esc::check_eq7(7, 6, 15).holds);
}

TEST(NecessaryConditions, ValueIsTheReducedForm) {
  // p/(v-u) is fractional on its own, but (v^2-u^2)/(v-u) = u+v and g divides
  // both uv and u+v, so the whole expression is (4uv - p(u+v))/g.
  const auto r = esc::check_eq5(7, 2, 5);
  EXPECT_EQ(r.numerator, esc::Int(-9));
  EXPECT_EQ(r.denominator, Nat(1));
  // Value equals (4uv - p(u + v)) / g for every pair; spot-check a grid.
  for (std::uint64_t u = 1; u < 40; ++u) {
    for (std::uint64_t v = u + 1; v < 60; ++v) {
      const auto c = esc::check_eq7(11, u, v);
      const std::int64_t g = static_cast<std::int64_t>(std::gcd(u * v, u + v));
      const std::int64_t value_times_g = static_cast<std::int64_t>(4 * u * v) - 11 * static_cast<std::int64_t>(u + v);
      EXPECT_EQ(c.denominator, Nat(1));
      EXPECT_EQ(c.numerator, esc::Int(value_times_g / g));
    }
  }
}

TEST(Enumerate, SmallPrimes) {
  EXPECT_EQ(esc::enumerate_nontrivial(3), (std::vector<EscSolution>{{3, 1, 4, 12}}));
  EXPECT_EQ(esc::enumerate_nontrivial(5), (std::vector<EscSolution>{{5, 2, 4, 20}, {5, 2, 5, 10}}));
  EXPECT_EQ(esc::enumerate_nontrivial(7), (std::vector<EscSolution>{
                                              {7, 2, 15, 210}, {7, 2, 16, 112}, {7, 2, 18, 63}, {7, 2, 21, 42}, {7, 3, 6, 14}}));
  EXPECT_THROW(esc::enumerate_nontrivial(2), std::invalid_argument);
  EXPECT_THROW(esc::enumerate_nontrivial(9), std::invalid_argument);
}

TEST(Enumerate, MatchesBruteForce) {
  for (const Nat& p : odd_primes_below(60)) {
    std::vector<oracle::Triple> got;
    for (const auto& s : esc::enumerate_nontrivial(p)) {
      got.push_back({s.x.to<std::uint64_t>(), s.y.to<std::uint64_t>(), s.z.to<std::uint64_t>()});
    }
    EXPECT_EQ(got, oracle::brute_solutions(p.to<std::uint64_t>())) << p;
  }
}

TEST(Enumerate, StructuralClaims) {
  for (const Nat& p : odd_primes_below(400)) {
    for (const auto& s : esc::enumerate_nontrivial(p)) {
      ASSERT_TRUE(esc::verify_identity(s));
      EXPECT_TRUE((s.z % p).is_zero()) << p;
      EXPECT_FALSE((s.x % p).is_zero()) << p;
      EXPECT_FALSE(s.x == s.y && s.y == s.z);
      const Nat gcd_py = esc::gcd(p, s.y);
      EXPECT_TRUE(esc::check_eq5(p, s.x, s.y).holds);
      EXPECT_TRUE(esc::check_eq6(p, s.x, s.z, gcd_py).holds);
      EXPECT_TRUE(esc::check_eq7(p, s.y, s.z).holds);
      EXPECT_EQ(*esc::recover_z(p, s.x, s.y), s.z);
      EXPECT_EQ(*esc::recover_y(p, s.x, s.z, gcd_py), s.y);
      EXPECT_EQ(*esc::recover_x(p, s.y, s.z), s.x);
    }
  }
}

TEST(SmallestNontrivial, AgreesWithEnumerator) {
  for (const Nat& p : odd_primes_below(2000)) {
    const auto all = esc::enumerate_nontrivial(p);
    const auto first = esc::smallest_nontrivial(p);
    ASSERT_FALSE(all.empty()) << p;
    ASSERT_TRUE(first.has_value()) << p;
    EXPECT_EQ(*first, all.front()) << p;
  }
}

TEST(SmallestNontrivial, Five) { EXPECT_EQ(*esc::smallest_nontrivial(5), (EscSolution{5, 2, 4, 20})); }
