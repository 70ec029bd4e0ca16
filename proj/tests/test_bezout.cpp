#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "esc/bezout.hpp"
#include "oracle.hpp"

namespace bz = esc::bezout;
using bz::Family;
using esc::Int;
using esc::Nat;

namespace {

std::vector<Nat> odd_primes_below(std::uint64_t limit) {
  std::vector<Nat> out;
  for (std::uint64_t n = 3; n < limit; n += 2) {
    if (oracle::is_prime(n)) out.push_back(n);
  }
  return out;
}

bool has_certificate(const bz::SearchReport& r, std::uint64_t m, std::uint64_t k, std::uint64_t x, std::uint64_t y,
                     std::uint64_t z) {
  return std::any_of(r.certificates.begin(), r.certificates.end(), [&](const bz::SearchCertificate& c) {
    return c.m == Nat(m) && c.k == Nat(k) && c.x == Nat(x) && c.y == Nat(y) && c.z == Nat(z);
  });
}

}  // namespace

TEST(Families, TypeIExamples) {
  const auto a = bz::type1_family(5, 1);
  EXPECT_EQ(a.b, Nat(3));
  EXPECT_EQ(a.c, Nat(4));
  EXPECT_TRUE(a.coprime);
  const auto b = bz::type1_family(3, 2);
  EXPECT_EQ(b.b, Nat(5));
  EXPECT_EQ(b.c, Nat(4));
  const auto c = bz::type1_family(7, 1);
  EXPECT_EQ(c.b, Nat(1));
  EXPECT_EQ(c.c, Nat(2));
  EXPECT_THROW(bz::type1_family(7, 0), std::invalid_argument);
}

TEST(Families, TypeIIExamples) {
  const auto a = bz::type2_family(5, 2);
  EXPECT_EQ(a.b, Nat(7));
  EXPECT_EQ(a.c, Nat(10));
  EXPECT_TRUE(a.coprime);
  const auto b = bz::type2_family(3, 1);
  EXPECT_EQ(b.b, Nat(3));
  EXPECT_EQ(b.c, Nat(3));
  EXPECT_FALSE(b.coprime);
  EXPECT_TRUE(bz::type2_family(3, 2).coprime);
}

TEST(Families, IdentityCheckExamples) {
  EXPECT_TRUE(bz::family_identity_check(bz::type1_family(5, 1), 5));
  EXPECT_TRUE(bz::family_identity_check(bz::type2_family(5, 2), 5));
  const bz::BezoutPair forged{1, 3, 5, Family::TypeI, true};
  EXPECT_FALSE(bz::family_identity_check(forged, 5));
}

TEST(Families, IdentityAndCoprimalityOverGrid) {
  for (const Nat& p : odd_primes_below(500)) {
    for (std::uint64_t k = 1; k <= 50; ++k) {
      const auto one = bz::type1_family(p, k);
      EXPECT_TRUE(one.coprime);
      EXPECT_TRUE(bz::family_identity_check(one, p));
      EXPECT_EQ(Nat(4) * one.c - p * one.b, Nat(1));

      // gcd(4k - 1, pk) = gcd(4k - 1, p): coprime unless p | 4k - 1. For
      // p = 3 that is exactly k = 1 mod 3, but other primes hit it too
      // (p = 5, k = 4 gives gcd(15, 20) = 5).
      const auto two = bz::type2_family(p, k);
      const bool p_divides_b = ((Nat(4) * k - 1) % p).is_zero();
      EXPECT_EQ(two.coprime, !p_divides_b) << p << " " << k;
      if (p == 3) EXPECT_EQ(two.coprime, k % 3 != 1);
      EXPECT_EQ(Nat(4) * two.c - p * two.b, p);
      // The gcd-scaled identity holds exactly for the coprime pairs.
      EXPECT_EQ(bz::family_identity_check(two, p), two.coprime) << p << " " << k;
    }
  }
  EXPECT_FALSE(bz::type2_family(5, 4).coprime);
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(bz::discriminant(Family::TypeI, 5, 2, 1), Int(4));
  EXPECT_EQ(bz::discriminant(Family::TypeII, 5, 1, 2), Int(9));
  EXPECT_EQ(bz::discriminant(Family::TypeII, 5, 1, 1), Int(-11));
}

TEST(Discriminant, MatchesSumProductForm) {
  for (const Nat& p : odd_primes_below(100)) {
    for (std::uint64_t m = 1; m <= 20; ++m) {
      for (std::uint64_t k = 1; k <= 20; ++k) {
        const auto one = bz::type1_family(p, k);
        const auto two = bz::type2_family(p, k);
        const Int mm = m;
        // type I: c_k = (b_k p + 1)/4; type II: c_k = pk
        const Int b1 = esc::to_signed(one.b);
        const Int c1 = (b1 * esc::to_signed(p) + 1) / 4;
        EXPECT_EQ(bz::discriminant(Family::TypeI, p, m, k), mm * mm * b1 * b1 - Int(4) * mm * c1);
        const Int b2 = esc::to_signed(two.b);
        const Int c2 = esc::to_signed(p) * Int(k);
        EXPECT_EQ(bz::discriminant(Family::TypeII, p, m, k), mm * mm * b2 * b2 - Int(4) * mm * c2);
      }
    }
  }
}

TEST(Roots, Examples) {
  const auto a = bz::roots_if_square(2, bz::type1_family(5, 1));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->x, Nat(2));
  EXPECT_EQ(a->y, Nat(4));
  const auto b = bz::roots_if_square(1, bz::type2_family(5, 2));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->x, Nat(2));
  EXPECT_EQ(b->y, Nat(5));
  const auto c = bz::roots_if_square(1, bz::type1_family(5, 1));
  ASSERT_FALSE(c);
  EXPECT_EQ(c.failure(), esc::Failure::NotSquare);
}

TEST(Roots, AreRootsOfThePolynomial) {
  for (std::uint64_t m = 1; m < 60; ++m) {
    for (std::uint64_t k = 1; k < 60; ++k) {
      const auto pair = bz::type2_family(13, k);
      const auto r = bz::roots_if_square(m, pair);
      if (!r) continue;
      EXPECT_EQ(r->x + r->y, Nat(m) * pair.b);
      EXPECT_EQ(r->x * r->y, Nat(m) * pair.c);
    }
  }
}

TEST(Search, Examples) {
  const auto one = bz::search_solutions(5, Family::TypeI, 10, 10);
  EXPECT_TRUE(has_certificate(one, 2, 1, 2, 4, 20));
  const auto two = bz::search_solutions(5, Family::TypeII, 10, 10);
  EXPECT_TRUE(has_certificate(two, 1, 2, 2, 5, 10));
  const auto three = bz::search_solutions(3, Family::TypeII, 10, 10);
  for (const auto& c : three.certificates) EXPECT_NE(c.k % 3, Nat(1));
  EXPECT_THROW(bz::search_solutions(4, Family::TypeI, 10, 10), std::invalid_argument);
}

TEST(Search, CertificatesAreConsistent) {
  for (const Nat& p : odd_primes_below(120)) {
    for (Family kind : {Family::TypeI, Family::TypeII}) {
      const auto report = bz::search_solutions(p, kind, 2000, 2000);
      EXPECT_EQ(report.overflow_cells, 0u);
      for (const auto& c : report.certificates) {
        const auto pair = kind == Family::TypeI ? bz::type1_family(p, c.k) : bz::type2_family(p, c.k);
        EXPECT_EQ(c.x + c.y, c.m * pair.b);
        EXPECT_EQ(c.x * c.y, c.m * pair.c);
        EXPECT_EQ(c.discriminant, bz::discriminant(kind, p, c.m, c.k));
        EXPECT_TRUE(esc::is_perfect_square(c.discriminant));
        EXPECT_EQ(esc::classify(c.solution()), bz::solution_kind(kind));
      }
    }
  }
}

TEST(Search, OrderedByKThenM) {
  const auto r = bz::search_solutions(97, Family::TypeI, 5000, 5000);
  ASSERT_GT(r.certificates.size(), 1u);
  for (std::size_t i = 1; i < r.certificates.size(); ++i) {
    const auto& a = r.certificates[i - 1];
    const auto& b = r.certificates[i];
    EXPECT_TRUE(a.k < b.k || (a.k == b.k && a.m < b.m));
  }
}

TEST(Search, WorkerCountDoesNotChangeOutput) {
  const auto serial = bz::search_solutions(101, Family::TypeII, 3000, 3000, 1);
  const auto parallel = bz::search_solutions(101, Family::TypeII, 3000, 3000, 4);
  ASSERT_EQ(serial.certificates.size(), parallel.certificates.size());
  for (std::size_t i = 0; i < serial.certificates.size(); ++i) {
    EXPECT_EQ(serial.certificates[i].solution(), parallel.certificates[i].solution());
    EXPECT_EQ(serial.certificates[i].m, parallel.certificates[i].m);
  }
}

TEST(Search, CompleteAgainstEnumeratorForSmallPrimes) {
  for (const Nat& p : odd_primes_below(150)) {
    std::set<std::pair<Nat, Nat>> expected;
    Nat m_max = 1;
    Nat k_max = 1;
    for (const auto& s : esc::enumerate_nontrivial(p)) {
      expected.insert({s.x, s.y});
      m_max = std::max(m_max, esc::gcd(s.x * s.y, s.x + s.y));
      k_max = std::max(k_max, (s.x + s.y + 3) / 4);
    }
    std::set<std::pair<Nat, Nat>> found;
    for (Family kind : {Family::TypeI, Family::TypeII}) {
      for (const auto& c : bz::search_solutions(p, kind, m_max, k_max).certificates) found.insert({c.x, c.y});
    }
    EXPECT_EQ(found, expected) << p;
  }
}

TEST(PairSumBound, CoversEveryEnumeratedSolution) {
  for (const Nat& p : odd_primes_below(300)) {
    const Nat bound = bz::pair_sum_bound(p);
    for (const auto& s : esc::enumerate_nontrivial(p)) EXPECT_LE(s.x + s.y, bound) << p;
  }
}

TEST(Reduced, Examples) {
  const auto w = bz::reduced_type2_check(5, 1, 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->y_star, Nat(1));
  EXPECT_EQ(w->z_star, Nat(2));
  EXPECT_EQ(w->solution, (esc::EscSolution{5, 2, 5, 10}));
  EXPECT_EQ(w->discriminant, Int(1));

  const auto a = bz::reduced_type2_check(5, 1, 2);
  ASSERT_FALSE(a);
  EXPECT_EQ(a.failure(), esc::Failure::NotSquare);
  const auto b = bz::reduced_type2_check(5, 2, 1);
  ASSERT_FALSE(b);
  EXPECT_EQ(b.failure(), esc::Failure::NotSquare);

  // ceil(5/4) = 2, so k - 1 may be at most 2.
  EXPECT_NO_THROW(bz::reduced_type2_check(5, 1, 3));
  EXPECT_THROW(bz::reduced_type2_check(5, 1, 4), std::invalid_argument);
}

TEST(Reduced, SuccessesLiftAndCoverTypeII) {
  for (const Nat& p : odd_primes_below(200)) {
    const Nat quarter = esc::ceil_div(p, 4);
    for (const auto& s : esc::enumerate_nontrivial(p)) {
      if (esc::classify(s) != esc::SolutionKind::TypeII) continue;
      const Nat ys = s.y / p;
      const Nat zs = s.z / p;
      const Nat m = esc::gcd(ys * zs, ys + zs);
      const Nat b = (ys + zs) / m;
      const Nat b1 = Nat(4) * quarter - p;
      ASSERT_TRUE(((b - b1) % 4).is_zero());
      const Nat k = (b - b1) / 4 + 1;
      ASSERT_LE(k - 1, quarter);
      const auto w = bz::reduced_type2_check(p, m, k);
      ASSERT_TRUE(w) << p;
      EXPECT_EQ(w->solution, s);
    }
    for (const auto& c : bz::search_reduced(p, 50, 1000).certificates) {
      EXPECT_EQ(esc::classify(c.solution()), esc::SolutionKind::TypeII);
      EXPECT_TRUE(c.reduced);
    }
  }
}
