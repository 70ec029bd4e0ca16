#pragma once

// Solutions as roots of T^2 - m b_k T + m c_k.
//
// A type I solution has (x + y, xy) = (m b_k, m c_k) for a coprime pair with
// 4c_k - p b_k = 1; a type II solution the same with 4c_k - p b_k = p. In both
// cases m = gcd(xy, x + y), and the roots are integral exactly when the
// discriminant m^2 b_k^2 - 4 m c_k is a perfect square.

#include <string_view>
#include <vector>

#include "esc/core.hpp"
#include "esc/integer.hpp"
#include "esc/result.hpp"

namespace esc::bezout {

enum class Family { TypeI, TypeII };

std::string_view to_string(Family f);
SolutionKind solution_kind(Family f);

struct BezoutPair {
  Nat k;
  Nat b;
  Nat c;
  Family kind = Family::TypeI;
  bool coprime = false;
};

/// b_k = 4(k-1) + b_1, c_k = p(k-1) + c_1 with b_1 = 4 ceil(p/4) - p and
/// c_1 = (b_1 p + 1)/4. Requires an odd p and k >= 1.
BezoutPair type1_family(Nat p, Nat k);

/// b_k = 4k - 1, c_k = pk. gcd(b_k, c_k) = gcd(4k - 1, p), so the pair is
/// coprime unless p divides 4k - 1.
BezoutPair type2_family(Nat p, Nat k);

/// 4c - pb == gcd(c, b) for type I, 4c - pb == p gcd(c, b) for type II.
bool family_identity_check(const BezoutPair& pair, Nat p);

/// The discriminant written directly in p, m and k:
///   type I:  m^2 (4k - (4 - 4 ceil(p/4) + p))^2 - p m (4k - (4 - 4 ceil(p/4) + p)) - m
///   type II: m^2 (4k - 1)^2 - 4 p m k
/// Negative values are returned as such.
Int discriminant(Family kind, Nat p, Nat m, Nat k);

struct RootPair {
  Nat x;
  Nat y;
};

/// Integral roots x <= y of T^2 - m b T + m c, or NotSquare / Parity.
Result<RootPair> roots_if_square(Nat m, const BezoutPair& pair);

struct SearchCertificate {
  Nat p;
  Nat m;
  Nat k;
  Family kind = Family::TypeI;
  Int discriminant;
  Nat x;
  Nat y;
  Nat z;
  // Set for certificates from the reduced type II scan, where the sum and
  // product relations hold for (y/p, z/p) against the type I b_k.
  bool reduced = false;

  EscSolution solution() const { return {p, x, y, z}; }
};

struct SearchReport {
  std::vector<SearchCertificate> certificates;
  std::size_t overflow_cells = 0;
};

/// Upper bound on x + y over all solutions with x < y < z for p, from
/// x <= 3p/4 and y <= 2px/(4x - p) (largest at the smallest admissible x).
Nat pair_sum_bound(Nat p);

/// Scans k <= k_max (outer) and m <= m_max (inner) over coprime pairs of the
/// family. Cells with m b_k above pair_sum_bound(p) cannot hold a solution
/// and are not visited. Each root pair is completed with recover_z and kept
/// only if it classifies as the requested family. Cells that overflow are
/// counted and skipped. Output order is (k, m) for any worker count.
SearchReport search_solutions(Nat p, Family kind, Nat m_max, Nat k_max, unsigned workers = 1);

struct ReducedWitness {
  Nat y_star;
  Nat z_star;
  Int discriminant;
  EscSolution solution;
};

/// Reduced type II test for y* = y/p, z* = z/p with b the type I b_k:
/// D = m^2 b^2 - m b - m p must be a square; y*, z* are the roots of
/// T^2 - m b T + m (b + p)/4, x = y* z* / gcd(y* z*, y* + z*), and the lifted
/// (x, p y*, p z*) must satisfy the identity.
/// Throws std::invalid_argument when k - 1 > ceil(p/4) or m, k are zero.
Result<ReducedWitness> reduced_type2_check(Nat p, Nat m, Nat k);

/// reduced_type2_check over k <= min(k_max, ceil(p/4) + 1), m <= m_max.
SearchReport search_reduced(Nat p, Nat m_max, Nat k_max);

}  // namespace esc::bezout
