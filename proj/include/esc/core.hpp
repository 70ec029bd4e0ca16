#pragma once

// Solutions of 4/p = 1/x + 1/y + 1/z: the identity itself, the closed-form
// trivial solutions, classification, the three recovery formulas, the three
// necessary conditions, and an exhaustive enumerator.

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "esc/integer.hpp"
#include "esc/result.hpp"

namespace esc {

struct EscSolution {
  Nat p;
  Nat x;
  Nat y;
  Nat z;

  friend bool operator==(const EscSolution&, const EscSolution&) = default;
  friend auto operator<=>(const EscSolution&, const EscSolution&) = default;
};

enum class SolutionKind { Trivial, TypeI, TypeII, Invalid };

std::string_view to_string(SolutionKind kind);

/// Exact integer form 4xyz == p(yz + xz + xy). All arguments must be positive.
bool verify_identity(Nat p, Nat x, Nat y, Nat z);
inline bool verify_identity(const EscSolution& s) { return verify_identity(s.p, s.x, s.y, s.z); }

/// Closed-form solutions with x == y or y == z. Empty for p = 1 mod 4.
/// Throws std::invalid_argument if p is not prime.
std::vector<EscSolution> trivial_solutions(Nat p);

/// Trivial when x == y or y == z, otherwise split on gcd(p, y). Invalid when
/// the identity or x <= y <= z fails.
SolutionKind classify(const EscSolution& s);

/// z = xyp / (gcd(p, y) gcd(xy, x + y)), accepted only if the identity holds.
Result<Nat> recover_z(Nat p, Nat x, Nat y);
/// y = xz h / (p gcd(xz, x + z)) under the hypothesis gcd(p, y) = h, h in {1, p}.
Result<Nat> recover_y(Nat p, Nat x, Nat z, Nat assumed_gcd_py);
/// x = yz / (p gcd(yz, y + z)).
Result<Nat> recover_x(Nat p, Nat y, Nat z);

/// Value of 2(2uv/g) - (p/(v-u)) ((v^2 - u^2)/g), g = gcd(uv, u + v), as a
/// reduced fraction, compared against the condition's target.
struct ConditionCheck {
  Int numerator;
  Nat denominator;
  Nat target;
  bool holds = false;
};

/// Necessary condition on (x, y): value equals gcd(p, y).
ConditionCheck check_eq5(Nat p, Nat x, Nat y);
/// Necessary condition on (x, z): value equals p^2 / gcd(p, y).
ConditionCheck check_eq6(Nat p, Nat x, Nat z, Nat gcd_py);
/// Necessary condition on (y, z): value equals p^2.
ConditionCheck check_eq7(Nat p, Nat y, Nat z);

/// Every solution with x < y < z for an odd prime p, in lexicographic order.
///
/// Bounds: 1/x < 4/p <= 3/x gives p/4 < x <= 3p/4. With r = 4/p - 1/x the
/// remaining pair satisfies 1/y < r <= 2/y, so 1/r < y <= 2/r, and z is
/// whatever makes 1/z = r - 1/y exact.
std::vector<EscSolution> enumerate_nontrivial(Nat p);

/// Lexicographically smallest solution with x < y < z, or nullopt if none
/// exists. Walks x upward and, for each x, solves 1/y + 1/z = a/n through the
/// factorisation (ay - n)(az - n) = n^2, taking the smallest divisor first.
std::optional<EscSolution> smallest_nontrivial(Nat p);

}  // namespace esc
