#pragma once

// Pythagorean triples attached to a solution (x, y, z) and the maps back.
//
// For a pair u < v taken from the solution, g = gcd(uv, u + v) and
//   A = 2uv / g,  B = (v^2 - u^2) / g
// are the legs of a Pythagorean triple. The pair is (x, y) for the first
// kind, (x, z) for the second and (y, z) for the third.

#include <string_view>

#include "esc/core.hpp"
#include "esc/integer.hpp"
#include "esc/result.hpp"

namespace esc {

/// A^2 + B^2 = C^2 with A the even leg. B may exceed A.
struct PythTriple {
  Nat A;
  Nat B;
  Nat C;

  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

enum class TripleKind { First, Second, Third };

std::string_view to_string(TripleKind kind);

/// Throws std::invalid_argument unless 0 < u < v.
PythTriple forward(TripleKind kind, Nat u, Nat v);

/// Convenience: picks (u, v) from the solution according to kind.
PythTriple forward(TripleKind kind, const EscSolution& s);

/// (x, y, z) from a first-kind triple under the hypothesis gcd(p, y) = gcd_py.
Result<EscSolution> inverse_first(Nat p, const PythTriple& t, Nat gcd_py);
/// (x, y, z) from a second-kind triple under the hypothesis gcd(p, y) = gcd_py.
Result<EscSolution> inverse_second(Nat p, const PythTriple& t, Nat gcd_py);
/// (x, y, z) from a third-kind triple; no hypothesis is needed.
Result<EscSolution> inverse_third(Nat p, const PythTriple& t);

/// Closed form for gcd(A, B) of forward(kind, s):
///   first:  gcd(x,y,z) gcd(2, (y^2 - x^2) / gcd(x,y)^2)
///   second: gcd(x,y,z) gcd(2, (z^2 - x^2) / gcd(x,z)^2)
///   third:  gcd(p,y) gcd(x,y,z) gcd(2, (z^2 - y^2) / gcd(y,z)^2)
Nat predicted_gcd_AB(TripleKind kind, const EscSolution& s);

}  // namespace esc
