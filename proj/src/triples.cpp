#include "esc/triples.hpp"

#include <stdexcept>

namespace esc {

std::string_view to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::First: return "first";
    case TripleKind::Second: return "second";
    case TripleKind::Third: return "third";
  }
  return "first";
}

PythTriple forward(TripleKind, Nat u, Nat v) {
  if (u.is_zero() || !(u < v)) throw std::invalid_argument("forward: need 0 < u < v");
  const Nat g = gcd(u * v, u + v);
  const Nat a = Nat(2) * u * v / g;
  const Nat b = (v * v - u * u) / g;
  const Nat c2 = a * a + b * b;
  const Nat c = isqrt(c2);
  if (c * c != c2) throw std::logic_error("forward: legs do not complete to a Pythagorean triple");
  return {a, b, c};
}

PythTriple forward(TripleKind kind, const EscSolution& s) {
  switch (kind) {
    case TripleKind::First: return forward(kind, s.x, s.y);
    case TripleKind::Second: return forward(kind, s.x, s.z);
    case TripleKind::Third: return forward(kind, s.y, s.z);
  }
  throw std::invalid_argument("forward: unknown kind");
}

namespace {

struct Fraction {
  Nat num;
  Nat den;
};

// 2((2A - target)/p), the shared denominator of the two leg-sum formulas.
Result<Nat> leg_sum_denominator(Nat p, const PythTriple& t, Nat target) {
  const Nat two_a = Nat(2) * t.A;
  if (two_a <= target) return Failure::NonPositive;
  if (!((two_a - target) % p).is_zero()) return Failure::Divisibility;
  return Nat(2) * ((two_a - target) / p);
}

// Exact quotients, ordering, the gcd(p, y) hypothesis (when given) and the
// identity, in that order.
Result<EscSolution> finish(Nat p, Fraction x, Fraction y, Fraction z, Nat gcd_py) {
  for (const Fraction& f : {x, y, z}) {
    if (!(f.num % f.den).is_zero()) return Failure::NotIntegral;
  }
  EscSolution s{p, x.num / x.den, y.num / y.den, z.num / z.den};
  if (s.x.is_zero()) return Failure::NonPositive;
  if (!(s.x < s.y && s.y < s.z)) return Failure::Ordering;
  if (!gcd_py.is_zero() && gcd(p, s.y) != gcd_py) return Failure::GcdHypothesis;
  if (!verify_identity(s)) return Failure::IdentityFails;
  return s;
}

void require_hypothesis(Nat p, Nat gcd_py) {
  if (gcd_py != 1 && gcd_py != p) throw std::invalid_argument("gcd(p, y) hypothesis must be 1 or p");
}

}  // namespace

Result<EscSolution> inverse_first(Nat p, const PythTriple& t, Nat gcd_py) {
  require_hypothesis(p, gcd_py);
  const auto den = leg_sum_denominator(p, t, gcd_py);
  if (!den) return den.failure();
  if (t.A + t.C <= t.B) return Failure::NonPositive;
  return finish(p, {t.A + t.C - t.B, *den}, {t.A + t.B + t.C, *den}, {t.A * p, Nat(2) * gcd_py}, gcd_py);
}

Result<EscSolution> inverse_second(Nat p, const PythTriple& t, Nat gcd_py) {
  require_hypothesis(p, gcd_py);
  const auto den = leg_sum_denominator(p, t, p * p / gcd_py);
  if (!den) return den.failure();
  if (t.A + t.C <= t.B) return Failure::NonPositive;
  return finish(p, {t.A + t.C - t.B, *den}, {t.A * gcd_py, Nat(2) * p}, {t.A + t.B + t.C, *den}, gcd_py);
}

Result<EscSolution> inverse_third(Nat p, const PythTriple& t) {
  const auto den = leg_sum_denominator(p, t, p * p);
  if (!den) return den.failure();
  if (t.A + t.C <= t.B) return Failure::NonPositive;
  return finish(p, {t.A, Nat(2) * p}, {t.A + t.C - t.B, *den}, {t.A + t.B + t.C, *den}, 0);
}

Nat predicted_gcd_AB(TripleKind kind, const EscSolution& s) {
  const Nat common = gcd(s.x, s.y, s.z);
  const auto parity_factor = [](Nat u, Nat v) {
    const Nat g = gcd(u, v);
    return gcd(Nat(2), (v * v - u * u) / (g * g));
  };
  switch (kind) {
    case TripleKind::First: return common * parity_factor(s.x, s.y);
    case TripleKind::Second: return common * parity_factor(s.x, s.z);
    case TripleKind::Third: return gcd(s.p, s.y) * common * parity_factor(s.y, s.z);
  }
  throw std::invalid_argument("predicted_gcd_AB: unknown kind");
}

}  // namespace esc
