#include "esc/core.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace esc {

std::string_view to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::Trivial: return "trivial";
    case SolutionKind::TypeI: return "typeI";
    case SolutionKind::TypeII: return "typeII";
    case SolutionKind::Invalid: return "invalid";
  }
  return "invalid";
}

bool verify_identity(Nat p, Nat x, Nat y, Nat z) {
  if (p.is_zero() || x.is_zero() || y.is_zero() || z.is_zero())
    throw std::invalid_argument("verify_identity needs positive p, x, y, z");
  return Nat(4) * x * y * z == p * (y * z + x * z + x * y);
}

std::vector<EscSolution> trivial_solutions(Nat p) {
  if (!is_prime(p)) throw std::invalid_argument("trivial_solutions: " + to_string(p) + " is not prime");
  if (p == 2) return {{2, 1, 2, 2}};
  if (p % 4 != 3) return {};
  const Nat q = p + 1;
  return {
      {p, q / 2, q / 2, p * q / 4},
      {p, q / 4, p * q / 2, p * q / 2},
  };
}

SolutionKind classify(const EscSolution& s) {
  if (s.p.is_zero() || s.x.is_zero() || s.y.is_zero() || s.z.is_zero()) return SolutionKind::Invalid;
  if (!(s.x <= s.y && s.y <= s.z)) return SolutionKind::Invalid;
  if (!verify_identity(s)) return SolutionKind::Invalid;
  if (s.x == s.y || s.y == s.z) return SolutionKind::Trivial;
  const Nat g = gcd(s.p, s.y);
  if (g == 1) return SolutionKind::TypeI;
  if (g == s.p) return SolutionKind::TypeII;
  return SolutionKind::Invalid;
}

namespace {

void require_increasing(Nat a, Nat b, const char* what) {
  if (a.is_zero() || !(a < b)) throw std::invalid_argument(std::string(what) + ": need 0 < first < second");
}

void require_gcd_hypothesis(Nat p, Nat h) {
  if (h != 1 && h != p) throw std::invalid_argument("gcd(p, y) hypothesis must be 1 or p");
}

}  // namespace

Result<Nat> recover_z(Nat p, Nat x, Nat y) {
  require_increasing(x, y, "recover_z");
  const Nat num = x * y * p;
  const Nat den = gcd(p, y) * gcd(x * y, x + y);
  if (!(num % den).is_zero()) return Failure::NotIntegral;
  const Nat z = num / den;
  if (!verify_identity(p, x, y, z)) return Failure::IdentityFails;
  return z;
}

Result<Nat> recover_y(Nat p, Nat x, Nat z, Nat assumed_gcd_py) {
  require_increasing(x, z, "recover_y");
  require_gcd_hypothesis(p, assumed_gcd_py);
  const Nat num = x * z * assumed_gcd_py;
  const Nat den = p * gcd(x * z, x + z);
  if (!(num % den).is_zero()) return Failure::NotIntegral;
  const Nat y = num / den;
  if (y.is_zero()) return Failure::NonPositive;
  if (gcd(p, y) != assumed_gcd_py) return Failure::GcdHypothesis;
  if (!verify_identity(p, x, y, z)) return Failure::IdentityFails;
  return y;
}

Result<Nat> recover_x(Nat p, Nat y, Nat z) {
  require_increasing(y, z, "recover_x");
  const Nat num = y * z;
  const Nat den = p * gcd(y * z, y + z);
  if (!(num % den).is_zero()) return Failure::NotIntegral;
  const Nat x = num / den;
  if (x.is_zero()) return Failure::NonPositive;
  if (!verify_identity(p, x, y, z)) return Failure::IdentityFails;
  return x;
}

namespace {

// 2(2uv/g) - (p/(v-u)) ((v^2-u^2)/g) over the common denominator (v - u).
ConditionCheck evaluate_condition(Nat p, Nat u, Nat v, Nat target) {
  const Nat g = gcd(u * v, u + v);
  const Nat leg_a = Nat(2) * u * v / g;
  const Nat leg_b = (v * v - u * u) / g;
  const Nat diff = v - u;
  Int numerator = Int(2) * to_signed(leg_a) * to_signed(diff) - to_signed(p) * to_signed(leg_b);
  Nat denominator = diff;
  const Nat magnitude = to_unsigned(numerator.is_negative() ? -numerator : numerator);
  const Nat common = gcd(magnitude, denominator);
  numerator /= to_signed(common);
  denominator /= common;
  return {numerator, denominator, target, denominator == 1 && numerator == to_signed(target)};
}

}  // namespace

ConditionCheck check_eq5(Nat p, Nat x, Nat y) {
  require_increasing(x, y, "check_eq5");
  return evaluate_condition(p, x, y, gcd(p, y));
}

ConditionCheck check_eq6(Nat p, Nat x, Nat z, Nat gcd_py) {
  require_increasing(x, z, "check_eq6");
  require_gcd_hypothesis(p, gcd_py);
  return evaluate_condition(p, x, z, p * p / gcd_py);
}

ConditionCheck check_eq7(Nat p, Nat y, Nat z) {
  require_increasing(y, z, "check_eq7");
  return evaluate_condition(p, y, z, p * p);
}

namespace {

void require_odd_prime(Nat p, const char* what) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::string(what) + ": " + to_string(p) + " is not an odd prime");
}

// Keeps p*x*y inside 128 bits for every y the enumerator visits.
constexpr u128 kEnumerationLimit = u128{1} << 30;

}  // namespace

std::vector<EscSolution> enumerate_nontrivial(Nat p) {
  require_odd_prime(p, "enumerate_nontrivial");
  if (p.rep() >= kEnumerationLimit) throw OverflowError("enumerate_nontrivial: prime too large");
  const u128 pp = p.rep();
  std::vector<EscSolution> out;
  // 1/x < 4/p <= 3/x
  for (u128 x = pp / 4 + 1; x <= 3 * pp / 4; ++x) {
    // r = 4/p - 1/x = num/den
    const u128 num = 4 * x - pp;
    const u128 den = pp * x;
    // 1/r < y <= 2/r, and y > x keeps the triple strictly increasing.
    const u128 y_lo = std::max(den / num + 1, x + 1);
    const u128 y_hi = 2 * den / num;
    for (u128 y = y_lo; y <= y_hi; ++y) {
      // 1/z = r - 1/y = (num*y - den) / (den*y)
      const u128 rem = num * y - den;
      const u128 scaled = den * y;
      if (scaled % rem != 0) continue;
      const u128 z = scaled / rem;
      if (z <= y) continue;
      out.push_back({p, Nat::from_rep(x), Nat::from_rep(y), Nat::from_rep(z)});
    }
  }
  return out;
}

namespace {

using Factorisation = std::map<u128, int>;

void add_factors(u128 n, Factorisation& f, int sign) {
  for (u128 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      f[d] += sign;
      n /= d;
    }
  }
  if (n > 1) f[n] += sign;
}

std::vector<u128> divisors_below(const Factorisation& f, u128 limit) {
  std::vector<u128> divs{1};
  for (const auto& [prime, exp] : f) {
    const std::size_t count = divs.size();
    for (std::size_t i = 0; i < count; ++i) {
      u128 d = divs[i];
      for (int e = 0; e < exp; ++e) {
        if (d > limit / prime) break;
        d *= prime;
        divs.push_back(d);
      }
    }
  }
  std::erase_if(divs, [&](u128 d) { return d >= limit; });
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::optional<EscSolution> smallest_nontrivial(Nat p) {
  require_odd_prime(p, "smallest_nontrivial");
  if (p.rep() >= kEnumerationLimit) throw OverflowError("smallest_nontrivial: prime too large");
  const u128 pp = p.rep();
  for (u128 x = pp / 4 + 1; x <= 3 * pp / 4; ++x) {
    // 1/y + 1/z = a/n in lowest terms.
    const u128 raw_num = 4 * x - pp;
    const u128 raw_den = pp * x;
    const u128 g = gcd(Nat::from_rep(raw_num), Nat::from_rep(raw_den)).rep();
    const u128 a = raw_num / g;
    const u128 n = raw_den / g;
    Factorisation f;
    add_factors(x, f, 1);
    f[pp] += 1;
    add_factors(g, f, -1);
    std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
    for (auto& kv : f) kv.second *= 2;
    // (ay - n)(az - n) = n^2 with ay - n = d < n gives y < z; y grows with d.
    for (u128 d : divisors_below(f, n)) {
      if ((n + d) % a != 0) continue;
      const u128 y = (n + d) / a;
      if (y <= x) continue;
      const u128 cofactor = n * n / d;
      if ((n + cofactor) % a != 0) continue;
      const u128 z = (n + cofactor) / a;
      EscSolution s{p, Nat::from_rep(x), Nat::from_rep(y), Nat::from_rep(z)};
      if (verify_identity(s)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace esc
