#include "esc/integer.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace esc {

Int to_signed(Nat n) {
  if (n.rep() > static_cast<u128>(std::numeric_limits<i128>::max()))
    throw OverflowError("value does not fit signed 128-bit");
  return Int::from_rep(static_cast<i128>(n.rep()));
}

Nat to_unsigned(Int n) {
  if (n.is_negative()) throw OverflowError("negative value where a natural number is required");
  return Nat::from_rep(static_cast<u128>(n.rep()));
}

namespace {

std::string digits(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

std::string to_string(Nat n) { return digits(n.rep()); }

std::string to_string(Int n) {
  const i128 v = n.rep();
  if (v >= 0) return digits(static_cast<u128>(v));
  // Negate in the unsigned domain so the minimum value round-trips.
  return "-" + digits(u128{0} - static_cast<u128>(v));
}

Nat parse_nat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  Nat out = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("not an unsigned decimal integer: " + std::string(text));
    out = out * 10 + (ch - '0');
  }
  return out;
}

Nat gcd(Nat a, Nat b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  u128 x = a.rep();
  u128 y = b.rep();
  while (y != 0) {
    const u128 r = x % y;
    x = y;
    y = r;
  }
  return Nat::from_rep(x);
}

Nat gcd(Nat a, Nat b, Nat c) { return gcd(gcd(a, b), c); }

Nat ceil_div(Nat a, Nat b) {
  if (b.is_zero()) throw std::domain_error("ceil_div by zero");
  const Nat q = a / b;
  return (a % b).is_zero() ? q : q + 1;
}

Nat isqrt(Nat n) {
  const u128 v = n.rep();
  if (v < 2) return n;
  // Start above the root and let Newton's iteration descend monotonically.
  const auto high = static_cast<std::uint64_t>(v >> 64);
  const int bits = high != 0 ? 64 + std::bit_width(high) : std::bit_width(static_cast<std::uint64_t>(v));
  u128 x = u128{1} << ((bits + 1) / 2);
  for (;;) {
    const u128 next = (x + v / x) / 2;
    if (next >= x) break;
    x = next;
  }
  while (x * x > v) --x;
  return Nat::from_rep(x);
}

bool is_perfect_square(Nat n) {
  // Squares mod 64 take only 12 distinct residues.
  constexpr std::uint64_t kSquareMod64 = 0x0202021202030213ULL;
  if (((kSquareMod64 >> static_cast<unsigned>(n.rep() & 63)) & 1) == 0) return false;
  const Nat s = isqrt(n);
  return s * s == n;
}

bool is_perfect_square(Int n) { return !n.is_negative() && is_perfect_square(to_unsigned(n)); }

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(Nat n) {
  const auto v = n.to<std::uint64_t>();
  // The first twelve primes as witnesses decide every n < 3.3e24.
  constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (v < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (v == w) return true;
    if (v % w == 0) return false;
  }
  std::uint64_t d = v - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, v);
      if (x == v - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace esc
