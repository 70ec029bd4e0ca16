#pragma once

// Overflow-checked 128-bit integers and the handful of primitives the rest of
// the library is built on.

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace esc {

using u128 = unsigned __int128;
using i128 = __int128;

/// Thrown whenever an exact result does not fit the representation.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

template <typename Rep>
class Checked {
 public:
  using rep_type = Rep;

  constexpr Checked() = default;

  template <std::integral T>
  constexpr Checked(T v) : v_(convert(v)) {}  // NOLINT: literals are ubiquitous

  static constexpr Checked from_rep(Rep v) {
    Checked c;
    c.v_ = v;
    return c;
  }

  constexpr Rep rep() const { return v_; }

  constexpr Checked& operator+=(Checked o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw OverflowError("integer overflow in addition");
    return *this;
  }
  constexpr Checked& operator-=(Checked o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) throw OverflowError("integer overflow in subtraction");
    return *this;
  }
  constexpr Checked& operator*=(Checked o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw OverflowError("integer overflow in multiplication");
    return *this;
  }
  constexpr Checked& operator/=(Checked o) {
    check_divisor(o);
    v_ /= o.v_;
    return *this;
  }
  constexpr Checked& operator%=(Checked o) {
    check_divisor(o);
    v_ %= o.v_;
    return *this;
  }

  friend constexpr Checked operator+(Checked a, Checked b) { return a += b; }
  friend constexpr Checked operator-(Checked a, Checked b) { return a -= b; }
  friend constexpr Checked operator*(Checked a, Checked b) { return a *= b; }
  friend constexpr Checked operator/(Checked a, Checked b) { return a /= b; }
  friend constexpr Checked operator%(Checked a, Checked b) { return a %= b; }

  constexpr Checked operator-() const { return Checked{} - *this; }

  friend constexpr bool operator==(Checked, Checked) = default;
  friend constexpr auto operator<=>(Checked a, Checked b) { return a.v_ <=> b.v_; }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_negative() const { return v_ < 0; }
  constexpr bool is_even() const { return (v_ & 1) == 0; }

  /// Narrowing to a built-in integer; throws if the value does not fit.
  template <std::integral T>
  constexpr T to() const {
    T out{};
    if (__builtin_add_overflow(v_, Rep{0}, &out)) throw OverflowError("value does not fit target type");
    return out;
  }

 private:
  template <std::integral T>
  static constexpr Rep convert(T v) {
    Rep out{};
    if (__builtin_add_overflow(v, T{0}, &out)) throw OverflowError("value out of range");
    return out;
  }

  constexpr void check_divisor(Checked o) const {
    if (o.v_ == 0) throw std::domain_error("division by zero");
    if constexpr (Rep(-1) < Rep(0)) {
      if (o.v_ == -1 && v_ == std::numeric_limits<Rep>::min())
        throw OverflowError("integer overflow in division");
    }
  }

  Rep v_ = 0;
};

/// Non-negative integer quantity (x, y, z, legs, coefficients).
using Nat = Checked<u128>;
/// Signed quantity (discriminants, residuals, differences of legs).
using Int = Checked<i128>;

Int to_signed(Nat n);
/// Throws OverflowError on negative input.
Nat to_unsigned(Int n);

std::string to_string(Nat n);
std::string to_string(Int n);
/// Parses an unsigned decimal literal; throws std::invalid_argument on junk.
Nat parse_nat(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, Nat n) { return os << to_string(n); }
inline std::ostream& operator<<(std::ostream& os, Int n) { return os << to_string(n); }

/// Greatest common divisor; gcd(a, 0) = a. Throws std::invalid_argument when both are zero.
Nat gcd(Nat a, Nat b);
Nat gcd(Nat a, Nat b, Nat c);

/// Smallest n with n * b >= a. Throws std::domain_error when b is zero.
Nat ceil_div(Nat a, Nat b);

/// Largest s with s * s <= n.
Nat isqrt(Nat n);
bool is_perfect_square(Nat n);
/// Negative values are never squares.
bool is_perfect_square(Int n);

/// Deterministic Miller-Rabin, exact for every 64-bit input. Inputs above
/// 2^64 throw OverflowError.
bool is_prime(Nat n);

}  // namespace esc
