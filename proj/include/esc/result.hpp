#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace esc {

/// Why a reconstruction did not produce a solution. Divisibility and sign
/// problems are detected before anything is computed; the remaining reasons
/// mean a candidate was produced and then rejected.
enum class Failure {
  Divisibility,      // a required exact division of the inputs fails
  NonPositive,       // a denominator or result is zero or negative
  NotIntegral,       // the candidate value is not an integer
  GcdHypothesis,     // gcd(p, y) of the candidate contradicts the assumed value
  Ordering,          // x < y < z does not hold
  IdentityFails,     // 4/p = 1/x + 1/y + 1/z does not hold
  NotSquare,         // discriminant negative or not a perfect square
  Parity,            // square root has the wrong parity for integral roots
};

constexpr std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::Divisibility: return "divisibility";
    case Failure::NonPositive: return "non-positive";
    case Failure::NotIntegral: return "not-integral";
    case Failure::GcdHypothesis: return "gcd-hypothesis";
    case Failure::Ordering: return "ordering";
    case Failure::IdentityFails: return "identity-fails";
    case Failure::NotSquare: return "not-square";
    case Failure::Parity: return "parity";
  }
  return "unknown";
}

/// Either a value or the reason there is none.
template <typename T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}  // NOLINT
  Result(Failure failure) : state_(failure) {}   // NOLINT

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!ok()) throw std::logic_error("Result holds a failure: " + std::string(to_string(failure())));
    return std::get<T>(state_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  Failure failure() const {
    if (ok()) throw std::logic_error("Result holds a value");
    return std::get<Failure>(state_);
  }

 private:
  std::variant<T, Failure> state_;
};

}  // namespace esc
