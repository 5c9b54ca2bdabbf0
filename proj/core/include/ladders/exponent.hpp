#pragma once

#include <compare>
#include <string>

namespace ladders {

/// An exponent of the twist character nu.  Values are rationals whose
/// denominator divides 2; they are stored as twice their value so that all
/// arithmetic stays exact and integral.
class Exponent {
 public:
  constexpr Exponent() = default;

  static constexpr Exponent integer(int value) { return Exponent(2 * value); }

  /// Value numerator/2, e.g. half_integer(3) == 3/2.
  static constexpr Exponent half_integer(int numerator) {
    return Exponent(numerator);
  }

  [[nodiscard]] constexpr int twice() const { return twice_; }
  [[nodiscard]] constexpr bool integral() const { return twice_ % 2 == 0; }

  /// Exact integer value; only meaningful when integral().
  [[nodiscard]] constexpr int whole() const { return twice_ / 2; }

  friend constexpr auto operator<=>(Exponent, Exponent) = default;

  friend constexpr Exponent operator+(Exponent x, Exponent y) {
    return Exponent(x.twice_ + y.twice_);
  }
  friend constexpr Exponent operator-(Exponent x, Exponent y) {
    return Exponent(x.twice_ - y.twice_);
  }
  friend constexpr Exponent operator+(Exponent x, int n) {
    return Exponent(x.twice_ + 2 * n);
  }
  friend constexpr Exponent operator-(Exponent x, int n) {
    return Exponent(x.twice_ - 2 * n);
  }

 private:
  explicit constexpr Exponent(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// True when x - y lies in Z, i.e. both exponents sit on one integral grid.
constexpr bool integral_difference(Exponent x, Exponent y) {
  return (x.twice() - y.twice()) % 2 == 0;
}

inline std::string to_string(Exponent x) {
  if (x.integral()) return std::to_string(x.whole());
  return std::to_string(x.twice()) + "/2";
}

}  // namespace ladders
