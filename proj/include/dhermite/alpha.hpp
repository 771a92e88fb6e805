#pragma once

#include "dhermite/rational.hpp"

#include <stdexcept>
#include <string>

namespace dhermite {

/// Deformation sign, restricted to +1 or -1.
class Alpha {
 public:
  constexpr explicit Alpha(int sign) : sign_(sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("Alpha must be +1 or -1");
  }
  static constexpr Alpha plus() { return Alpha(1); }
  static constexpr Alpha minus() { return Alpha(-1); }

  constexpr int value() const { return sign_; }
  Rational rational() const { return Rational(sign_); }

  /// alpha^k, using alpha^2 = 1.
  constexpr int pow(int k) const { return (k % 2 == 0) ? 1 : sign_; }

  constexpr Alpha operator-() const { return Alpha(-sign_); }
  friend constexpr bool operator==(Alpha a, Alpha b) { return a.sign_ == b.sign_; }

  std::string to_string() const { return sign_ > 0 ? "+1" : "-1"; }

 private:
  int sign_;
};

inline constexpr Alpha kBothAlphas[] = {Alpha::plus(), Alpha::minus()};

}  // namespace dhermite
