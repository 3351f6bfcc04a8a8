#pragma once

#include <cstdint>
#include <string>

#include "tzlab/errors.hpp"

namespace tzlab {

/// Exact rational on int64 with overflow-checked arithmetic (intermediates
/// in __int128; any result outside int64 throws). Always normalized with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den);
  Rational(long long num) : Rational(num, 1) {}  // NOLINT implicit

  long long num() const { return num_; }
  long long den() const { return den_; }

  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
  double to_double() const { return double(num_) / double(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  long long num_{0};
  long long den_{1};
};

}  // namespace tzlab
