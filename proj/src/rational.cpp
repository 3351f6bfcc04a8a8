#include "tzlab/rational.hpp"

#include <numeric>

namespace tzlab {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
    throw Error("Rational: arithmetic overflow");
  return static_cast<long long>(v);
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw Error("Rational: zero denominator");
  if (den < 0) { num = -num; den = -den; }
  const Wide a = num < 0 ? -num : num;
  Wide g = 1;
  if (a != 0) {
    Wide x = a, y = den;
    while (y != 0) { Wide t = x % y; x = y; y = t; }
    g = x;
  } else {
    g = den;
  }
  return Rational(narrow(num / g), narrow(den / g));
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw Error("Rational: zero denominator");
  if (den_ < 0) { num_ = -num_; den_ = -den_; }
  const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) { num_ /= g; den_ /= g; }
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error("Rational: division by zero");
  return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

}  // namespace tzlab
