#pragma once

#include <cmath>

namespace tzlab {

/// Streams the Taylor coefficients of the single-atom singular inner factor
/// exp(t(1+z)/(z-1)), normalized so the value at z = 0 is e^{-t}:
///
///   c_k = e^{-t} (L_k(2t) - L_{k-1}(2t)),   L_{-1} = 0,
///
/// with L_k the Laguerre polynomials, generated by the three-term recurrence
/// L_{k+1}(x) = ((2k+1-x) L_k(x) - k L_{k-1}(x)) / (k+1). The recurrence is
/// well conditioned in double precision for masses t <= 8.
///
/// Templated on the scalar so the same kernel runs in double, long double,
/// or __float128 when a higher-precision cross-check is wanted.
template <typename Scalar = double>
class AtomCoeffStream {
 public:
  explicit AtomCoeffStream(Scalar mass)
      : x_(Scalar(2) * mass), scale_(std::exp(-double(mass))) {}

  /// Coefficient c_k for the current index, then advances to k+1.
  Scalar next() {
    const Scalar c = scale_ * (curr_ - prev_);
    const Scalar k = Scalar(index_);
    const Scalar succ = ((Scalar(2) * k + Scalar(1) - x_) * curr_ - k * prev_) / (k + Scalar(1));
    prev_ = curr_;
    curr_ = succ;
    ++index_;
    return c;
  }

  long index() const { return index_; }

 private:
  Scalar x_;
  Scalar scale_;
  Scalar prev_{0};  // L_{k-1}(x)
  Scalar curr_{1};  // L_k(x)
  long index_{0};
};

}  // namespace tzlab
