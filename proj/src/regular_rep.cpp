#include "tzlab/regular_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "tzlab/errors.hpp"

namespace tzlab {

SemigroupSpec SemigroupSpec::zplus() { return SemigroupSpec{}; }

SemigroupSpec SemigroupSpec::qn(int base, int depth) {
  if (base < 2) throw Error("SemigroupSpec: Qn base must be >= 2");
  if (depth < 0) throw Error("SemigroupSpec: Qn depth must be >= 0");
  SemigroupSpec s;
  s.kind_ = Kind::Qn;
  s.base_ = base;
  s.depth_ = depth;
  return s;
}

SemigroupSpec SemigroupSpec::gamma(Rational t_lo, Rational t_hi) {
  if (!(Rational(0) < t_lo) || t_hi < t_lo)
    throw Error("SemigroupSpec: need 0 < t_lo <= t_hi");
  SemigroupSpec s;
  s.kind_ = Kind::Gamma;
  s.t_lo_ = t_lo;
  s.t_hi_ = t_hi;
  return s;
}

Element SemigroupSpec::add(const Element& x, const Element& y) const {
  switch (kind_) {
    case Kind::Zplus: return Element{x.a + y.a, 1};
    case Kind::Qn: {
      const Rational r = Rational(x.a, x.b) + Rational(y.a, y.b);
      return Element{r.num(), r.den()};
    }
    case Kind::Gamma: return Element{x.a + y.a, x.b + y.b};
  }
  throw Error("SemigroupSpec::add: bad kind");
}

int SemigroupSpec::sign_of(const Element& x) const {
  switch (kind_) {
    case Kind::Zplus: return x.a > 0 ? 1 : x.a < 0 ? -1 : 0;
    case Kind::Qn: return Rational(x.a, x.b).sign();
    case Kind::Gamma: {
      // m + q t: evaluate at both interval endpoints
      const int lo = (Rational(x.a) + Rational(x.b) * t_lo_).sign();
      const int hi = (Rational(x.a) + Rational(x.b) * t_hi_).sign();
      if (lo == hi) return lo;
      if (x.b == 0) return Rational(x.a).sign();
      std::ostringstream msg;
      msg << "sign of " << element_str(x) << " is not decided by the t interval ["
          << t_lo_.str() << ", " << t_hi_.str() << "]; tighten the interval";
      throw IndeterminateSign(msg.str());
    }
  }
  throw Error("SemigroupSpec::sign_of: bad kind");
}

int SemigroupSpec::compare(const Element& x, const Element& y) const {
  switch (kind_) {
    case Kind::Zplus: return x.a > y.a ? 1 : x.a < y.a ? -1 : 0;
    case Kind::Qn: return (Rational(x.a, x.b) - Rational(y.a, y.b)).sign();
    case Kind::Gamma: return sign_of(Element{x.a - y.a, x.b - y.b});
  }
  throw Error("SemigroupSpec::compare: bad kind");
}

std::string SemigroupSpec::element_str(const Element& x) const {
  switch (kind_) {
    case Kind::Zplus: return std::to_string(x.a);
    case Kind::Qn: return Rational(x.a, x.b).str();
    case Kind::Gamma:
      return std::to_string(x.a) + (x.b >= 0 ? "+" : "") + std::to_string(x.b) + "t";
  }
  return "?";
}

Window::Window(SemigroupSpec spec, Rational bound, long search_bound) : spec_(std::move(spec)) {
  if (bound.sign() < 0) throw Error("Window: bound must be non-negative");
  switch (spec_.kind()) {
    case SemigroupSpec::Kind::Zplus: {
      const long long top = bound.num() / bound.den();
      for (long long v = 0; v <= top; ++v) elements_.push_back(Element{v, 1});
      break;
    }
    case SemigroupSpec::Kind::Qn: {
      long long scale = 1;
      for (int i = 0; i < spec_.depth(); ++i) {
        if (scale > (1LL << 40)) throw Error("Window: Qn depth too deep");
        scale *= spec_.base();
      }
      // multiples m / base^depth with value <= bound
      const Rational step(1, scale);
      for (long long m = 0;; ++m) {
        const Rational v = Rational(m) * step;
        if (bound < v) break;
        elements_.push_back(Element{v.num(), v.den()});
      }
      break;
    }
    case SemigroupSpec::Kind::Gamma: {
      for (long long q = -search_bound; q <= search_bound; ++q) {
        for (long long m = -search_bound; m <= search_bound; ++m) {
          const Element e{m, q};
          // membership in [0, bound] must be determinate at both endpoints
          const Rational at_lo = Rational(m) + Rational(q) * spec_.t_lo();
          const Rational at_hi = Rational(m) + Rational(q) * spec_.t_hi();
          const bool above_lo = at_lo.sign() >= 0, above_hi = at_hi.sign() >= 0;
          const bool below_lo = at_lo <= bound, below_hi = at_hi <= bound;
          if (above_lo != above_hi || below_lo != below_hi) {
            std::ostringstream msg;
            msg << "Window: membership of " << spec_.element_str(e)
                << " in [0, " << bound.str() << "] is indeterminate; tighten the t interval";
            throw IndeterminateSign(msg.str());
          }
          if (above_lo && below_lo) elements_.push_back(e);
        }
      }
      break;
    }
  }
  std::sort(elements_.begin(), elements_.end(),
            [&](const Element& x, const Element& y) { return spec_.compare(x, y) < 0; });
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) index_[elements_[i]] = i;
}

int Window::find(const Element& e) const {
  const auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

int PartialBij::domain_size() const {
  int n = 0;
  for (int v : image) n += v >= 0;
  return n;
}

PartialBij identity_bij(int size) {
  PartialBij x;
  x.image.resize(size);
  for (int i = 0; i < size; ++i) x.image[i] = i;
  return x;
}

PartialBij rep_op(const Window& w, const Element& a) {
  if (w.find(a) < 0)
    throw ElementOutsideWindow("rep_op: " + w.spec().element_str(a) + " is outside the window");
  PartialBij x;
  x.image.assign(w.size(), -1);
  for (int c = 0; c < w.size(); ++c)
    x.image[c] = w.find(w.spec().add(a, w.at(c)));
  return x;
}

PartialBij pb_star(const PartialBij& x) {
  PartialBij inv;
  inv.image.assign(x.size(), -1);
  for (int c = 0; c < x.size(); ++c)
    if (x.image[c] >= 0) inv.image[x.image[c]] = c;
  return inv;
}

PartialBij pb_compose(const PartialBij& x, const PartialBij& y) {
  if (x.size() != y.size()) throw DimensionMismatch("pb_compose: window mismatch");
  PartialBij z;
  z.image.assign(x.size(), -1);
  for (int c = 0; c < y.size(); ++c) {
    const int mid = y.image[c];
    if (mid >= 0) z.image[c] = x.image[mid];
  }
  return z;
}

TruncatedOperator matrix_of(const PartialBij& x) {
  const int n = x.size();
  CMatrix m = CMatrix::Zero(n, n);
  for (int c = 0; c < n; ++c)
    if (x.image[c] >= 0) m(x.image[c], c) = 1.0;
  TruncatedOperator op;
  op.matrix = std::move(m);
  op.safe_dim = n;
  op.defect_bound = 0;
  op.norm_bound = 1;
  op.displacement = lower_bandwidth(op.matrix);
  return op;
}

RegularLawReport regular_law_check(const SemigroupSpec& spec, const Rational& bound,
                              int word_len, int samples, std::uint64_t seed,
                              long search_bound) {
  const Window window(spec, bound, search_bound);
  std::vector<PartialBij> generators;
  generators.reserve(window.size());
  for (int i = 0; i < window.size(); ++i) generators.push_back(rep_op(window, window.at(i)));

  RegularLawReport report;
  report.window_size = window.size();
  report.seed = seed;
  report.min_domain = window.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_len(1, word_len);
  std::uniform_int_distribution<int> pick_gen(0, window.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);

  double domain_total = 0;
  for (int trial = 0; trial < samples; ++trial) {
    const int len = pick_len(rng);
    PartialBij x = identity_bij(window.size());
    for (int i = 0; i < len; ++i) {
      PartialBij g = generators[pick_gen(rng)];
      if (coin(rng)) g = pb_star(g);
      x = pb_compose(x, g);
    }
    const PartialBij back = pb_compose(pb_compose(x, pb_star(x)), x);
    ++report.words_checked;
    if (!(back == x)) ++report.failures;
    report.min_domain = std::min(report.min_domain, x.domain_size());
    domain_total += x.domain_size();
  }
  report.mean_domain = samples > 0 ? domain_total / samples : 0.0;
  return report;
}

}  // namespace tzlab
