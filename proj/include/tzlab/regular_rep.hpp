#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tzlab/hardy.hpp"
#include "tzlab/rational.hpp"

namespace tzlab {

/// Element of one of the supported countable totally ordered semigroups,
/// stored exactly as an integer pair whose meaning depends on the variant:
///   Zplus  -- the value a (b = 1);
///   Qn     -- the reduced rational a/b with b a divisor of base^depth;
///   Gamma  -- a + b*t for the interval-pinned irrational t.
struct Element {
  long long a{0};
  long long b{1};

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& x, const Element& y) {  // storage order only
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

/// Which semigroup, plus the exact data needed to decide order and sign.
/// For Gamma the generator t is known only through a rational interval
/// [t_lo, t_hi]; every sign decision is made at both endpoints and a
/// disagreement raises IndeterminateSign rather than guessing.
class SemigroupSpec {
 public:
  enum class Kind { Zplus, Qn, Gamma };

  static SemigroupSpec zplus();
  static SemigroupSpec qn(int base, int depth);
  static SemigroupSpec gamma(Rational t_lo, Rational t_hi);

  Kind kind() const { return kind_; }
  int base() const { return base_; }
  int depth() const { return depth_; }
  const Rational& t_lo() const { return t_lo_; }
  const Rational& t_hi() const { return t_hi_; }

  Element zero() const { return kind_ == Kind::Gamma ? Element{0, 0} : Element{0, 1}; }
  Element add(const Element& x, const Element& y) const;
  /// -1, 0, +1 by the semigroup's total order; IndeterminateSign if the
  /// Gamma interval cannot separate the two values.
  int compare(const Element& x, const Element& y) const;
  /// Sign of the value of x (for Gamma decided at both interval endpoints).
  int sign_of(const Element& x) const;
  std::string element_str(const Element& x) const;

 private:
  Kind kind_{Kind::Zplus};
  int base_{2};
  int depth_{0};
  Rational t_lo_{0}, t_hi_{0};
};

/// All elements with value in [0, B], exactly ordered. For Gamma the
/// candidate coefficients range over |m|, |q| <= search_bound.
class Window {
 public:
  Window(SemigroupSpec spec, Rational bound, long search_bound = 16);

  const SemigroupSpec& spec() const { return spec_; }
  const std::vector<Element>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Element& at(int i) const { return elements_[i]; }
  /// Index of an element, or -1 when outside the window.
  int find(const Element& e) const;

 private:
  SemigroupSpec spec_;
  std::vector<Element> elements_;
  std::map<Element, int> index_;
};

/// Partial injective self-map of a window; image[i] = -1 marks "undefined".
/// x compose star(x) compose x = x holds for every partial bijection, which
/// is the mechanism that makes regular representations inverse.
struct PartialBij {
  std::vector<int> image;

  int size() const { return static_cast<int>(image.size()); }
  int domain_size() const;
  friend bool operator==(const PartialBij&, const PartialBij&) = default;
};

PartialBij identity_bij(int size);

/// Regular-representation generator: c -> a + c where defined in the window.
PartialBij rep_op(const Window& w, const Element& a);

/// Set-theoretic inverse (exact).
PartialBij pb_star(const PartialBij& x);

/// (x o y)(c) = x(y(c)) on the domain where both are defined.
PartialBij pb_compose(const PartialBij& x, const PartialBij& y);

/// 0/1 matrix with entry (image, preimage) = 1 -- a partial isometry.
TruncatedOperator matrix_of(const PartialBij& x);

struct RegularLawReport {
  long words_checked{0};
  long failures{0};
  int window_size{0};
  int min_domain{0};       // smallest domain among sampled words
  double mean_domain{0};   // margin diagnostic for window-boundary truncation
  std::uint64_t seed{0};

  bool pass() const { return failures == 0; }
};

/// Samples words over {rep_op(g), star(rep_op(g))} and verifies x x* x = x
/// as exact equality of partial maps. Window truncation shrinks domains but
/// never breaks the law, so any failure is a bug.
RegularLawReport regular_law_check(const SemigroupSpec& spec, const Rational& bound,
                              int word_len, int samples, std::uint64_t seed,
                              long search_bound = 16);

}  // namespace tzlab
