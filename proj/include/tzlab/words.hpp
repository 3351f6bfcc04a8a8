#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tzlab/hardy.hpp"

namespace tzlab {

/// Canonical element pi(n) pi*(m) of the bicyclic *-semigroup.
struct BicyclicWord {
  long n{0};
  long m{0};

  friend bool operator==(const BicyclicWord&, const BicyclicWord&) = default;
};

/// (n1,m1)(n2,m2) = (n1 + n2 - r, m2 + m1 - r) with r = min(m1, n2); this is
/// the rewriting pi*(1) pi(1) = 1 applied until no descent remains.
BicyclicWord bicyclic_multiply(BicyclicWord a, BicyclicWord b);

/// The involution (n,m) -> (m,n); a star(a) a = a holds identically.
BicyclicWord star(BicyclicWord a);

enum class Letter : std::uint8_t { P, Pstar, T, Tstar };

Letter star(Letter l);

/// Finite word over {p, p*, t, t*} with p = pi(1). Non-empty.
struct Word {
  std::vector<Letter> letters;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Involution: reverses the word and stars each letter.
Word star(const Word& w);

/// Parses dot-separated letters, e.g. "t.t*.p.p*".
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

/// p^n (p*)^m as a word.
Word word_of(BicyclicWord b);

/// Assignment of operators to the generator letters.
struct Realization {
  TruncatedOperator p;
  TruncatedOperator t;
};

/// Left-to-right product of the letters' operators. Checks the extension
/// axiom commutator_gap(P, T) <= 1e-8 first (PiExtensionViolation).
TruncatedOperator realize(const Word& w, const Realization& r);

struct LawCheckResult {
  bool pass{false};
  double residual{0};        // column-max of (W W* W - W) over the safe block
  double block_norm{0};      // spectral norm of the same block, for context
  int safe_dim{0};
};

/// Tests the inverse-semigroup law W W* W = W for the realized word on the
/// safe block. Genuine failures sit far above accumulated defects: the
/// Phi_1-realized witness t.t*.p.p* fails at residual ~0.11 while shift
/// realizations hold exactly.
LawCheckResult inverse_law_check(const Word& w, const Realization& r, double tol);

struct NormalFormReport {
  int max_len{0};
  int modes_per_component{0};
  long words_checked{0};
  long matched{0};
  std::vector<std::string> misses;  // words with no normal-form realization match

  bool pass() const { return misses.empty(); }
};

/// Enumerates every word up to max_len over {p,p*,t,t*}, realizes each on the
/// interleaved extension, and searches for an equal realization among the
/// normal-form words t^k t*^l p^n p*^m t^s t*^u with exponents <= max_len.
/// The realization must be the interleaved extension (pi1 = t^2 exactly).
NormalFormReport normal_form_conjecture_check(int max_len, const Realization& r);

}  // namespace tzlab
