#include "tzlab/words.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "tzlab/errors.hpp"

namespace tzlab {

BicyclicWord bicyclic_multiply(BicyclicWord a, BicyclicWord b) {
  const long r = std::min(a.m, b.n);
  return BicyclicWord{a.n + b.n - r, b.m + a.m - r};
}

BicyclicWord star(BicyclicWord a) { return BicyclicWord{a.m, a.n}; }

Letter star(Letter l) {
  switch (l) {
    case Letter::P: return Letter::Pstar;
    case Letter::Pstar: return Letter::P;
    case Letter::T: return Letter::Tstar;
    case Letter::Tstar: return Letter::T;
  }
  throw Error("star: bad letter");
}

Word star(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(star(*it));
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '.')) {
    if (tok == "p") w.letters.push_back(Letter::P);
    else if (tok == "p*") w.letters.push_back(Letter::Pstar);
    else if (tok == "t") w.letters.push_back(Letter::T);
    else if (tok == "t*") w.letters.push_back(Letter::Tstar);
    else throw Error("parse_word: unknown letter '" + tok + "'");
  }
  if (w.letters.empty()) throw Error("parse_word: empty word");
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += '.';
    switch (w.letters[i]) {
      case Letter::P: out += "p"; break;
      case Letter::Pstar: out += "p*"; break;
      case Letter::T: out += "t"; break;
      case Letter::Tstar: out += "t*"; break;
    }
  }
  return out;
}

Word word_of(BicyclicWord b) {
  if (b.n + b.m < 1) throw Error("word_of: (0,0) is the empty product; words are non-empty");
  Word w;
  for (long i = 0; i < b.n; ++i) w.letters.push_back(Letter::P);
  for (long i = 0; i < b.m; ++i) w.letters.push_back(Letter::Pstar);
  return w;
}

namespace {

const TruncatedOperator& letter_op(Letter l, const Realization& r,
                                   const TruncatedOperator& pstar, const TruncatedOperator& tstar) {
  switch (l) {
    case Letter::P: return r.p;
    case Letter::Pstar: return pstar;
    case Letter::T: return r.t;
    case Letter::Tstar: return tstar;
  }
  throw Error("letter_op: bad letter");
}

TruncatedOperator identity_op(int n) {
  TruncatedOperator id;
  id.matrix = CMatrix::Identity(n, n);
  id.safe_dim = n;
  id.defect_bound = 0;
  id.norm_bound = 1;
  return id;
}

}  // namespace

TruncatedOperator realize(const Word& w, const Realization& r) {
  if (r.p.dim() != r.t.dim()) throw DimensionMismatch("realize: operators on different spaces");
  const double gap = commutator_gap(r.p, r.t);
  if (gap > 1e-8) {
    std::ostringstream msg;
    msg << "realize: pi(1) does not commute with T (gap " << gap << ")";
    throw PiExtensionViolation(msg.str());
  }
  const TruncatedOperator pstar = adjoint(r.p);
  const TruncatedOperator tstar = adjoint(r.t);
  TruncatedOperator acc = identity_op(r.p.dim());
  for (Letter l : w.letters) acc = compose(acc, letter_op(l, r, pstar, tstar));
  return acc;
}

LawCheckResult inverse_law_check(const Word& w, const Realization& r, double tol) {
  const TruncatedOperator op = realize(w, r);
  const TruncatedOperator triple = compose(compose(op, adjoint(op)), op);
  const CMatrix diff = triple.matrix - op.matrix;
  const int s = std::min(op.safe_dim, triple.safe_dim);

  LawCheckResult out;
  out.safe_dim = s;
  for (int j = 0; j < s; ++j)
    out.residual = std::max(out.residual, diff.col(j).norm());

  // spectral norm of the safe block, for scale context in reports
  if (s > 0 && diff.leftCols(s).norm() > 0) {
    const CMatrix block = diff.leftCols(s);
    CVector x = CVector::Constant(s, Complex(1.0 / std::sqrt(double(s)), 0.0));
    double lambda = 0;
    for (int it = 0; it < 200; ++it) {
      const CVector y = block.adjoint() * (block * x);
      const double next = y.norm();
      if (next == 0.0) break;
      const bool settled = std::fabs(next - lambda) <= 1e-12 * std::max(1.0, next);
      lambda = next;
      x = y / next;
      if (settled) break;
    }
    out.block_norm = std::sqrt(lambda);
  }
  out.pass = out.residual <= tol;
  return out;
}

namespace {

// Realizations on the interleaved extension are partial shifts with 0/1
// entries, so exact matrix keys are just the nonzero pattern.
std::string matrix_key(const CMatrix& m) {
  std::string key;
  const int n = static_cast<int>(m.rows());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (m(i, j) != Complex(0, 0)) {
        const long re = std::lround(m(i, j).real() * 1e10);
        const long im = std::lround(m(i, j).imag() * 1e10);
        key += std::to_string(i) + "," + std::to_string(j) + ":" +
               std::to_string(re) + "/" + std::to_string(im) + ";";
      }
  return key.empty() ? "0" : key;
}

}  // namespace

NormalFormReport normal_form_conjecture_check(int max_len, const Realization& r) {
  if (max_len < 1) throw Error("normal_form_conjecture_check: max_len must be positive");
  const int dim = r.p.dim();
  if ((compose(r.t, r.t).matrix - r.p.matrix).norm() > 1e-12)
    throw Error("normal_form_conjecture_check: realization is not the interleaved extension (pi(1) != T^2)");

  NormalFormReport report;
  report.max_len = max_len;
  report.modes_per_component = dim / 2;

  // Realizations of all normal-form words t^k t*^l p^n p*^m t^s t*^u with
  // exponents <= max_len, built with shared prefixes.
  std::unordered_map<std::string, char> normal_forms;
  const TruncatedOperator pstar = adjoint(r.p);
  const TruncatedOperator tstar = adjoint(r.t);
  const TruncatedOperator* stage_op[6] = {&r.t, &tstar, &r.p, &pstar, &r.t, &tstar};

  std::vector<TruncatedOperator> prefix(7);
  prefix[0] = identity_op(dim);
  // depth-first over exponent vectors
  std::vector<int> expo(6, 0);
  long nf_count = 0;
  auto descend = [&](auto&& self, int stage) -> void {
    if (stage == 6) {
      normal_forms.emplace(matrix_key(prefix[6].matrix), 1);
      ++nf_count;
      return;
    }
    prefix[stage + 1] = prefix[stage];
    for (expo[stage] = 0; expo[stage] <= max_len; ++expo[stage]) {
      if (expo[stage] > 0) prefix[stage + 1] = compose(prefix[stage + 1], *stage_op[stage]);
      self(self, stage + 1);
    }
  };
  descend(descend, 0);

  // Exhaustive words up to max_len, prefix-shared.
  const Letter alphabet[4] = {Letter::T, Letter::Tstar, Letter::P, Letter::Pstar};
  std::vector<Letter> current;
  auto walk = [&](auto&& self, const TruncatedOperator& acc, int remaining) -> void {
    if (!current.empty()) {
      ++report.words_checked;
      if (normal_forms.count(matrix_key(acc.matrix)))
        ++report.matched;
      else if (report.misses.size() < 32)
        report.misses.push_back(to_string(Word{current}));
      else if (report.misses.size() == 32)
        report.misses.push_back("...");
    }
    if (remaining == 0) return;
    for (Letter l : alphabet) {
      current.push_back(l);
      self(self, compose(acc, letter_op(l, r, pstar, tstar)), remaining - 1);
      current.pop_back();
    }
  };
  walk(walk, identity_op(dim), max_len);
  return report;
}

}  // namespace tzlab
