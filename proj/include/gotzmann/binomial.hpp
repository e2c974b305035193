#ifndef GOTZMANN_BINOMIAL_HPP
#define GOTZMANN_BINOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gotzmann {

/// Exact arbitrary-precision integer. Binomial coefficients overflow 64
/// bits almost immediately, so every value in this library is an Int.
using Int = mpz_class;

/// C(a, b), exact. C(a, 0) = 1 and C(a, b) = 0 for b > a.
/// Negative arguments are rejected.
Int binom(const Int& a, const Int& b);

/// One summand C(top, bottom) of a binomial expansion.
struct BinomialTerm {
  Int top;     // h(j) + j
  int bottom;  // j

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// The Macaulay (nth binomial) representation of a positive integer:
///   h = C(h(n)+n, n) + C(h(n-1)+n-1, n-1) + ... + C(h(i)+i, i)
/// with h(n) >= ... >= h(i) >= 0 and i >= 1. Bottoms run consecutively
/// from `order` down to lowest().
struct BinomialRep {
  int order = 0;  // n
  std::vector<BinomialTerm> terms;

  int lowest() const { return terms.back().bottom; }  // i

  friend bool operator==(const BinomialRep&, const BinomialRep&) = default;
};

/// Greedy construction of the unique Macaulay representation.
/// Requires h >= 1 and n >= 1. The result is validated before return;
/// a validation failure indicates a bug and throws std::logic_error.
BinomialRep macaulay_rep(const Int& h, int n);

/// Exact value represented: rep_eval(macaulay_rep(h, n)) == h.
Int rep_eval(const BinomialRep& rep);

/// Order of the represented integers, computed on the zero-padded top
/// vectors (top(n), ..., top(i), 0, ..., 0) in lexicographic order.
/// Both representations must share the same order n.
std::strong_ordering rep_compare(const BinomialRep& a, const BinomialRep& b);

// Growth and compression operators. Boundary conventions:
//   up(0, n) = down(0, n) = ddown(0, n) = 0,
//   up(1, 0) = ddown(1, 0) = 1,  down(1, 0) = 0.
// h >= 2 with n = 0 has no defined value and is rejected.

/// h^<n>: every top index of the representation incremented by one.
Int up(const Int& h, int n);

/// h_<n>: every bottom index decremented by one. up(h,n) = h + down(h,n).
Int down(const Int& h, int n);

/// h_<<n>>: both indices decremented by one.
Int ddown(const Int& h, int n);

struct Remainder {
  Int alpha;
  Int rem;

  friend bool operator==(const Remainder&, const Remainder&) = default;
};

/// Splits h as C(alpha+n, n) + rem where alpha is the largest integer
/// with h - C(alpha+n, n) > 0 (and alpha = 0 for h = 1, where rem = 0).
/// Requires h >= 1, n >= 1. For h > 1: 1 <= rem <= C(alpha+n, n-1).
Remainder remainder(const Int& h, int n);

/// The [+1] shift: increments every top index of an arbitrary binomial
/// sum. The list need not be a valid Macaulay representation, but every
/// term must satisfy top >= bottom.
std::vector<BinomialTerm> shift_plus_one(std::vector<BinomialTerm> terms);

/// Sum of C(top, bottom) over an arbitrary term list.
Int eval_terms(const std::vector<BinomialTerm>& terms);

/// "C(3,2)+C(2,1)"
std::string to_string(const BinomialRep& rep);

std::string to_string(const Int& v);

}  // namespace gotzmann

#endif  // GOTZMANN_BINOMIAL_HPP
