#ifndef GOTZMANN_MONOMIAL_HPP
#define GOTZMANN_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gotzmann/binomial.hpp"

namespace gotzmann {

/// A monomial x1^a1 ... xn^an, stored as its exponent vector with the
/// total degree cached. Variable indices are 1-based in the API.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int n_vars);
  static Monomial var(int n_vars, int index);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int index) const { return exps_[static_cast<std::size_t>(index - 1)]; }
  const std::vector<int>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial times_var(int index) const;
  Monomial times(const Monomial& other) const;
  Monomial divided_by(const Monomial& u) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Lexicographic order: a < b iff the leftmost nonzero entry of b - a is
/// positive. Total on monomials with the same variable count.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// A set of same-degree monomials in a fixed variable context, kept
/// deduplicated and in strictly descending lexicographic order.
class MonomialSet {
 public:
  MonomialSet() = default;
  MonomialSet(int n_vars, int degree, std::vector<Monomial> members);

  int nvars() const { return n_vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Monomial>& members() const { return members_; }

  bool contains(const Monomial& m) const;
  bool subset_of(const MonomialSet& other) const;

  friend bool operator==(const MonomialSet& a, const MonomialSet& b) {
    return a.n_vars_ == b.n_vars_ && a.members_ == b.members_ &&
           (a.members_.empty() ? a.degree_ == b.degree_ : true);
  }

 private:
  int n_vars_ = 0;
  int degree_ = 0;
  std::vector<Monomial> members_;
};

/// |M^d| = C(d+n-1, n-1).
Int monomial_count(int n_vars, int degree);

/// M^d, the full set of degree-d monomials; M^0 = {1}.
MonomialSet all_monomials(int n_vars, int degree);

/// Lex(n, d, a): the a lex-greatest monomials of M^d. Generated front to
/// back, so a small segment of a huge M^d stays cheap.
MonomialSet lexsegment(int n_vars, int degree, const Int& a);

/// MV = {x_i v : v in V, i = 1..n}.
MonomialSet shadow(const MonomialSet& v);

/// Shadow by all variables except x_i.
MonomialSet restricted_shadow(const MonomialSet& v, int avoid_index);

/// uV.
MonomialSet multiply(const MonomialSet& v, const Monomial& u);

/// Componentwise minimum of the exponent vectors. V must be nonempty.
Monomial set_gcd(const MonomialSet& v);

/// The K_i/D_i decomposition of V by divisibility by x_i * gcd(V).
struct SplitResult {
  int index = 0;    // i
  Monomial gcd;     // u = gcd(V)
  MonomialSet kept;     // K_i(V): members divisible by x_i * u
  MonomialSet dropped;  // D_i(V) = V \ K_i(V)
};

/// Splits V at variable i. For |V| = 1 the convention is kept = V,
/// dropped = empty. Both parts are nonempty whenever |V| > 1.
SplitResult split(const MonomialSet& v, int index);

/// (1/u) V; u must divide every member.
MonomialSet divide_out(const MonomialSet& v, const Monomial& u);

/// Reinterprets V in the (n-1)-variable context with variable `index`
/// deleted. No member may involve that variable.
MonomialSet restrict_vars(const MonomialSet& v, int index);

// Text formats.
//
// Monomial: symbolic "x1^2*x3" (exponent 1 omitted, constant is "1") or a
// bare exponent vector "2 0 1". Serialization emits the symbolic form.
//
// Set file: header "n=<int> d=<int>", then one monomial per line in
// descending lexicographic order. Blank lines and '#' comments are
// ignored on input.

std::string to_string(const Monomial& m);
Monomial parse_monomial(std::string_view text, int n_vars);

std::string to_string(const MonomialSet& v);
MonomialSet parse_monomial_set(std::string_view text);

}  // namespace gotzmann

#endif  // GOTZMANN_MONOMIAL_HPP
