#include "gotzmann/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gotzmann {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) {
    throw std::invalid_argument("Monomial: needs at least one variable");
  }
  for (int e : exps_) {
    if (e < 0) {
      throw std::invalid_argument("Monomial: negative exponent");
    }
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(int n_vars) { return Monomial(std::vector<int>(n_vars, 0)); }

Monomial Monomial::var(int n_vars, int index) {
  if (index < 1 || index > n_vars) {
    throw std::invalid_argument("Monomial::var: index out of range");
  }
  std::vector<int> e(n_vars, 0);
  e[static_cast<std::size_t>(index - 1)] = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) {
    throw std::invalid_argument("Monomial::divides: mismatched variable counts");
  }
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::times_var(int index) const {
  Monomial m = *this;
  if (index < 1 || index > nvars()) {
    throw std::invalid_argument("Monomial::times_var: index out of range");
  }
  m.exps_[static_cast<std::size_t>(index - 1)] += 1;
  m.degree_ += 1;
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars()) {
    throw std::invalid_argument("Monomial::times: mismatched variable counts");
  }
  Monomial m = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    m.exps_[k] += other.exps_[k];
  }
  m.degree_ += other.degree_;
  return m;
}

Monomial Monomial::divided_by(const Monomial& u) const {
  if (!u.divides(*this)) {
    throw std::invalid_argument("Monomial::divided_by: not divisible");
  }
  Monomial m = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    m.exps_[k] -= u.exps_[k];
  }
  m.degree_ -= u.degree_;
  return m;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("lex_compare: mismatched variable counts");
  }
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    if (ea[k] != eb[k]) {
      return ea[k] < eb[k] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

MonomialSet::MonomialSet(int n_vars, int degree, std::vector<Monomial> members)
    : n_vars_(n_vars), degree_(degree), members_(std::move(members)) {
  if (n_vars_ < 1) {
    throw std::invalid_argument("MonomialSet: needs at least one variable");
  }
  if (degree_ < 0) {
    throw std::invalid_argument("MonomialSet: negative degree");
  }
  for (const auto& m : members_) {
    if (m.nvars() != n_vars_ || m.degree() != degree_) {
      throw std::invalid_argument("MonomialSet: member outside the (n, d) context");
    }
  }
  std::sort(members_.begin(), members_.end(),
            [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; });
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool MonomialSet::contains(const Monomial& m) const {
  // Members are sorted descending.
  auto it = std::lower_bound(
      members_.begin(), members_.end(), m,
      [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; });
  return it != members_.end() && *it == m;
}

bool MonomialSet::subset_of(const MonomialSet& other) const {
  if (n_vars_ != other.n_vars_) {
    return false;
  }
  return std::includes(
      other.members_.begin(), other.members_.end(), members_.begin(), members_.end(),
      [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; });
}

Int monomial_count(int n_vars, int degree) {
  if (n_vars < 1 || degree < 0) {
    throw std::invalid_argument("monomial_count: invalid context");
  }
  return binom(degree + n_vars - 1, n_vars - 1);
}

namespace {

// Steps a degree-d exponent vector to its successor in descending lex
// order: decrement the rightmost nonzero entry before the last position
// and dump everything after it onto the next position. Returns false
// when e was already the minimum (all weight on the last variable).
bool next_desc(std::vector<int>& e) {
  int n = static_cast<int>(e.size());
  int j = -1;
  for (int k = n - 2; k >= 0; --k) {
    if (e[static_cast<std::size_t>(k)] > 0) {
      j = k;
      break;
    }
  }
  if (j < 0) {
    return false;
  }
  int tail = 0;
  for (int k = j + 1; k < n; ++k) {
    tail += e[static_cast<std::size_t>(k)];
    e[static_cast<std::size_t>(k)] = 0;
  }
  e[static_cast<std::size_t>(j)] -= 1;
  e[static_cast<std::size_t>(j + 1)] = tail + 1;
  return true;
}

}  // namespace

MonomialSet all_monomials(int n_vars, int degree) {
  Int count = monomial_count(n_vars, degree);
  if (!count.fits_ulong_p()) {
    throw std::length_error("all_monomials: set too large to materialize");
  }
  std::vector<Monomial> members;
  members.reserve(count.get_ui());
  std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
  e[0] = degree;
  do {
    members.emplace_back(e);
  } while (next_desc(e));
  return MonomialSet(n_vars, degree, std::move(members));
}

MonomialSet lexsegment(int n_vars, int degree, const Int& a) {
  Int count = monomial_count(n_vars, degree);
  if (a < 0 || a > count) {
    throw std::invalid_argument("lexsegment: size exceeds |M^d|");
  }
  if (!a.fits_ulong_p()) {
    throw std::length_error("lexsegment: segment too large to materialize");
  }
  unsigned long take = a.get_ui();
  std::vector<Monomial> members;
  members.reserve(take);
  std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
  e[0] = degree;
  for (unsigned long k = 0; k < take; ++k) {
    members.emplace_back(e);
    next_desc(e);
  }
  return MonomialSet(n_vars, degree, std::move(members));
}

MonomialSet shadow(const MonomialSet& v) {
  std::vector<Monomial> out;
  out.reserve(v.size() * static_cast<std::size_t>(v.nvars()));
  for (const auto& m : v.members()) {
    for (int i = 1; i <= v.nvars(); ++i) {
      out.push_back(m.times_var(i));
    }
  }
  return MonomialSet(v.nvars(), v.degree() + 1, std::move(out));
}

MonomialSet restricted_shadow(const MonomialSet& v, int avoid_index) {
  if (avoid_index < 1 || avoid_index > v.nvars()) {
    throw std::invalid_argument("restricted_shadow: index out of range");
  }
  std::vector<Monomial> out;
  for (const auto& m : v.members()) {
    for (int i = 1; i <= v.nvars(); ++i) {
      if (i != avoid_index) {
        out.push_back(m.times_var(i));
      }
    }
  }
  return MonomialSet(v.nvars(), v.degree() + 1, std::move(out));
}

MonomialSet multiply(const MonomialSet& v, const Monomial& u) {
  if (u.nvars() != v.nvars()) {
    throw std::invalid_argument("multiply: mismatched variable counts");
  }
  std::vector<Monomial> out;
  out.reserve(v.size());
  for (const auto& m : v.members()) {
    out.push_back(m.times(u));
  }
  return MonomialSet(v.nvars(), v.degree() + u.degree(), std::move(out));
}

Monomial set_gcd(const MonomialSet& v) {
  if (v.empty()) {
    throw std::invalid_argument("set_gcd: undefined for the empty set");
  }
  std::vector<int> e = v.members().front().exponents();
  for (const auto& m : v.members()) {
    const auto& me = m.exponents();
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = std::min(e[k], me[k]);
    }
  }
  return Monomial(std::move(e));
}

SplitResult split(const MonomialSet& v, int index) {
  if (v.empty()) {
    throw std::invalid_argument("split: empty set");
  }
  if (index < 1 || index > v.nvars()) {
    throw std::invalid_argument("split: index out of range");
  }
  SplitResult r;
  r.index = index;
  r.gcd = set_gcd(v);
  if (v.size() == 1) {
    r.kept = v;
    r.dropped = MonomialSet(v.nvars(), v.degree(), {});
    return r;
  }
  Monomial xiu = r.gcd.times_var(index);
  std::vector<Monomial> kept, dropped;
  for (const auto& m : v.members()) {
    (xiu.divides(m) ? kept : dropped).push_back(m);
  }
  r.kept = MonomialSet(v.nvars(), v.degree(), std::move(kept));
  r.dropped = MonomialSet(v.nvars(), v.degree(), std::move(dropped));
  return r;
}

MonomialSet divide_out(const MonomialSet& v, const Monomial& u) {
  if (u.nvars() != v.nvars()) {
    throw std::invalid_argument("divide_out: mismatched variable counts");
  }
  std::vector<Monomial> out;
  out.reserve(v.size());
  for (const auto& m : v.members()) {
    out.push_back(m.divided_by(u));  // throws if not divisible
  }
  if (v.empty() && u.degree() > v.degree()) {
    throw std::invalid_argument("divide_out: degree would become negative");
  }
  return MonomialSet(v.nvars(), v.degree() - u.degree(), std::move(out));
}

MonomialSet restrict_vars(const MonomialSet& v, int index) {
  if (v.nvars() < 2) {
    throw std::invalid_argument("restrict_vars: needs at least two variables");
  }
  if (index < 1 || index > v.nvars()) {
    throw std::invalid_argument("restrict_vars: index out of range");
  }
  std::vector<Monomial> out;
  out.reserve(v.size());
  for (const auto& m : v.members()) {
    if (m.exponent(index) != 0) {
      throw std::invalid_argument("restrict_vars: member involves the deleted variable");
    }
    std::vector<int> e = m.exponents();
    e.erase(e.begin() + (index - 1));
    out.emplace_back(std::move(e));
  }
  return MonomialSet(v.nvars() - 1, v.degree(), std::move(out));
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) {
    return "1";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) {
      continue;
    }
    if (!first) {
      os << '*';
    }
    os << 'x' << i;
    if (e > 1) {
      os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view s, const char* what) {
  if (s.empty()) {
    throw std::invalid_argument(std::string("expected ") + what);
  }
  int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(s) + "'");
    }
    if (value > 100000000) {
      throw std::invalid_argument(std::string(what) + " out of range");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n_vars) {
  std::string_view s = trim(text);
  if (s.empty()) {
    throw std::invalid_argument("parse_monomial: empty input");
  }
  if (s.find('x') != std::string_view::npos) {
    // Symbolic form: factors separated by '*'.
    std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t star = s.find('*', pos);
      std::string_view factor = trim(s.substr(pos, star == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : star - pos));
      if (factor.empty() || factor.front() != 'x') {
        throw std::invalid_argument("parse_monomial: bad factor in '" + std::string(text) + "'");
      }
      factor.remove_prefix(1);
      std::size_t caret = factor.find('^');
      int index = parse_int(factor.substr(0, caret), "variable index");
      int exp = caret == std::string_view::npos
                    ? 1
                    : parse_int(factor.substr(caret + 1), "exponent");
      if (index < 1 || index > n_vars) {
        throw std::invalid_argument("parse_monomial: variable index out of range");
      }
      if (exp < 1) {
        throw std::invalid_argument("parse_monomial: exponent must be positive");
      }
      e[static_cast<std::size_t>(index - 1)] += exp;
      if (star == std::string_view::npos) {
        break;
      }
      pos = star + 1;
    }
    return Monomial(std::move(e));
  }
  // Whitespace-separated tokens: either the constant "1" or a full
  // exponent vector.
  std::vector<std::string> tokens;
  {
    std::istringstream is{std::string(s)};
    std::string tok;
    while (is >> tok) {
      tokens.push_back(tok);
    }
  }
  if (tokens.size() == 1 && tokens[0] == "1") {
    return Monomial::one(n_vars);
  }
  if (tokens.size() != static_cast<std::size_t>(n_vars)) {
    throw std::invalid_argument("parse_monomial: expected " + std::to_string(n_vars) +
                                " exponents in '" + std::string(text) + "'");
  }
  std::vector<int> e;
  e.reserve(tokens.size());
  for (const auto& tok : tokens) {
    e.push_back(parse_int(tok, "exponent"));
  }
  return Monomial(std::move(e));
}

std::string to_string(const MonomialSet& v) {
  std::ostringstream os;
  os << "n=" << v.nvars() << " d=" << v.degree() << '\n';
  for (const auto& m : v.members()) {
    os << to_string(m) << '\n';
  }
  return os.str();
}

MonomialSet parse_monomial_set(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int n_vars = -1, degree = -1;
  std::vector<Monomial> members;
  while (std::getline(is, line)) {
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') {
      continue;
    }
    if (n_vars < 0) {
      // Header: "n=<int> d=<int>".
      std::size_t space = s.find(' ');
      if (s.substr(0, 2) != "n=" || space == std::string_view::npos) {
        throw std::invalid_argument("monomial set: missing 'n=<int> d=<int>' header");
      }
      std::string_view dpart = trim(s.substr(space + 1));
      if (dpart.substr(0, 2) != "d=") {
        throw std::invalid_argument("monomial set: missing 'd=' in header");
      }
      n_vars = parse_int(trim(s.substr(2, space - 2)), "variable count");
      degree = parse_int(dpart.substr(2), "degree");
      if (n_vars < 1) {
        throw std::invalid_argument("monomial set: n must be positive");
      }
      continue;
    }
    Monomial m = parse_monomial(s, n_vars);
    if (m.degree() != degree) {
      throw std::invalid_argument("monomial set: '" + std::string(s) + "' has degree " +
                                  std::to_string(m.degree()) + ", expected " +
                                  std::to_string(degree));
    }
    members.push_back(std::move(m));
  }
  if (n_vars < 0) {
    throw std::invalid_argument("monomial set: empty input");
  }
  return MonomialSet(n_vars, degree, std::move(members));
}

}  // namespace gotzmann
