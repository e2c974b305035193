#include "gotzmann/engine.hpp"

#include <sstream>
#include <utility>

namespace gotzmann {

namespace {

Int size_of(const MonomialSet& v) { return Int(static_cast<unsigned long>(v.size())); }

bool is_full_set(const MonomialSet& v) {
  // Members are deduplicated, so a cardinality match means equality.
  return size_of(v) == monomial_count(v.nvars(), v.degree());
}

std::string excerpt(const MonomialSet& v) {
  std::ostringstream os;
  os << "n=" << v.nvars() << " d=" << v.degree() << ":";
  for (const auto& m : v.members()) {
    os << ' ' << to_string(m);
  }
  return os.str();
}

}  // namespace

bool is_gotzmann(const MonomialSet& v) {
  return size_of(shadow(v)) == up(size_of(v), v.nvars() - 1);
}

std::vector<Int> shadow_size_chain(const MonomialSet& v, int steps) {
  if (steps < 0) {
    throw std::invalid_argument("shadow_size_chain: negative step count");
  }
  std::vector<Int> chain;
  chain.reserve(static_cast<std::size_t>(steps) + 1);
  MonomialSet w = v;
  chain.push_back(size_of(w));
  for (int k = 0; k < steps; ++k) {
    w = shadow(w);
    chain.push_back(size_of(w));
  }
  return chain;
}

bool verify_persistence(const MonomialSet& v, int steps) {
  if (steps < 1) {
    throw std::invalid_argument("verify_persistence: steps must be positive");
  }
  if (!is_gotzmann(v)) {
    throw std::invalid_argument("verify_persistence: input is not a Gotzmann set");
  }
  int n = v.nvars();
  MonomialSet w = v;
  for (int k = 0; k < steps; ++k) {
    MonomialSet next = shadow(w);
    if (size_of(next) != up(size_of(w), n - 1)) {
      return false;
    }
    w = std::move(next);
  }
  return true;
}

namespace {

// The three splitting conditions at index i, assuming gcd(V) = 1. The
// strict count bound is checked first: it is cheap and it keeps the
// degenerate up(b, n-2) call legal (n = 2 forces b = 0 before it runs).
bool splitting_conditions_hold(const MonomialSet& v, const SplitResult& s) {
  int n = v.nvars();
  Int a = size_of(v);
  Int b = size_of(s.dropped);
  Int c = size_of(s.kept);
  if (b >= ddown(a, n - 1)) {
    return false;
  }
  if (!is_gotzmann(s.kept)) {
    return false;
  }
  MonomialSet dropped_sub = restrict_vars(s.dropped, s.index);
  if (!is_gotzmann(dropped_sub)) {
    return false;
  }
  if (!multiply(s.dropped, Monomial::var(n, s.index))
           .subset_of(restricted_shadow(s.kept, s.index))) {
    return false;
  }
  return up(up(c, n - 1), n - 1) + up(up(b, n - 2), n - 2) == up(up(a, n - 1), n - 1);
}

}  // namespace

SplitResult find_splitting_index(const MonomialSet& v) {
  if (v.size() < 2) {
    throw std::invalid_argument("find_splitting_index: |V| must exceed 1");
  }
  if (!set_gcd(v).is_one()) {
    throw std::invalid_argument("find_splitting_index: gcd(V) must be 1");
  }
  if (is_full_set(v)) {
    throw std::invalid_argument("find_splitting_index: V must not be all of M^d");
  }
  if (!is_gotzmann(v)) {
    throw std::invalid_argument("find_splitting_index: input is not a Gotzmann set");
  }
  for (int i = 1; i <= v.nvars(); ++i) {
    SplitResult s = split(v, i);
    if (splitting_conditions_hold(v, s)) {
      return s;
    }
  }
  // Existence is guaranteed by the persistence theorem; reaching this
  // point means the build is broken.
  throw InternalInconsistency("no splitting index qualifies for " + excerpt(v));
}

PersistenceCertificate build_certificate(const MonomialSet& v) {
  if (v.empty()) {
    throw std::invalid_argument("build_certificate: empty set");
  }
  if (!is_gotzmann(v)) {
    throw std::invalid_argument("build_certificate: input is not a Gotzmann set");
  }
  PersistenceCertificate node;
  node.n_vars = v.nvars();
  node.degree = v.degree();
  node.gcd_removed = set_gcd(v);
  node.set_size = size_of(v);
  MonomialSet reduced = divide_out(v, node.gcd_removed);
  if (is_full_set(reduced)) {
    node.kind = CertKind::FullSet;
    return node;
  }
  if (reduced.size() == 1) {
    // Unreachable: a gcd-free singleton is {1} = M^0, caught above.
    node.kind = CertKind::Singleton;
    return node;
  }
  node.kind = CertKind::Split;
  SplitResult s = find_splitting_index(reduced);
  node.index = s.index;
  node.kept_count = size_of(s.kept);
  node.dropped_count = size_of(s.dropped);
  node.kept_child =
      std::make_unique<PersistenceCertificate>(build_certificate(s.kept));
  node.dropped_child = std::make_unique<PersistenceCertificate>(
      build_certificate(restrict_vars(s.dropped, s.index)));
  return node;
}

namespace {

CertCheck fail(const std::string& path, const std::string& why) {
  return {false, path + ": " + why};
}

CertCheck check_node(const PersistenceCertificate& cert, const MonomialSet& v,
                     const std::string& path) {
  if (v.empty()) {
    return fail(path, "empty set has no certificate");
  }
  if (cert.n_vars != v.nvars() || cert.degree != v.degree()) {
    return fail(path, "variable/degree context mismatch");
  }
  if (cert.set_size != size_of(v)) {
    return fail(path, "recorded size " + to_string(cert.set_size) + " != |V| = " +
                          std::to_string(v.size()));
  }
  Monomial u = set_gcd(v);
  if (!(u == cert.gcd_removed)) {
    return fail(path, "recorded gcd " + to_string(cert.gcd_removed) + " != gcd(V) = " +
                          to_string(u));
  }
  MonomialSet reduced = divide_out(v, u);

  switch (cert.kind) {
    case CertKind::FullSet:
      if (!is_full_set(reduced)) {
        return fail(path, "marked full but V/u != M^d");
      }
      if (cert.kept_child || cert.dropped_child) {
        return fail(path, "leaf with children");
      }
      return {true, {}};
    case CertKind::Singleton:
      if (reduced.size() != 1) {
        return fail(path, "marked singleton but |V| != 1");
      }
      if (cert.kept_child || cert.dropped_child) {
        return fail(path, "leaf with children");
      }
      return {true, {}};
    case CertKind::Split:
      break;
  }

  if (!cert.kept_child || !cert.dropped_child) {
    return fail(path, "split node missing children");
  }
  int n = reduced.nvars();
  if (n < 2) {
    return fail(path, "split node in a single variable");
  }
  if (cert.index < 1 || cert.index > n) {
    return fail(path, "split index out of range");
  }
  SplitResult s = split(reduced, cert.index);
  Int a = size_of(reduced);
  Int b = size_of(s.dropped);
  Int c = size_of(s.kept);
  if (b != cert.dropped_count || c != cert.kept_count) {
    return fail(path, "recorded counts (b=" + to_string(cert.dropped_count) +
                          ", c=" + to_string(cert.kept_count) + ") != recomputed (b=" +
                          to_string(b) + ", c=" + to_string(c) + ")");
  }
  if (a != b + c) {
    return fail(path, "count identity a = b + c fails");
  }
  if (b >= ddown(a, n - 1)) {
    return fail(path, "|D| = " + to_string(b) + " not strictly below ddown(" +
                          to_string(a) + ", " + std::to_string(n - 1) + ")");
  }
  if (remainder(a, n - 1).rem > b) {
    return fail(path, "|D| below the remainder lower bound");
  }
  // b < ddown(a, 1) = 1 would have failed above, so n >= 3 or b is 0/1
  // and the n-2 conventions apply.
  if (up(c, n - 1) + up(b, n - 2) != up(a, n - 1)) {
    return fail(path, "single growth identity fails");
  }
  if (up(up(c, n - 1), n - 1) + up(up(b, n - 2), n - 2) != up(up(a, n - 1), n - 1)) {
    return fail(path, "doubled growth identity fails");
  }
  if (!multiply(s.dropped, Monomial::var(n, cert.index))
           .subset_of(restricted_shadow(s.kept, cert.index))) {
    return fail(path, "x_i D not contained in the restricted shadow of K");
  }
  CertCheck kept = check_node(*cert.kept_child, s.kept, path + ".kept");
  if (!kept) {
    return kept;
  }
  return check_node(*cert.dropped_child, restrict_vars(s.dropped, cert.index),
                    path + ".dropped");
}

}  // namespace

CertCheck check_certificate(const PersistenceCertificate& cert, const MonomialSet& v) {
  return check_node(cert, v, "root");
}

namespace {

const char* kind_name(CertKind k) {
  switch (k) {
    case CertKind::FullSet:
      return "full";
    case CertKind::Singleton:
      return "singleton";
    case CertKind::Split:
      return "split";
  }
  return "?";
}

void text_node(const PersistenceCertificate& c, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << kind_name(c.kind)
     << " n=" << c.n_vars << " d=" << c.degree << " gcd=" << to_string(c.gcd_removed);
  if (c.kind == CertKind::Split) {
    os << " i=" << c.index << " a=" << to_string(c.set_size)
       << " b=" << to_string(c.dropped_count) << " c=" << to_string(c.kept_count);
  } else {
    os << " size=" << to_string(c.set_size);
  }
  os << '\n';
  if (c.kept_child) {
    text_node(*c.kept_child, depth + 1, os);
  }
  if (c.dropped_child) {
    text_node(*c.dropped_child, depth + 1, os);
  }
}

int machine_node(const PersistenceCertificate& c, int parent, int& next_id,
                 std::ostringstream& os) {
  int id = next_id++;
  os << parent << ' ' << kind_name(c.kind) << ' ' << c.index << ' '
     << to_string(c.gcd_removed) << ' ' << to_string(c.set_size) << ' '
     << (c.kind == CertKind::Split ? to_string(c.dropped_count) : "0") << ' '
     << (c.kind == CertKind::Split ? to_string(c.kept_count) : "0") << '\n';
  if (c.kept_child) {
    machine_node(*c.kept_child, id, next_id, os);
  }
  if (c.dropped_child) {
    machine_node(*c.dropped_child, id, next_id, os);
  }
  return id;
}

}  // namespace

std::string to_text(const PersistenceCertificate& cert) {
  std::ostringstream os;
  text_node(cert, 0, os);
  return os.str();
}

std::string to_machine(const PersistenceCertificate& cert) {
  std::ostringstream os;
  int next_id = 0;
  machine_node(cert, -1, next_id, os);
  return os.str();
}

namespace {

// Unranks `rank` into the ascending index combination of the given size
// over [0, m), in lexicographic order of combinations.
std::vector<std::size_t> unrank_combination(std::size_t m, std::size_t size,
                                            std::uint64_t rank) {
  std::vector<std::size_t> comb;
  comb.reserve(size);
  Int rest(static_cast<unsigned long>(rank));
  std::size_t v = 0;
  for (std::size_t j = 0; j < size; ++j) {
    for (;; ++v) {
      Int block = binom(static_cast<unsigned long>(m - 1 - v),
                        static_cast<unsigned long>(size - 1 - j));
      if (rest < block) {
        break;
      }
      rest -= block;
    }
    comb.push_back(v);
    ++v;
  }
  return comb;
}

// Advances an ascending combination over [0, m); false when exhausted.
bool next_combination(std::vector<std::size_t>& comb, std::size_t m) {
  std::size_t k = comb.size();
  for (std::size_t j = k; j-- > 0;) {
    if (comb[j] + (k - j) < m) {
      ++comb[j];
      for (std::size_t t = j + 1; t < k; ++t) {
        comb[t] = comb[t - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

Int SubsetStream::count(int n_vars, int degree, std::size_t size) {
  return binom(monomial_count(n_vars, degree), static_cast<unsigned long>(size));
}

SubsetStream::SubsetStream(int n_vars, int degree, std::size_t size, std::uint64_t budget) {
  Int total = count(n_vars, degree, size);
  if (total > Int(budget)) {
    throw BudgetExceeded("subset budget exceeded: C(|M^" + std::to_string(degree) + "|, " +
                         std::to_string(size) + ") = " + total.get_str());
  }
  init(n_vars, degree, size, 0, total.get_ui());
}

SubsetStream::SubsetStream(int n_vars, int degree, std::size_t size,
                           std::uint64_t begin_rank, std::uint64_t end_rank,
                           std::uint64_t budget) {
  Int total = count(n_vars, degree, size);
  if (total > Int(budget)) {
    throw BudgetExceeded("subset budget exceeded: " + total.get_str() + " subsets");
  }
  if (Int(begin_rank) > total || Int(end_rank) > total || begin_rank > end_rank) {
    throw std::invalid_argument("SubsetStream: rank range out of bounds");
  }
  init(n_vars, degree, size, begin_rank, end_rank);
}

void SubsetStream::init(int n_vars, int degree, std::size_t size, std::uint64_t begin_rank,
                        std::uint64_t end_rank) {
  universe_ = all_monomials(n_vars, degree);
  if (size > universe_.size()) {
    throw std::invalid_argument("SubsetStream: subset size exceeds |M^d|");
  }
  remaining_ = end_rank - begin_rank;
  if (remaining_ > 0) {
    comb_ = unrank_combination(universe_.size(), size, begin_rank);
  }
}

std::optional<MonomialSet> SubsetStream::next() {
  if (remaining_ == 0) {
    return std::nullopt;
  }
  std::vector<Monomial> members;
  members.reserve(comb_.size());
  for (std::size_t idx : comb_) {
    members.push_back(universe_.members()[idx]);
  }
  MonomialSet out(universe_.nvars(), universe_.degree(), std::move(members));
  --remaining_;
  if (remaining_ > 0) {
    next_combination(comb_, universe_.size());
  }
  return out;
}

std::optional<MonomialSet> GotzmannStream::next() {
  while (auto v = inner_.next()) {
    if (is_gotzmann(*v)) {
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace gotzmann
