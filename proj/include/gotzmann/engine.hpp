#ifndef GOTZMANN_ENGINE_HPP
#define GOTZMANN_ENGINE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gotzmann/binomial.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

/// Thrown when an enumeration would exceed the configured subset budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a verified theorem fails on concrete data. This never
/// fires on a correct build; it carries the counterexample.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// |MV| == up(|V|, n-1). True for the empty set.
bool is_gotzmann(const MonomialSet& v);

/// Sizes |M^i V| for i = 0..steps.
std::vector<Int> shadow_size_chain(const MonomialSet& v, int steps);

/// Iterates shadows of a Gotzmann set and checks that each step grows by
/// exactly up(., n-1). Requires is_gotzmann(v) and steps >= 1.
bool verify_persistence(const MonomialSet& v, int steps);

/// Finds the smallest variable index i such that the split of V at i
/// satisfies: K_i and D_i Gotzmann (D_i within the subring without x_i),
/// |D_i| strictly below ddown(|V|, n-1), x_i D_i contained in the
/// restricted shadow of K_i, and the doubled-growth identity
///   up(up(|K|,n-1),n-1) + up(up(|D|,n-2),n-2) = up(up(|V|,n-1),n-1).
/// Requires: V Gotzmann, gcd(V) = 1, V != M^d, |V| > 1. An exhaustion of
/// all indices would contradict the persistence theorem and throws
/// InternalInconsistency.
SplitResult find_splitting_index(const MonomialSet& v);

enum class CertKind { FullSet, Singleton, Split };

/// A recursive witness that a Gotzmann set keeps meeting the Macaulay
/// bound with equality under iterated shadows. Each node records the gcd
/// stripped from its set; Split nodes recurse into K_i (same variables)
/// and D_i (variable i deleted).
struct PersistenceCertificate {
  CertKind kind = CertKind::FullSet;
  int n_vars = 0;
  int degree = 0;       // of the node's input set, before the gcd strip
  Monomial gcd_removed;
  Int set_size;         // a = |V|
  // Split nodes only:
  int index = 0;        // i
  Int kept_count;       // c = |K_i(V)|
  Int dropped_count;    // b = |D_i(V)|
  std::unique_ptr<PersistenceCertificate> kept_child;
  std::unique_ptr<PersistenceCertificate> dropped_child;
};

/// Builds the certificate for a nonempty Gotzmann set.
PersistenceCertificate build_certificate(const MonomialSet& v);

struct CertCheck {
  bool ok = false;
  std::string diagnostic;  // node path and reason when !ok

  explicit operator bool() const { return ok; }
};

/// Revalidates every node of `cert` against the actual set: gcds, splits,
/// counts, the numeric growth identities and the containment condition
/// are all recomputed. Never throws on a bad certificate; returns false
/// with a diagnostic instead.
CertCheck check_certificate(const PersistenceCertificate& cert, const MonomialSet& v);

/// Indented human-readable tree.
std::string to_text(const PersistenceCertificate& cert);

/// One node per line, preorder: "<parent> <kind> <i> <u> <a> <b> <c>".
/// The line number (from 0) is the node id; the root has parent -1.
std::string to_machine(const PersistenceCertificate& cert);

inline constexpr std::uint64_t kDefaultSubsetBudget = std::uint64_t{1} << 20;

/// Streams every a-subset of M^d exactly once, ordered by the
/// combination ranks of the member indices into the lex-descending M^d.
/// Construction fails with BudgetExceeded when C(|M^d|, a) > budget, so
/// ranks always fit in 64 bits afterwards.
class SubsetStream {
 public:
  SubsetStream(int n_vars, int degree, std::size_t size,
               std::uint64_t budget = kDefaultSubsetBudget);

  /// Rank-partitioned stream over [begin_rank, end_rank).
  SubsetStream(int n_vars, int degree, std::size_t size, std::uint64_t begin_rank,
               std::uint64_t end_rank, std::uint64_t budget = kDefaultSubsetBudget);

  /// C(|M^d|, size).
  static Int count(int n_vars, int degree, std::size_t size);

  std::optional<MonomialSet> next();

 private:
  void init(int n_vars, int degree, std::size_t size, std::uint64_t begin_rank,
            std::uint64_t end_rank);

  MonomialSet universe_;
  std::vector<std::size_t> comb_;  // ascending indices into universe_
  std::uint64_t remaining_ = 0;
};

/// SubsetStream filtered to Gotzmann sets.
class GotzmannStream {
 public:
  GotzmannStream(int n_vars, int degree, std::size_t size,
                 std::uint64_t budget = kDefaultSubsetBudget)
      : inner_(n_vars, degree, size, budget) {}

  std::optional<MonomialSet> next();

 private:
  SubsetStream inner_;
};

}  // namespace gotzmann

#endif  // GOTZMANN_ENGINE_HPP
