#ifndef GOTZMANN_SUITES_HPP
#define GOTZMANN_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gotzmann/engine.hpp"

namespace gotzmann {

/// The verified statements. L1_x are numeric sweeps over representation
/// identities; the others enumerate monomial sets exhaustively.
enum class LemmaId {
  L1_3,        // telescoping expansion of C(h+n, n), plain and shifted
  L1_4,        // up(h, n) = h + down(h, n)
  L1_5,        // strict superadditivity: up(a) + up(b) > up(a+b)
  L1_6,        // three-term inequality and its equality propagation
  L1_7,        // up(h, n) < up(h, n+1)
  L2_1,        // split containment and shadow lower bound, with the
               // equality characterization
  L2_2,        // remainder <= |D_i| <= ddown for Gotzmann sets
  ClaimSharp,  // uniform |D_i| = ddown forces V = M^d
  Macaulay1,   // |MV| >= up(|V|, n-1) for arbitrary V
};

std::string to_string(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view name);
std::vector<LemmaId> all_lemma_ids();

/// Sweep configuration. Fields left at -1 take the per-lemma defaults,
/// which are the ranges the acceptance suite runs.
struct SuiteOptions {
  long max_h = -1;
  int max_n = -1;
  long max_a = -1;
  long max_b = -1;
  int max_alpha = -1;
  long samples = -1;
  std::uint64_t seed = 0;
  int n_vars = -1;  // set sweeps: fix a single (n, d) cell
  int degree = -1;
  std::uint64_t budget = kDefaultSubsetBudget;
  int workers = 1;
};

struct LemmaReport {
  std::string lemma;
  std::string range;
  std::uint64_t cases = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  std::string to_string() const;
};

/// Sweeps the lemma's parameter space and reports violations (expected
/// none). Deterministic: opt.workers > 1 partitions the sweep by index
/// ranges and produces the identical report.
LemmaReport run_lemma_suite(LemmaId id, const SuiteOptions& opt = {});

}  // namespace gotzmann

#endif  // GOTZMANN_SUITES_HPP
