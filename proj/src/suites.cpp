#include "gotzmann/suites.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

namespace gotzmann {

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1_3:
      return "L1_3";
    case LemmaId::L1_4:
      return "L1_4";
    case LemmaId::L1_5:
      return "L1_5";
    case LemmaId::L1_6:
      return "L1_6";
    case LemmaId::L1_7:
      return "L1_7";
    case LemmaId::L2_1:
      return "L2_1";
    case LemmaId::L2_2:
      return "L2_2";
    case LemmaId::ClaimSharp:
      return "claim_sharp";
    case LemmaId::Macaulay1:
      return "macaulay_1";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view name) {
  for (LemmaId id : all_lemma_ids()) {
    if (to_string(id) == name) {
      return id;
    }
  }
  return std::nullopt;
}

std::vector<LemmaId> all_lemma_ids() {
  return {LemmaId::L1_3, LemmaId::L1_4, LemmaId::L1_5,       LemmaId::L1_6,
          LemmaId::L1_7, LemmaId::L2_1, LemmaId::L2_2,       LemmaId::ClaimSharp,
          LemmaId::Macaulay1};
}

std::string LemmaReport::to_string() const {
  std::ostringstream os;
  os << "lemma=" << lemma << " range=" << range << " cases=" << cases
     << " violations=" << violations.size() << '\n';
  for (const auto& v : violations) {
    os << "violation: " << v << '\n';
  }
  return os.str();
}

namespace {

using Body = std::function<void(std::uint64_t, std::uint64_t, LemmaReport&)>;

// Runs body over [0, total) in `workers` contiguous chunks and merges the
// partial reports in chunk order, so the merged report is byte-identical
// to a single-threaded run.
void sweep_partitioned(std::uint64_t total, int workers, const Body& body,
                       LemmaReport& report) {
  workers = std::clamp(workers, 1, 64);
  if (workers == 1 || total < 2) {
    body(0, total, report);
    return;
  }
  std::vector<LemmaReport> parts(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = total / static_cast<std::uint64_t>(workers) *
                           static_cast<std::uint64_t>(w) +
                       std::min<std::uint64_t>(static_cast<std::uint64_t>(w),
                                               total % static_cast<std::uint64_t>(workers));
    std::uint64_t len = total / static_cast<std::uint64_t>(workers) +
                        (static_cast<std::uint64_t>(w) <
                                 total % static_cast<std::uint64_t>(workers)
                             ? 1
                             : 0);
    threads.emplace_back([&, w, lo, len] {
      try {
        body(lo, lo + len, parts[static_cast<std::size_t>(w)]);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  for (const auto& p : parts) {
    report.cases += p.cases;
    report.violations.insert(report.violations.end(), p.violations.begin(),
                             p.violations.end());
  }
}

long or_default(long value, long fallback) { return value > 0 ? value : fallback; }
int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

// Lazily filled table of up(h, n) values, used by the dense numeric
// sweeps where the same small arguments recur millions of times.
class UpMemo {
 public:
  UpMemo(int max_n, long max_h)
      : max_h_(max_h),
        values_(static_cast<std::size_t>(max_n + 1) * static_cast<std::size_t>(max_h + 1)),
        filled_(values_.size(), 0) {}

  const Int& get(long h, int n) {
    std::size_t idx = static_cast<std::size_t>(n) * static_cast<std::size_t>(max_h_ + 1) +
                      static_cast<std::size_t>(h);
    if (!filled_[idx]) {
      values_[idx] = up(Int(h), n);
      filled_[idx] = 1;
    }
    return values_[idx];
  }

 private:
  long max_h_;
  std::vector<Int> values_;
  std::vector<char> filled_;
};

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

std::string tuple_str(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) {
      os << ' ';
    }
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

std::string excerpt(const MonomialSet& v) {
  std::ostringstream os;
  os << "n=" << v.nvars() << " d=" << v.degree() << ":";
  for (const auto& m : v.members()) {
    os << ' ' << to_string(m);
  }
  return os.str();
}

// ---- numeric sweeps -------------------------------------------------

LemmaReport run_l1_3(const SuiteOptions& opt) {
  const long max_h = or_default(opt.max_h, 50L);
  const int max_n = or_default(opt.max_n, 6);
  LemmaReport report;
  report.lemma = "L1_3";
  report.range = "h<=" + std::to_string(max_h) + ",n<=" + std::to_string(max_n) +
                 ",alpha<=h";
  std::uint64_t total =
      static_cast<std::uint64_t>(max_h + 1) * static_cast<std::uint64_t>(max_n);
  sweep_partitioned(total, opt.workers,
                    [&](std::uint64_t lo, std::uint64_t hi, LemmaReport& r) {
                      for (std::uint64_t idx = lo; idx < hi; ++idx) {
                        int n = static_cast<int>(idx / static_cast<std::uint64_t>(max_h + 1)) + 1;
                        long h = static_cast<long>(idx % static_cast<std::uint64_t>(max_h + 1));
                        Int lhs = binom(h + n, n);
                        for (long alpha = 1; alpha <= h; ++alpha) {
                          std::vector<BinomialTerm> rhs;
                          rhs.push_back({Int(alpha - 1 + n), n});
                          for (long i = alpha; i <= h; ++i) {
                            rhs.push_back({Int(i + n - 1), n - 1});
                          }
                          bool plain = eval_terms(rhs) == lhs;
                          bool shifted =
                              eval_terms(shift_plus_one(rhs)) == binom(h + n + 1, n);
                          if (!plain || !shifted) {
                            r.violations.push_back(tuple_str(
                                {{"h", std::to_string(h)},
                                 {"n", std::to_string(n)},
                                 {"alpha", std::to_string(alpha)},
                                 {"form", plain ? "shifted" : "plain"}}));
                          }
                          ++r.cases;
                        }
                      }
                    },
                    report);
  return report;
}

LemmaReport run_l1_4(const SuiteOptions& opt) {
  const long max_h = or_default(opt.max_h, 10000L);
  const int max_n = or_default(opt.max_n, 8);
  LemmaReport report;
  report.lemma = "L1_4";
  report.range = "h<=" + std::to_string(max_h) + ",n<=" + std::to_string(max_n);
  std::uint64_t total =
      static_cast<std::uint64_t>(max_h) * static_cast<std::uint64_t>(max_n);
  sweep_partitioned(total, opt.workers,
                    [&](std::uint64_t lo, std::uint64_t hi, LemmaReport& r) {
                      for (std::uint64_t idx = lo; idx < hi; ++idx) {
                        int n = static_cast<int>(idx / static_cast<std::uint64_t>(max_h)) + 1;
                        long h = static_cast<long>(idx % static_cast<std::uint64_t>(max_h)) + 1;
                        if (up(h, n) != h + down(h, n)) {
                          r.violations.push_back(tuple_str(
                              {{"h", std::to_string(h)}, {"n", std::to_string(n)}}));
                        }
                        ++r.cases;
                      }
                    },
                    report);
  return report;
}

LemmaReport run_l1_5(const SuiteOptions& opt) {
  const long max_a = or_default(opt.max_a, 500L);
  const long max_b = or_default(opt.max_b, max_a);
  const int max_n = or_default(opt.max_n, 6);
  LemmaReport report;
  report.lemma = "L1_5";
  report.range = "a<=" + std::to_string(max_a) + ",b<=" + std::to_string(max_b) +
                 ",n<=" + std::to_string(max_n);
  std::uint64_t per_n = static_cast<std::uint64_t>(max_a) * static_cast<std::uint64_t>(max_b);
  std::uint64_t total = per_n * static_cast<std::uint64_t>(max_n);
  sweep_partitioned(
      total, opt.workers,
      [&](std::uint64_t lo, std::uint64_t hi, LemmaReport& r) {
        UpMemo memo(max_n, max_a + max_b);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          int n = static_cast<int>(idx / per_n) + 1;
          long a = static_cast<long>((idx % per_n) / static_cast<std::uint64_t>(max_b)) + 1;
          long b = static_cast<long>(idx % static_cast<std::uint64_t>(max_b)) + 1;
          if (!(memo.get(a, n) + memo.get(b, n) > memo.get(a + b, n))) {
            r.violations.push_back(tuple_str({{"a", std::to_string(a)},
                                              {"b", std::to_string(b)},
                                              {"n", std::to_string(n)}}));
          }
          ++r.cases;
        }
      },
      report);
  return report;
}

LemmaReport run_l1_7(const SuiteOptions& opt) {
  const long max_h = or_default(opt.max_h, 10000L);
  const int max_n = or_default(opt.max_n, 7);
  LemmaReport report;
  report.lemma = "L1_7";
  report.range = "h<=" + std::to_string(max_h) + ",n<=" + std::to_string(max_n);
  std::uint64_t total =
      static_cast<std::uint64_t>(max_h) * static_cast<std::uint64_t>(max_n);
  sweep_partitioned(total, opt.workers,
                    [&](std::uint64_t lo, std::uint64_t hi, LemmaReport& r) {
                      for (std::uint64_t idx = lo; idx < hi; ++idx) {
                        int n = static_cast<int>(idx / static_cast<std::uint64_t>(max_h)) + 1;
                        long h = static_cast<long>(idx % static_cast<std::uint64_t>(max_h)) + 1;
                        if (!(up(h, n) < up(h, n + 1))) {
                          r.violations.push_back(tuple_str(
                              {{"h", std::to_string(h)}, {"n", std::to_string(n)}}));
                        }
                        ++r.cases;
                      }
                    },
                    report);
  return report;
}

// One instance of the three-term inequality; on equality the doubled
// identity must follow exactly.
void check_l1_6_case(const Int& big, int n, const Int& a, const Int& b, const Int& c,
                     long alpha, LemmaReport& r) {
  Int up_big = up(big, n);
  Int up_a = up(a, n);
  Int up_b = up(b, n);
  Int up_c = up(c, n);
  Int lhs = up_big + up_a;
  Int rhs = up_b + up_c;
  const char* which = nullptr;
  if (lhs > rhs) {
    which = "inequality";
  } else if (lhs == rhs &&
             up(up_big, n) + up(up_a, n) != up(up_b, n) + up(up_c, n)) {
    which = "equality-propagation";
  }
  if (which != nullptr) {
    r.violations.push_back(tuple_str({{"n", std::to_string(n)},
                                      {"alpha", std::to_string(alpha)},
                                      {"a", a.get_str()},
                                      {"b", b.get_str()},
                                      {"c", c.get_str()},
                                      {"check", which}}));
  }
  ++r.cases;
}

LemmaReport run_l1_6(const SuiteOptions& opt) {
  const int max_n = or_default(opt.max_n, 3);
  const int max_alpha = or_default(opt.max_alpha, 6);
  const long samples = opt.samples >= 0 ? opt.samples : 10000;

  struct Cell {
    int n;
    long alpha;
    std::uint64_t big;    // C(alpha + n, n)
    std::uint64_t cases;  // #{(a, b): 1 <= a, a < b <= big - 1}
    std::uint64_t offset;
  };
  std::vector<Cell> cells;
  std::uint64_t exhaustive_total = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (long alpha = 1; alpha <= max_alpha; ++alpha) {
      Int big = binom(alpha + n, n);
      if (!big.fits_ulong_p()) {
        throw std::invalid_argument("L1_6: exhaustive cell too large");
      }
      std::uint64_t m = big.get_ui();
      std::uint64_t count = m >= 2 ? (m - 2) * (m - 1) / 2 : 0;
      cells.push_back({n, alpha, m, count, exhaustive_total});
      exhaustive_total += count;
    }
  }

  LemmaReport report;
  report.lemma = "L1_6";
  report.range = "exhaustive:n<=" + std::to_string(max_n) + ",alpha<=" +
                 std::to_string(max_alpha) + ";sampled:samples=" + std::to_string(samples) +
                 ",seed=" + std::to_string(opt.seed);

  std::uint64_t total = exhaustive_total + static_cast<std::uint64_t>(samples);
  sweep_partitioned(
      total, opt.workers,
      [&](std::uint64_t lo, std::uint64_t hi, LemmaReport& r) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          if (idx < exhaustive_total) {
            // Locate the cell, then the (a, b) pair: for each a the b
            // values a+1 .. big-1 form a block of big-1-a ranks.
            auto it = std::upper_bound(cells.begin(), cells.end(), idx,
                                       [](std::uint64_t v, const Cell& c) {
                                         return v < c.offset + c.cases;
                                       });
            const Cell& cell = *it;
            std::uint64_t rest = idx - cell.offset;
            std::uint64_t a = 1;
            while (rest >= cell.big - 1 - a) {
              rest -= cell.big - 1 - a;
              ++a;
            }
            std::uint64_t b = a + 1 + rest;
            Int big(static_cast<unsigned long>(cell.big));
            check_l1_6_case(big, cell.n, Int(static_cast<unsigned long>(a)),
                            Int(static_cast<unsigned long>(b)),
                            big + Int(static_cast<unsigned long>(a)) -
                                Int(static_cast<unsigned long>(b)),
                            cell.alpha, r);
          } else {
            // Seeded sample with its own stream, so any partition of the
            // index space draws identical tuples.
            std::uint64_t s = idx - exhaustive_total;
            SplitMix64 rng{opt.seed ^ ((s + 1) * 0x2545F4914F6CDD1Dull)};
            int n;
            long alpha;
            std::uint64_t big;
            for (;;) {
              n = 1 + static_cast<int>(rng.next() % 8);
              alpha = 1 + static_cast<long>(rng.next() % 40);
              Int c = binom(alpha + n, n);
              if (c >= 3 && c <= 10000000) {
                big = c.get_ui();
                break;
              }
            }
            std::uint64_t a = 1 + rng.next() % (big - 2);
            std::uint64_t b = a + 1 + rng.next() % (big - 1 - a);
            check_l1_6_case(Int(static_cast<unsigned long>(big)), n,
                            Int(static_cast<unsigned long>(a)),
                            Int(static_cast<unsigned long>(b)),
                            Int(static_cast<unsigned long>(big + a - b)), alpha, r);
          }
        }
      },
      report);
  return report;
}

// ---- set sweeps ------------------------------------------------------

struct SetCell {
  int n;
  int d;
};

std::vector<SetCell> resolve_cells(const SuiteOptions& opt, int min_vars) {
  if (opt.n_vars > 0 || opt.degree >= 0) {
    if (opt.n_vars <= 0 || opt.degree < 0) {
      throw std::invalid_argument("set sweep: both n and d must be given");
    }
    if (opt.n_vars < min_vars) {
      throw std::invalid_argument("set sweep: needs at least " + std::to_string(min_vars) +
                                  " variables");
    }
    return {{opt.n_vars, opt.degree}};
  }
  std::vector<SetCell> cells;
  for (int d = 0; d <= 4; ++d) {
    cells.push_back({2, d});
  }
  for (int d = 0; d <= 3; ++d) {
    cells.push_back({3, d});
  }
  cells.push_back({4, 2});
  return cells;
}

std::string cells_range(const std::vector<SetCell>& cells, std::uint64_t subsets) {
  if (cells.size() == 1) {
    return "n=" + std::to_string(cells[0].n) + ",d=" + std::to_string(cells[0].d) +
           ",subsets=" + std::to_string(subsets);
  }
  return "cells=(2,d<=4)(3,d<=3)(4,d=2)";
}

struct SubsetBlock {
  int n;
  int d;
  std::size_t size;
  std::uint64_t count;
  std::uint64_t offset;
};

std::vector<SubsetBlock> make_blocks(const std::vector<SetCell>& cells,
                                     std::uint64_t budget, std::uint64_t& total) {
  std::vector<SubsetBlock> blocks;
  total = 0;
  for (const auto& cell : cells) {
    Int m = monomial_count(cell.n, cell.d);
    if (m > 62 || (std::uint64_t{1} << m.get_ui()) > budget) {
      throw BudgetExceeded("cell (n=" + std::to_string(cell.n) + ", d=" +
                           std::to_string(cell.d) + ") exceeds the subset budget");
    }
    std::size_t mm = m.get_ui();
    for (std::size_t a = 0; a <= mm; ++a) {
      std::uint64_t cnt = SubsetStream::count(cell.n, cell.d, a).get_ui();
      blocks.push_back({cell.n, cell.d, a, cnt, total});
      total += cnt;
    }
  }
  return blocks;
}

using SetCheck = std::function<void(const MonomialSet&, LemmaReport&)>;

LemmaReport run_set_sweep(const char* lemma, const SuiteOptions& opt, int min_vars,
                          const SetCheck& check) {
  std::vector<SetCell> cells = resolve_cells(opt, min_vars);
  std::uint64_t total = 0;
  std::vector<SubsetBlock> blocks = make_blocks(cells, opt.budget, total);
  LemmaReport report;
  report.lemma = lemma;
  report.range = cells_range(cells, total);
  sweep_partitioned(total, opt.workers,
                    [&](std::uint64_t lo, std::uint64_t hi, LemmaReport& r) {
                      for (const auto& blk : blocks) {
                        if (blk.offset + blk.count <= lo || blk.offset >= hi) {
                          continue;
                        }
                        std::uint64_t r0 = std::max(lo, blk.offset) - blk.offset;
                        std::uint64_t r1 = std::min(hi, blk.offset + blk.count) - blk.offset;
                        SubsetStream stream(blk.n, blk.d, blk.size, r0, r1, opt.budget);
                        while (auto v = stream.next()) {
                          check(*v, r);
                        }
                      }
                    },
                    report);
  return report;
}

bool disjoint(const MonomialSet& a, const MonomialSet& b) {
  for (const auto& m : a.members()) {
    if (b.contains(m)) {
      return false;
    }
  }
  return true;
}

LemmaReport run_macaulay_1(const SuiteOptions& opt) {
  return run_set_sweep("macaulay_1", opt, 1, [](const MonomialSet& v, LemmaReport& r) {
    Int bound = up(Int(static_cast<unsigned long>(v.size())), v.nvars() - 1);
    if (Int(static_cast<unsigned long>(shadow(v).size())) < bound) {
      r.violations.push_back("|MV| < " + bound.get_str() + " for V " + excerpt(v));
    }
    ++r.cases;
  });
}

LemmaReport run_l2_1(const SuiteOptions& opt) {
  return run_set_sweep("L2_1", opt, 2, [](const MonomialSet& v, LemmaReport& r) {
    if (v.empty()) {
      return;
    }
    int n = v.nvars();
    MonomialSet sh = shadow(v);
    Int shadow_size(static_cast<unsigned long>(sh.size()));
    Monomial u = set_gcd(v);
    for (int i = 1; i <= n; ++i) {
      SplitResult s = split(v, i);
      MonomialSet rs = restricted_shadow(s.dropped, i);
      MonomialSet xiv = multiply(v, Monomial::var(n, i));
      if (!rs.subset_of(sh) || !disjoint(rs, xiv)) {
        r.violations.push_back("i=" + std::to_string(i) + " containment fails for V " +
                               excerpt(v));
      }
      Int lower = up(Int(static_cast<unsigned long>(s.kept.size())), n - 1) +
                  up(Int(static_cast<unsigned long>(s.dropped.size())), n - 2);
      if (shadow_size < lower) {
        r.violations.push_back("i=" + std::to_string(i) + " bound fails for V " +
                               excerpt(v));
      }
      bool equality = shadow_size == lower;
      bool characterized =
          is_gotzmann(s.kept) &&
          is_gotzmann(restrict_vars(divide_out(s.dropped, u), i)) &&
          multiply(s.dropped, Monomial::var(n, i))
              .subset_of(restricted_shadow(s.kept, i));
      if (equality != characterized) {
        r.violations.push_back("i=" + std::to_string(i) +
                               " equality characterization fails for V " + excerpt(v));
      }
      ++r.cases;
    }
  });
}

LemmaReport run_l2_2(const SuiteOptions& opt) {
  return run_set_sweep("L2_2", opt, 2, [](const MonomialSet& v, LemmaReport& r) {
    if (v.empty() || !is_gotzmann(v)) {
      return;
    }
    int n = v.nvars();
    Int size(static_cast<unsigned long>(v.size()));
    Int lower = remainder(size, n - 1).rem;
    Int upper = ddown(size, n - 1);
    for (int i = 1; i <= n; ++i) {
      Int dropped(static_cast<unsigned long>(split(v, i).dropped.size()));
      if (dropped < lower || dropped > upper) {
        r.violations.push_back("i=" + std::to_string(i) + " |D|=" + dropped.get_str() +
                               " outside [" + lower.get_str() + "," + upper.get_str() +
                               "] for V " + excerpt(v));
      }
      ++r.cases;
    }
  });
}

LemmaReport run_claim_sharp(const SuiteOptions& opt) {
  return run_set_sweep("claim_sharp", opt, 2, [](const MonomialSet& v, LemmaReport& r) {
    if (v.empty() || !is_gotzmann(v) || !set_gcd(v).is_one()) {
      return;
    }
    int n = v.nvars();
    Int upper = ddown(Int(static_cast<unsigned long>(v.size())), n - 1);
    bool uniform = true;
    for (int i = 1; i <= n && uniform; ++i) {
      uniform = Int(static_cast<unsigned long>(split(v, i).dropped.size())) == upper;
    }
    if (uniform &&
        Int(static_cast<unsigned long>(v.size())) != monomial_count(n, v.degree())) {
      r.violations.push_back("uniform |D_i| = ddown but V != M^d for V " + excerpt(v));
    }
    ++r.cases;
  });
}

}  // namespace

LemmaReport run_lemma_suite(LemmaId id, const SuiteOptions& opt) {
  if (opt.budget == 0) {
    throw std::invalid_argument("run_lemma_suite: budget must be positive");
  }
  if (opt.workers < 1) {
    throw std::invalid_argument("run_lemma_suite: workers must be positive");
  }
  switch (id) {
    case LemmaId::L1_3:
      return run_l1_3(opt);
    case LemmaId::L1_4:
      return run_l1_4(opt);
    case LemmaId::L1_5:
      return run_l1_5(opt);
    case LemmaId::L1_6:
      return run_l1_6(opt);
    case LemmaId::L1_7:
      return run_l1_7(opt);
    case LemmaId::L2_1:
      return run_l2_1(opt);
    case LemmaId::L2_2:
      return run_l2_2(opt);
    case LemmaId::ClaimSharp:
      return run_claim_sharp(opt);
    case LemmaId::Macaulay1:
      return run_macaulay_1(opt);
  }
  throw std::invalid_argument("run_lemma_suite: unknown lemma");
}

}  // namespace gotzmann
