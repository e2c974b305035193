#include "gotzmann/binomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gotzmann {

namespace {

// C(top, bottom) for small nonnegative bottom. GMP extends binomials to
// negative tops, which is not wanted here, so callers keep top >= 0.
Int binom_small(const Int& top, int bottom) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(bottom));
  return r;
}

// Largest t >= j with C(t, j) <= limit, for j >= 1 and limit >= 1.
// Exponential search followed by bisection; t can exceed 64 bits when
// j = 1 and limit is huge.
Int max_top(int j, const Int& limit) {
  Int lo = j;  // C(j, j) = 1 <= limit
  Int hi = j + 1;
  while (binom_small(hi, j) <= limit) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (binom_small(mid, j) <= limit) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void check_rep(const BinomialRep& rep, const Int& h) {
  bool ok = !rep.terms.empty() && rep.order >= 1;
  Int sum = 0;
  int expected_bottom = rep.order;
  Int prev_h;  // h(j+1)
  bool have_prev = false;
  for (const auto& t : rep.terms) {
    if (t.bottom != expected_bottom || t.bottom < 1 || t.top < t.bottom) {
      ok = false;
      break;
    }
    Int hj = t.top - t.bottom;
    if (have_prev && hj > prev_h) {
      ok = false;
      break;
    }
    prev_h = hj;
    have_prev = true;
    sum += binom_small(t.top, t.bottom);
    --expected_bottom;
  }
  if (!ok || sum != h) {
    throw std::logic_error("macaulay_rep: constructed representation is invalid for h=" +
                           h.get_str());
  }
}

}  // namespace

Int binom(const Int& a, const Int& b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("binom: negative argument");
  }
  if (b > a) {
    return 0;
  }
  Int k = b;
  if (a - b < k) {
    k = a - b;
  }
  if (!k.fits_ulong_p()) {
    throw std::overflow_error("binom: result would be astronomically large");
  }
  Int r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), k.get_ui());
  return r;
}

BinomialRep macaulay_rep(const Int& h, int n) {
  if (h < 1) {
    throw std::invalid_argument("macaulay_rep: h must be positive");
  }
  if (n < 1) {
    throw std::invalid_argument("macaulay_rep: n must be positive");
  }
  BinomialRep rep;
  rep.order = n;
  Int rem = h;
  for (int j = n; j >= 1 && rem > 0; --j) {
    Int t = max_top(j, rem);
    rem -= binom_small(t, j);
    rep.terms.push_back({std::move(t), j});
  }
  // The greedy choice drains rem at j = 1 at the latest (C(t,1) = t),
  // and forces strictly decreasing tops; check_rep verifies both.
  check_rep(rep, h);
  return rep;
}

Int rep_eval(const BinomialRep& rep) {
  Int sum = 0;
  for (const auto& t : rep.terms) {
    sum += binom_small(t.top, t.bottom);
  }
  return sum;
}

std::strong_ordering rep_compare(const BinomialRep& a, const BinomialRep& b) {
  if (a.order != b.order) {
    throw std::invalid_argument("rep_compare: mismatched representation orders");
  }
  for (int j = a.order; j >= 1; --j) {
    std::size_t k = static_cast<std::size_t>(a.order - j);
    // Tops of real terms are >= 1, so padding absent terms with 0 is safe.
    const Int ta = k < a.terms.size() ? a.terms[k].top : Int(0);
    const Int tb = k < b.terms.size() ? b.terms[k].top : Int(0);
    if (ta != tb) {
      return ta < tb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

// Shared convention handling for the three operators. Returns true when
// the value was settled by a boundary case.
bool boundary(const Int& h, int n, const Int& at_zero, const Int& one_at_zero, Int& out,
              const char* name) {
  if (h < 0 || n < 0) {
    throw std::invalid_argument(std::string(name) + ": negative argument");
  }
  if (h == 0) {
    out = at_zero;
    return true;
  }
  if (n == 0) {
    if (h == 1) {
      out = one_at_zero;
      return true;
    }
    throw std::invalid_argument(std::string(name) + ": undefined for h >= 2 with n = 0");
  }
  return false;
}

}  // namespace

Int up(const Int& h, int n) {
  Int out;
  if (boundary(h, n, 0, 1, out, "up")) {
    return out;
  }
  Int sum = 0;
  for (const auto& t : macaulay_rep(h, n).terms) {
    sum += binom_small(t.top + 1, t.bottom);
  }
  return sum;
}

Int down(const Int& h, int n) {
  Int out;
  if (boundary(h, n, 0, 0, out, "down")) {
    return out;
  }
  Int sum = 0;
  for (const auto& t : macaulay_rep(h, n).terms) {
    sum += binom_small(t.top, t.bottom - 1);
  }
  return sum;
}

Int ddown(const Int& h, int n) {
  Int out;
  if (boundary(h, n, 0, 1, out, "ddown")) {
    return out;
  }
  Int sum = 0;
  for (const auto& t : macaulay_rep(h, n).terms) {
    sum += binom_small(t.top - 1, t.bottom - 1);
  }
  return sum;
}

Remainder remainder(const Int& h, int n) {
  if (h < 1) {
    throw std::invalid_argument("remainder: h must be positive");
  }
  if (n < 1) {
    throw std::invalid_argument("remainder: n must be positive");
  }
  if (h == 1) {
    // max{alpha : 1 - C(alpha+n, n) > 0} ranges over negatives only, and
    // the outer max against 0 settles alpha = 0.
    return {0, 0};
  }
  // Largest alpha with C(alpha+n, n) < h, i.e. <= h-1.
  Int t = max_top(n, h - 1);
  Int rem = h - binom_small(t, n);
  return {t - n, std::move(rem)};
}

std::vector<BinomialTerm> shift_plus_one(std::vector<BinomialTerm> terms) {
  for (auto& t : terms) {
    if (t.top < t.bottom) {
      throw std::invalid_argument("shift_plus_one: term with top < bottom");
    }
    t.top += 1;
  }
  return terms;
}

Int eval_terms(const std::vector<BinomialTerm>& terms) {
  Int sum = 0;
  for (const auto& t : terms) {
    if (t.bottom < 0 || t.top < 0) {
      throw std::invalid_argument("eval_terms: negative index");
    }
    sum += binom_small(t.top, t.bottom);
  }
  return sum;
}

std::string to_string(const BinomialRep& rep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : rep.terms) {
    if (!first) {
      os << '+';
    }
    os << "C(" << t.top.get_str() << ',' << t.bottom << ')';
    first = false;
  }
  return os.str();
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace gotzmann
