#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gotzmann/monomial.hpp"
#include "oracles.hpp"

using namespace gotzmann;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialSet set_of(int n, int d, std::vector<std::vector<int>> vecs) {
  std::vector<Monomial> members;
  for (auto& v : vecs) {
    members.emplace_back(std::move(v));
  }
  return MonomialSet(n, d, std::move(members));
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial a = m({2, 0, 1});
  CHECK(a.degree() == 3);
  CHECK(a.nvars() == 3);
  CHECK(a.exponent(1) == 2);
  CHECK(Monomial::one(3).is_one());
  CHECK(Monomial::var(3, 2) == m({0, 1, 0}));
  CHECK_THROWS_AS(Monomial(std::vector<int>{1, -1}), std::invalid_argument);
  CHECK(m({1, 0}).divides(m({2, 1})));
  CHECK(!m({1, 2}).divides(m({2, 1})));
  CHECK(m({1, 1}).times_var(2) == m({1, 2}));
  CHECK(m({2, 1}).divided_by(m({1, 0})) == m({1, 1}));
  CHECK_THROWS_AS(m({2, 1}).divided_by(m({0, 2})), std::invalid_argument);
}

TEST_CASE("lex order") {
  CHECK(lex_compare(m({2, 0}), m({1, 1})) == std::strong_ordering::greater);
  CHECK(lex_compare(m({1, 1}), m({1, 1})) == std::strong_ordering::equal);
  // x2^2 < x1x3 in three variables
  CHECK(lex_compare(m({0, 2, 0}), m({1, 0, 1})) == std::strong_ordering::less);
  CHECK_THROWS_AS(lex_compare(m({1, 0}), m({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("monomial set canonical form") {
  MonomialSet v = set_of(2, 2, {{0, 2}, {2, 0}, {0, 2}, {1, 1}});
  REQUIRE(v.size() == 3);  // deduplicated
  CHECK(v.members()[0] == m({2, 0}));
  CHECK(v.members()[1] == m({1, 1}));
  CHECK(v.members()[2] == m({0, 2}));
  CHECK(v.contains(m({1, 1})));
  CHECK(!v.contains(m({0, 0})));

  CHECK_THROWS_AS(set_of(2, 2, {{1, 0}}), std::invalid_argument);  // wrong degree
  CHECK_THROWS_AS(set_of(3, 2, {{1, 1}}), std::invalid_argument);  // wrong nvars

  CHECK(set_of(2, 1, {{1, 0}}).subset_of(set_of(2, 1, {{1, 0}, {0, 1}})));
  CHECK(!set_of(2, 1, {{0, 1}}).subset_of(set_of(2, 1, {{1, 0}})));
}

TEST_CASE("all_monomials against the enumeration oracle") {
  MonomialSet m30 = all_monomials(3, 0);
  REQUIRE(m30.size() == 1);
  CHECK(m30.members()[0].is_one());

  CHECK(all_monomials(3, 2).size() == 6);
  CHECK(monomial_count(3, 2) == 6);

  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 4; ++d) {
      auto want = oracle::monomials(n, d);
      MonomialSet got = all_monomials(n, d);
      REQUIRE(got.size() == want.size());
      CHECK(Int(static_cast<unsigned long>(got.size())) == monomial_count(n, d));
      for (std::size_t k = 0; k < want.size(); ++k) {
        CHECK(got.members()[k].exponents() == want[k]);
      }
    }
  }
}

TEST_CASE("lexsegment takes the lex-greatest monomials") {
  MonomialSet seg = lexsegment(3, 2, 5);
  REQUIRE(seg.size() == 5);
  CHECK(seg.members()[0] == m({2, 0, 0}));
  CHECK(seg.members()[1] == m({1, 1, 0}));
  CHECK(seg.members()[2] == m({1, 0, 1}));
  CHECK(seg.members()[3] == m({0, 2, 0}));
  CHECK(seg.members()[4] == m({0, 1, 1}));

  CHECK(lexsegment(2, 3, 2) == set_of(2, 3, {{3, 0}, {2, 1}}));
  CHECK(lexsegment(3, 2, monomial_count(3, 2)) == all_monomials(3, 2));
  CHECK(lexsegment(3, 2, 0).empty());
  CHECK_THROWS_AS(lexsegment(3, 2, 7), std::invalid_argument);

  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 3; ++d) {
      auto all = oracle::monomials(n, d);
      for (std::size_t a = 0; a <= all.size(); ++a) {
        MonomialSet got = lexsegment(n, d, static_cast<unsigned long>(a));
        auto want = oracle::lexsegment(n, d, a);
        REQUIRE(got.size() == a);
        for (std::size_t k = 0; k < a; ++k) {
          CHECK(got.members()[k].exponents() == want[k]);
        }
      }
    }
  }
}

TEST_CASE("shadow") {
  CHECK(shadow(set_of(3, 0, {{0, 0, 0}})) == all_monomials(3, 1));
  CHECK(shadow(lexsegment(3, 2, 5)).size() == 9);
  CHECK(shadow(all_monomials(3, 2)) == all_monomials(3, 3));
  MonomialSet empty(2, 1, {});
  CHECK(shadow(empty).empty());
  CHECK(shadow(empty).degree() == 2);
}

TEST_CASE("restricted shadow") {
  MonomialSet v = set_of(3, 2, {{0, 2, 0}});
  CHECK(restricted_shadow(v, 1) == set_of(3, 3, {{0, 3, 0}, {0, 2, 1}}));
  CHECK(restricted_shadow(MonomialSet(3, 1, {}), 2).empty());
  CHECK(restricted_shadow(set_of(2, 2, {{1, 1}}), 1) == set_of(2, 3, {{1, 2}}));
  CHECK_THROWS_AS(restricted_shadow(v, 4), std::invalid_argument);
}

TEST_CASE("gcd") {
  CHECK(set_gcd(set_of(2, 3, {{2, 1}, {1, 2}})) == m({1, 1}));
  CHECK(set_gcd(set_of(2, 2, {{2, 0}, {0, 2}})).is_one());
  CHECK(set_gcd(set_of(2, 2, {{1, 1}})) == m({1, 1}));
  CHECK_THROWS_AS(set_gcd(MonomialSet(2, 2, {})), std::invalid_argument);
}

TEST_CASE("split") {
  SplitResult s = split(all_monomials(2, 2), 1);
  CHECK(s.gcd.is_one());
  CHECK(s.kept == set_of(2, 2, {{2, 0}, {1, 1}}));
  CHECK(s.dropped == set_of(2, 2, {{0, 2}}));

  SplitResult single = split(set_of(2, 2, {{1, 1}}), 2);
  CHECK(single.kept.size() == 1);
  CHECK(single.dropped.empty());

  SplitResult lexs = split(lexsegment(3, 2, 5), 1);
  CHECK(lexs.kept == set_of(3, 2, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
  CHECK(lexs.dropped == set_of(3, 2, {{0, 2, 0}, {0, 1, 1}}));

  CHECK_THROWS_AS(split(MonomialSet(2, 2, {}), 1), std::invalid_argument);
  CHECK_THROWS_AS(split(all_monomials(2, 2), 3), std::invalid_argument);

  // Partition: kept and dropped always partition V, and dropped is
  // nonempty whenever |V| > 1.
  MonomialSet universe = all_monomials(3, 2);
  for (std::size_t mask = 1; mask < (1u << universe.size()); ++mask) {
    std::vector<Monomial> members;
    for (std::size_t k = 0; k < universe.size(); ++k) {
      if (mask & (std::size_t{1} << k)) {
        members.push_back(universe.members()[k]);
      }
    }
    MonomialSet v(3, 2, std::move(members));
    for (int i = 1; i <= 3; ++i) {
      SplitResult r = split(v, i);
      CHECK(r.kept.size() + r.dropped.size() == v.size());
      CHECK(r.kept.subset_of(v));
      CHECK(r.dropped.subset_of(v));
      if (v.size() > 1) {
        CHECK(!r.dropped.empty());
      } else {
        CHECK(r.kept == v);
      }
    }
  }
}

TEST_CASE("divide_out and restrict_vars") {
  CHECK(divide_out(set_of(2, 3, {{2, 1}, {1, 2}}), m({1, 1})) ==
        set_of(2, 1, {{1, 0}, {0, 1}}));
  MonomialSet v = set_of(2, 2, {{2, 0}, {1, 1}});
  CHECK(divide_out(v, Monomial::one(2)) == v);
  CHECK(divide_out(set_of(1, 3, {{3}}), m({1})) == set_of(1, 2, {{2}}));
  CHECK_THROWS_AS(divide_out(v, m({0, 1})), std::invalid_argument);

  CHECK(restrict_vars(set_of(3, 2, {{0, 2, 0}, {0, 1, 1}}), 1) ==
        set_of(2, 2, {{2, 0}, {1, 1}}));
  CHECK(restrict_vars(MonomialSet(3, 2, {}), 2).nvars() == 2);
  CHECK(restrict_vars(set_of(3, 2, {{1, 0, 1}}), 2) == set_of(2, 2, {{1, 1}}));
  CHECK_THROWS_AS(restrict_vars(set_of(3, 2, {{1, 1, 0}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(restrict_vars(set_of(1, 2, {{2}}), 1), std::invalid_argument);
}

TEST_CASE("monomial text format") {
  CHECK(to_string(m({2, 0, 1})) == "x1^2*x3");
  CHECK(to_string(Monomial::one(4)) == "1");
  CHECK(to_string(m({0, 1, 0})) == "x2");

  CHECK(parse_monomial("x1^2*x3", 3) == m({2, 0, 1}));
  CHECK(parse_monomial("2 0 1", 3) == m({2, 0, 1}));
  CHECK(parse_monomial("1", 3).is_one());
  CHECK(parse_monomial("1", 1).is_one());  // "1" is always the constant
  CHECK(parse_monomial("x1", 1) == m({1}));
  CHECK(parse_monomial(" x2 * x2 ", 2) == m({0, 2}));

  CHECK_THROWS_AS(parse_monomial("x5", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x1^", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x1^0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x1*", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("2 0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("2 -1 0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("y2", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("x1^99999999999", 3), std::invalid_argument);
}

TEST_CASE("set file round trip") {
  MonomialSet seg = lexsegment(3, 2, 5);
  std::string text = to_string(seg);
  CHECK(text == "n=3 d=2\nx1^2\nx1*x2\nx1*x3\nx2^2\nx2*x3\n");
  CHECK(parse_monomial_set(text) == seg);

  // Order and duplicates in the input do not matter; comments are skipped.
  CHECK(parse_monomial_set("# fixture\nn=2 d=2\n0 2\n2 0\nx2^2\n") ==
        set_of(2, 2, {{2, 0}, {0, 2}}));
  MonomialSet empty(4, 3, {});
  CHECK(parse_monomial_set(to_string(empty)) == empty);

  CHECK_THROWS_AS(parse_monomial_set("x1^2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial_set("n=2 d=2\nx1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial_set(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial_set("n=0 d=2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial_set("n=2 d=-1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial_set("d=2 n=2\n"), std::invalid_argument);

  // Property: serialize-parse is the identity on every subset of M^2.
  MonomialSet universe = all_monomials(3, 2);
  for (std::size_t mask = 0; mask < (1u << universe.size()); ++mask) {
    std::vector<Monomial> members;
    for (std::size_t k = 0; k < universe.size(); ++k) {
      if (mask & (std::size_t{1} << k)) {
        members.push_back(universe.members()[k]);
      }
    }
    MonomialSet v(3, 2, std::move(members));
    CHECK(parse_monomial_set(to_string(v)) == v);
  }
}
