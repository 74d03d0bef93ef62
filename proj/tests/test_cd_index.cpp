#include <doctest.h>

#include "cdindex/cd_index.hpp"
#include "cdindex/error.hpp"
#include "support.hpp"

using namespace cdindex;
using support::cd;

TEST_CASE("complete_phi equals the sum of words over all paths") {
  for (const char* spec : {"lex", "rev", "word:1,2,1,3,2,1"}) {
    const auto o = parse_order_spec(4, spec);
    for (const auto& [u, v] : support::all_intervals(4)) {
      const BruhatInterval iv(u, v);
      CHECK(support::to_oracle(complete_phi(iv, o)) == oracle::phi(u.image(), v.image(), support::rank_fn(o)));
    }
  }
  const auto o5 = lex_reflection_order(5);
  for (const auto& [u, v] : support::random_intervals(5, 15, 3)) {
    const BruhatInterval iv(u, v);
    CHECK(support::to_oracle(complete_phi(iv, o5)) == oracle::phi(u.image(), v.image(), support::rank_fn(o5)));
  }
}

TEST_CASE("complete cd-index equals the linear solve of the path sum") {
  const auto o = lex_reflection_order(4);
  for (const auto& [u, v] : support::all_intervals(4)) {
    const BruhatInterval iv(u, v);
    const auto index = complete_cd_index(iv, o);
    const auto phi = oracle::phi(u.image(), v.image(), oracle::lex(4));
    for (int n = 0; n < iv.length(); ++n) {
      const auto solved = oracle::solve_cd(oracle::homogeneous(phi, n), n);
      REQUIRE(solved.has_value());
      CHECK(support::to_oracle(index.degree(n)) == *solved);
    }
    for (const auto& [n, part] : index.by_degree) {
      CHECK(part.is_homogeneous_of(n));
      CHECK((iv.length() - 1 - n) % 2 == 0);
    }
  }
}

TEST_CASE("example interval [2134,4321]") {
  const BruhatInterval iv(Permutation::parse("2134"), Permutation::parse("4321"));
  const auto index = complete_cd_index(iv);
  CHECK(index.degree(2) == CdPolynomial::parse("2c^2+d"));
  CHECK(index.coefficient(cd("cccc")) == 1);
  CHECK(index.coefficient(cd("dd")) == 1);
  CHECK(index.degree(4) == CdPolynomial::parse("c^4+ccd+2cdc+dcc+d^2"));
  CHECK(index.by_degree.size() == 2);
  CHECK(path_degrees(iv) == std::vector<int>{0, 2, 4});
}

TEST_CASE("trivial intervals") {
  const BruhatInterval edge(Permutation::parse("1234"), Permutation::parse("2134"));
  CHECK(complete_cd_index(edge).total() == CdPolynomial(1));
  const BruhatInterval point(Permutation::parse("1234"), Permutation::parse("1234"));
  CHECK(complete_cd_index(point).total().is_zero());
  CHECK(path_degrees(point).empty());
  for (const auto& [u, v] : support::all_intervals(2)) CHECK(complete_cd_index(BruhatInterval(u, v)).total() == CdPolynomial(1));
  CHECK_THROWS_AS(complete_cd_index(edge, lex_reflection_order(3)), RankMismatch);
}

TEST_CASE("phi_leq_t filters by the first reflection") {
  const auto o = lex_reflection_order(4);
  for (const auto& [u, v] : support::random_intervals(4, 40, 5, 2)) {
    const BruhatInterval iv(u, v);
    for (const auto& t : all_reflections(4))
      for (int n : path_degrees(iv)) {
        oracle::Poly expected;
        for (const auto& p : oracle::paths(u.image(), v.image(), n + 1, oracle::lex(4)))
          if (p.ranks.front() <= o.rank_of(t)) ++expected[oracle::ad_word(p.ranks)];
        CHECK(support::to_oracle(phi_leq_t(iv, n, t, o)) == expected);
      }
  }
  // Spot value: degree 2 of [2134,4321] with t = (1 4) sums paths starting with ranks 1..3.
  const BruhatInterval iv(Permutation::parse("2134"), Permutation::parse("4321"));
  std::int64_t count = 0;
  const auto restricted = phi_leq_t(iv, 2, Reflection(1, 4), o);
  for (const auto& [m, c] : restricted.terms()) count += c;
  std::int64_t expected = 0;
  for (const auto& p : enumerate_paths(iv, 2, o)) expected += o.rank_of(p.first_label()) <= 3;
  CHECK(count == expected);
}

TEST_CASE("shelling decomposition re-assembles") {
  for (const char* spec : {"lex", "rev"}) {
    const auto o = parse_order_spec(4, spec);
    for (const auto& [u, v] : support::all_intervals(4)) {
      const BruhatInterval iv(u, v);
      for (const auto& t : all_reflections(4)) {
        const auto s = shelling_decomposition(iv, t, o);
        for (int n : path_degrees(iv)) {
          const auto& fg = s.by_degree.at(n);
          CHECK(expand_cd(fg.f) + expand_cd(fg.g).left_multiply(AdLetter::A) == phi_leq_t(iv, n, t, o));
        }
      }
    }
  }
}

TEST_CASE("flag cd-index of the poset matches the top degree") {
  for (const auto& [u, v] : support::random_intervals(4, 30, 9)) {
    const BruhatInterval iv(u, v);
    CHECK(flag_cd_index_oracle(iv) == complete_cd_index(iv).degree(iv.length() - 1));
  }
  const BruhatInterval point(Permutation::parse("12"), Permutation::parse("12"));
  CHECK_THROWS_AS(flag_cd_index_oracle(point), InvalidArgument);
}
