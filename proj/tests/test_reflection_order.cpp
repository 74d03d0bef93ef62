#include <doctest.h>

#include <algorithm>
#include <set>

#include "cdindex/error.hpp"
#include "support.hpp"

using namespace cdindex;

namespace {

void reduced_words(const Permutation& w, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (w.length() == 0) {
    out.emplace_back(prefix.rbegin(), prefix.rend());
    return;
  }
  // Peel right descents: w = w' s_i with l(w') < l(w).
  for (int i = 1; i < w.rank(); ++i) {
    if (w.at(i) < w.at(i + 1)) continue;
    prefix.push_back(i);
    reduced_words(w * Reflection(i, i + 1), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("lex order") {
  const auto o = lex_reflection_order(4);
  CHECK(o.size() == 6);
  CHECK(o.name() == "lex");
  CHECK(o.at_rank(1) == Reflection(1, 2));
  CHECK(o.at_rank(3) == Reflection(1, 4));
  CHECK(o.at_rank(4) == Reflection(2, 3));
  CHECK(o.rank_of(Reflection(3, 4)) == 6);
  CHECK(o.less(Reflection(1, 4), Reflection(2, 3)));
}

TEST_CASE("reverse order") {
  const auto o = reverse(lex_reflection_order(4));
  CHECK(o.name() == "rev");
  CHECK(o.rank_of(Reflection(3, 4)) == 1);
  CHECK(reverse(o) == lex_reflection_order(4));
}

TEST_CASE("order from a reduced word of the longest element") {
  const auto o = reflection_order_from_reduced_word(3, {1, 2, 1});
  CHECK(o.at_rank(1) == Reflection(1, 2));
  CHECK(o.at_rank(2) == Reflection(1, 3));
  CHECK(o.at_rank(3) == Reflection(2, 3));
  CHECK(o.name() == "word:1,2,1");
  const auto p = reflection_order_from_reduced_word(3, {2, 1, 2});
  CHECK(p.at_rank(1) == Reflection(2, 3));
  CHECK_THROWS_AS(reflection_order_from_reduced_word(3, {1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(reflection_order_from_reduced_word(3, {1, 2}), InvalidArgument);
}

TEST_CASE("parse_order_spec") {
  CHECK(parse_order_spec(4, "lex") == lex_reflection_order(4));
  CHECK(parse_order_spec(4, "rev") == reverse(lex_reflection_order(4)));
  CHECK(parse_order_spec(3, "word:2,1,2").at_rank(1) == Reflection(2, 3));
  CHECK_THROWS_AS(parse_order_spec(4, "zigzag"), InvalidArgument);
  CHECK_THROWS_AS(parse_order_spec(3, "word:1,x"), InvalidArgument);
}

TEST_CASE("validator accepts exactly the orders coming from reduced words (S_4)") {
  std::vector<int> prefix;
  std::vector<std::vector<int>> words;
  reduced_words(Permutation::longest(4), prefix, words);
  CHECK(words.size() == 16);
  std::set<std::vector<Reflection>> from_words;
  for (const auto& w : words) {
    const auto o = reflection_order_from_reduced_word(4, w);
    CHECK(validate_reflection_order(o).valid);
    from_words.insert(o.sequence());
  }
  CHECK(from_words.size() == 16);

  auto seq = all_reflections(4);
  std::sort(seq.begin(), seq.end());
  std::size_t valid = 0;
  do {
    const auto o = ReflectionOrder::from_sequence(4, seq);
    const auto result = validate_reflection_order(o);
    if (result.valid) {
      ++valid;
      CHECK(from_words.count(seq) == 1);
    } else {
      CHECK(result.violation.size() >= 3);
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  CHECK(valid == 16);
}

TEST_CASE("validator witness for a non-order") {
  // (1 3) placed after (1 4) and before (3 4) breaks the dihedral subgroup {(13),(14),(34)}.
  const auto o = ReflectionOrder::from_sequence(
      4, {Reflection(1, 2), Reflection(1, 4), Reflection(1, 3), Reflection(2, 3), Reflection(2, 4), Reflection(3, 4)});
  const auto result = validate_reflection_order(o);
  CHECK_FALSE(result.valid);
  std::set<Reflection> witness(result.violation.begin(), result.violation.end());
  CHECK(witness == std::set<Reflection>{Reflection(1, 3), Reflection(1, 4), Reflection(3, 4)});
}

TEST_CASE("from_sequence rejects non-permutations of the reflections") {
  CHECK_THROWS_AS(ReflectionOrder::from_sequence(3, {Reflection(1, 2), Reflection(1, 2), Reflection(2, 3)}),
                  InvalidArgument);
  CHECK_THROWS_AS(ReflectionOrder::from_sequence(3, {Reflection(1, 2)}), InvalidArgument);
}

TEST_CASE("S_5 lex, rev and word orders validate") {
  CHECK(validate_reflection_order(lex_reflection_order(5)).valid);
  CHECK(validate_reflection_order(reverse(lex_reflection_order(5))).valid);
  CHECK(validate_reflection_order(reflection_order_from_reduced_word(5, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1})).valid);
}
