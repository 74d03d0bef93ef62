#include "cdindex/reflection_order.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cdindex/error.hpp"

namespace cdindex {

namespace {

std::string join_word(const std::vector<int>& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(word[k]);
  }
  return out;
}

// Reflection moving exactly two points, recovered from its permutation.
Reflection as_reflection(const Permutation& p) {
  int first = 0;
  int second = 0;
  for (int k = 1; k <= p.rank(); ++k) {
    if (p.at(k) == k) continue;
    (first == 0 ? first : second) = k;
  }
  return Reflection(first, second);
}

bool is_transposition(const Permutation& p) {
  int moved = 0;
  for (int k = 1; k <= p.rank(); ++k)
    if (p.at(k) != k) ++moved;
  return moved == 2;
}

// Reflections of the subgroup generated by a and b.
std::vector<Reflection> dihedral_reflections(int n, const Reflection& a, const Reflection& b) {
  const Permutation pa = a.as_permutation(n);
  const Permutation pb = b.as_permutation(n);
  std::unordered_set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : {pa, pb}) {
        Permutation h = compose(g, s);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<Reflection> out;
  for (const auto& g : seen)
    if (is_transposition(g)) out.push_back(as_reflection(g));
  std::sort(out.begin(), out.end());
  return out;
}

// Reflections whose positive root e_i - e_j is not a sum of two other
// positive roots of the subsystem.
std::vector<Reflection> canonical_generators(const std::vector<Reflection>& subsystem) {
  auto contains = [&](int i, int j) {
    return std::find(subsystem.begin(), subsystem.end(), Reflection(i, j)) != subsystem.end();
  };
  std::vector<Reflection> out;
  for (const auto& r : subsystem) {
    bool decomposable = false;
    for (int m = r.i + 1; m < r.j && !decomposable; ++m) decomposable = contains(r.i, m) && contains(m, r.j);
    if (!decomposable) out.push_back(r);
  }
  return out;
}

}  // namespace

ReflectionOrder ReflectionOrder::from_sequence(int n, std::vector<Reflection> sequence, std::string name) {
  if (n < 1 || n > kMaxRank) throw InvalidArgument("rank out of range: " + std::to_string(n));
  const std::size_t expected = static_cast<std::size_t>(n * (n - 1) / 2);
  if (sequence.size() != expected)
    throw InvalidArgument("reflection order needs " + std::to_string(expected) + " transpositions");
  ReflectionOrder order;
  order.n_ = n;
  order.rank_.assign(expected, 0);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    const Reflection& t = sequence[k];
    if (t.j > n) throw InvalidArgument("transposition " + t.str() + " not in S_" + std::to_string(n));
    int& slot = order.rank_[t.lex_index(n)];
    if (slot != 0) throw InvalidArgument("transposition " + t.str() + " repeated in order");
    slot = static_cast<int>(k) + 1;
  }
  order.sequence_ = std::move(sequence);
  order.name_ = std::move(name);
  return order;
}

ReflectionOrder lex_reflection_order(int n) {
  if (n < 2) throw InvalidArgument("reflection orders need n >= 2");
  return ReflectionOrder::from_sequence(n, all_reflections(n), "lex");
}

ReflectionOrder reflection_order_from_reduced_word(int n, const std::vector<int>& word) {
  if (n < 2) throw InvalidArgument("reflection orders need n >= 2");
  Permutation prefix = Permutation::identity(n);
  std::vector<Reflection> sequence;
  for (int s : word) {
    if (s < 1 || s >= n) throw InvalidArgument("generator index out of range: " + std::to_string(s));
    const Reflection simple(s, s + 1);
    // t_k = prefix · s · prefix⁻¹ is the transposition (prefix(s) prefix(s+1)).
    sequence.emplace_back(prefix.at(s), prefix.at(s + 1));
    Permutation next = prefix * simple;
    if (next.length() != prefix.length() + 1)
      throw InvalidArgument("word " + join_word(word) + " is not reduced");
    prefix = next;
  }
  if (prefix != Permutation::longest(n))
    throw InvalidArgument("word " + join_word(word) + " does not evaluate to the longest element");
  return ReflectionOrder::from_sequence(n, std::move(sequence), "word:" + join_word(word));
}

ReflectionOrder reverse(const ReflectionOrder& order) {
  std::vector<Reflection> sequence(order.sequence().rbegin(), order.sequence().rend());
  std::string name = order.name() == "lex" ? "rev" : order.name() == "rev" ? "lex" : "rev(" + order.name() + ")";
  return ReflectionOrder::from_sequence(order.rank(), std::move(sequence), std::move(name));
}

OrderValidation validate_reflection_order(const ReflectionOrder& order) {
  const int n = order.rank();
  const auto& refl = order.sequence();
  std::set<std::vector<Reflection>> checked;
  for (std::size_t x = 0; x < refl.size(); ++x) {
    for (std::size_t y = x + 1; y < refl.size(); ++y) {
      std::vector<Reflection> subsystem = dihedral_reflections(n, refl[x], refl[y]);
      if (!checked.insert(subsystem).second) continue;

      const auto generators = canonical_generators(subsystem);
      const Permutation a = generators.front().as_permutation(n);
      const Permutation ab = compose(a, generators.back().as_permutation(n));
      std::vector<Reflection> chain;
      Permutation step = a;
      for (std::size_t k = 0; k < subsystem.size(); ++k) {
        chain.push_back(as_reflection(step));
        step = compose(ab, step);
      }

      std::vector<Reflection> restricted = subsystem;
      std::sort(restricted.begin(), restricted.end(),
                [&](const Reflection& p, const Reflection& q) { return order.less(p, q); });
      const bool forward = restricted == chain;
      const bool backward = std::equal(restricted.begin(), restricted.end(), chain.rbegin());
      if (!forward && !backward) return {false, subsystem};
    }
  }
  return {};
}

ReflectionOrder parse_order_spec(int n, const std::string& spec) {
  if (spec == "lex") return lex_reflection_order(n);
  if (spec == "rev") return reverse(lex_reflection_order(n));
  if (spec.rfind("word:", 0) == 0) {
    std::vector<int> word;
    std::stringstream in(spec.substr(5));
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("bad reduced word in order spec '" + spec + "'");
      word.push_back(std::stoi(item));
    }
    return reflection_order_from_reduced_word(n, word);
  }
  throw InvalidArgument("unknown order spec '" + spec + "' (expected lex, rev or word:<csv>)");
}

}  // namespace cdindex
