#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cdindex/bruhat_graph.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/permutation.hpp"
#include "cdindex/reflection_order.hpp"
#include "oracles.hpp"

namespace support {

using namespace cdindex;

inline oracle::Perm to_oracle(const Permutation& p) { return p.image(); }

inline oracle::RankFn rank_fn(const ReflectionOrder& order) {
  return [order](int i, int j) { return order.rank_of(Reflection(i, j)); };
}

inline oracle::Poly to_oracle(const AdPolynomial& p) {
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) out[m.empty() ? "" : m.str()] = c;
  return out;
}

inline oracle::Poly to_oracle(const CdPolynomial& p) {
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) out[m.empty() ? "" : m.str()] = c;
  return out;
}

/// M(A, DA) as an oracle string.
inline std::string gamma_of(const CdMonomial& m) { return oracle::gamma(m.empty() ? "" : m.str()); }

inline AdMonomial ad(const std::string& s) { return s.empty() ? AdMonomial{} : AdMonomial::parse(s); }
inline CdMonomial cd(const std::string& s) { return s.empty() ? CdMonomial{} : CdMonomial::parse(s); }

/// Every pair u <= v of S_n (u == v included when `with_trivial`).
inline std::vector<std::pair<Permutation, Permutation>> all_intervals(int n, bool with_trivial = false) {
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& u : all_permutations(n))
    for (const auto& v : all_permutations(n))
      if ((with_trivial || !(u == v)) && bruhat_leq(u, v)) out.emplace_back(u, v);
  return out;
}

/// `count` distinct random intervals u < v of S_n, reproducible from `seed`.
inline std::vector<std::pair<Permutation, Permutation>> random_intervals(int n, std::size_t count, unsigned seed,
                                                                         int min_length = 1) {
  auto pool = all_intervals(n);
  std::erase_if(pool, [&](const auto& iv) { return iv.second.length() - iv.first.length() < min_length; });
  std::mt19937 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > count) pool.resize(count);
  return pool;
}

inline std::vector<std::string> labels(const std::vector<BruhatPath>& paths, const ReflectionOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(label_string(p, order));
  return out;
}

}  // namespace support
