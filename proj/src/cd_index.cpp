#include "cdindex/cd_index.hpp"

#include <algorithm>

#include "cdindex/error.hpp"

namespace cdindex {

namespace {

void require_same_rank(const BruhatInterval& iv, const ReflectionOrder& order) {
  if (iv.rank() != order.rank())
    throw RankMismatch("reflection order on S_" + std::to_string(order.rank()) + " used with an interval in S_" +
                       std::to_string(iv.rank()));
}

// prefix[x][k] is the sum, over the k lowest-ranked out-edges e of x, of the
// words of all paths from x to the top that start with e. The word of such a
// path starts with the comparison between e and the second edge.
std::vector<std::vector<AdPolynomial>> first_edge_prefix_sums(const BruhatInterval& iv,
                                                              const ReflectionOrder& order) {
  require_same_rank(iv, order);
  std::vector<std::vector<int>> ranks(iv.size());
  std::vector<std::vector<AdPolynomial>> prefix(iv.size());
  for (int x = iv.size() - 1; x >= 0; --x) {
    std::vector<Edge> edges = iv.out_edges(x);
    std::sort(edges.begin(), edges.end(),
              [&](const Edge& a, const Edge& b) { return order.less(a.label, b.label); });
    prefix[x].assign(1, AdPolynomial{});
    for (const auto& e : edges) {
      const int r = order.rank_of(e.label);
      ranks[x].push_back(r);
      AdPolynomial h;
      if (e.target == iv.top_index()) {
        h = AdPolynomial(1);
      } else {
        const auto& next_ranks = ranks[e.target];
        const auto& next_prefix = prefix[e.target];
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(next_ranks.begin(), next_ranks.end(), r) - next_ranks.begin());
        const AdPolynomial below = next_prefix[pos];
        const AdPolynomial above = next_prefix.back() - below;
        h = above.left_multiply(AdLetter::A) + below.left_multiply(AdLetter::D);
      }
      prefix[x].push_back(prefix[x].back() + h);
    }
  }
  return prefix;
}

std::vector<int> sorted_first_ranks(const BruhatInterval& iv, const ReflectionOrder& order, int x) {
  std::vector<int> ranks;
  for (const auto& e : iv.out_edges(x)) ranks.push_back(order.rank_of(e.label));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

}  // namespace

AdPolynomial complete_phi(const BruhatInterval& iv, const ReflectionOrder& order) {
  require_same_rank(iv, order);
  if (iv.size() == 1) return {};
  return first_edge_prefix_sums(iv, order)[iv.bottom_index()].back();
}

std::vector<int> path_degrees(const BruhatInterval& iv) {
  std::vector<int> out;
  for (int n = iv.length() - 1; n >= 0; n -= 2) out.push_back(n);
  std::reverse(out.begin(), out.end());
  return out;
}

CompleteCdIndex complete_cd_index(const BruhatInterval& iv, const ReflectionOrder& order) {
  CompleteCdIndex out{iv.bottom(), iv.top(), {}};
  const AdPolynomial phi = complete_phi(iv, order);
  for (int n : phi.degrees()) {
    CdPolynomial part = ad_to_cd(phi.homogeneous_part(n));
    if (!part.is_zero()) out.by_degree.emplace(n, std::move(part));
  }
  return out;
}

CompleteCdIndex complete_cd_index(const BruhatInterval& iv) {
  return complete_cd_index(iv, lex_reflection_order(iv.rank()));
}

AdPolynomial phi_leq_t(const BruhatInterval& iv, int n, const Reflection& t, const ReflectionOrder& order) {
  require_same_rank(iv, order);
  if (iv.size() == 1) return {};
  const auto prefix = first_edge_prefix_sums(iv, order);
  const auto ranks = sorted_first_ranks(iv, order, iv.bottom_index());
  const auto count = static_cast<std::size_t>(
      std::upper_bound(ranks.begin(), ranks.end(), order.rank_of(t)) - ranks.begin());
  return prefix[iv.bottom_index()][count].homogeneous_part(n);
}

ShellingDecomposition shelling_decomposition(const BruhatInterval& iv, const Reflection& t,
                                             const ReflectionOrder& order) {
  ShellingDecomposition out;
  out.t = t;
  require_same_rank(iv, order);
  if (iv.size() == 1) return out;
  const auto prefix = first_edge_prefix_sums(iv, order);
  const auto ranks = sorted_first_ranks(iv, order, iv.bottom_index());
  const auto count = static_cast<std::size_t>(
      std::upper_bound(ranks.begin(), ranks.end(), order.rank_of(t)) - ranks.begin());
  const AdPolynomial& restricted = prefix[iv.bottom_index()][count];
  for (int n : path_degrees(iv)) out.by_degree.emplace(n, decompose_f_plus_Ag(restricted.homogeneous_part(n), n));
  return out;
}

CdPolynomial flag_cd_index_oracle(const BruhatInterval& iv) {
  const int rank = iv.length();
  if (rank < 1) throw InvalidArgument("flag cd-index needs an interval of length >= 1");
  const int base = iv.bottom().length();
  const int size = iv.size();

  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) leq[a][b] = bruhat_leq(iv.element(a), iv.element(b));
  std::vector<int> level(size);
  for (int a = 0; a < size; ++a) level[a] = iv.element(a).length() - base;

  // Flag f-vector: chains bottom < y_1 < ... < y_k < top with rank(y_i) = s_i.
  const int inner = rank - 1;
  const std::uint32_t subsets = std::uint32_t{1} << inner;
  std::vector<std::int64_t> flag_f(subsets, 0);
  for (std::uint32_t s = 0; s < subsets; ++s) {
    std::vector<int> ranks;
    for (int i = 0; i < inner; ++i)
      if (s & (1U << i)) ranks.push_back(i + 1);
    ranks.push_back(rank);
    std::vector<std::int64_t> chains(size, 0);
    chains[iv.bottom_index()] = 1;
    int previous = 0;
    for (int r : ranks) {
      std::vector<std::int64_t> next(size, 0);
      for (int b = 0; b < size; ++b) {
        if (level[b] != r) continue;
        for (int a = 0; a < size; ++a)
          if (level[a] == previous && chains[a] && leq[a][b]) next[b] = checked_add(next[b], chains[a]);
      }
      chains = std::move(next);
      previous = r;
    }
    flag_f[s] = chains[iv.top_index()];
  }

  // Flag h-vector by inclusion-exclusion, then the ab-index with b = D at ranks in S.
  AdPolynomial ab_index;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    std::int64_t h = 0;
    for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
      const int sign = (std::popcount(s) - std::popcount(sub)) % 2 ? -1 : 1;
      h = checked_add(h, checked_mul(sign, flag_f[sub]));
      if (sub == 0) break;
    }
    AdMonomial w;
    for (int i = 0; i < inner; ++i) w = w.append((s & (1U << i)) ? AdLetter::D : AdLetter::A);
    ab_index.add(w, h);
  }
  return ad_to_cd(ab_index);
}

}  // namespace cdindex
