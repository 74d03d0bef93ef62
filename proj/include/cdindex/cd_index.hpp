#pragma once

#include <map>
#include <vector>

#include "cdindex/bruhat_graph.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/reflection_order.hpp"

namespace cdindex {

class TSetTable;

/// Sum of ascent-descent words over all paths in B(u, v), every degree.
///
/// Computed by dynamic programming over (vertex, incoming label) rather than
/// by listing paths; tests compare it against enumerate_paths + ad_word.
AdPolynomial complete_phi(const BruhatInterval& iv, const ReflectionOrder& order);

/// The complete cd-index, one homogeneous cd-polynomial per degree.
struct CompleteCdIndex {
  Permutation u;
  Permutation v;
  std::map<int, CdPolynomial> by_degree;  // only nonzero parts are stored

  CdPolynomial degree(int n) const {
    auto it = by_degree.find(n);
    return it == by_degree.end() ? CdPolynomial{} : it->second;
  }
  CdPolynomial total() const {
    CdPolynomial out;
    for (const auto& [n, p] : by_degree) out += p;
    return out;
  }
  std::int64_t coefficient(const CdMonomial& m) const { return degree(m.degree()).coefficient(m); }

  friend bool operator==(const CompleteCdIndex&, const CompleteCdIndex&) = default;
};

/// Throws NotInSubring if some graded piece of φ̃ is not a cd-polynomial.
CompleteCdIndex complete_cd_index(const BruhatInterval& iv, const ReflectionOrder& order);
CompleteCdIndex complete_cd_index(const BruhatInterval& iv);

/// Degrees n that can carry paths: n ≡ l(v)-l(u)+1 (mod 2), 0 <= n <= l(v)-l(u)-1.
std::vector<int> path_degrees(const BruhatInterval& iv);

/// Degree-n sum of w(x) over paths whose first reflection is at most t.
AdPolynomial phi_leq_t(const BruhatInterval& iv, int n, const Reflection& t, const ReflectionOrder& order);

struct ShellingDecomposition {
  Reflection t;
  std::map<int, FPlusAG> by_degree;  // every degree in path_degrees()
};

/// φ̃^{≤t} = f_n + A·g_{n-1} in every degree. Throws NotDecomposable.
ShellingDecomposition shelling_decomposition(const BruhatInterval& iv, const Reflection& t,
                                             const ReflectionOrder& order);

/// Σ s_M(x) over x in B_n(from, v), with flips taken from the table.
/// Throws FlipUndefined when a term needs a flip outside the T-sets.
std::int64_t sum_s_m(TSetTable& table, const CdMonomial& m, int from = 0);

/// cd-index of the interval as a graded poset, from its flag f-vector.
/// Independent of reflection orders and of the Bruhat graph edges.
CdPolynomial flag_cd_index_oracle(const BruhatInterval& iv);

}  // namespace cdindex
