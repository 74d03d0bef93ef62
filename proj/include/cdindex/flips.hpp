#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdindex/bruhat_graph.hpp"
#include "cdindex/cd_index.hpp"
#include "cdindex/ncpoly.hpp"
#include "cdindex/reflection_order.hpp"

namespace cdindex {

/// Which reflection order a T-set is built with: the table's order O, or
/// its reverse (giving T̄).
enum class Side { ordered, reversed };

/// A path inside the table's interval, by element index.
struct IndexedPath {
  std::vector<int> vertices;
  std::vector<Reflection> labels;

  int source() const { return vertices.front(); }
  const Reflection& first_label() const { return labels.front(); }
  friend bool operator==(const IndexedPath&, const IndexedPath&) = default;
};

/// Memoized T-sets T_γ(w, v) and T̄_γ(w, v) for one interval [u, v] and one
/// reflection order, together with the lexicographic flip between them.
///
/// Keys are (w, γ) with w an element of [u, v] and γ an AD-word of the form
/// M(A, DA). Both lists are sorted lexicographically by label ranks under
/// the table's order O; the flip pairs the i-th path of T with the i-th of
/// T̄ and is only defined when the two lists have equal size. Entries are
/// computed on first use, recursing into (x_1, γ_2...γ_k) for every edge
/// w ≺ x_1, which realises the bottom-up order over shorter intervals and
/// shorter suffixes. Not thread-safe while entries are being filled;
/// populate() fills a range up front so the table can be shared read-only.
class TSetTable {
 public:
  TSetTable(BruhatInterval iv, ReflectionOrder order);

  const BruhatInterval& interval() const { return iv_; }
  const ReflectionOrder& order() const { return order_; }

  /// Sorted T_γ(w, v) (Side::ordered) or T̄_γ(w, v) (Side::reversed).
  /// Throws FlipUndefined if a flip needed on a sub-interval does not exist.
  const std::vector<IndexedPath>& paths(int w, const AdMonomial& word, Side side);

  /// |T| == |T̄| for (w, γ).
  bool flip_defined(int w, const AdMonomial& word);

  /// Image of paths(w, γ, side)[i] under the flip (or its inverse).
  const IndexedPath& flip(int w, const AdMonomial& word, Side side, std::size_t i);

  /// Position of a label sequence in paths(w, γ, side), or -1.
  int find(int w, const AdMonomial& word, Side side, const std::vector<Reflection>& labels);

  /// Fills every entry (w, suffix of γ) for all w and every γ = M(A,DA)
  /// with deg M <= max_degree. FlipUndefined entries are skipped.
  void populate(int max_degree);

  /// 1-based rank of t under the order of `side`.
  int rank(const Reflection& t, Side side) const;
  AdLetter letter(const Reflection& before, const Reflection& after, Side side) const {
    return rank(before, side) < rank(after, side) ? AdLetter::A : AdLetter::D;
  }

  BruhatPath to_path(const IndexedPath& p) const;
  std::size_t entry_count() const { return memo_.size(); }

 private:
  struct Entry {
    std::vector<IndexedPath> t;
    std::vector<IndexedPath> t_bar;
  };

  const Entry& entry(int w, const AdMonomial& word);
  Entry build(int w, const AdMonomial& word);
  void sort_lex(std::vector<IndexedPath>& list) const;

  BruhatInterval iv_;
  ReflectionOrder order_;
  std::map<std::pair<int, AdMonomial>, Entry> memo_;
};

/// T_M(w, v) under the table's order, sorted lexicographically.
std::vector<BruhatPath> compute_t(TSetTable& table, const CdMonomial& m, int w = 0);
/// T̄_M(w, v): the same construction under the reverse order.
std::vector<BruhatPath> compute_t_bar(TSetTable& table, const CdMonomial& m, int w = 0);

/// Lexicographic flip T_M(w, v) -> T̄_M(w, v) as (x, F(x)) pairs.
/// Throws FlipUndefined when |T| != |T̄|.
std::vector<std::pair<BruhatPath, BruhatPath>> flip_pairing(TSetTable& table, const CdMonomial& m, int w = 0);

/// s_{m,γ_m}(x) in {-1, 0, 1}, 1 <= position <= n, where γ = word and x
/// ends at the table's top. For a D letter the tail from x_m must lie in
/// T_{γ_{m+1}...γ_n}(x_m, v); otherwise FlipUndefined is thrown.
int s_factor(TSetTable& table, const BruhatPath& x, int position, const AdMonomial& word);

/// s_M(x) = Π s_{m,γ_m}(x), evaluated right to left. A known zero factor
/// gives 0 even when some other factor would need an undefined flip.
int s_m(TSetTable& table, const BruhatPath& x, const CdMonomial& m);

enum class WitnessKind { minus_one_at_m, size_mismatch, first_reflection };
std::string to_string(WitnessKind kind);

struct FlipWitness {
  BruhatPath path;  // may be empty for a size mismatch deep in the recursion
  int position = 0;
  WitnessKind kind = WitnessKind::minus_one_at_m;
  std::string detail;
};

struct FlipCheck {
  bool holds = true;
  bool applicable = true;  // false for the strong condition when M starts with d
  std::optional<FlipWitness> witness;
};

/// Looks for x in B_n(w, v) and m with γ_m = D, the tail from x_m in
/// T_{γ_{m+1}...}(x_m, v), w(x_{m-1} ≺ x_m ≺ x_{m+1}) = A and the flipped
/// tail giving D.
FlipCheck check_flip_condition(TSetTable& table, const CdMonomial& m, int w = 0);

/// For M = cM': first reflection of x <= first reflection of F(x) for all x in T_M.
FlipCheck check_strong_flip_condition(TSetTable& table, const CdMonomial& m, int w = 0);

struct CoefficientReport {
  CdMonomial monomial;
  std::int64_t coefficient = 0;
  std::int64_t t_size = 0;
  std::int64_t t_bar_size = 0;
  std::int64_t sum_s = 0;
  bool consistent = false;
};

/// |T_M| = |T̄_M| = coefficient of M = Σ s_M(x).
CoefficientReport verify_coefficient(TSetTable& table, const CdMonomial& m, const CompleteCdIndex& index,
                                     int w = 0);
CoefficientReport verify_coefficient(TSetTable& table, const CdMonomial& m);

struct ShellingReport {
  CdMonomial monomial;
  Reflection t;
  std::int64_t t_leq = 0;         // |T_M(u,v)_{≤t}|
  std::int64_t t_bar_leq = 0;     // |T̄_M(u,v)_{≤t}|
  std::int64_t coeff_f = 0;       // coefficient of M in f_n
  std::int64_t coeff_f_cg = 0;    // coefficient of M in f_n + c·g_{n-1}
  bool consistent = false;
};

/// Compares the filtered T-set sizes with the coefficients of the
/// f_n + A·g_{n-1} decomposition of φ̃^{≤t}.
ShellingReport corollary5_check(TSetTable& table, const CdMonomial& m, const Reflection& t,
                                const ShellingDecomposition& decomposition);
ShellingReport corollary5_check(TSetTable& table, const CdMonomial& m, const Reflection& t);

}  // namespace cdindex
