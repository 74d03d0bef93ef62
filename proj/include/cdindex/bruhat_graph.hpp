#pragma once

#include <compare>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdindex/ncpoly.hpp"
#include "cdindex/permutation.hpp"
#include "cdindex/reflection_order.hpp"

namespace cdindex {

struct Edge {
  int source = 0;  // element index
  int target = 0;
  Reflection label;
};

/// The Bruhat graph restricted to an interval [u, v].
///
/// Elements are indexed 0..size()-1, sorted by (length, one-line string), so
/// index 0 is u and the last index is v. Immutable after construction.
class BruhatInterval {
 public:
  /// Throws InvalidArgument if u is not below v.
  BruhatInterval(const Permutation& u, const Permutation& v);

  const Permutation& bottom() const { return u_; }
  const Permutation& top() const { return v_; }
  int rank() const { return u_.rank(); }
  /// l(v) - l(u).
  int length() const { return v_.length() - u_.length(); }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int index) const { return elements_[index]; }
  int bottom_index() const { return 0; }
  int top_index() const { return size() - 1; }
  /// -1 when x is outside the interval.
  int index_of(const Permutation& x) const;
  bool contains(const Permutation& x) const { return index_of(x) >= 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Edge>& out_edges(int index) const { return out_[index]; }
  const std::vector<Edge>& in_edges(int index) const { return in_[index]; }

 private:
  Permutation u_;
  Permutation v_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
};

/// u = x_0 ≺ x_1 ≺ ... ≺ x_{n+1} = v with labels t_0..t_n.
///
/// The length n counts letters of the ascent-descent word, one fewer than
/// the number of edges: a single edge u ≺ v is a path of length 0.
struct BruhatPath {
  std::vector<Permutation> vertices;
  std::vector<Reflection> labels;

  int length() const { return static_cast<int>(labels.size()) - 1; }
  const Reflection& first_label() const { return labels.front(); }

  friend bool operator==(const BruhatPath&, const BruhatPath&) = default;
};

/// Label ranks under `order` written as digits ("41516"); ranks above 9 are
/// separated by '.' so the string stays unambiguous.
std::string label_string(const BruhatPath& path, const ReflectionOrder& order);

/// B_n(u, v), in lexicographic order of label ranks under `order`.
std::vector<BruhatPath> enumerate_paths(const BruhatInterval& iv, int n, const ReflectionOrder& order);

/// Number of paths of length n from `from` to the top, by dynamic programming
/// over the edge list. Indexed result[element][n].
std::vector<std::vector<long long>> count_paths_to_top(const BruhatInterval& iv, int max_length);

/// Letter i is A when t_{i-1} < t_i in `order`, D otherwise.
AdMonomial ad_word(const BruhatPath& path, const ReflectionOrder& order);

/// Lexicographic comparison of the label-rank sequences.
std::strong_ordering lex_compare(const BruhatPath& x, const BruhatPath& y, const ReflectionOrder& order);

/// Paths whose first label is at most t in `order`.
std::vector<BruhatPath> restrict_first_reflection(const std::vector<BruhatPath>& paths, const Reflection& t,
                                                  const ReflectionOrder& order);

/// Graphviz digraph of the interval; edge labels are ranks under `order`.
std::string export_dot(const BruhatInterval& iv, const ReflectionOrder& order);

}  // namespace cdindex
