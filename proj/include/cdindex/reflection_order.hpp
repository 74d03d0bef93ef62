#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdindex/permutation.hpp"

namespace cdindex {

/// A total order on the transpositions of S_n.
///
/// Construction through `from_sequence` checks only that the sequence is a
/// permutation of all_reflections(n); use validate_reflection_order for the
/// dihedral condition. The named constructors always produce valid orders.
class ReflectionOrder {
 public:
  static ReflectionOrder from_sequence(int n, std::vector<Reflection> sequence, std::string name = "custom");

  int rank() const { return n_; }
  const std::vector<Reflection>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }

  /// 1-based position of t in the order.
  int rank_of(const Reflection& t) const { return rank_[t.lex_index(n_)]; }
  const Reflection& at_rank(int r) const { return sequence_[r - 1]; }
  bool less(const Reflection& a, const Reflection& b) const { return rank_of(a) < rank_of(b); }

  /// Short identifier used in reports: "lex", "rev", "word:1,2,1", ...
  const std::string& name() const { return name_; }

  friend bool operator==(const ReflectionOrder& a, const ReflectionOrder& b) {
    return a.n_ == b.n_ && a.sequence_ == b.sequence_;
  }

 private:
  int n_ = 0;
  std::vector<Reflection> sequence_;
  std::vector<int> rank_;  // indexed by Reflection::lex_index
  std::string name_;
};

/// (12) < (13) < ... < (1n) < (23) < ... < (n-1 n).
ReflectionOrder lex_reflection_order(int n);

/// t_k = s_{i1}...s_{i(k-1)} s_{ik} s_{i(k-1)}...s_{i1} for a reduced word of w0.
/// Throws InvalidArgument if the word is not reduced or does not evaluate to w0.
ReflectionOrder reflection_order_from_reduced_word(int n, const std::vector<int>& word);

ReflectionOrder reverse(const ReflectionOrder& order);

/// Result of the dihedral check; `violation` holds the reflection set of the
/// first offending dihedral reflection subgroup.
struct OrderValidation {
  bool valid = true;
  std::vector<Reflection> violation;
};

/// Checks that the order restricts, on every dihedral reflection subgroup with
/// canonical generators a, b, to a < aba < ababa < ... < b or its reverse.
OrderValidation validate_reflection_order(const ReflectionOrder& order);

/// Parses "lex", "rev" or "word:<csv>" into an order on S_n.
ReflectionOrder parse_order_spec(int n, const std::string& spec);

}  // namespace cdindex
