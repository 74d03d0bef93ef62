#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cdindex {

/// Largest supported rank; one-line strings use a single digit per entry.
inline constexpr int kMaxRank = 9;

/// Element of the symmetric group S_n in one-line notation.
///
/// Entries are stored 1-based (`at(k)` for k in 1..n returns image[k]).
/// Multiplication applies the right factor first, so `x * t` for a
/// transposition t = (i j) swaps the entries in positions i and j.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  /// Throws InvalidArgument unless `image` is a bijection of {1..n}.
  static Permutation from_image(const std::vector<int>& image);
  /// Parses one-line notation such as "2134".
  static Permutation parse(std::string_view text);
  /// The longest element n n-1 ... 1.
  static Permutation longest(int n);

  int rank() const { return n_; }
  int at(int position) const { return image_[position - 1]; }
  std::vector<int> image() const;

  Permutation inverse() const;
  int length() const;

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxRank> image_{};

  friend Permutation compose(const Permutation&, const Permutation&);
  friend struct Reflection;
};

/// A transposition (i j) with 1 <= i < j <= n.
struct Reflection {
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  Reflection() = default;
  Reflection(int a, int b);

  /// Index in the lexicographic enumeration of all transpositions of S_n.
  int lex_index(int n) const;
  Permutation as_permutation(int n) const;
  /// "(i j)"
  std::string str() const;
  /// Accepts "(i j)", "(ij)" or "i,j".
  static Reflection parse(std::string_view text);

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend auto operator<=>(const Reflection&, const Reflection&) = default;
};

/// (p·q)(k) = p(q(k)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Reflection& t);

inline int length(const Permutation& p) { return p.length(); }

/// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// t with y = x·t when x⁻¹y is a transposition and l(x) < l(y).
std::optional<Reflection> edge_leq(const Permutation& x, const Permutation& y);

/// All C(n,2) transpositions in lexicographic (i, j) order.
std::vector<Reflection> all_reflections(int n);

/// Every element of S_n, in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace cdindex

template <>
struct std::hash<cdindex::Permutation> {
  std::size_t operator()(const cdindex::Permutation& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.rank());
    for (int k = 1; k <= p.rank(); ++k) h = h * 11 + static_cast<std::size_t>(p.at(k));
    return h;
  }
};
