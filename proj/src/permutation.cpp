#include "cdindex/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "cdindex/error.hpp"

namespace cdindex {

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxRank) throw InvalidArgument("rank out of range: " + std::to_string(n));
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) p.image_[k] = static_cast<std::uint8_t>(k + 1);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p = identity(n);
  std::reverse(p.image_.begin(), p.image_.begin() + n);
  return p;
}

Permutation Permutation::from_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n < 1 || n > kMaxRank) throw InvalidArgument("rank out of range: " + std::to_string(n));
  std::array<bool, kMaxRank + 1> seen{};
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) {
    const int value = image[k];
    if (value < 1 || value > n || seen[value])
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    seen[value] = true;
    p.image_[k] = static_cast<std::uint8_t>(value);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> image;
  for (char ch : text) {
    if (ch < '1' || ch > '9') throw InvalidArgument("bad one-line permutation: '" + std::string(text) + "'");
    image.push_back(ch - '0');
  }
  try {
    return from_image(image);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("bad one-line permutation: '" + std::string(text) + "'");
  }
}

std::vector<int> Permutation::image() const { return {image_.begin(), image_.begin() + n_}; }

Permutation Permutation::inverse() const {
  Permutation q = *this;
  for (int k = 0; k < n_; ++k) q.image_[image_[k] - 1] = static_cast<std::uint8_t>(k + 1);
  return q;
}

int Permutation::length() const {
  int inversions = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (image_[i] > image_[j]) ++inversions;
  return inversions;
}

std::string Permutation::str() const {
  std::string out;
  for (int k = 0; k < n_; ++k) out.push_back(static_cast<char>('0' + image_[k]));
  return out;
}

Reflection::Reflection(int a, int b) {
  if (a == b || a < 1 || b < 1 || a > kMaxRank || b > kMaxRank)
    throw InvalidArgument("bad transposition (" + std::to_string(a) + " " + std::to_string(b) + ")");
  i = static_cast<std::uint8_t>(std::min(a, b));
  j = static_cast<std::uint8_t>(std::max(a, b));
}

int Reflection::lex_index(int n) const {
  // Rows i = 1..i-1 contribute n - row entries each.
  int index = 0;
  for (int row = 1; row < i; ++row) index += n - row;
  return index + (j - i - 1);
}

Permutation Reflection::as_permutation(int n) const {
  if (j > n) throw InvalidArgument("transposition " + str() + " not in S_" + std::to_string(n));
  Permutation p = Permutation::identity(n);
  std::swap(p.image_[i - 1], p.image_[j - 1]);
  return p;
}

std::string Reflection::str() const {
  return "(" + std::to_string(i) + " " + std::to_string(j) + ")";
}

Reflection Reflection::parse(std::string_view text) {
  std::vector<int> digits;
  int current = -1;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      if (current >= 0) {
        // "(ij)" without a separator: every entry is a single digit.
        digits.push_back(current);
      }
      current = ch - '0';
    } else if (ch == ' ' || ch == ',' || ch == '(' || ch == ')') {
      if (current >= 0) digits.push_back(current);
      current = -1;
    } else {
      throw InvalidArgument("bad transposition: '" + std::string(text) + "'");
    }
  }
  if (current >= 0) digits.push_back(current);
  if (digits.size() != 2) throw InvalidArgument("bad transposition: '" + std::string(text) + "'");
  return Reflection(digits[0], digits[1]);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n_ != q.n_)
    throw RankMismatch("rank mismatch: S_" + std::to_string(p.n_) + " vs S_" + std::to_string(q.n_));
  Permutation r = p;
  for (int k = 0; k < p.n_; ++k) r.image_[k] = p.image_[q.image_[k] - 1];
  return r;
}

Permutation operator*(const Permutation& p, const Reflection& t) {
  return compose(p, t.as_permutation(p.rank()));
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank())
    throw RankMismatch("rank mismatch: S_" + std::to_string(u.rank()) + " vs S_" + std::to_string(v.rank()));
  const int n = u.rank();
  // u <= v iff #{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j} for all i, j.
  for (int j = 1; j <= n; ++j) {
    int count_u = 0;
    int count_v = 0;
    for (int i = 1; i <= n; ++i) {
      if (u.at(i) >= j) ++count_u;
      if (v.at(i) >= j) ++count_v;
      if (count_u > count_v) return false;
    }
  }
  return true;
}

std::optional<Reflection> edge_leq(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) return std::nullopt;
  int first = 0;
  int second = 0;
  int differences = 0;
  for (int k = 1; k <= x.rank(); ++k) {
    if (x.at(k) == y.at(k)) continue;
    if (++differences > 2) return std::nullopt;
    (differences == 1 ? first : second) = k;
  }
  if (differences != 2 || x.at(first) != y.at(second) || x.at(second) != y.at(first)) return std::nullopt;
  // Swapping positions i < j raises the length exactly when x(i) < x(j).
  if (x.at(first) > x.at(second)) return std::nullopt;
  return Reflection(first, second);
}

std::vector<Reflection> all_reflections(int n) {
  std::vector<Reflection> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace cdindex
