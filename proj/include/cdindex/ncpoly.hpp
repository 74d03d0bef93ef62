#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cdindex/error.hpp"

namespace cdindex {

enum class AdLetter : std::uint8_t { A = 0, D = 1 };
enum class CdLetter : std::uint8_t { c = 0, d = 1 };

template <class Letter>
struct Alphabet;

template <>
struct Alphabet<AdLetter> {
  static constexpr char symbol[2] = {'A', 'D'};
  static constexpr int weight[2] = {1, 1};
};

template <>
struct Alphabet<CdLetter> {
  static constexpr char symbol[2] = {'c', 'd'};
  static constexpr int weight[2] = {1, 2};
};

/// A word over a two-letter alphabet, packed into a 64-bit mask.
///
/// Letter i (0-based from the left) lives in bit size()-1-i, so ordering by
/// (size, bits) is lexicographic within each size with the first letter of
/// the alphabet smaller.
template <class Letter>
class Word {
 public:
  static constexpr int kMaxSize = 62;

  Word() = default;

  static Word from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (Letter l : letters) w = w.append(l);
    return w;
  }

  /// Strict alphabet; "1" and "" denote the empty word.
  static Word parse(std::string_view text) {
    Word w;
    if (text == "1") return w;
    for (char ch : text) {
      if (ch == Alphabet<Letter>::symbol[0])
        w = w.append(Letter{0});
      else if (ch == Alphabet<Letter>::symbol[1])
        w = w.append(Letter{1});
      else
        throw InvalidArgument("bad monomial '" + std::string(text) + "': alphabet is {" +
                              Alphabet<Letter>::symbol[0] + "," + Alphabet<Letter>::symbol[1] + "}");
    }
    return w;
  }

  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::uint64_t bits() const { return bits_; }

  Letter operator[](int i) const { return Letter((bits_ >> (size_ - 1 - i)) & 1U); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size_ - 1]; }

  /// Sum of letter weights: size for AD-words, #c + 2#d for cd-words.
  int degree() const {
    const int ones = std::popcount(bits_);
    return (size_ - ones) * Alphabet<Letter>::weight[0] + ones * Alphabet<Letter>::weight[1];
  }

  int count(Letter l) const {
    const int ones = std::popcount(bits_);
    return static_cast<std::uint8_t>(l) ? ones : size_ - ones;
  }

  Word append(Letter l) const {
    check_room(1);
    Word w;
    w.bits_ = (bits_ << 1) | static_cast<std::uint64_t>(l);
    w.size_ = static_cast<std::uint8_t>(size_ + 1);
    return w;
  }

  Word prepend(Letter l) const {
    check_room(1);
    Word w;
    w.bits_ = bits_ | (static_cast<std::uint64_t>(l) << size_);
    w.size_ = static_cast<std::uint8_t>(size_ + 1);
    return w;
  }

  Word concat(const Word& tail) const {
    check_room(tail.size_);
    Word w;
    w.bits_ = (bits_ << tail.size_) | tail.bits_;
    w.size_ = static_cast<std::uint8_t>(size_ + tail.size_);
    return w;
  }

  /// Letters [start, size()).
  Word suffix(int start) const {
    Word w;
    w.size_ = static_cast<std::uint8_t>(size_ - start);
    w.bits_ = w.size_ == 0 ? 0 : bits_ & ((std::uint64_t{1} << w.size_) - 1);
    return w;
  }

  /// Letters [0, count).
  Word prefix(int count) const {
    Word w;
    w.size_ = static_cast<std::uint8_t>(count);
    w.bits_ = bits_ >> (size_ - count);
    return w;
  }

  /// Swap the two letters.
  Word complement() const {
    Word w = *this;
    w.bits_ = size_ == 0 ? 0 : (~bits_) & ((std::uint64_t{1} << size_) - 1);
    return w;
  }

  std::string str() const {
    if (size_ == 0) return "1";
    std::string out;
    for (int i = 0; i < size_; ++i) out.push_back(Alphabet<Letter>::symbol[static_cast<int>((*this)[i])]);
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  void check_room(int extra) const {
    if (size_ + extra > kMaxSize) throw InvalidArgument("monomial too long");
  }

  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

using AdMonomial = Word<AdLetter>;
using CdMonomial = Word<CdLetter>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Integer linear combination of words; zero coefficients are never stored.
template <class Letter>
class Polynomial {
 public:
  using Monomial = Word<Letter>;
  using Terms = std::map<Monomial, std::int64_t>;

  Polynomial() = default;
  explicit Polynomial(std::int64_t constant) { add(Monomial{}, constant); }
  explicit Polynomial(const Monomial& m, std::int64_t coeff = 1) { add(m, coeff); }

  /// Parses sums such as "2c^2+d", "2cc+d" or "AD-DA".
  static Polynomial parse(std::string_view text);

  void add(const Monomial& m, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Polynomial homogeneous_part(int degree) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
      if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
  }

  /// Distinct degrees present, ascending.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [m, c] : terms_) {
      const int d = m.degree();
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_homogeneous_of(int degree) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != degree) return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, checked_mul(c, -1));
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial{} - a; }

  friend Polynomial operator*(std::int64_t s, const Polynomial& p) {
    Polynomial out;
    if (s == 0) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, checked_mul(s, c));
    return out;
  }

  /// Noncommutative product: words concatenate.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add(ma.concat(mb), checked_mul(ca, cb));
    return out;
  }

  /// Prefix every word with `l`.
  Polynomial left_multiply(Letter l) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.prepend(l), c);
    return out;
  }

  /// Append `l` to every word.
  Polynomial right_multiply(Letter l) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.append(l), c);
    return out;
  }

  /// Human-readable sum, e.g. "2c^2+d" or "AD-DA"; the zero polynomial is "0".
  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

using AdPolynomial = Polynomial<AdLetter>;
using CdPolynomial = Polynomial<CdLetter>;

/// Ring map c ↦ A+D, d ↦ AD+DA.
AdPolynomial expand_cd(const CdPolynomial& p);
AdPolynomial expand_cd(const CdMonomial& m);

/// Swap A and D in every monomial.
AdPolynomial bar(const AdPolynomial& p);

/// The unique q with expand_cd(q) = p, degree by degree. Throws NotInSubring.
CdPolynomial ad_to_cd(const AdPolynomial& p);

/// (f_n, f_{n-1}, ..., f_0) with p = f_n + f_{n-1}·D + ... + f_0·D^n.
/// Throws NotDecomposable when p lies outside the span of such expressions.
std::vector<CdPolynomial> d_expansion(const AdPolynomial& p, int degree);

struct FPlusAG {
  CdPolynomial f;  // degree n
  CdPolynomial g;  // degree n-1

  friend bool operator==(const FPlusAG&, const FPlusAG&) = default;
};

/// p = f + A·g with homogeneous cd-polynomials f, g. Throws NotDecomposable.
FPlusAG decompose_f_plus_Ag(const AdPolynomial& p, int degree);

/// p = f + g·D with homogeneous cd-polynomials f, g. Throws NotDecomposable.
FPlusAG decompose_f_plus_gD(const AdPolynomial& p, int degree);

/// c ↦ A, d ↦ DA.
AdMonomial cd_monomial_to_ad(const CdMonomial& m);

/// Inverse of cd_monomial_to_ad; throws InvalidArgument when some D is not
/// followed by an A.
CdMonomial ad_monomial_to_cd(const AdMonomial& w);

inline std::int64_t coefficient(const CdPolynomial& p, const CdMonomial& m) { return p.coefficient(m); }

/// All cd-monomials of the given degree, lexicographic with c < d.
std::vector<CdMonomial> cd_monomials(int degree);

/// Number of cd-monomials of a degree: Fibonacci(degree + 1).
std::int64_t cd_basis_size(int degree);

}  // namespace cdindex
