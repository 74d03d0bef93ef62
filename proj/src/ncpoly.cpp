#include "cdindex/ncpoly.hpp"

#include <cctype>
#include <utility>

namespace cdindex {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("coefficient overflow in multiplication");
  return r;
}

namespace {

template <class Letter>
std::string render_word(const Word<Letter>& w) {
  return w.str();
}

// cd-words print with exponents on runs: "ccd" -> "c^2d".
template <>
std::string render_word(const CdMonomial& w) {
  if (w.empty()) return "1";
  std::string out;
  int i = 0;
  while (i < w.size()) {
    int j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out.push_back(w[i] == CdLetter::c ? 'c' : 'd');
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

template <class Letter>
std::string Polynomial<Letter>::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.str() < b.first.str();
  });
  std::string out;
  for (const auto& [m, c] : sorted) {
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    const std::int64_t mag = c < 0 ? -c : c;
    if (m.empty()) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += render_word(m);
  }
  return out;
}

template <class Letter>
Polynomial<Letter> Polynomial<Letter>::parse(std::string_view text) {
  Polynomial out;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&]() -> Polynomial {
    throw InvalidArgument("bad polynomial '" + std::string(text) + "'");
  };
  skip_space();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip_space();
    if (pos >= text.size()) {
      if (first) fail();
      break;
    }
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_space();
    } else if (!first) {
      fail();
    }
    first = false;
    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      has_coeff = true;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        coeff = checked_add(checked_mul(coeff, 10), text[pos++] - '0');
      if (pos < text.size() && text[pos] == '*') ++pos;
    }
    Monomial m;
    bool has_letter = false;
    while (pos < text.size()) {
      const char ch = text[pos];
      Letter letter;
      if (ch == Alphabet<Letter>::symbol[0])
        letter = Letter{0};
      else if (ch == Alphabet<Letter>::symbol[1])
        letter = Letter{1};
      else
        break;
      ++pos;
      int repeat = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        repeat = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          repeat = repeat * 10 + (text[pos++] - '0');
      }
      for (int k = 0; k < repeat; ++k) m = m.append(letter);
      has_letter = true;
    }
    if (!has_letter && !has_coeff) fail();
    out.add(m, checked_mul(sign, coeff));
    skip_space();
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-') fail();
  }
  return out;
}

template class Polynomial<AdLetter>;
template class Polynomial<CdLetter>;

AdPolynomial expand_cd(const CdMonomial& m) {
  AdPolynomial out(1);
  for (int i = 0; i < m.size(); ++i) {
    AdPolynomial next;
    for (const auto& [w, c] : out.terms()) {
      if (m[i] == CdLetter::c) {
        next.add(w.append(AdLetter::A), c);
        next.add(w.append(AdLetter::D), c);
      } else {
        next.add(w.append(AdLetter::A).append(AdLetter::D), c);
        next.add(w.append(AdLetter::D).append(AdLetter::A), c);
      }
    }
    out = std::move(next);
  }
  return out;
}

AdPolynomial expand_cd(const CdPolynomial& p) {
  AdPolynomial out;
  for (const auto& [m, c] : p.terms()) out += c * expand_cd(m);
  return out;
}

AdPolynomial bar(const AdPolynomial& p) {
  AdPolynomial out;
  for (const auto& [w, c] : p.terms()) out.add(w.complement(), c);
  return out;
}

namespace {

// Terms whose word starts (or ends) with `l`, with that letter removed.
AdPolynomial strip_front(const AdPolynomial& p, AdLetter l) {
  AdPolynomial out;
  for (const auto& [w, c] : p.terms())
    if (!w.empty() && w.front() == l) out.add(w.suffix(1), c);
  return out;
}

AdPolynomial strip_back(const AdPolynomial& p, AdLetter l) {
  AdPolynomial out;
  for (const auto& [w, c] : p.terms())
    if (!w.empty() && w.back() == l) out.add(w.prefix(w.size() - 1), c);
  return out;
}

// Peels the first letter. Writing q = c·q1 + d·q2, the A- and D-parts of
// expand_cd(q) are E(q1) + D·E(q2) and E(q1) + A·E(q2).
CdPolynomial ad_to_cd_homogeneous(const AdPolynomial& p, int degree) {
  if (p.is_zero()) return {};
  if (degree == 0) return CdPolynomial(p.coefficient(AdMonomial{}));
  const AdPolynomial part_a = strip_front(p, AdLetter::A);
  const AdPolynomial part_d = strip_front(p, AdLetter::D);
  const AdPolynomial diff = part_a - part_d;  // = (D - A)·E(q2)
  AdPolynomial tail;
  if (degree >= 2) tail = strip_front(diff, AdLetter::D);
  if (diff != tail.left_multiply(AdLetter::D) - tail.left_multiply(AdLetter::A))
    throw NotInSubring("AD-polynomial is not a cd-polynomial");

  CdPolynomial out;
  const CdPolynomial q1 = ad_to_cd_homogeneous(part_a - tail.left_multiply(AdLetter::D), degree - 1);
  for (const auto& [m, c] : q1.terms()) out.add(m.prepend(CdLetter::c), c);
  if (degree >= 2) {
    const CdPolynomial q2 = ad_to_cd_homogeneous(tail, degree - 2);
    for (const auto& [m, c] : q2.terms()) out.add(m.prepend(CdLetter::d), c);
  }
  return out;
}

void require_homogeneous(const AdPolynomial& p, int degree, const char* what) {
  if (degree < 0 || !p.is_homogeneous_of(degree))
    throw NotDecomposable(std::string(what) + ": input is not homogeneous of degree " + std::to_string(degree));
}

CdPolynomial to_cd_or_not_decomposable(const AdPolynomial& p, const char* what) {
  try {
    return ad_to_cd(p);
  } catch (const NotInSubring&) {
    throw NotDecomposable(std::string(what) + ": no expansion of the requested form");
  }
}

AdPolynomial d_power(int k) {
  AdMonomial w;
  for (int i = 0; i < k; ++i) w = w.append(AdLetter::D);
  return AdPolynomial(w);
}

std::vector<CdPolynomial> d_expansion_rec(const AdPolynomial& p, int degree) {
  if (degree == 0) return {CdPolynomial(p.coefficient(AdMonomial{}))};
  // p = f + G·D with f = fc·c + fd·d: the A-ending part of p is fc + fd·D.
  const FPlusAG head = decompose_f_plus_gD(strip_back(p, AdLetter::A), degree - 1);
  CdPolynomial f;
  for (const auto& [m, c] : head.f.terms()) f.add(m.append(CdLetter::c), c);
  for (const auto& [m, c] : head.g.terms()) f.add(m.append(CdLetter::d), c);
  const AdPolynomial rest =
      strip_back(p, AdLetter::D) - expand_cd(head.f) - expand_cd(head.g).right_multiply(AdLetter::A);
  std::vector<CdPolynomial> out{std::move(f)};
  auto lower = d_expansion_rec(rest, degree - 1);
  out.insert(out.end(), lower.begin(), lower.end());
  return out;
}

}  // namespace

CdPolynomial ad_to_cd(const AdPolynomial& p) {
  CdPolynomial out;
  for (int degree : p.degrees()) out += ad_to_cd_homogeneous(p.homogeneous_part(degree), degree);
  if (expand_cd(out) != p) throw NotInSubring("AD-polynomial is not a cd-polynomial (nonzero residual)");
  return out;
}

FPlusAG decompose_f_plus_Ag(const AdPolynomial& p, int degree) {
  require_homogeneous(p, degree, "f + A·g");
  // p - bar(p) = (A - D)·g because f is bar-invariant.
  const AdPolynomial diff = p - bar(p);
  const AdPolynomial g = strip_front(diff, AdLetter::A);
  if (diff != g.left_multiply(AdLetter::A) - g.left_multiply(AdLetter::D))
    throw NotDecomposable("f + A·g: p - bar(p) is not divisible by A - D");
  FPlusAG out;
  out.g = to_cd_or_not_decomposable(g, "f + A·g");
  out.f = to_cd_or_not_decomposable(p - g.left_multiply(AdLetter::A), "f + A·g");
  return out;
}

FPlusAG decompose_f_plus_gD(const AdPolynomial& p, int degree) {
  require_homogeneous(p, degree, "f + g·D");
  // p - bar(p) = g·(D - A).
  const AdPolynomial diff = p - bar(p);
  const AdPolynomial g = strip_back(diff, AdLetter::D);
  if (diff != g.right_multiply(AdLetter::D) - g.right_multiply(AdLetter::A))
    throw NotDecomposable("f + g·D: p - bar(p) is not divisible by D - A");
  FPlusAG out;
  out.g = to_cd_or_not_decomposable(g, "f + g·D");
  out.f = to_cd_or_not_decomposable(p - g.right_multiply(AdLetter::D), "f + g·D");
  return out;
}

std::vector<CdPolynomial> d_expansion(const AdPolynomial& p, int degree) {
  require_homogeneous(p, degree, "D-expansion");
  std::vector<CdPolynomial> out = d_expansion_rec(p, degree);
  AdPolynomial rebuilt;
  for (int k = 0; k <= degree; ++k) rebuilt += expand_cd(out[k]) * d_power(k);
  if (rebuilt != p) throw NotDecomposable("D-expansion: nonzero residual");
  return out;
}

AdMonomial cd_monomial_to_ad(const CdMonomial& m) {
  AdMonomial out;
  for (int i = 0; i < m.size(); ++i) {
    if (m[i] == CdLetter::c)
      out = out.append(AdLetter::A);
    else
      out = out.append(AdLetter::D).append(AdLetter::A);
  }
  return out;
}

CdMonomial ad_monomial_to_cd(const AdMonomial& w) {
  CdMonomial out;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == AdLetter::A) {
      out = out.append(CdLetter::c);
    } else {
      if (i + 1 >= w.size() || w[i + 1] != AdLetter::A)
        throw InvalidArgument("AD-word " + w.str() + " has a D not followed by A");
      out = out.append(CdLetter::d);
      ++i;
    }
  }
  return out;
}

std::vector<CdMonomial> cd_monomials(int degree) {
  if (degree < 0) return {};
  if (degree == 0) return {CdMonomial{}};
  std::vector<CdMonomial> out;
  for (const auto& m : cd_monomials(degree - 1)) out.push_back(m.prepend(CdLetter::c));
  for (const auto& m : cd_monomials(degree - 2)) out.push_back(m.prepend(CdLetter::d));
  return out;
}

std::int64_t cd_basis_size(int degree) {
  if (degree < 0) return 0;
  std::int64_t a = 1;  // Fibonacci(1)
  std::int64_t b = 1;  // Fibonacci(2)
  for (int k = 0; k < degree; ++k) {
    const std::int64_t next = checked_add(a, b);
    a = b;
    b = next;
  }
  return a;
}

}  // namespace cdindex
