#include "cdindex/flips.hpp"

#include <algorithm>

#include "cdindex/error.hpp"

namespace cdindex {

namespace {

std::string describe(const BruhatInterval& iv, int w, const AdMonomial& word) {
  return "[" + iv.element(w).str() + "," + iv.top().str() + "] word " + word.str();
}

// Forward path counts: result[x][k] = number of paths from `from` to x with
// exactly k edges.
std::vector<std::vector<long long>> count_paths_from(const BruhatInterval& iv, int from, int max_edges) {
  std::vector<std::vector<long long>> out(iv.size(), std::vector<long long>(max_edges + 1, 0));
  out[from][0] = 1;
  for (int x = from; x < iv.size(); ++x)
    for (const auto& e : iv.out_edges(x))
      for (int k = 1; k <= max_edges; ++k) out[e.target][k] += out[x][k - 1];
  return out;
}

// Some path from `from` to `to` with exactly `edges` edges (counts must allow it).
IndexedPath some_prefix(const BruhatInterval& iv, const std::vector<std::vector<long long>>& forward, int from,
                        int to, int edges) {
  IndexedPath path;
  path.vertices.push_back(to);
  int current = to;
  for (int k = edges; k > 0; --k) {
    for (const auto& e : iv.in_edges(current)) {
      if (forward[e.source][k - 1] == 0) continue;
      path.vertices.push_back(e.source);
      path.labels.push_back(e.label);
      current = e.source;
      break;
    }
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.labels.begin(), path.labels.end());
  (void)from;
  return path;
}

IndexedPath join(const IndexedPath& prefix, const Edge& edge, const IndexedPath& tail) {
  IndexedPath out = prefix;
  out.labels.push_back(edge.label);
  out.vertices.insert(out.vertices.end(), tail.vertices.begin(), tail.vertices.end());
  out.labels.insert(out.labels.end(), tail.labels.begin(), tail.labels.end());
  return out;
}

}  // namespace

TSetTable::TSetTable(BruhatInterval iv, ReflectionOrder order) : iv_(std::move(iv)), order_(std::move(order)) {
  if (order_.rank() != iv_.rank())
    throw RankMismatch("reflection order on S_" + std::to_string(order_.rank()) + " used with an interval in S_" +
                       std::to_string(iv_.rank()));
}

int TSetTable::rank(const Reflection& t, Side side) const {
  const int r = order_.rank_of(t);
  return side == Side::ordered ? r : static_cast<int>(order_.size()) + 1 - r;
}

void TSetTable::sort_lex(std::vector<IndexedPath>& list) const {
  std::sort(list.begin(), list.end(), [&](const IndexedPath& a, const IndexedPath& b) {
    return std::lexicographical_compare(
        a.labels.begin(), a.labels.end(), b.labels.begin(), b.labels.end(),
        [&](const Reflection& x, const Reflection& y) { return order_.rank_of(x) < order_.rank_of(y); });
  });
}

const TSetTable::Entry& TSetTable::entry(int w, const AdMonomial& word) {
  const auto key = std::make_pair(w, word);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Entry built = build(w, word);
  return memo_.emplace(key, std::move(built)).first->second;
}

TSetTable::Entry TSetTable::build(int w, const AdMonomial& word) {
  Entry out;
  const int top = iv_.top_index();
  if (word.empty()) {
    for (const auto& e : iv_.out_edges(w)) {
      if (e.target != top) continue;
      IndexedPath p{{w, top}, {e.label}};
      out.t.push_back(p);
      out.t_bar.push_back(p);
    }
    return out;
  }

  const AdLetter head = word.front();
  const AdMonomial rest = word.suffix(1);
  for (const auto& edge : iv_.out_edges(w)) {
    if (edge.target == top) continue;
    const Entry& sub = entry(edge.target, rest);
    for (Side side : {Side::ordered, Side::reversed}) {
      const auto& tails = side == Side::ordered ? sub.t : sub.t_bar;
      const auto& images = side == Side::ordered ? sub.t_bar : sub.t;
      auto& dest = side == Side::ordered ? out.t : out.t_bar;
      for (std::size_t i = 0; i < tails.size(); ++i) {
        const IndexedPath& tail = tails[i];
        const AdLetter beta = letter(edge.label, tail.first_label(), side);
        if (head == AdLetter::A) {
          if (beta != AdLetter::A) continue;
        } else {
          if (beta != AdLetter::D) continue;
          if (tails.size() != images.size())
            throw FlipUndefined("flip undefined on " + describe(iv_, edge.target, rest) +
                                ": |T| = " + std::to_string(sub.t.size()) +
                                ", |T̄| = " + std::to_string(sub.t_bar.size()));
          if (letter(edge.label, images[i].first_label(), side) != AdLetter::A) continue;
        }
        IndexedPath p;
        p.vertices.reserve(tail.vertices.size() + 1);
        p.vertices.push_back(w);
        p.vertices.insert(p.vertices.end(), tail.vertices.begin(), tail.vertices.end());
        p.labels.reserve(tail.labels.size() + 1);
        p.labels.push_back(edge.label);
        p.labels.insert(p.labels.end(), tail.labels.begin(), tail.labels.end());
        dest.push_back(std::move(p));
      }
    }
  }
  sort_lex(out.t);
  sort_lex(out.t_bar);
  return out;
}

const std::vector<IndexedPath>& TSetTable::paths(int w, const AdMonomial& word, Side side) {
  const Entry& e = entry(w, word);
  return side == Side::ordered ? e.t : e.t_bar;
}

bool TSetTable::flip_defined(int w, const AdMonomial& word) {
  const Entry& e = entry(w, word);
  return e.t.size() == e.t_bar.size();
}

const IndexedPath& TSetTable::flip(int w, const AdMonomial& word, Side side, std::size_t i) {
  const Entry& e = entry(w, word);
  if (e.t.size() != e.t_bar.size())
    throw FlipUndefined("flip undefined on " + describe(iv_, w, word) + ": |T| = " + std::to_string(e.t.size()) +
                        ", |T̄| = " + std::to_string(e.t_bar.size()));
  const auto& images = side == Side::ordered ? e.t_bar : e.t;
  if (i >= images.size()) throw InvalidArgument("flip index out of range");
  return images[i];
}

int TSetTable::find(int w, const AdMonomial& word, Side side, const std::vector<Reflection>& labels) {
  const auto& list = paths(w, word, side);
  auto less = [&](const std::vector<Reflection>& a, const std::vector<Reflection>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [&](const Reflection& x, const Reflection& y) { return order_.rank_of(x) < order_.rank_of(y); });
  };
  auto it = std::lower_bound(list.begin(), list.end(), labels,
                             [&](const IndexedPath& p, const std::vector<Reflection>& l) { return less(p.labels, l); });
  if (it == list.end() || it->labels != labels) return -1;
  return static_cast<int>(it - list.begin());
}

void TSetTable::populate(int max_degree) {
  for (int degree = 0; degree <= max_degree; ++degree)
    for (const auto& m : cd_monomials(degree)) {
      const AdMonomial word = cd_monomial_to_ad(m);
      for (int w = 0; w < iv_.size(); ++w) {
        try {
          entry(w, word);
        } catch (const FlipUndefined&) {
        }
      }
    }
}

BruhatPath TSetTable::to_path(const IndexedPath& p) const {
  BruhatPath out;
  out.labels = p.labels;
  for (int x : p.vertices) out.vertices.push_back(iv_.element(x));
  return out;
}

std::vector<BruhatPath> compute_t(TSetTable& table, const CdMonomial& m, int w) {
  std::vector<BruhatPath> out;
  for (const auto& p : table.paths(w, cd_monomial_to_ad(m), Side::ordered)) out.push_back(table.to_path(p));
  return out;
}

std::vector<BruhatPath> compute_t_bar(TSetTable& table, const CdMonomial& m, int w) {
  std::vector<BruhatPath> out;
  for (const auto& p : table.paths(w, cd_monomial_to_ad(m), Side::reversed)) out.push_back(table.to_path(p));
  return out;
}

std::vector<std::pair<BruhatPath, BruhatPath>> flip_pairing(TSetTable& table, const CdMonomial& m, int w) {
  const AdMonomial word = cd_monomial_to_ad(m);
  const auto& t = table.paths(w, word, Side::ordered);
  std::vector<std::pair<BruhatPath, BruhatPath>> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    out.emplace_back(table.to_path(t[i]), table.to_path(table.flip(w, word, Side::ordered, i)));
  if (t.empty() && !table.flip_defined(w, word)) table.flip(w, word, Side::ordered, 0);
  return out;
}

int s_factor(TSetTable& table, const BruhatPath& x, int position, const AdMonomial& word) {
  const int n = x.length();
  if (n != word.size() || position < 1 || position > n)
    throw InvalidArgument("s_factor: position " + std::to_string(position) + " outside a path of length " +
                          std::to_string(n) + " for word " + word.str());
  const auto& labels = x.labels;
  const AdLetter beta = table.letter(labels[position - 1], labels[position], Side::ordered);
  if (word[position - 1] == AdLetter::A) return beta == AdLetter::A ? 1 : 0;

  const BruhatInterval& iv = table.interval();
  const int z = iv.index_of(x.vertices[position]);
  const AdMonomial suffix = word.suffix(position);
  const std::vector<Reflection> tail(labels.begin() + position, labels.end());
  const int index = z < 0 ? -1 : table.find(z, suffix, Side::ordered, tail);
  if (index < 0)
    throw FlipUndefined("flip requested for a path outside T_" + suffix.str() + "(" + x.vertices[position].str() +
                        "," + iv.top().str() + ")");
  const IndexedPath& image = table.flip(z, suffix, Side::ordered, static_cast<std::size_t>(index));
  const AdLetter alpha = table.letter(labels[position - 1], image.first_label(), Side::ordered);
  if (beta == AdLetter::D && alpha == AdLetter::A) return 1;
  if (beta == AdLetter::A && alpha == AdLetter::D) return -1;
  return 0;
}

int s_m(TSetTable& table, const BruhatPath& x, const CdMonomial& m) {
  const AdMonomial word = cd_monomial_to_ad(m);
  const int n = word.size();
  if (x.length() != n)
    throw InvalidArgument("s_M: path of length " + std::to_string(x.length()) + " for a monomial of degree " +
                          std::to_string(n));
  int product = 1;
  bool all_one = true;
  bool unknown = false;
  for (int position = n; position >= 1; --position) {
    if (word[position - 1] == AdLetter::A || all_one) {
      int factor = 0;
      try {
        factor = s_factor(table, x, position, word);
      } catch (const FlipUndefined&) {
        unknown = true;
        all_one = false;
        continue;
      }
      if (factor == 0) return 0;
      product *= factor;
      if (factor != 1) all_one = false;
    } else {
      // The tail is not in its T-set, so this factor depends on how the flip
      // would be extended; only a known zero elsewhere settles the product.
      unknown = true;
    }
  }
  if (unknown) throw FlipUndefined("s_M(" + label_string(x, table.order()) + ") depends on a flip outside the T-sets");
  return product;
}

std::int64_t sum_s_m(TSetTable& table, const CdMonomial& m, int from) {
  const BruhatInterval& iv = table.interval();
  const AdMonomial word = cd_monomial_to_ad(m);
  const int n = word.size();
  if (n > iv.length() - 1) return 0;
  const auto counts = count_paths_to_top(iv, n);
  const int top = iv.top_index();

  std::int64_t total = 0;
  IndexedPath current{{from}, {}};
  // Paths whose word disagrees with an A of γ contribute 0 and are pruned.
  auto extend = [&](auto&& self, int x, int edges_left) -> void {
    if (edges_left == 0) {
      if (x == top) total = checked_add(total, s_m(table, table.to_path(current), m));
      return;
    }
    for (const auto& e : iv.out_edges(x)) {
      const int remaining = edges_left - 1;
      if (remaining == 0 ? e.target != top : (e.target == top || counts[e.target][remaining - 1] == 0)) continue;
      const int position = static_cast<int>(current.labels.size());  // letter index of this comparison
      if (position >= 1 && word[position - 1] == AdLetter::A &&
          table.letter(current.labels.back(), e.label, Side::ordered) != AdLetter::A)
        continue;
      current.vertices.push_back(e.target);
      current.labels.push_back(e.label);
      self(self, e.target, remaining);
      current.vertices.pop_back();
      current.labels.pop_back();
    }
  };
  extend(extend, from, n + 1);
  return total;
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::minus_one_at_m:
      return "minus-one-at-m";
    case WitnessKind::size_mismatch:
      return "size-mismatch";
    case WitnessKind::first_reflection:
      return "first-reflection";
  }
  return "unknown";
}

FlipCheck check_flip_condition(TSetTable& table, const CdMonomial& m, int from) {
  const BruhatInterval& iv = table.interval();
  const AdMonomial word = cd_monomial_to_ad(m);
  const int n = word.size();
  FlipCheck result;
  if (n > iv.length() - 1) return result;
  const auto forward = count_paths_from(iv, from, n);

  auto fail = [&](WitnessKind kind, int position, const IndexedPath* path, std::string detail) {
    result.holds = false;
    FlipWitness witness;
    if (path) witness.path = table.to_path(*path);
    witness.position = position;
    witness.kind = kind;
    witness.detail = std::move(detail);
    result.witness = std::move(witness);
    return result;
  };

  for (int position = 1; position <= n; ++position) {
    if (word[position - 1] != AdLetter::D) continue;
    const AdMonomial suffix = word.suffix(position);
    for (int z = 0; z < iv.size(); ++z) {
      if (z == iv.top_index()) continue;
      std::vector<Edge> entries;
      for (const auto& e : iv.in_edges(z))
        if (position == 1 ? e.source == from : forward[e.source][position - 1] > 0) entries.push_back(e);
      if (entries.empty()) continue;

      const std::vector<IndexedPath>* tails = nullptr;
      try {
        tails = &table.paths(z, suffix, Side::ordered);
      } catch (const FlipUndefined& err) {
        return fail(WitnessKind::size_mismatch, position, nullptr, err.what());
      }
      if (tails->empty()) continue;
      const bool defined = table.flip_defined(z, suffix);
      for (const auto& e : entries) {
        for (std::size_t i = 0; i < tails->size(); ++i) {
          const IndexedPath& tail = (*tails)[i];
          if (table.letter(e.label, tail.first_label(), Side::ordered) != AdLetter::A) continue;
          const IndexedPath witness_path =
              join(some_prefix(iv, forward, from, e.source, position - 1), e, tail);
          if (!defined)
            return fail(WitnessKind::size_mismatch, position, &witness_path,
                        "flip undefined on " + describe(iv, z, suffix));
          const IndexedPath& image = table.flip(z, suffix, Side::ordered, i);
          if (table.letter(e.label, image.first_label(), Side::ordered) == AdLetter::D)
            return fail(WitnessKind::minus_one_at_m, position, &witness_path, "");
        }
      }
    }
  }
  return result;
}

FlipCheck check_strong_flip_condition(TSetTable& table, const CdMonomial& m, int from) {
  FlipCheck result;
  const AdMonomial word = cd_monomial_to_ad(m);
  if (word.empty() || word.front() != AdLetter::A) {
    result.applicable = false;
    return result;
  }
  auto fail = [&](WitnessKind kind, const IndexedPath* path, std::string detail) {
    result.holds = false;
    FlipWitness witness;
    if (path) witness.path = table.to_path(*path);
    witness.position = 0;
    witness.kind = kind;
    witness.detail = std::move(detail);
    result.witness = std::move(witness);
    return result;
  };
  const std::vector<IndexedPath>* t = nullptr;
  const std::vector<IndexedPath>* t_bar = nullptr;
  try {
    t = &table.paths(from, word, Side::ordered);
    t_bar = &table.paths(from, word, Side::reversed);
  } catch (const FlipUndefined& err) {
    return fail(WitnessKind::size_mismatch, nullptr, err.what());
  }
  if (t->size() != t_bar->size())
    return fail(WitnessKind::size_mismatch, t->empty() ? nullptr : &t->front(),
                "flip undefined on " + describe(table.interval(), from, word));
  for (std::size_t i = 0; i < t->size(); ++i)
    if (table.rank((*t)[i].first_label(), Side::ordered) > table.rank((*t_bar)[i].first_label(), Side::ordered))
      return fail(WitnessKind::first_reflection, &(*t)[i], "");
  return result;
}

CoefficientReport verify_coefficient(TSetTable& table, const CdMonomial& m, const CompleteCdIndex& index, int w) {
  CoefficientReport report;
  report.monomial = m;
  const AdMonomial word = cd_monomial_to_ad(m);
  report.coefficient = index.coefficient(m);
  report.t_size = static_cast<std::int64_t>(table.paths(w, word, Side::ordered).size());
  report.t_bar_size = static_cast<std::int64_t>(table.paths(w, word, Side::reversed).size());
  report.sum_s = sum_s_m(table, m, w);
  report.consistent = report.coefficient == report.t_size && report.t_size == report.t_bar_size &&
                      report.t_size == report.sum_s;
  return report;
}

CoefficientReport verify_coefficient(TSetTable& table, const CdMonomial& m) {
  return verify_coefficient(table, m, complete_cd_index(table.interval(), table.order()));
}

ShellingReport corollary5_check(TSetTable& table, const CdMonomial& m, const Reflection& t,
                                const ShellingDecomposition& decomposition) {
  ShellingReport report;
  report.monomial = m;
  report.t = t;
  const AdMonomial word = cd_monomial_to_ad(m);
  const int bound = table.rank(t, Side::ordered);
  for (const auto& p : table.paths(0, word, Side::ordered))
    if (table.rank(p.first_label(), Side::ordered) <= bound) ++report.t_leq;
  for (const auto& p : table.paths(0, word, Side::reversed))
    if (table.rank(p.first_label(), Side::ordered) <= bound) ++report.t_bar_leq;

  if (auto it = decomposition.by_degree.find(m.degree()); it != decomposition.by_degree.end()) {
    report.coeff_f = it->second.f.coefficient(m);
    const std::int64_t from_g =
        (!m.empty() && m.front() == CdLetter::c) ? it->second.g.coefficient(m.suffix(1)) : 0;
    report.coeff_f_cg = checked_add(report.coeff_f, from_g);
  }
  report.consistent = report.t_bar_leq == report.coeff_f && report.t_leq == report.coeff_f_cg;
  return report;
}

ShellingReport corollary5_check(TSetTable& table, const CdMonomial& m, const Reflection& t) {
  return corollary5_check(table, m, t, shelling_decomposition(table.interval(), t, table.order()));
}

}  // namespace cdindex
