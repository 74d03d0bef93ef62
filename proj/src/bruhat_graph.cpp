#include "cdindex/bruhat_graph.hpp"

#include <algorithm>
#include <sstream>

#include "cdindex/error.hpp"

namespace cdindex {

BruhatInterval::BruhatInterval(const Permutation& u, const Permutation& v) : u_(u), v_(v) {
  if (!bruhat_leq(u, v)) throw InvalidArgument("not an interval: " + u.str() + " is not below " + v.str());
  const auto reflections = all_reflections(u.rank());

  // Every x in [u, v] is reached from u by a chain of ≺ steps inside [u, v].
  std::unordered_map<Permutation, int> seen{{u, 0}};
  std::vector<Permutation> queue{u};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Permutation x = queue[head];
    const int lx = x.length();
    for (const auto& t : reflections) {
      Permutation y = x * t;
      if (y.length() <= lx || seen.count(y) || !bruhat_leq(y, v)) continue;
      seen.emplace(y, 0);
      queue.push_back(y);
    }
  }
  elements_ = std::move(queue);
  std::sort(elements_.begin(), elements_.end(), [](const Permutation& a, const Permutation& b) {
    const int la = a.length();
    const int lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  for (int k = 0; k < size(); ++k) index_.emplace(elements_[k], k);

  out_.resize(elements_.size());
  in_.resize(elements_.size());
  for (int k = 0; k < size(); ++k) {
    const Permutation& x = elements_[k];
    for (const auto& t : reflections) {
      const Permutation y = x * t;
      const int target = index_of(y);
      if (target < 0 || y.length() <= x.length()) continue;
      Edge e{k, target, t};
      edges_.push_back(e);
      out_[k].push_back(e);
      in_[target].push_back(e);
    }
  }
}

int BruhatInterval::index_of(const Permutation& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? -1 : it->second;
}

std::string label_string(const BruhatPath& path, const ReflectionOrder& order) {
  bool wide = false;
  for (const auto& t : path.labels) wide = wide || order.rank_of(t) > 9;
  std::string out;
  for (std::size_t k = 0; k < path.labels.size(); ++k) {
    if (wide && k) out += ".";
    out += std::to_string(order.rank_of(path.labels[k]));
  }
  return out;
}

std::vector<std::vector<long long>> count_paths_to_top(const BruhatInterval& iv, int max_length) {
  const int max_edges = std::max(max_length + 1, 0);
  // by_edges[x][k]: paths from x to the top with exactly k edges.
  std::vector<std::vector<long long>> by_edges(iv.size(), std::vector<long long>(max_edges + 1, 0));
  by_edges[iv.top_index()][0] = 1;
  for (int x = iv.size() - 1; x >= 0; --x)
    for (const auto& e : iv.out_edges(x))
      for (int k = 1; k <= max_edges; ++k) by_edges[x][k] += by_edges[e.target][k - 1];

  std::vector<std::vector<long long>> out(iv.size(), std::vector<long long>(std::max(max_length + 1, 0), 0));
  for (int x = 0; x < iv.size(); ++x)
    for (int n = 0; n <= max_length; ++n) out[x][n] = by_edges[x][n + 1];
  return out;
}

namespace {

std::vector<std::vector<Edge>> edges_by_rank(const BruhatInterval& iv, const ReflectionOrder& order) {
  std::vector<std::vector<Edge>> sorted(iv.size());
  for (int x = 0; x < iv.size(); ++x) {
    sorted[x] = iv.out_edges(x);
    std::sort(sorted[x].begin(), sorted[x].end(),
              [&](const Edge& a, const Edge& b) { return order.less(a.label, b.label); });
  }
  return sorted;
}

}  // namespace

std::vector<BruhatPath> enumerate_paths(const BruhatInterval& iv, int n, const ReflectionOrder& order) {
  std::vector<BruhatPath> out;
  if (n < 0 || n > iv.length() - 1) return out;
  const auto counts = count_paths_to_top(iv, n);
  const auto sorted = edges_by_rank(iv, order);

  BruhatPath current;
  current.vertices.push_back(iv.bottom());
  // Depth-first with edges in rank order gives lexicographic output.
  auto extend = [&](auto&& self, int x, int edges_left) -> void {
    if (edges_left == 0) {
      if (x == iv.top_index()) out.push_back(current);
      return;
    }
    for (const auto& e : sorted[x]) {
      const int remaining = edges_left - 1;
      if (remaining == 0 ? e.target != iv.top_index() : counts[e.target][remaining - 1] == 0) continue;
      current.vertices.push_back(iv.element(e.target));
      current.labels.push_back(e.label);
      self(self, e.target, remaining);
      current.vertices.pop_back();
      current.labels.pop_back();
    }
  };
  extend(extend, iv.bottom_index(), n + 1);
  return out;
}

AdMonomial ad_word(const BruhatPath& path, const ReflectionOrder& order) {
  AdMonomial w;
  for (std::size_t i = 1; i < path.labels.size(); ++i)
    w = w.append(order.less(path.labels[i - 1], path.labels[i]) ? AdLetter::A : AdLetter::D);
  return w;
}

std::strong_ordering lex_compare(const BruhatPath& x, const BruhatPath& y, const ReflectionOrder& order) {
  const std::size_t common = std::min(x.labels.size(), y.labels.size());
  for (std::size_t k = 0; k < common; ++k)
    if (auto c = order.rank_of(x.labels[k]) <=> order.rank_of(y.labels[k]); c != 0) return c;
  return x.labels.size() <=> y.labels.size();
}

std::vector<BruhatPath> restrict_first_reflection(const std::vector<BruhatPath>& paths, const Reflection& t,
                                                  const ReflectionOrder& order) {
  std::vector<BruhatPath> out;
  for (const auto& p : paths)
    if (!p.labels.empty() && order.rank_of(p.first_label()) <= order.rank_of(t)) out.push_back(p);
  return out;
}

std::string export_dot(const BruhatInterval& iv, const ReflectionOrder& order) {
  std::ostringstream out;
  out << "digraph \"" << iv.bottom().str() << "_" << iv.top().str() << "\" {\n";
  out << "  rankdir=BT;\n";
  for (const auto& x : iv.elements()) out << "  \"" << x.str() << "\";\n";
  const auto sorted = edges_by_rank(iv, order);
  for (int x = 0; x < iv.size(); ++x)
    for (const auto& e : sorted[x])
      out << "  \"" << iv.element(e.source).str() << "\" -> \"" << iv.element(e.target).str() << "\" [label=\""
          << order.rank_of(e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cdindex
