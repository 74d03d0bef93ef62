#include "cdindex/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "cdindex/bruhat_graph.hpp"
#include "cdindex/cd_index.hpp"
#include "cdindex/error.hpp"
#include "cdindex/flips.hpp"

namespace cdindex {

std::string scan_key(const Permutation& u, const Permutation& v, const ReflectionOrder& order) {
  return order.name() + "/" + u.str() + "/" + v.str();
}

std::vector<std::pair<Permutation, Permutation>> scan_intervals(int n, int max_length) {
  const auto elements = all_permutations(n);
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& u : elements)
    for (const auto& v : elements) {
      if (u == v || !bruhat_leq(u, v)) continue;
      if (max_length >= 0 && v.length() - u.length() > max_length) continue;
      out.emplace_back(u, v);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int la = a.second.length() - a.first.length();
    const int lb = b.second.length() - b.first.length();
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

ScanRecord scan_interval(const Permutation& u, const Permutation& v, const ReflectionOrder& order, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  ScanRecord record;
  record.key = scan_key(u, v, order);
  BruhatInterval iv(u, v);
  TSetTable table(iv, order);
  json witnesses = json::array();

  json& data = record.data;
  data["key"] = record.key;
  data["u"] = u.str();
  data["v"] = v.str();
  data["order"] = order.name();

  std::optional<CompleteCdIndex> index;
  try {
    index = complete_cd_index(iv, order);
    data["cd_index"] = cd_index_to_json(*index, order)["cd_index"];
  } catch (const NotInSubring& err) {
    data["cd_index"] = nullptr;
    data["error"] = err.what();
    ++record.violations;
  }

  std::map<int, ShellingDecomposition> decompositions;  // by rank of t
  bool shelling_failed = false;
  for (const auto& t : all_reflections(u.rank())) {
    try {
      decompositions.emplace(order.rank_of(t), shelling_decomposition(iv, t, order));
    } catch (const NotDecomposable& err) {
      shelling_failed = true;
      data["shelling_error"] = "t=" + t.str() + ": " + err.what();
    }
  }
  if (shelling_failed) ++record.violations;

  json monomials = json::array();
  for (int n : path_degrees(iv)) {
    for (const auto& m : cd_monomials(n)) {
      json entry{{"monomial", m.str()}};
      const std::int64_t coefficient = index ? index->coefficient(m) : 0;
      entry["coefficient"] = coefficient;
      bool bad = false;
      if (index && m.count(CdLetter::d) <= 1 && coefficient < 0) {
        entry["negative"] = true;
        bad = true;
      }

      try {
        const auto report = verify_coefficient(table, m, index ? *index : CompleteCdIndex{u, v, {}});
        entry["t"] = report.t_size;
        entry["t_bar"] = report.t_bar_size;
        entry["sum_s"] = report.sum_s;
        entry["identity"] = report.consistent;
        bad = bad || !report.consistent;
      } catch (const FlipUndefined& err) {
        entry["identity"] = "flip-undefined";
        entry["detail"] = err.what();
        record.flip_undefined = true;
      }

      try {
        const auto check = check_flip_condition(table, m);
        entry["flip"] = check.holds ? "holds" : "violated";
        if (!check.holds) {
          bad = true;
          witnesses.push_back(witness_to_json(iv, m, *check.witness, order));
          if (check.witness->kind == WitnessKind::size_mismatch) record.flip_undefined = true;
        }
      } catch (const FlipUndefined& err) {
        entry["flip"] = "undefined";
        record.flip_undefined = true;
      }

      try {
        const auto check = check_strong_flip_condition(table, m);
        entry["strong_flip"] = !check.applicable ? "n/a" : check.holds ? "holds" : "violated";
        if (!check.holds) {
          bad = true;
          witnesses.push_back(witness_to_json(iv, m, *check.witness, order));
        }
      } catch (const FlipUndefined&) {
        entry["strong_flip"] = "undefined";
        record.flip_undefined = true;
      }

      int shelling_checked = 0;
      bool shelling_ok = true;
      try {
        for (const auto& [rank, decomposition] : decompositions) {
          const auto report = corollary5_check(table, m, order.at_rank(rank), decomposition);
          ++shelling_checked;
          shelling_ok = shelling_ok && report.consistent;
        }
        entry["shelling"] = shelling_ok ? "consistent" : "mismatch";
      } catch (const FlipUndefined&) {
        entry["shelling"] = "undefined";
        record.flip_undefined = true;
      }
      entry["shelling_checked"] = shelling_checked;
      bad = bad || !shelling_ok;

      if (bad) ++record.violations;
      monomials.push_back(std::move(entry));
    }
  }
  data["monomials"] = std::move(monomials);
  data["witnesses"] = std::move(witnesses);
  data["violations"] = record.violations;
  data["flip_undefined"] = record.flip_undefined;
  if (timing)
    data["time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return record;
}

ScanSummary run_scan(const ScanOptions& options, std::ostream& out, const std::set<std::string>& skip) {
  if (options.n < 2 || options.n > 6) throw InvalidArgument("scan needs 2 <= n <= 6");
  const ReflectionOrder order = parse_order_spec(options.n, options.order);

  std::vector<std::pair<Permutation, Permutation>> todo;
  ScanSummary summary;
  for (const auto& iv : scan_intervals(options.n, options.max_length)) {
    if (skip.count(scan_key(iv.first, iv.second, order))) {
      ++summary.skipped;
      continue;
    }
    todo.push_back(iv);
  }

  unsigned workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(todo.size(), 1));

  std::vector<std::optional<ScanRecord>> results(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      std::optional<ScanRecord> record;
      std::exception_ptr error;
      try {
        record = scan_interval(todo[i].first, todo[i].second, order, options.timing);
      } catch (...) {
        error = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(record);
        errors[i] = error;
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);

  std::exception_ptr failure;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return results[i].has_value() || errors[i]; });
    if (errors[i]) {
      failure = errors[i];
      next = todo.size();
      break;
    }
    ScanRecord record = std::move(*results[i]);
    results[i].reset();
    lock.unlock();
    out << record.data.dump() << '\n';
    out.flush();
    if (!out) {
      failure = std::make_exception_ptr(IoError("cannot write scan output"));
      next = todo.size();
      break;
    }
    ++summary.written;
    if (record.violations) ++summary.violations;
    if (record.flip_undefined) ++summary.flip_undefined;
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace cdindex
