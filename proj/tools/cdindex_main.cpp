// cdindex: compute complete cd-indices of Bruhat intervals in S_n, list
// T-sets and flips, sweep all intervals of a group, export DOT.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cdindex/bruhat_graph.hpp"
#include "cdindex/cd_index.hpp"
#include "cdindex/error.hpp"
#include "cdindex/flips.hpp"
#include "cdindex/json_io.hpp"
#include "cdindex/scan.hpp"

namespace {

using namespace cdindex;

enum Exit { kOk = 0, kViolation = 1, kUserError = 2, kInternal = 3, kFlipUndefined = 4, kIo = 5 };

int max_rank() {
  if (const char* env = std::getenv("CDINDEX_MAX_N")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return std::min(n, kMaxRank);
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("CDINDEX_MAX_N is not a positive integer: ") + env);
  }
  return 7;
}

BruhatInterval read_interval(const std::string& u_text, const std::string& v_text) {
  const Permutation u = Permutation::parse(u_text);
  const Permutation v = Permutation::parse(v_text);
  if (u.rank() != v.rank()) throw RankMismatch(u_text + " and " + v_text + " lie in different groups");
  if (u.rank() > max_rank())
    throw InvalidArgument("S_" + std::to_string(u.rank()) + " exceeds CDINDEX_MAX_N=" + std::to_string(max_rank()));
  return BruhatInterval(u, v);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path);
  file << text;
  if (!file) throw IoError("cannot write " + path);
}

std::vector<int> longest_word(int n) {
  std::vector<int> word;
  for (int k = 1; k < n; ++k)
    for (int j = k; j >= 1; --j) word.push_back(j);
  return word;
}

int cmd_compute(const std::string& u, const std::string& v, const std::string& order_spec, bool all_orders,
                const std::string& out) {
  const BruhatInterval iv = read_interval(u, v);
  const ReflectionOrder order = parse_order_spec(iv.rank(), order_spec);
  const CompleteCdIndex index = complete_cd_index(iv, order);
  json report = cd_index_to_json(index, order);
  int code = kOk;
  if (all_orders) {
    std::vector<ReflectionOrder> others{reverse(order)};
    if (iv.rank() >= 2) others.push_back(reflection_order_from_reduced_word(iv.rank(), longest_word(iv.rank())));
    json checked = json::array({order.name()});
    bool agree = true;
    json disagreements = json::array();
    for (const auto& other : others) {
      checked.push_back(other.name());
      const CompleteCdIndex alt = complete_cd_index(iv, other);
      if (!(alt == index)) {
        agree = false;
        disagreements.push_back(cd_index_to_json(alt, other));
      }
    }
    report["checked_orders"] = checked;
    report["orders_agree"] = agree;
    if (!agree) {
      report["disagreements"] = disagreements;
      code = kViolation;
    }
  }
  emit(report.dump(2) + "\n", out);
  return code;
}

int cmd_tset(const std::string& u, const std::string& v, const std::string& monomial, const std::string& order_spec,
             const std::string& out) {
  const BruhatInterval iv = read_interval(u, v);
  const ReflectionOrder order = parse_order_spec(iv.rank(), order_spec);
  const CdMonomial m = CdMonomial::parse(monomial);
  TSetTable table(iv, order);
  const auto t = compute_t(table, m);
  const auto t_bar = compute_t_bar(table, m);
  json pairs = json::array();
  for (const auto& [x, y] : flip_pairing(table, m))
    pairs.push_back(json::array({label_string(x, order), label_string(y, order)}));
  json report{{"u", iv.bottom().str()},   {"v", iv.top().str()},
              {"monomial", m.str()},      {"order", order.name()},
              {"T", tset_to_json(t, order)}, {"T_bar", tset_to_json(t_bar, order)},
              {"flip", pairs}};
  emit(report.dump(2) + "\n", out);
  return kOk;
}

int cmd_verify(const std::string& u, const std::string& v, const std::string& order_spec, const std::string& out) {
  const BruhatInterval iv = read_interval(u, v);
  const ReflectionOrder order = parse_order_spec(iv.rank(), order_spec);
  if (iv.size() == 1) throw InvalidArgument("verify needs u < v");
  const ScanRecord record = scan_interval(iv.bottom(), iv.top(), order);
  emit(record.data.dump(2) + "\n", out);
  if (record.violations) return kViolation;
  return record.flip_undefined ? kFlipUndefined : kOk;
}

std::set<std::string> completed_keys(const std::string& path) {
  // Keeps the well-formed prefix of an interrupted file and rewrites it so
  // appended records start on a fresh line.
  std::set<std::string> keys;
  std::ifstream in(path);
  if (!in) return keys;
  std::ostringstream kept;
  std::string line;
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: the last write was cut short
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("key")) break;
    keys.insert(record["key"].get<std::string>());
    kept << line << '\n';
  }
  in.close();
  std::ofstream rewrite(path, std::ios::trunc);
  if (!rewrite) throw IoError("cannot rewrite " + path);
  rewrite << kept.str();
  if (!rewrite) throw IoError("cannot rewrite " + path);
  return keys;
}

int cmd_scan(const ScanOptions& options, const std::string& out, bool resume) {
  if (options.n > max_rank())
    throw InvalidArgument("S_" + std::to_string(options.n) + " exceeds CDINDEX_MAX_N=" + std::to_string(max_rank()));
  if (resume && (out.empty() || out == "-")) throw InvalidArgument("--resume needs --out FILE");

  std::set<std::string> skip;
  ScanSummary summary;
  if (out.empty() || out == "-") {
    summary = run_scan(options, std::cout);
  } else {
    if (resume) skip = completed_keys(out);
    std::ofstream file(out, resume ? std::ios::app : std::ios::trunc);
    if (!file) throw IoError("cannot open " + out);
    summary = run_scan(options, file, skip);
  }
  std::cerr << json{{"written", summary.written},
                    {"skipped", summary.skipped},
                    {"violations", summary.violations},
                    {"flip_undefined", summary.flip_undefined}}
                   .dump()
            << '\n';
  if (summary.violations) return kViolation;
  return summary.flip_undefined ? kFlipUndefined : kOk;
}

int cmd_dot(const std::string& u, const std::string& v, const std::string& order_spec, const std::string& out) {
  const BruhatInterval iv = read_interval(u, v);
  emit(export_dot(iv, parse_order_spec(iv.rank(), order_spec)), out);
  return kOk;
}

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete cd-index of Bruhat intervals in S_n"};
  app.require_subcommand(1);

  std::string u, v, monomial, order = "lex", out;
  bool all_orders = false, resume = false;
  ScanOptions scan;

  auto* compute = app.add_subcommand("compute", "complete cd-index of [u, v] as JSON");
  compute->add_option("u", u, "bottom, one-line notation")->required();
  compute->add_option("v", v, "top, one-line notation")->required();
  compute->add_option("--order", order, "lex, rev or word:<csv of generators>");
  compute->add_flag("--all-orders", all_orders, "also compute under the reverse and a reduced-word order");
  compute->add_option("-o,--out", out, "output file");

  auto* tset = app.add_subcommand("tset", "T_M, its reverse-order counterpart and the flip");
  tset->add_option("u", u)->required();
  tset->add_option("v", v)->required();
  tset->add_option("monomial", monomial, "cd-monomial such as cdc")->required();
  tset->add_option("--order", order);
  tset->add_option("-o,--out", out);

  auto* verify = app.add_subcommand("verify", "every check on one interval, as a scan record");
  verify->add_option("u", u)->required();
  verify->add_option("v", v)->required();
  verify->add_option("--order", order);
  verify->add_option("-o,--out", out);

  auto* sweep = app.add_subcommand("scan", "check all intervals of S_n, one JSON line each");
  sweep->add_option("--n", scan.n, "group rank")->required();
  sweep->add_option("--max-length", scan.max_length, "largest l(v) - l(u)");
  sweep->add_option("--order", scan.order);
  sweep->add_option("--threads", scan.threads, "worker threads (default: all cores)");
  sweep->add_flag("--timing", scan.timing, "record per-interval wall time");
  sweep->add_option("-o,--out", out, "JSON-lines file");
  sweep->add_flag("--resume", resume, "skip intervals already in --out");

  auto* dot = app.add_subcommand("dot", "Bruhat graph of [u, v] in DOT");
  dot->add_option("u", u)->required();
  dot->add_option("v", v)->required();
  dot->add_option("--order", order);
  dot->add_option("-o,--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUserError;
  }

  try {
    if (*compute) return cmd_compute(u, v, order, all_orders, out);
    if (*tset) return cmd_tset(u, v, monomial, order, out);
    if (*verify) return cmd_verify(u, v, order, out);
    if (*sweep) return cmd_scan(scan, out, resume);
    if (*dot) return cmd_dot(u, v, order, out);
  } catch (const FlipUndefined& e) {
    return fail(kFlipUndefined, "FlipUndefined", e.what());
  } catch (const InvalidArgument& e) {
    return fail(kUserError, "InvalidArgument", e.what());
  } catch (const IoError& e) {
    return fail(kIo, "IoError", e.what());
  } catch (const Error& e) {
    return fail(kInternal, "InternalError", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "InternalError", e.what());
  }
  return kUserError;
}
