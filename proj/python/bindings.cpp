#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "cdindex/bruhat_graph.hpp"
#include "cdindex/cd_index.hpp"
#include "cdindex/error.hpp"
#include "cdindex/flips.hpp"
#include "cdindex/json_io.hpp"
#include "cdindex/scan.hpp"

namespace py = pybind11;
using namespace cdindex;

namespace {

BruhatInterval interval(const std::string& u, const std::string& v) {
  return BruhatInterval(Permutation::parse(u), Permutation::parse(v));
}

template <class Letter>
std::map<std::string, std::int64_t> as_dict(const Polynomial<Letter>& p) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [m, c] : p.terms()) out[m.str()] = c;
  return out;
}

py::object from_json(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::string> tset(const std::string& u, const std::string& v, const std::string& monomial,
                              const std::string& order, bool reversed) {
  const auto iv = interval(u, v);
  const auto o = parse_order_spec(iv.rank(), order);
  TSetTable table(iv, o);
  const auto m = CdMonomial::parse(monomial);
  std::vector<std::string> out;
  for (const auto& p : reversed ? compute_t_bar(table, m) : compute_t(table, m)) out.push_back(label_string(p, o));
  return out;
}

py::dict flip_check(const std::string& u, const std::string& v, const std::string& monomial,
                    const std::string& order, bool strong) {
  const auto iv = interval(u, v);
  const auto o = parse_order_spec(iv.rank(), order);
  TSetTable table(iv, o);
  const auto m = CdMonomial::parse(monomial);
  const FlipCheck check = strong ? check_strong_flip_condition(table, m) : check_flip_condition(table, m);
  py::dict out;
  out["holds"] = check.holds;
  out["applicable"] = check.applicable;
  out["witness"] = check.witness ? from_json(witness_to_json(iv, m, *check.witness, o)) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_cdindex, m) {
  m.doc() = "Complete cd-index of Bruhat intervals in symmetric groups";

  auto base = py::register_exception<Error>(m, "CdIndexError");
  py::register_exception<FlipUndefined>(m, "FlipUndefined", base.ptr());
  py::register_exception<NotInSubring>(m, "NotInSubring", base.ptr());
  py::register_exception<NotDecomposable>(m, "NotDecomposable", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  m.def("length", [](const std::string& w) { return Permutation::parse(w).length(); }, py::arg("w"));
  m.def("bruhat_leq",
        [](const std::string& u, const std::string& v) {
          return bruhat_leq(Permutation::parse(u), Permutation::parse(v));
        },
        py::arg("u"), py::arg("v"));
  m.def("reflection_order",
        [](int n, const std::string& spec) {
          const auto order = parse_order_spec(n, spec);
          std::vector<std::string> out;
          for (const auto& t : order.sequence()) out.push_back(t.str());
          return out;
        },
        py::arg("n"), py::arg("spec") = "lex", "Reflections of S_n listed in the order `spec`.");

  m.def("complete_phi",
        [](const std::string& u, const std::string& v, const std::string& order) {
          const auto iv = interval(u, v);
          return as_dict(complete_phi(iv, parse_order_spec(iv.rank(), order)));
        },
        py::arg("u"), py::arg("v"), py::arg("order") = "lex", "Sum of ascent-descent words over all paths.");
  m.def("cd_index",
        [](const std::string& u, const std::string& v, const std::string& order) {
          const auto iv = interval(u, v);
          std::map<int, std::map<std::string, std::int64_t>> out;
          for (const auto& [n, p] : complete_cd_index(iv, parse_order_spec(iv.rank(), order)).by_degree)
            out[n] = as_dict(p);
          return out;
        },
        py::arg("u"), py::arg("v"), py::arg("order") = "lex", "Complete cd-index as {degree: {monomial: coeff}}.");
  m.def("flag_cd_index", [](const std::string& u, const std::string& v) { return as_dict(flag_cd_index_oracle(interval(u, v))); },
        py::arg("u"), py::arg("v"));
  m.def("ad_to_cd", [](const std::string& p) { return as_dict(ad_to_cd(AdPolynomial::parse(p))); }, py::arg("p"));
  m.def("expand_cd", [](const std::string& p) { return as_dict(expand_cd(CdPolynomial::parse(p))); }, py::arg("p"));
  m.def("shelling_decomposition",
        [](const std::string& u, const std::string& v, const std::string& t, const std::string& order) {
          const auto iv = interval(u, v);
          const auto s = shelling_decomposition(iv, Reflection::parse(t), parse_order_spec(iv.rank(), order));
          std::map<int, std::pair<std::map<std::string, std::int64_t>, std::map<std::string, std::int64_t>>> out;
          for (const auto& [n, fg] : s.by_degree) out[n] = {as_dict(fg.f), as_dict(fg.g)};
          return out;
        },
        py::arg("u"), py::arg("v"), py::arg("t"), py::arg("order") = "lex",
        "{degree: (f, g)} with phi restricted to first reflection <= t equal to f + A g.");

  m.def("t_set", &tset, py::arg("u"), py::arg("v"), py::arg("monomial"), py::arg("order") = "lex",
        py::arg("reversed") = false, "Label strings of T_M (or its reverse-order counterpart), sorted.");
  m.def("flip_pairing",
        [](const std::string& u, const std::string& v, const std::string& monomial, const std::string& order) {
          const auto iv = interval(u, v);
          const auto o = parse_order_spec(iv.rank(), order);
          TSetTable table(iv, o);
          std::vector<std::pair<std::string, std::string>> out;
          for (const auto& [x, y] : flip_pairing(table, CdMonomial::parse(monomial)))
            out.emplace_back(label_string(x, o), label_string(y, o));
          return out;
        },
        py::arg("u"), py::arg("v"), py::arg("monomial"), py::arg("order") = "lex");
  m.def("check_flip_condition",
        [](const std::string& u, const std::string& v, const std::string& monomial, const std::string& order) {
          return flip_check(u, v, monomial, order, false);
        },
        py::arg("u"), py::arg("v"), py::arg("monomial"), py::arg("order") = "lex");
  m.def("check_strong_flip_condition",
        [](const std::string& u, const std::string& v, const std::string& monomial, const std::string& order) {
          return flip_check(u, v, monomial, order, true);
        },
        py::arg("u"), py::arg("v"), py::arg("monomial"), py::arg("order") = "lex");
  m.def("verify_coefficient",
        [](const std::string& u, const std::string& v, const std::string& monomial, const std::string& order) {
          const auto iv = interval(u, v);
          TSetTable table(iv, parse_order_spec(iv.rank(), order));
          const auto r = verify_coefficient(table, CdMonomial::parse(monomial));
          py::dict out;
          out["coefficient"] = r.coefficient;
          out["t"] = r.t_size;
          out["t_bar"] = r.t_bar_size;
          out["sum_s"] = r.sum_s;
          out["consistent"] = r.consistent;
          return out;
        },
        py::arg("u"), py::arg("v"), py::arg("monomial"), py::arg("order") = "lex");
  m.def("scan_interval",
        [](const std::string& u, const std::string& v, const std::string& order) {
          const auto a = Permutation::parse(u);
          return from_json(scan_interval(a, Permutation::parse(v), parse_order_spec(a.rank(), order)).data);
        },
        py::arg("u"), py::arg("v"), py::arg("order") = "lex", "Every check on one interval, as a scan record.");
  m.def("export_dot",
        [](const std::string& u, const std::string& v, const std::string& order) {
          const auto iv = interval(u, v);
          return export_dot(iv, parse_order_spec(iv.rank(), order));
        },
        py::arg("u"), py::arg("v"), py::arg("order") = "lex");
}
