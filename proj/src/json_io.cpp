#include "cdindex/json_io.hpp"

#include "cdindex/error.hpp"

namespace cdindex {

json cd_index_to_json(const CompleteCdIndex& index, const ReflectionOrder& order) {
  json degrees = json::object();
  for (const auto& [n, p] : index.by_degree) degrees[std::to_string(n)] = polynomial_to_json(p);
  return json{{"u", index.u.str()}, {"v", index.v.str()}, {"cd_index", degrees}, {"order", order.name()}};
}

CompleteCdIndex cd_index_from_json(const json& j) {
  CompleteCdIndex out{Permutation::parse(j.at("u").get<std::string>()),
                      Permutation::parse(j.at("v").get<std::string>()),
                      {}};
  for (const auto& [key, value] : j.at("cd_index").items()) {
    CdPolynomial p = polynomial_from_json<CdLetter>(value);
    const int n = std::stoi(key);
    if (!p.is_homogeneous_of(n)) throw InvalidArgument("cd_index entry " + key + " has the wrong degree");
    if (!p.is_zero()) out.by_degree.emplace(n, std::move(p));
  }
  return out;
}

json path_to_json(const BruhatPath& path, const ReflectionOrder& order) {
  json vertices = json::array();
  for (const auto& x : path.vertices) vertices.push_back(x.str());
  json labels = json::array();
  for (const auto& t : path.labels) labels.push_back(order.rank_of(t));
  return json{{"vertices", vertices}, {"labels", labels}};
}

BruhatPath path_from_json(const json& j, const ReflectionOrder& order) {
  BruhatPath out;
  for (const auto& x : j.at("vertices")) out.vertices.push_back(Permutation::parse(x.get<std::string>()));
  for (const auto& r : j.at("labels")) {
    const int rank = r.get<int>();
    if (rank < 1 || rank > static_cast<int>(order.size())) throw InvalidArgument("label rank out of range");
    out.labels.push_back(order.at_rank(rank));
  }
  if (out.vertices.size() != out.labels.size() + 1) throw InvalidArgument("path needs one more vertex than labels");
  return out;
}

json tset_to_json(const std::vector<BruhatPath>& paths, const ReflectionOrder& order) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(label_string(p, order));
  return out;
}

json witness_to_json(const BruhatInterval& iv, const CdMonomial& m, const FlipWitness& witness,
                     const ReflectionOrder& order) {
  json out{{"interval", json::array({iv.bottom().str(), iv.top().str()})},
           {"monomial", m.str()},
           {"path", witness.path.labels.empty() ? "" : label_string(witness.path, order)},
           {"position", witness.position},
           {"kind", to_string(witness.kind)}};
  if (!witness.detail.empty()) out["detail"] = witness.detail;
  return out;
}

}  // namespace cdindex
