#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cdindex/bruhat_graph.hpp"
#include "cdindex/cd_index.hpp"
#include "cdindex/flips.hpp"
#include "cdindex/ncpoly.hpp"

namespace cdindex {

using json = nlohmann::ordered_json;

/// {"monomial": coefficient}, monomials as words ("cdc", "ADA", "1").
template <class Letter>
json polynomial_to_json(const Polynomial<Letter>& p) {
  json out = json::object();
  for (const auto& [m, c] : p.terms()) out[m.str()] = c;
  return out;
}

template <class Letter>
Polynomial<Letter> polynomial_from_json(const json& j) {
  Polynomial<Letter> out;
  for (const auto& [key, value] : j.items()) out.add(Word<Letter>::parse(key), value.template get<std::int64_t>());
  return out;
}

/// {"u", "v", "cd_index": {degree: {monomial: coeff}}, "order"}.
json cd_index_to_json(const CompleteCdIndex& index, const ReflectionOrder& order);
CompleteCdIndex cd_index_from_json(const json& j);

/// {"vertices": [one-line...], "labels": [ranks...]}.
json path_to_json(const BruhatPath& path, const ReflectionOrder& order);
BruhatPath path_from_json(const json& j, const ReflectionOrder& order);

/// Array of label strings such as "41516".
json tset_to_json(const std::vector<BruhatPath>& paths, const ReflectionOrder& order);

/// {"interval", "monomial", "path", "position", "kind", "detail"?}.
json witness_to_json(const BruhatInterval& iv, const CdMonomial& m, const FlipWitness& witness,
                     const ReflectionOrder& order);

}  // namespace cdindex
