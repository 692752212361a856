#pragma once

#include "dmm/algebra.hpp"
#include "dmm/constructions.hpp"
#include "dmm/laws.hpp"
#include "dmm/morphisms.hpp"

#include <json.hpp>

#include <string>

namespace dmm {

/// Wire format:
/// {"size": n, "meet": [[..]], "join": [[..]], "fusion": [[..]],
///  "neg": [..] | null, "e": i, "names": [..] | null}
/// plus an optional "provenance" object on outputs of constructions.
nlohmann::json algebra_to_json(const FiniteAlgebra& alg,
                               const nlohmann::json& provenance = nullptr);
RawTables raw_from_json(const nlohmann::json& j);

nlohmann::json skew_order_to_json(const SkewOrderSpec& spec);
SkewOrderSpec skew_order_from_json(const nlohmann::json& j);

nlohmann::json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace dmm
