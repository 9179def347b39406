#pragma once

// JSON schemas:
//   poset/lattice: { "elements": [id...], "leq": [[id,id]...] }  (reflexive pairs optional)
//   space: { "named": [...], "named_leq": [[..],[..]],
//            "fans": [{"id","limit","below":[..],"above":[..]}] }
//   symbolic set: { "named": [...], "fans": {fan-id: {"fin":[ints]}|{"cofin":[ints]}} }
//   report: { "axiom", "verdict", "witness", "trace", ... }

#include <json.hpp>

#include "latsep/dlat.hpp"
#include "latsep/gallery.hpp"
#include "latsep/symset.hpp"

namespace latsep {

FinPoset poset_from_json(const nlohmann::json& j);
FinDLat dlat_from_json(const nlohmann::json& j);
std::shared_ptr<const SpaceSpec> space_from_json(const nlohmann::json& j);
SymSet symset_from_json(const nlohmann::json& j, std::shared_ptr<const SpaceSpec> space);

nlohmann::json space_to_json(const SpaceSpec& spec);
nlohmann::json lattice_to_json(const FinDLat& L);
nlohmann::json symset_to_json(const SymSet& s);
nlohmann::json report_to_json(const CheckReport& r);

}  // namespace latsep
