#include "latsep/json_io.hpp"

#include <stdexcept>

namespace latsep {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("schema: missing array \"") + key + "\"");
  std::vector<std::string> out;
  for (const auto& v : j[key]) out.push_back(v.get<std::string>());
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.contains(key)) return out;
  for (const auto& p : j[key]) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument(std::string("schema: \"") + key + "\" entries must be pairs");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

}  // namespace

FinPoset poset_from_json(const json& j) {
  FinPoset p = FinPoset::from_pairs(string_list(j, "elements"), pair_list(j, "leq"));
  if (auto bad = validate(p))
    throw std::invalid_argument("not a partial order: " + bad->axiom + " at " + bad->witness);
  return p;
}

FinDLat dlat_from_json(const json& j) { return FinDLat::from_poset(poset_from_json(j)); }

std::shared_ptr<const SpaceSpec> space_from_json(const json& j) {
  std::vector<std::string> named = string_list(j, "named");
  FinPoset order = FinPoset::from_pairs(named, pair_list(j, "named_leq"));
  std::vector<Fan> fans;
  if (j.contains("fans")) {
    for (const auto& fj : j["fans"]) {
      Fan f;
      f.id = fj.at("id").get<std::string>();
      auto limit = order.index_of(fj.at("limit").get<std::string>());
      if (!limit) throw std::invalid_argument("fan limit is not a named point: " + f.id);
      f.limit = *limit;
      for (const char* key : {"below", "above"}) {
        if (!fj.contains(key)) continue;
        Mask m = 0;
        for (const auto& q : fj[key]) {
          auto idx = order.index_of(q.get<std::string>());
          if (!idx) throw std::invalid_argument("fan relation names unknown point: " + f.id);
          m |= mask_bit(*idx);
        }
        (std::string(key) == "below" ? f.below : f.above) = m;
      }
      fans.push_back(std::move(f));
    }
  }
  std::vector<Mask> rows;
  for (int i = 0; i < order.size(); ++i) rows.push_back(order.up_of(i));
  auto spec = std::make_shared<const SpaceSpec>(std::move(named), std::move(rows), std::move(fans));
  std::vector<SpaceViolation> bad = validate_space(*spec);
  if (!bad.empty())
    throw std::invalid_argument("invalid space: " + bad.front().axiom + " at " +
                                bad.front().witness);
  return spec;
}

SymSet symset_from_json(const json& j, std::shared_ptr<const SpaceSpec> space) {
  Mask named = 0;
  if (j.contains("named"))
    for (const auto& q : j["named"]) {
      auto idx = space->named_index(q.get<std::string>());
      if (!idx) throw std::invalid_argument("unknown named point in set");
      named |= mask_bit(*idx);
    }
  std::vector<FanPart> parts(space->fan_count(), FanPart::none());
  if (j.contains("fans")) {
    for (const auto& [fan_id, pj] : j["fans"].items()) {
      auto f = space->fan_index(fan_id);
      if (!f) throw std::invalid_argument("unknown fan in set: " + fan_id);
      bool cof = pj.contains("cofin");
      if (!cof && !pj.contains("fin"))
        throw std::invalid_argument("fan part needs \"fin\" or \"cofin\"");
      std::vector<int> sup;
      for (const auto& i : pj[cof ? "cofin" : "fin"]) sup.push_back(i.get<int>());
      parts[*f] = cof ? FanPart::cofin(std::move(sup)) : FanPart::fin(std::move(sup));
    }
  }
  return SymSet(std::move(space), named, std::move(parts));
}

json space_to_json(const SpaceSpec& spec) {
  json j;
  j["named"] = json::array();
  for (int i = 0; i < spec.named_count(); ++i) j["named"].push_back(spec.named_id(i));
  j["named_leq"] = json::array();
  for (int a = 0; a < spec.named_count(); ++a)
    for (int b = 0; b < spec.named_count(); ++b)
      if (a != b && spec.named_leq(a, b))
        j["named_leq"].push_back({spec.named_id(a), spec.named_id(b)});
  j["fans"] = json::array();
  for (int f = 0; f < spec.fan_count(); ++f) {
    const Fan& fan = spec.fan(f);
    json fj;
    fj["id"] = fan.id;
    fj["limit"] = spec.named_id(fan.limit);
    fj["below"] = json::array();
    for (int q : mask_indices(fan.below)) fj["below"].push_back(spec.named_id(q));
    fj["above"] = json::array();
    for (int q : mask_indices(fan.above)) fj["above"].push_back(spec.named_id(q));
    j["fans"].push_back(fj);
  }
  return j;
}

json lattice_to_json(const FinDLat& L) {
  json j;
  j["elements"] = json::array();
  for (int i = 0; i < L.size(); ++i) j["elements"].push_back(L.id(i));
  j["leq"] = json::array();
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (a != b && L.leq(a, b)) j["leq"].push_back({L.id(a), L.id(b)});
  return j;
}

json symset_to_json(const SymSet& s) {
  json j;
  j["named"] = json::array();
  for (int i : mask_indices(s.named_mask())) j["named"].push_back(s.spec().named_id(i));
  j["fans"] = json::object();
  for (int f = 0; f < s.spec().fan_count(); ++f) {
    const FanPart& p = s.part(f);
    if (p.is_empty()) continue;
    j["fans"][s.spec().fan(f).id] = json{{p.cofinite ? "cofin" : "fin", p.support}};
  }
  return j;
}

json report_to_json(const CheckReport& r) {
  json j;
  j["axiom"] = r.check;
  j["target"] = r.target;
  j["verdict"] = verdict_name(r.verdict, r.bound);
  if (r.witness.empty())
    j["witness"] = nullptr;
  else
    j["witness"] = r.witness;
  if (!r.detail.empty()) {
    json d = json::array();
    for (const auto& [k, v] : r.detail) d.push_back({{"key", k}, {"value", v}});
    j["detail"] = d;
  }
  j["trace"] = r.trace;
  return j;
}

}  // namespace latsep
