#include <json.hpp>
#include <string>

#include "mirrorbench/error.hpp"
#include "mirrorbench/models.hpp"

namespace mirrorbench {

using nlohmann::json;

namespace {

template <typename Map>
json map_to_json(const Map& m) {
  json out = json::object();
  for (const auto& [key, value] : m) out[std::to_string(key)] = value;
  return out;
}

template <typename Value>
std::map<std::size_t, Value> map_from_json(const json& j) {
  std::map<std::size_t, Value> out;
  for (const auto& [key, value] : j.items()) out[std::stoull(key)] = value.template get<Value>();
  return out;
}

json params_to_json(const ModelParams& params) {
  json out;
  out["model"] = std::string(json_name(kind_of(params)));
  std::visit(
      [&out](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ErParams>) {
          out["n"] = p.n;
          out["m"] = p.m;
        } else if constexpr (std::is_same_v<T, ChungLuParams>) {
          out["weights"] = p.weights;
        } else if constexpr (std::is_same_v<T, SbmParams>) {
          out["assignment"] = p.assignment;
          out["block_sizes"] = p.block_sizes;
          out["block_edge_counts"] = p.block_edge_counts;
        } else if constexpr (std::is_same_v<T, KroneckerParams>) {
          out["initiator"] = json::array({json::array({p.a, p.b}), json::array({p.b, p.c})});
          out["k"] = p.k;
        } else {
          out["degree_counts"] = map_to_json(p.degree_counts);
          out["clustering_by_degree"] = map_to_json(p.clustering_by_degree);
        }
      },
      params);
  return out;
}

}  // namespace

std::string to_json(const ModelParams& params) { return params_to_json(params).dump(); }

ModelParams params_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const auto kind = parse_model_kind(j.at("model").get<std::string>());
    if (!kind) throw Error(ErrorCode::parse, "unknown model tag in parameter document");
    switch (*kind) {
      case ModelKind::er:
        return ErParams{j.at("n").get<std::uint64_t>(), j.at("m").get<std::uint64_t>()};
      case ModelKind::chung_lu:
        return ChungLuParams{j.at("weights").get<std::vector<double>>()};
      case ModelKind::sbm:
        return SbmParams{j.at("assignment").get<std::vector<std::uint32_t>>(),
                         j.at("block_sizes").get<std::vector<std::uint64_t>>(),
                         j.at("block_edge_counts").get<std::vector<std::vector<std::uint64_t>>>()};
      case ModelKind::kronecker: {
        const auto& m = j.at("initiator");
        const double b = m.at(0).at(1).get<double>();
        if (b != m.at(1).at(0).get<double>()) {
          throw Error(ErrorCode::parse, "Kronecker initiator must be symmetric");
        }
        return KroneckerParams{m.at(0).at(0).get<double>(), b, m.at(1).at(1).get<double>(),
                               j.at("k").get<int>()};
      }
      case ModelKind::bter:
        return BterParams{map_from_json<std::size_t>(j.at("degree_counts")),
                          map_from_json<double>(j.at("clustering_by_degree"))};
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("invalid parameter document: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::parse, std::string("invalid parameter document: ") + e.what());
  }
  throw Error(ErrorCode::parse, "invalid parameter document");
}


}  // namespace mirrorbench
