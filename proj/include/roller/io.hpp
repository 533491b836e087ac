#pragma once

#include <string>

#include "json.hpp"
#include "roller/chain_family.hpp"
#include "roller/cubing.hpp"
#include "roller/euclid_model.hpp"
#include "roller/poc_core.hpp"

namespace roller {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "roller-cli/1";

// "fixtures/FIX-SQ" finds fixtures/FIX-SQ.json too
std::string resolve_input(const std::string& path);
Json read_json_file(const std::string& path);

bool is_pocset_json(const Json& j);
bool is_model_json(const Json& j);

RawPocSet raw_pocset_from_json(const Json& j);
FinitePocSet pocset_from_json(const Json& j);
// cover relations among proper elements, one per involution pair
Json pocset_to_json(const FinitePocSet& P);

// chain names plus optional geometry
Model model_from_json(const Json& j);
Json model_to_json(const Model& M);
Exact exact_from_json(const Json& j);

Json cubing_to_json(const FinitePocSet& P, const CubeComplex& C);
std::string cubing_dot(const FinitePocSet& P, const CubeComplex& C);
std::string roller_dot(const RollerPoset& R);

}  // namespace roller
