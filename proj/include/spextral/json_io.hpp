// json_io.hpp — stable JSON shapes for reports and predictions ("spextral/1").
#pragma once

#include <json.hpp>

#include "spextral/search.hpp"
#include "spextral/spectral.hpp"
#include "spextral/turan.hpp"

namespace spextral {

inline constexpr const char* kSchemaTag = "spextral/1";

// Reals are rounded through 15 significant digits before emission so that
// printed numbers are reproducible across runs and job counts.
double json_real(double x);

std::string family_kind_name(FamilyKind k);
nlohmann::json family_to_json(const ExtremalFamily& f);
nlohmann::json turan_value_to_json(const TuranValue& v);
nlohmann::json prediction_to_json(const Prediction& p);
// Deterministic by contract: elapsed time is deliberately not serialized.
nlohmann::json report_to_json(const SearchReport& r);
nlohmann::json level_sets_to_json(const LevelSets& ls);
nlohmann::json structure_report_to_json(const StructureReport& rep);

}  // namespace spextral
