#pragma once

// JSON and CSV renderings of the verification reports. JSON objects use
// sorted keys, so dump() of a re-parsed report reproduces it byte for byte.

#include <string>

#include <nlohmann/json.hpp>

#include "coxlab/enumeration.hpp"
#include "coxlab/group.hpp"
#include "coxlab/patterns.hpp"
#include "coxlab/roots.hpp"

namespace coxlab {

void to_json(nlohmann::json& j, const GroupSpec& spec);
void to_json(nlohmann::json& j, const PatternWitness& w);  // {i, j, k, wi, wj, wk}
void to_json(nlohmann::json& j, const QPolynomial& p);     // coefficient array
void to_json(nlohmann::json& j, const ElementVerdict& v);
void to_json(nlohmann::json& j, const TheoremReport& r);
void to_json(nlohmann::json& j, const IsomorphismReport& r);
void to_json(nlohmann::json& j, const RecurrenceReport& r);
void to_json(nlohmann::json& j, const PositiveRoot& r);  // {coeffs, height, reflection_window, witness_word}
void to_json(nlohmann::json& j, const DisHeightReport& r);
void to_json(nlohmann::json& j, const Prop43Report& r);

// Census layers with avoider counts: {spec, L, saturated, layers:[...], polynomial}.
nlohmann::json census_json(const LengthCensus& census, const AvoiderPolynomial& avoiders);

// One row per length.
std::string theorem_csv(const TheoremReport& r);
std::string census_csv(const LengthCensus& census, const AvoiderPolynomial& avoiders);
std::string root_table_csv(const DisHeightReport& r);

}  // namespace coxlab
