#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodgeheat/complex.hpp"
#include "hodgeheat/dgg.hpp"
#include "hodgeheat/heat.hpp"

namespace hodgeheat {

/// Parses a complex-file JSON document:
///   { "name": ..., "reduced": bool, "weight_policy": "unit|explicit|normalized",
///     "faces": [ { "vertices": [ints], "weight": number? }, ... ] }
/// Maximal faces suffice (sub-faces are closed over); unknown keys are
/// rejected. Strict closure can be requested for validation runs.
WeightedComplex parse_complex_text(const std::string& text,
                                   ClosureMode mode = ClosureMode::AutoClose);
WeightedComplex parse_complex_file(const std::string& path,
                                   ClosureMode mode = ClosureMode::AutoClose);

/// Serializes with the full face list and explicit weights; parsing the
/// result reconstructs an identical complex.
nlohmann::json complex_to_json(const WeightedComplex& K);

WeightPolicy parse_weight_policy(const std::string& s);
const char* weight_policy_name(WeightPolicy policy);

/// JSON value for a double; infinities map to the strings "inf"/"-inf".
nlohmann::json json_number(double x);

nlohmann::json to_json(const SpectralData& sd);
nlohmann::json to_json(const DggReport& rep);
nlohmann::json to_json(const GaussianReport& rep);

void write_heat_csv(const WeightedComplex& K, int i,
                    const std::vector<HeatState>& states,
                    const std::vector<double>& energies, std::ostream& out);

extern const char* const kDggCsvHeader;
void write_dgg_csv_row(const DggReport& rep, std::ostream& out);

}  // namespace hodgeheat
