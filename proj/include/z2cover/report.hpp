#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "z2cover/analysis.hpp"
#include "z2cover/cover.hpp"
#include "z2cover/search.hpp"

namespace z2cover {

// Renderers for every CLI report, text and JSON built from the same structs
// so the two formats always carry the same verdicts and numbers.

nlohmann::json pardini_json(const PardiniReport& rep);
std::string pardini_text(const PardiniReport& rep);

nlohmann::json branch_geometry_json(const BranchGeometryReport& rep);
std::string branch_geometry_text(const BranchGeometryReport& rep);

nlohmann::json invariants_json(const CoverInvariants& inv);
std::string invariants_text(const CoverInvariants& inv);

nlohmann::json criterion_json(const Degree20Report& rep);
std::string criterion_text(const Degree20Report& rep);

nlohmann::json bidouble_json(const BidoubleData& bid);
std::string bidouble_text(const BidoubleData& bid);

nlohmann::json deformation_json(const DeformationReport& rep);
std::string deformation_text(const DeformationReport& rep);

// all relations written out with both sides, one paragraph per character
std::string explain_text(const BuildingData& bd, const PardiniReport& rep);

nlohmann::json class_json(const DivisorClass& d);
nlohmann::json divisor_json(const EffectiveDivisor& d);

}  // namespace z2cover
