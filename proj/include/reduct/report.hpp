#pragma once

#include "reduct/classify.hpp"
#include "reduct/decompose.hpp"
#include "reduct/expansion.hpp"
#include "reduct/unary.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace reduct {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// Key order is fixed and rationals are rendered as "p/q" strings, so a given
// input always serializes to the same bytes.
Json envelope(const std::string& command, const std::vector<MPoly>& inputs, Json result,
              const std::vector<std::string>& diagnostics);

Json classification_json(const ClassificationReport& rep);
Json er_json(const ERVerdict& v);
Json interdef_json(const InterdefReport& rep);
Json family_json(const DefinableFamily& fam);
Json expansion_json(Family family, const std::vector<ExpansionRow>& rows);

std::string upoly_str(const UPoly& p);

}  // namespace reduct
