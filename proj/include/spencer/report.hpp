#pragma once

#include <json.hpp>

#include "spencer/involutivity.hpp"
#include "spencer/modstruct.hpp"

namespace spencer {

using Json = nlohmann::json;

Json weight_json(const Weight& w);
Json sdim_json(const SDim& d);
Json graded_json(const GradedAlgebra& g);
Json cohomology_json(const SpencerComplex& sc, const CohomologyReport& rep);
Json module_report_json(const Module& m, const ModuleReport& rep);
Json involutivity_json(const InvolutivityReport& rep);
Json scan_json(const std::vector<std::vector<SDim>>& table);

std::string dump_sorted(const Json& j);

/// Structural comparison with a readable diff path; exact equality.
bool json_equal(const Json& a, const Json& b, std::string* diff_path = nullptr);

}  // namespace spencer
