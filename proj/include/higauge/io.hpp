#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "higauge/gauge.hpp"

namespace higauge {

using nlohmann::json;

// Fixture files: structured JSON with rational entries as "p/q" strings and
// polynomial coefficients in the infix grammar of Poly::parse.

json algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const json& j);

json module_to_json(const CrossedModule& xm);
CrossedModulePtr module_from_json(const json& j);

// Resolves a builtin fixture name or a path to a fixture file.
CrossedModulePtr resolve_module(const std::string& name_or_path);

json form_to_json(const PolyForm& f);
PolyForm form_from_json(const json& j, const CrossedModulePtr& xm);

json connection_to_json(const TwoConnection& c);
TwoConnection connection_from_json(const json& j, const CrossedModulePtr& xm);

json group_to_json(const GroupMap& g);
GroupMap group_from_json(const json& j);

json gauge_to_json(const GaugeData& gd);
GaugeData gauge_from_json(const json& j, const CrossedModulePtr& xm);

json report_to_json(const ValidationReport& rep);

}  // namespace higauge
