#pragma once

#include <complex>
#include <json.hpp>
#include <string>
#include <vector>

#include "fuscat/branching.hpp"
#include "fuscat/checks.hpp"
#include "fuscat/duality.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/modular.hpp"

namespace fuscat {

using json = nlohmann::json;

// Round to 12 significant digits. Every floating-point payload value passes
// through here, so repeated runs emit byte-identical output.
double round12(double x);

// Labels render as partition strings; the four level-1 objects get their
// conventional names 0, v, s+, s-.
std::string label_str(const CategorySpec& spec, const Label& label);

json spec_json(const CategorySpec& spec);
json complex_json(const std::complex<double>& z);  // [re, im]

json labels_json(const CategorySpec& spec);
std::string labels_csv(const CategorySpec& spec);

json modular_json(const ModularData& md);

json fusion_json(const FusionTable& f);
std::string fusion_csv(const FusionTable& f);

json branching_json(const BranchingTable& bt);
// Rows "sector,lambda,partner". Partition strings keep their inner commas;
// `only` (a sector name) restricts the rows, empty means all four sectors.
std::string branching_csv(const BranchingTable& bt, const std::string& only = "");

json checks_json(const std::vector<Check>& checks);
json report_json(const DualityReport& rep, const std::string& target);
json report_json(const BranchingReport& rep, const std::string& target);

}  // namespace fuscat
