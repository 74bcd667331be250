#pragma once

#include <string>

#include "json.hpp"

#include "cyclequiv/suites.hpp"

namespace cyclequiv::jsonio {

constexpr int kSchemaVersion = 1;

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

/// Field element: plain integer for prime fields, ascending coefficient
/// array otherwise.
nlohmann::json elem_to_json(const Field& f, Elem v);
Elem elem_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json coeffs_to_json(const Field& f, const std::vector<Elem>& coeffs);
std::vector<Elem> coeffs_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json permutation_to_json(const Permutation& g);
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json linear_code_to_json(const LinearCode& c);
LinearCode linear_code_from_json(const nlohmann::json& j);

nlohmann::json cyclic_code_to_json(const CyclicCode& c);
/// Accepts any of cosets / generator / idempotent (plus n and field);
/// recomputes the rest and cross-checks everything supplied.
CyclicCode cyclic_code_from_json(const nlohmann::json& j);

nlohmann::json group_code_to_json(const groupcode::GroupCode& c);
groupcode::GroupCode group_code_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const EquivalenceVerdict& v, bool with_timing = true);
nlohmann::json search_report_to_json(const oracle::SearchReport& r, bool with_timing = true);
nlohmann::json suite_report_to_json(const suites::SuiteReport& r, bool with_timing = true);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace cyclequiv::jsonio
