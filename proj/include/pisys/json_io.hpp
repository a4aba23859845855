// Canonical JSON encoding of every report and domain object the CLI and the
// harness exchange. Output is byte-stable: object keys are sorted, root
// lists are serialized in canonical order, and rational coordinates appear
// as plain numbers when integral and as "p/q" strings otherwise.
#ifndef PISYS_JSON_IO_HPP
#define PISYS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "pisys/extend.hpp"
#include "pisys/harness.hpp"
#include "pisys/pisystem.hpp"

namespace pisys {

using json = nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const json& j);

json vectors_to_json(std::span<const RationalVector> vs);
std::vector<RationalVector> vectors_from_json(const json& j);

json root_system_to_json(const RootSystem& rs);

json diagram_to_json(const Diagram& d);
json shape_to_json(const ClassifiedShape& s);

// {"ambient": "B3", "roots": [[1,-1,0], ...]}
json pi_system_to_json(const PiSystem& p);

json closure_to_json(const ClosureResult& c);
json check_result_to_json(const PiCheckResult& r);
json extension_report_to_json(const ExtensionReport& rep);
json transform_path_to_json(const TransformPath& path);
json lemma_table_to_json(const LemmaTable& table);
json verify_report_to_json(const VerifyReport& report);

// dump(2) plus trailing newline; the one serialization every file and stdout
// writer goes through.
std::string canonical_dump(const json& j);
void write_json_file(const std::string& path, const json& j);

}  // namespace pisys

#endif
