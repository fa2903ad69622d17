#pragma once
#include <string>

#include "chv/family.hpp"
#include "chv/gen.hpp"
#include "chv/mixed.hpp"
#include "chv/report.hpp"
#include "json.hpp"

namespace chv {

using Json = nlohmann::ordered_json;

// Matrix object: { "n": <int>, "entries": [[<expr-string>, ...], ...] }.
// Writers always emit canonical strings; the loader also accepts JSON
// integers for convenience.
Json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const Json& j);

// Tuple file: { "n": <int>, "mats": [<matrix>, ...] }.
Json tuple_to_json(const MatrixTuple& t);
MatrixTuple tuple_from_json(const Json& j);

// Family files carry a "kind" discriminator ("constraint" or "mixed") plus
// the matrices; generators attach their FamilySpec under "gen".
Json family_to_json(const ConstraintFamily& f, const Json& gen = Json());
ConstraintFamily family_from_json(const Json& j);
Json mixed_family_to_json(const MixedConstraintFamily& f, const Json& gen = Json());
MixedConstraintFamily mixed_family_from_json(const Json& j);

// Generation spec: { "strategy", "n", "k", "seed", "symbolic", "magnitude" }.
Json famspec_to_json(const FamilySpec& spec);
FamilySpec famspec_from_json(const Json& j);

// Report file: { "schema": "v1", "reports": [<report>, ...] }.
Json report_file_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> report_file_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace chv
