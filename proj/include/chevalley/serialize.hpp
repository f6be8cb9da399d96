#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chevalley/chevalley_basis.hpp"
#include "chevalley/lie_closure.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

using Json = nlohmann::json;

/// Accepts a bare integer matrix or an object with a "cartan" member.
/// UsageError if the document is not an integer matrix, InvalidCartan if the
/// matrix fails validation.
CartanMatrix cartan_from_json(const Json& doc);
/// Reads and parses a JSON file; UsageError on unreadable or malformed input.
Json read_json_file(const std::string& path);

/// {type, cartan, symmetrizer, roots: [{coords, height}], pairings?}.
/// pairings[r][c] = (root_r, root_c^vee) in root order.
Json root_system_to_json(const RootSystem& rs, bool with_pairings = false);
/// Rebuilds from "cartan" and checks that the listed roots agree.
RootSystem root_system_from_json(const Json& doc);

/// Rows of decimal strings.
Json matrix_to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& doc);
/// {legend, matrix}.
Json model_matrix_to_json(const RootSystem& rs, const IntMatrix& m);

struct ConstantsDocument {
  SignFunction epsilon;
  StructureConstantTable table;
  /// Indexed like the roots of the root system.
  std::vector<IntMatrix> basis;

  friend bool operator==(const ConstantsDocument&, const ConstantsDocument&) = default;
};

ConstantsDocument constants_document(const RootSystem& rs, const ChevalleyBasis& basis);
/// {epsilon, constants: [{alpha, beta, n}], basis?: {"[1,0]": matrix}}.
Json constants_to_json(const RootSystem& rs, const ConstantsDocument& doc, bool with_basis = true);
ConstantsDocument constants_from_json(const RootSystem& rs, const Json& doc);

/// Dimensions, weight table and triangularity verdicts of the closure.
Json closure_report_to_json(const RootSystem& rs, const LieClosure& g, const RootSpaceDecomposition& dec,
                            const TriangularReport& tri);

}  // namespace chevalley
