#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nomcode/clustering.hpp"
#include "nomcode/coded_matrix.hpp"
#include "nomcode/nominal_coder.hpp"

namespace nomcode {

using Json = nlohmann::ordered_json;

/// {"attribute": ..., "entries": {"<token>": {"n", "modulus", "phase", "j",
/// "k", "re", "im"}}} with entries in first-occurrence order.
Json to_json(const NominalCodebook& codebook);
NominalCodebook codebook_from_json(const Json& json);

/// {"rows", "columns": [{"name", "source"}], "data": [[{"re", "im"}]],
/// "decision"?: [...], "scaling"?: [{"mean": {"re","im"}, "scale_re",
/// "scale_im"}]}.
Json to_json(const CodedMatrix& matrix);
CodedMatrix coded_matrix_from_json(const Json& json);

Json to_json(const ClusteringResult& result);
Json to_json(const ExperimentReport& report);

}  // namespace nomcode
