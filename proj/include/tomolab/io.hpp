#pragma once

#include "tomolab/estimators.hpp"
#include "tomolab/linalg.hpp"
#include "tomolab/measurements.hpp"
#include "tomolab/packing.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace tomolab {

using Json = nlohmann::json;

/// Square complex matrix as {"d": n, "re": [[...]], "im": [[...]]}.
Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j);

/// {"d": n, "elements": [matrix, ...]}.
Json povm_to_json(const Povm& m);
Povm povm_from_json(const Json& j);

Json packing_to_json(const PackingResult& r);

/// JSON-lines sketch format: a header object {"d", "n", "base_key"} followed
/// by one {"k": path index, "j": outcome} record per line. Unitaries are
/// reproduced from the stream key on read.
void write_sketch_jsonl(const ShadowSketch& sketch, std::ostream& os);
ShadowSketch read_sketch_jsonl(std::istream& is);

}  // namespace tomolab
