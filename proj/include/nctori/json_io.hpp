#pragma once

#include <json.hpp>

#include "nctori/exactla.hpp"
#include "nctori/forms.hpp"
#include "nctori/ktheory.hpp"
#include "nctori/param.hpp"
#include "nctori/poly.hpp"
#include "nctori/simplicity.hpp"
#include "nctori/weyl.hpp"

namespace nctori::json_io {

using json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

// Matrix wire format, used repo-wide:
//   {"rows": r, "cols": c, "entries": [["num/den", ...], ...]}
// with integers written without the "/den" part. Round-trips bit-exactly.
json to_json(const IntMatrix &m);
json to_json(const RatMatrix &m);
IntMatrix int_matrix_from_json(const json &j);
RatMatrix rat_matrix_from_json(const json &j);

json to_json(const IntPoly &p); // {"coeffs": ["a0", ...]}
IntPoly poly_from_json(const json &j);

json to_json(const ParamScalar &s); // {"const": "a/b", "coeffs": {...}}
ParamScalar param_scalar_from_json(const json &j);

json to_json(const ParamMatrix &m);
ParamMatrix param_matrix_from_json(const json &j);

json to_json(const forms::SkewFormSpace &space);

json to_json(const simplicity::DegeneracyVerdict &verdict);

json to_json(const ktheory::KReport &report);
json to_json(const ktheory::PartitionCertificate &cert);

json to_json(const weyl::NormalWord &word);
weyl::NormalWord normal_word_from_json(const json &j);

/// Serialize with the schema marker and a stable layout (byte-identical for
/// identical values).
std::string dump_with_schema(json j);

json load_json_file(const std::string &path);

} // namespace nctori::json_io
