#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cartan/lie_algebra.hpp"
#include "cartan/matrix.hpp"

namespace cartan {

using Json = nlohmann::ordered_json;

// Algebra files:
//   {"dim": n, "basis": [...], "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "re": "1", "im": "0"}]}]}
// Indices are 1-based with i < j. Rationals are strings ("-3/7"); integers are
// accepted on input, floats never. Serialization is canonical: brackets and
// terms sorted by index, zero constants dropped.
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);  // throws ParseError

// Square or rectangular matrices as arrays of rows of rational strings.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);     // "p/q" or "a+bi"
Scalar scalar_from_json(const Json& j);   // string or integer
Json vector_to_json(const Vector& v);

// Reads and parses a JSON file; I/O and syntax problems raise ParseError.
Json read_json_file(const std::string& path);

// Pretty-printed with two-space indent and a trailing newline.
std::string canonical_dump(const Json& j);

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a64(const std::string& data);

}  // namespace cartan
