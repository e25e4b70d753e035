#pragma once

#include <string>

#include "json.hpp"

#include "affsphere/product.hpp"
#include "affsphere/sphere_map.hpp"

namespace affsphere {

using json = nlohmann::json;

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json product_point_to_json(const ProductPoint& p);
ProductPoint product_point_from_json(const json& j);

/// { "dim": int, "matrix": [[...]...] (row-major), "offset": [...] }
json system_to_json(const AffineSphereSystem& sys);
/// Throws MalformedInput on schema violations.
AffineSphereSystem system_from_json(const json& j, bool require_homeo = false);

/// { "factors": [system JSON, ...] }
json product_to_json(const ProductSphereSystem& p);
ProductSphereSystem product_from_json(const json& j);

/// Reads and parses a JSON file; throws MalformedInput on I/O or parse errors.
json read_json_file(const std::string& path);

}  // namespace affsphere
