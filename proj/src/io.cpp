#include "affsphere/io.hpp"

#include <fstream>

#include "affsphere/error.hpp"

namespace affsphere {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

double number_at(const json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be numeric");
  return j.get<double>();
}

}  // namespace

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) malformed("expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number_at(j[i], "vector entry");
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) malformed("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) malformed("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = number_at(row[static_cast<std::size_t>(c)], "matrix entry");
  }
  return m;
}

json product_point_to_json(const ProductPoint& p) {
  json out = json::array();
  for (const auto& v : p) out.push_back(vector_to_json(v));
  return out;
}

ProductPoint product_point_from_json(const json& j) {
  if (!j.is_array()) malformed("product point must be an array of vectors");
  ProductPoint p;
  for (const auto& v : j) p.push_back(vector_from_json(v));
  return p;
}

json system_to_json(const AffineSphereSystem& sys) {
  return json{{"dim", sys.dim()}, {"matrix", matrix_to_json(sys.T())}, {"offset", vector_to_json(sys.a())}};
}

AffineSphereSystem system_from_json(const json& j, bool require_homeo) {
  if (!j.is_object()) malformed("system description must be a JSON object");
  for (const char* key : {"dim", "matrix", "offset"}) {
    if (!j.contains(key)) malformed(std::string("system description lacks \"") + key + "\"");
  }
  if (!j["dim"].is_number_integer()) malformed("\"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  Matrix m = matrix_from_json(j["matrix"]);
  Vector a = vector_from_json(j["offset"]);
  if (dim < 2 || m.rows() != dim || m.cols() != dim || a.size() != dim) {
    malformed("\"dim\" disagrees with the matrix or offset shape");
  }
  return AffineSphereSystem(std::move(m), std::move(a), require_homeo);
}

json product_to_json(const ProductSphereSystem& p) {
  json factors = json::array();
  for (const auto& f : p.factors()) factors.push_back(system_to_json(f));
  return json{{"factors", factors}};
}

ProductSphereSystem product_from_json(const json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) {
    malformed("product description needs a \"factors\" array");
  }
  std::vector<AffineSphereSystem> factors;
  for (const auto& f : j["factors"]) factors.push_back(system_from_json(f));
  return ProductSphereSystem(std::move(factors));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    malformed(path + ": " + e.what());
  }
}

}  // namespace affsphere
