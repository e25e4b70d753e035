#include "affsphere/product.hpp"

#include <algorithm>
#include <string>

#include "affsphere/error.hpp"

namespace affsphere {

ProductSphereSystem::ProductSphereSystem(std::vector<AffineSphereSystem> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::EmptyProduct, "a product needs at least one factor");
  int total = 0;
  for (const auto& f : factors_) total += f.dim();
  block_matrix_ = Matrix::Zero(total, total);
  offset_ = Vector::Zero(total);
  int at = 0;
  for (const auto& f : factors_) {
    block_matrix_.block(at, at, f.dim(), f.dim()) = f.T();
    offset_.segment(at, f.dim()) = f.a();
    homeo_certified_ = homeo_certified_ && f.homeo_certified();
    at += f.dim();
  }
}

std::vector<AffineSphereSystem> ProductSphereSystem::split() const {
  std::vector<AffineSphereSystem> out;
  int at = 0;
  for (const auto& f : factors_) {
    out.emplace_back(block_matrix_.block(at, at, f.dim(), f.dim()), offset_.segment(at, f.dim()));
    at += f.dim();
  }
  return out;
}

ProductSphereSystem assemble(std::vector<AffineSphereSystem> factors) { return ProductSphereSystem(std::move(factors)); }

namespace {

void require_layout(const ProductSphereSystem& p, const ProductPoint& v) {
  if (v.size() != p.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(p.size()) + " components, got " + std::to_string(v.size()));
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].size() != p.factors()[k].dim()) {
      throw Error(ErrorCode::DimensionMismatch, "component " + std::to_string(k) + " has the wrong length");
    }
  }
}

}  // namespace

ProductPoint product_apply(const ProductSphereSystem& p, const ProductPoint& v) {
  require_layout(p, v);
  ProductPoint out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(apply(p.factors()[k], v[k]));
  return out;
}

ProductPoint product_apply_inverse(const ProductSphereSystem& p, const ProductPoint& v) {
  require_layout(p, v);
  ProductPoint out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(apply_inverse(p.factors()[k], v[k]));
  return out;
}

double product_distance(const ProductPoint& x, const ProductPoint& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "product points differ in layout");
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, (x[k] - y[k]).norm());
  return d;
}

}  // namespace affsphere
