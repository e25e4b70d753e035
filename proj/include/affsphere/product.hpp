#pragma once

#include <vector>

#include "affsphere/sphere_map.hpp"

namespace affsphere {

/// Point of S^{i_1} x ... x S^{i_n}: one unit vector per factor.
using ProductPoint = std::vector<Vector>;

/// Block-diagonal system acting factor-wise on a product of spheres.
class ProductSphereSystem {
 public:
  /// Throws EmptyProduct for an empty factor list.
  explicit ProductSphereSystem(std::vector<AffineSphereSystem> factors);

  const std::vector<AffineSphereSystem>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  int total_dim() const { return static_cast<int>(block_matrix_.rows()); }
  const Matrix& block_matrix() const { return block_matrix_; }
  const Vector& offset() const { return offset_; }
  /// AND of the factor certifications.
  bool homeo_certified() const { return homeo_certified_; }

  /// Recovers the factors from the assembled block matrix and offset.
  std::vector<AffineSphereSystem> split() const;

 private:
  std::vector<AffineSphereSystem> factors_;
  Matrix block_matrix_;
  Vector offset_;
  bool homeo_certified_ = true;
};

ProductSphereSystem assemble(std::vector<AffineSphereSystem> factors);

/// Throws DimensionMismatch when v does not match the factor layout.
ProductPoint product_apply(const ProductSphereSystem& p, const ProductPoint& v);
ProductPoint product_apply_inverse(const ProductSphereSystem& p, const ProductPoint& v);

/// Max over factors of the chord distance.
double product_distance(const ProductPoint& x, const ProductPoint& y);

}  // namespace affsphere
