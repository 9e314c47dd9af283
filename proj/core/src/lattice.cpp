#include "ctdl/lattice.hpp"

#include "ctdl/errors.hpp"

#include <cmath>
#include <numbers>

namespace ctdl {

Lattice::Lattice(int dim, const Eigen::MatrixXd& cell_matrix) : dim_(dim), B_(cell_matrix) {
  if (dim < 1 || dim > 3) throw DomainError("lattice dimension must be 1, 2 or 3");
  if (B_.rows() != dim || B_.cols() != dim)
    throw ShapeError("cell matrix must be dim x dim");
  double det = B_.determinant();
  if (std::abs(det) < 1e-14) throw DomainError("cell matrix is singular");
  volume_ = std::abs(det);
  Binv_ = B_.inverse();
  A_ = 2.0 * std::numbers::pi * Binv_.transpose();
}

Lattice Lattice::cubic(int dim, double a) {
  return Lattice(dim, a * Eigen::MatrixXd::Identity(dim, dim));
}

Eigen::VectorXd Lattice::wrap(const Eigen::VectorXd& r) const {
  Eigen::VectorXd f = fractional(r);
  for (int i = 0; i < dim_; ++i) f[i] -= std::floor(f[i]);
  return cartesian(f);
}

Eigen::VectorXd Lattice::min_image(const Eigen::VectorXd& r) const {
  Eigen::VectorXd f = fractional(r);
  for (int i = 0; i < dim_; ++i) f[i] -= std::round(f[i]);
  // Fractional rounding is not exact for skewed cells; refine over neighbors.
  Eigen::VectorXd best = cartesian(f);
  double best2 = best.squaredNorm();
  Eigen::VectorXd cand(dim_);
  std::array<int, 3> idx{0, 0, 0};
  const int range = 1;
  for (idx[0] = -range; idx[0] <= (dim_ > 0 ? range : -range); ++idx[0])
    for (idx[1] = (dim_ > 1 ? -range : 0); idx[1] <= (dim_ > 1 ? range : 0); ++idx[1])
      for (idx[2] = (dim_ > 2 ? -range : 0); idx[2] <= (dim_ > 2 ? range : 0); ++idx[2]) {
        Eigen::VectorXd shift(dim_);
        for (int i = 0; i < dim_; ++i) shift[i] = idx[static_cast<size_t>(i)];
        cand = best + B_ * shift;
        double c2 = cand.squaredNorm();
        if (c2 < best2) {
          best2 = c2;
          best.swap(cand);
        }
      }
  return best;
}

double Lattice::inscribed_radius() const {
  // Distance between opposite faces of the cell along each reciprocal direction.
  double r = std::numeric_limits<double>::max();
  for (int i = 0; i < dim_; ++i) {
    double knorm = A_.col(i).norm();
    r = std::min(r, std::numbers::pi / knorm);
  }
  return r;
}

bool Lattice::approx_equal(const Lattice& other, double tol) const {
  return dim_ == other.dim_ && (B_ - other.B_).cwiseAbs().maxCoeff() <= tol;
}

GridShape::GridShape(std::initializer_list<int> ns) {
  dim = static_cast<int>(ns.size());
  int i = 0;
  for (int v : ns) n[static_cast<size_t>(i++)] = v;
  for (; i < 3; ++i) n[static_cast<size_t>(i)] = 1;
  validate();
}

GridShape GridShape::cubic(int dim, int n_per_side) {
  GridShape s;
  s.dim = dim;
  for (int i = 0; i < dim; ++i) s.n[static_cast<size_t>(i)] = n_per_side;
  for (int i = dim; i < 3; ++i) s.n[static_cast<size_t>(i)] = 1;
  s.validate();
  return s;
}

long GridShape::size() const {
  long p = 1;
  for (int i = 0; i < dim; ++i) p *= n[static_cast<size_t>(i)];
  return p;
}

void GridShape::validate() const {
  if (dim < 1 || dim > 3) throw DomainError("grid dimension must be 1, 2 or 3");
  for (int i = 0; i < dim; ++i) {
    int v = n[static_cast<size_t>(i)];
    if (v <= 0 || v % 2 != 0)
      throw DomainError("grid sizes must be positive and even, got " + std::to_string(v));
  }
}

}  // namespace ctdl
