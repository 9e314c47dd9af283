#pragma once

#include <Eigen/Dense>

#include <array>

namespace ctdl {

using Vec3 = Eigen::Vector3d;

/// Bravais lattice in dimension 1, 2 or 3. Cell vectors are the columns of
/// B (atomic units of length); the fundamental cell is B [0,1)^d.
class Lattice {
public:
  Lattice() = default;
  Lattice(int dim, const Eigen::MatrixXd& cell_matrix);

  /// Simple (hyper)cubic lattice with constant a.
  static Lattice cubic(int dim, double a);

  int dim() const { return dim_; }
  const Eigen::MatrixXd& basis() const { return B_; }
  /// |det B|.
  double volume() const { return volume_; }
  /// Reciprocal cell matrix 2 pi B^{-T} (columns are reciprocal vectors).
  const Eigen::MatrixXd& reciprocal() const { return A_; }

  /// Cartesian position of fractional coordinates.
  Eigen::VectorXd cartesian(const Eigen::VectorXd& frac) const { return B_ * frac; }
  /// Fractional coordinates of a cartesian position.
  Eigen::VectorXd fractional(const Eigen::VectorXd& r) const { return Binv_ * r; }

  /// Wraps r into the fundamental cell B [0,1)^d.
  Eigen::VectorXd wrap(const Eigen::VectorXd& r) const;
  /// Minimum-image representative of r (closest to 0 over lattice translates).
  Eigen::VectorXd min_image(const Eigen::VectorXd& r) const;

  /// Reciprocal vector for an integer index m: k = A m.
  Eigen::VectorXd kvector(const Eigen::VectorXi& m) const { return A_ * m.cast<double>(); }

  /// Shortest distance from the cell center to a cell face (radius of the
  /// inscribed sphere); bump supports must stay below this for min-image sums.
  double inscribed_radius() const;

  bool approx_equal(const Lattice& other, double tol = 1e-12) const;

private:
  int dim_ = 3;
  Eigen::MatrixXd B_;
  Eigen::MatrixXd Binv_;
  Eigen::MatrixXd A_;
  double volume_ = 0.0;
};

/// Uniform grid shape over a cell; entries must be positive and even.
struct GridShape {
  std::array<int, 3> n{1, 1, 1};
  int dim = 3;

  GridShape() = default;
  GridShape(std::initializer_list<int> ns);
  static GridShape cubic(int dim, int n_per_side);

  int operator[](int i) const { return n[static_cast<size_t>(i)]; }
  long size() const;
  bool operator==(const GridShape& o) const { return dim == o.dim && n == o.n; }

  void validate() const;
};

/// Signed FFT frequency for index i on an n-point axis: in [-n/2, n/2).
inline int signed_freq(int i, int n) { return (i <= n / 2 - 1) ? i : i - n; }

}  // namespace ctdl
