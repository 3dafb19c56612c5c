#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>

namespace calfib {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Complex view of an even-length real coordinate vector: z_j = x_{2j} + i x_{2j+1}.
inline CVec complex_view(const Vec& x) {
  CVec z(x.size() / 2);
  for (Eigen::Index j = 0; j < z.size(); ++j) z[j] = Cplx(x[2 * j], x[2 * j + 1]);
  return z;
}

/// Inverse of complex_view; round-trips bit-exactly.
inline Vec real_view(const CVec& z) {
  Vec x(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    x[2 * j] = z[j].real();
    x[2 * j + 1] = z[j].imag();
  }
  return x;
}

/// A point of a coordinate chart, stored in real coordinates.
struct ChartPoint {
  Vec coords;
  std::string chart_id;

  int real_dim() const { return static_cast<int>(coords.size()); }
  int complex_dim() const { return real_dim() / 2; }
  CVec z() const { return complex_view(coords); }
};

inline ChartPoint make_point(Vec coords, std::string chart_id = {}) {
  return ChartPoint{std::move(coords), std::move(chart_id)};
}

inline ChartPoint make_point_z(const CVec& z, std::string chart_id = {}) {
  return ChartPoint{real_view(z), std::move(chart_id)};
}

/// Tangent vector anchored at a chart point, in the same real coordinates.
struct TangentVector {
  Vec components;

  int real_dim() const { return static_cast<int>(components.size()); }
  CVec z() const { return complex_view(components); }
};

inline TangentVector make_tangent(Vec components) { return TangentVector{std::move(components)}; }

inline TangentVector make_tangent_z(const CVec& z) { return TangentVector{real_view(z)}; }

/// Coordinate basis tangent vector e_i in R^dim.
inline TangentVector basis_tangent(int dim, int i) {
  Vec v = Vec::Zero(dim);
  v[i] = 1.0;
  return TangentVector{std::move(v)};
}

}  // namespace calfib
