#pragma once

#include <Eigen/Dense>

namespace extrad {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Simply connected space form of constant curvature delta >= 0.
//
// delta == 0 is Euclidean space, points live in R^{ambient_dim}.
// delta > 0 is the round sphere of radius 1/sqrt(delta); points are stored
// as vectors of norm 1/sqrt(delta) in R^{ambient_dim + 1}, and tangent
// vectors at a point are orthogonal to it.
struct SpaceForm {
  double delta = 0.0;
  int ambient_dim = 3;  // n + 1 for hypersurfaces of intrinsic dimension n

  static SpaceForm euclidean(int ambient_dim);
  static SpaceForm spherical(double delta, int ambient_dim);

  bool curved() const { return delta > 0.0; }
  int coord_dim() const { return curved() ? ambient_dim + 1 : ambient_dim; }
  double model_radius() const;      // 1/sqrt(delta); curved spaces only
  double hemisphere_limit() const;  // pi/(2 sqrt(delta)), +infinity if flat

  // Throws std::invalid_argument if x is not a valid point (wrong size, or
  // off the model sphere by more than 1e-12 relative).
  void check_point(const Vector& x) const;
};

// Warping functions of the radial coordinate:
//   s(t) = sin(sqrt(delta) t)/sqrt(delta),  t            (delta > 0, = 0)
//   c(t) = cos(sqrt(delta) t),              1
//   tan(t) = s(t)/c(t)
// They satisfy s' = c and c^2 + delta s^2 = 1.
double s_delta(double delta, double t);
double c_delta(double delta, double t);
// Throws std::domain_error when delta > 0 and t >= pi/(2 sqrt(delta)).
double t_delta(double delta, double t);

struct Warping {
  double s = 0.0;
  double c = 1.0;
  double tan = 0.0;
};

// All three warping values at once; throws when tan is undefined.
Warping warping(const SpaceForm& space, double t);

double geodesic_distance(const SpaceForm& space, const Vector& p, const Vector& q);

// Radial data of x about a base point p0: the geodesic distance r, the
// ambient unit gradient of r, and the position field Z = s_delta(r) grad r.
// For delta > 0, Z = c_delta(r) x - p0, which is tangent to the model
// sphere at x.
struct RadialData {
  double r = 0.0;
  Vector grad_r;
  Vector Z;
};

// Throws std::domain_error when d(p0, x) < 1e-12 (radial direction undefined).
RadialData position_field(const SpaceForm& space, const Vector& p0, const Vector& x);

// The point at geodesic distance R from p0 on the ray from p0 through x,
// i.e. exp_{p0}(R v) with v the unit initial direction of that ray.
Vector radial_project(const SpaceForm& space, const Vector& p0, double R, const Vector& x);

// Ambient differential of x -> radial_project(space, p0, R, x) applied to v.
Vector radial_project_differential(const SpaceForm& space, const Vector& p0, double R,
                                   const Vector& x, const Vector& v);

}  // namespace extrad
