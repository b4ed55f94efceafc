#include "extrad/spaceform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace extrad {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

SpaceForm SpaceForm::euclidean(int ambient_dim) {
  if (ambient_dim < 2) throw std::invalid_argument("SpaceForm: ambient_dim must be >= 2");
  return SpaceForm{0.0, ambient_dim};
}

SpaceForm SpaceForm::spherical(double delta, int ambient_dim) {
  if (!(delta > 0.0)) throw std::invalid_argument("SpaceForm: spherical model needs delta > 0");
  if (ambient_dim < 2) throw std::invalid_argument("SpaceForm: ambient_dim must be >= 2");
  return SpaceForm{delta, ambient_dim};
}

double SpaceForm::model_radius() const {
  if (!curved()) throw std::domain_error("SpaceForm: model_radius undefined for delta == 0");
  return 1.0 / std::sqrt(delta);
}

double SpaceForm::hemisphere_limit() const {
  if (!curved()) return std::numeric_limits<double>::infinity();
  return kPi / (2.0 * std::sqrt(delta));
}

void SpaceForm::check_point(const Vector& x) const {
  if (x.size() != coord_dim())
    throw std::invalid_argument("SpaceForm: point has dimension " + std::to_string(x.size()) +
                                ", expected " + std::to_string(coord_dim()));
  if (curved()) {
    const double rho = model_radius();
    if (std::abs(x.norm() - rho) > 1e-12 * rho)
      throw std::invalid_argument("SpaceForm: point is off the model sphere");
  }
}

double s_delta(double delta, double t) {
  if (delta > 0.0) {
    const double sq = std::sqrt(delta);
    return std::sin(sq * t) / sq;
  }
  return t;
}

double c_delta(double delta, double t) {
  if (delta > 0.0) return std::cos(std::sqrt(delta) * t);
  return 1.0;
}

double t_delta(double delta, double t) {
  if (delta > 0.0) {
    const double sq = std::sqrt(delta);
    if (t >= kPi / (2.0 * sq))
      throw std::domain_error("t_delta: argument outside the open hemisphere");
    return std::tan(sq * t) / sq;
  }
  return t;
}

Warping warping(const SpaceForm& space, double t) {
  if (t < 0.0) throw std::domain_error("warping: negative radial coordinate");
  return Warping{s_delta(space.delta, t), c_delta(space.delta, t), t_delta(space.delta, t)};
}

double geodesic_distance(const SpaceForm& space, const Vector& p, const Vector& q) {
  if (!space.curved()) return (p - q).norm();
  // d = (1/sqrt(delta)) arccos(delta <p, q>); the inner product is clamped
  // so antipodal/coincident roundoff cannot produce NaN.
  const double u = clamp_unit(space.delta * p.dot(q));
  return std::acos(u) / std::sqrt(space.delta);
}

RadialData position_field(const SpaceForm& space, const Vector& p0, const Vector& x) {
  RadialData out;
  out.r = geodesic_distance(space, p0, x);
  if (out.r < 1e-12)
    throw std::domain_error("position_field: x coincides with the base point");
  if (!space.curved()) {
    out.Z = x - p0;
    out.grad_r = out.Z / out.r;
    return out;
  }
  const double c = c_delta(space.delta, out.r);
  const double s = s_delta(space.delta, out.r);
  out.Z = c * x - p0;
  out.grad_r = out.Z / s;
  return out;
}

Vector radial_project(const SpaceForm& space, const Vector& p0, double R, const Vector& x) {
  const double r = geodesic_distance(space, p0, x);
  if (r < 1e-12)
    throw std::domain_error("radial_project: x coincides with the base point");
  if (!space.curved()) return p0 + (R / r) * (x - p0);
  // Walk distance R along the geodesic from p0 with the unit initial
  // direction pointing toward x.
  const double cr = c_delta(space.delta, r);
  const double sr = s_delta(space.delta, r);
  const Vector v = (x - cr * p0) / sr;
  return c_delta(space.delta, R) * p0 + s_delta(space.delta, R) * v;
}

Vector radial_project_differential(const SpaceForm& space, const Vector& p0, double R,
                                   const Vector& x, const Vector& v) {
  const double r = geodesic_distance(space, p0, x);
  if (r < 1e-12)
    throw std::domain_error("radial_project_differential: x coincides with the base point");
  if (!space.curved()) {
    const Vector u = (x - p0) / r;
    return (R / r) * (v - u.dot(v) * u);
  }
  const double cr = c_delta(space.delta, r);
  const double sr = s_delta(space.delta, r);
  const double sR = s_delta(space.delta, R);
  const Vector grad_r = (cr * x - p0) / sr;
  const double dr = grad_r.dot(v);
  // d[(x - c(r) p0)/s(r)] = (v + delta s(r) dr p0)/s(r) - (x - c(r) p0) c(r) dr / s(r)^2
  const Vector num = (v + space.delta * sr * dr * p0) / sr -
                     (x - cr * p0) * (cr * dr / (sr * sr));
  return sR * num;
}

}  // namespace extrad
