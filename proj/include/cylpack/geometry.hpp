#pragma once
#include <cmath>
#include <functional>
#include <vector>

#include "cylpack/errors.hpp"

namespace cylpack {

struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline Vec3 normalize(const Vec3& v, double eps = 1e-12) {
    const double n = norm(v);
    if (n < eps) throw DegenerateAxis("normalize(): zero-length vector");
    return v / n;
}

inline bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Directed line segment; degenerate (point) segments are permitted.
struct Segment {
    Vec3 p0, p1;

    Segment() = default;
    Segment(const Vec3& a, const Vec3& b) : p0(a), p1(b) {}

    Vec3 direction() const { return p1 - p0; }
    double length() const { return norm(p1 - p0); }
    Vec3 at(double s) const { return p0 + (p1 - p0) * s; }
    Vec3 midpoint() const { return (p0 + p1) * 0.5; }
};

/// Orthonormal frame for the plane through `origin` with unit `normal`;
/// {u, v, normal} is a right-handed basis.
struct PlaneFrame {
    Vec3 origin;
    Vec3 normal;
    Vec3 u, v;

    Vec3 at(double theta, double r) const {
        return origin + (u * std::cos(theta) + v * std::sin(theta)) * r;
    }
};

double point_segment_distance(const Vec3& p, const Segment& s);

/// Parameter in [0,1] of the point of `s` closest to `p` (0 for degenerate segments).
double point_segment_closest_param(const Vec3& p, const Segment& s);

double segment_segment_distance(const Segment& a, const Segment& b);

/// Frame of the plane normal to `axis` through `x`. `x` must lie on the axis
/// (within 1e-9) and the axis must be nondegenerate. The in-plane direction u
/// is built from the coordinate axis least aligned with the normal, so frames
/// are reproducible.
PlaneFrame plane_frame(const Segment& axis, const Vec3& x);

/// Area between a parabola and a chord perpendicular to its axis
/// (Archimedes quadrature): (2/3) * chord * sagitta.
double parabola_segment_area(double chord, double sagitta);

/// ½ ∫ r(θ)² dθ over [0, 2π) by adaptive Simpson quadrature with relative
/// error target `tol` (absolute floor 1e-12). Throws NonFiniteValue if the
/// radius function produces a non-finite value.
double area_from_radius_fn(const std::function<double(double)>& r, double tol);

/// Same, with the integration split at the given sorted breakpoints
/// (angles in [0, 2π)); used to keep the quadrature away from kinks.
double area_from_radius_fn(const std::function<double(double)>& r, double tol,
                           const std::vector<double>& breakpoints);

/// Adaptive Simpson of f over [a,b], relative target tol, absolute floor.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, double abs_floor = 1e-12);

} // namespace cylpack
