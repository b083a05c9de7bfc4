#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "error.hpp"

namespace tetrageo {

inline constexpr double pi = std::numbers::pi;

enum class Space : int { hyperbolic = -1, euclidean = 0, spherical = 1 };

constexpr int curvature(Space k) noexcept { return static_cast<int>(k); }

constexpr const char* to_string(Space k) noexcept
{
    switch (k) {
    case Space::hyperbolic: return "hyperbolic";
    case Space::euclidean: return "euclidean";
    case Space::spherical: return "spherical";
    }
    return "?";
}

// Chart point.
//   euclidean  (x, y)
//   spherical  unit vector (x, y, z)
//   hyperbolic Fermi coordinates (x, y) = (s, t) about the chart axis: s is arc length
//              along the axis geodesic, t the signed distance from it. Klein coordinates
//              are (tanh s, tanh t / cosh s).
struct Point2 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Segment2 {
    Space space = Space::euclidean;
    Point2 a;
    Point2 b;
};

enum class Side { left, right, on };

namespace trig {

// sin, x, sinh according to curvature +1, 0, -1
inline double sn(Space k, double x)
{
    switch (k) {
    case Space::spherical: return std::sin(x);
    case Space::hyperbolic: return std::sinh(x);
    default: return x;
    }
}

inline double cs(Space k, double x)
{
    switch (k) {
    case Space::spherical: return std::cos(x);
    case Space::hyperbolic: return std::cosh(x);
    default: return 1.0;
    }
}

inline double asn(Space k, double x)
{
    switch (k) {
    case Space::spherical: return std::asin(std::clamp(x, -1.0, 1.0));
    case Space::hyperbolic: return std::asinh(x);
    default: return x;
    }
}

// cs(x)/sn(x)
inline double ct(Space k, double x)
{
    switch (k) {
    case Space::spherical: return 1.0 / std::tan(x);
    case Space::hyperbolic: return 1.0 / std::tanh(x);
    default: return 1.0 / x;
    }
}

} // namespace trig

inline double wrap_angle(double a)
{
    a = std::remainder(a, 2.0 * pi);
    return a <= -pi ? a + 2.0 * pi : a;
}

namespace vec {

inline double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point2 cross(const Point2& a, const Point2& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Point2 add(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point2 sub(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point2 scale(const Point2& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline double norm(const Point2& a) { return std::sqrt(dot(a, a)); }
inline Point2 normalize(const Point2& a) { return scale(a, 1.0 / norm(a)); }

// unit tangent at unit vector c pointing towards b; arbitrary if b is parallel to c
inline Point2 tangent_towards(const Point2& c, const Point2& b)
{
    Point2 t = sub(b, scale(c, dot(b, c)));
    if (norm(t) > 1e-300) return normalize(t);
    const Point2 axis = std::abs(c.x) < 0.9 ? Point2{1, 0, 0} : Point2{0, 1, 0};
    return normalize(sub(axis, scale(c, dot(axis, c))));
}

} // namespace vec

inline Point2 euclidean_point(double x, double y) { return {x, y, 0.0}; }
inline Point2 spherical_point(double x, double y, double z) { return vec::normalize({x, y, z}); }
inline Point2 fermi_point(double s, double t) { return {s, t, 0.0}; }

inline Point2 klein_point(double x, double y)
{
    constexpr double max_radius = 1.0 - 1e-14;
    const double r = std::hypot(x, y);
    if (r > max_radius) {
        x *= max_radius / r;
        y *= max_radius / r;
    }
    const double s = std::atanh(x);
    return {s, std::atanh(y / std::sqrt((1.0 - x) * (1.0 + x))), 0.0};
}

inline std::array<double, 2> to_klein(const Point2& p)
{
    return {std::tanh(p.x), std::tanh(p.y) / std::cosh(p.x)};
}

// point at arc length s along the chart axis
inline Point2 axis_point(Space k, double s)
{
    switch (k) {
    case Space::spherical: return {std::cos(s), std::sin(s), 0.0};
    default: return {s, 0.0, 0.0};
    }
}

namespace detail {

struct Polar {
    double d;
    double phi;
};

// position of p seen from c: distance and bearing from the local +s direction
inline Polar fermi_polar(const Point2& c, const Point2& p)
{
    const double ds = p.x - c.x;
    const double h = std::sinh(0.5 * ds);
    const double ct2 = std::cosh(p.y);
    const double x = std::sinh(ds) * ct2;
    const double y = std::sinh(p.y - c.y) - 2.0 * std::sinh(c.y) * ct2 * h * h;
    return {std::asinh(std::hypot(x, y)), std::atan2(y, x)};
}

inline Point2 fermi_from_polar(const Point2& c, double d, double phi)
{
    const double sd = std::sinh(d);
    const double vx = sd * std::cos(phi);
    const double vy = sd * std::sin(phi);
    const double vz = std::cosh(d);
    const double y = std::cosh(c.y) * vy + std::sinh(c.y) * vz;
    const double t = std::asinh(y);
    const double ds = std::asinh(vx / std::sqrt(1.0 + y * y));
    return {c.x + ds, t, 0.0};
}

// distance without the antipodal check
inline double dist(Space k, const Point2& p, const Point2& q)
{
    switch (k) {
    case Space::spherical: return std::atan2(vec::norm(vec::cross(p, q)), vec::dot(p, q));
    case Space::hyperbolic: return fermi_polar(p, q).d;
    default: return std::hypot(q.x - p.x, q.y - p.y);
    }
}

} // namespace detail

inline double distance(Space k, const Point2& p, const Point2& q)
{
    if (k == Space::spherical && vec::norm(vec::add(p, q)) < 1e-12)
        throw Error(Errc::ambiguous_geodesic, "antipodal spherical points");
    return detail::dist(k, p, q);
}

// signed angle at c from direction c->p1 to direction c->p2, in (-pi, pi]
inline double turn(Space k, const Point2& c, const Point2& p1, const Point2& p2)
{
    switch (k) {
    case Space::spherical: {
        const Point2 t1 = vec::tangent_towards(c, p1);
        const Point2 t2 = vec::tangent_towards(c, p2);
        return std::atan2(vec::dot(c, vec::cross(t1, t2)), vec::dot(t1, t2));
    }
    case Space::hyperbolic:
        return wrap_angle(detail::fermi_polar(c, p2).phi - detail::fermi_polar(c, p1).phi);
    default: {
        const double ux = p1.x - c.x, uy = p1.y - c.y;
        const double vx = p2.x - c.x, vy = p2.y - c.y;
        return std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
    }
    }
}

inline double angle_at(Space k, const Point2& c, const Point2& p1, const Point2& p2)
{
    return std::abs(turn(k, c, p1, p2));
}

// point at distance d from c, in the direction of b rotated counter-clockwise by theta
inline Point2 toward(Space k, const Point2& c, const Point2& b, double d, double theta = 0.0)
{
    switch (k) {
    case Space::spherical: {
        const Point2 u = vec::tangent_towards(c, b);
        const Point2 w = vec::cross(c, u);
        const Point2 dir = vec::add(vec::scale(u, std::cos(theta)), vec::scale(w, std::sin(theta)));
        return vec::normalize(vec::add(vec::scale(c, std::cos(d)), vec::scale(dir, std::sin(d))));
    }
    case Space::hyperbolic: {
        const double phi = (b == c) ? 0.0 : detail::fermi_polar(c, b).phi;
        return detail::fermi_from_polar(c, d, phi + theta);
    }
    default: {
        double ux = b.x - c.x, uy = b.y - c.y;
        const double n = std::hypot(ux, uy);
        if (n > 0) {
            ux /= n;
            uy /= n;
        } else {
            ux = 1;
            uy = 0;
        }
        const double ct = std::cos(theta), st = std::sin(theta);
        return {c.x + d * (ux * ct - uy * st), c.y + d * (ux * st + uy * ct), 0.0};
    }
    }
}

// signed distance from p to the complete geodesic through a, b; positive on the left
inline double signed_distance(Space k, const Point2& a, const Point2& b, const Point2& p)
{
    const double d = detail::dist(k, a, p);
    if (d == 0.0) return 0.0;
    return trig::asn(k, trig::sn(k, d) * std::sin(turn(k, a, b, p)));
}

inline Side side_of(const Segment2& s, const Point2& p, double tol = 1e-10)
{
    const double h = signed_distance(s.space, s.a, s.b, p);
    if (std::abs(h) < tol) return Side::on;
    return h > 0 ? Side::left : Side::right;
}

inline Point2 reflect_across(const Segment2& s, const Point2& p)
{
    const double d = detail::dist(s.space, s.a, p);
    if (d == 0.0) return p;
    return toward(s.space, s.a, s.b, d, -turn(s.space, s.a, s.b, p));
}

// point at fraction f of the way from a to b (f outside [0,1] extends the geodesic)
inline Point2 point_along(Space k, const Point2& a, const Point2& b, double f)
{
    return toward(k, a, b, f * detail::dist(k, a, b));
}

inline Point2 rotate_about(Space k, const Point2& c, const Point2& p, double angle)
{
    const double d = detail::dist(k, c, p);
    if (d == 0.0) return p;
    return toward(k, c, p, d, angle);
}

inline double point_segment_distance(Space k, const Point2& a, const Point2& b, const Point2& p)
{
    if (angle_at(k, a, b, p) >= pi / 2) return detail::dist(k, a, p);
    if (angle_at(k, b, a, p) >= pi / 2) return detail::dist(k, b, p);
    return std::abs(signed_distance(k, a, b, p));
}

// Central projection of the unit sphere onto the tangent plane at t, in an orthonormal
// basis of that plane.
inline Point2 gnomonic_project(const Point2& p, const Point2& t)
{
    const double c = vec::dot(p, t);
    if (c <= 1e-12) throw Error(Errc::out_of_hemisphere, "point not in the open hemisphere", c);
    const Point2 q = vec::sub(vec::scale(p, 1.0 / c), t);
    const Point2 axis = std::abs(t.x) < 0.9 ? Point2{1, 0, 0} : Point2{0, 1, 0};
    const Point2 e1 = vec::tangent_towards(t, axis);
    const Point2 e2 = vec::cross(t, e1);
    return {vec::dot(q, e1), vec::dot(q, e2), 0.0};
}

inline bool is_valid_point(Space k, const Point2& p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) return false;
    if (k == Space::spherical) return std::abs(vec::norm(p) - 1.0) < 1e-12;
    return true;
}

} // namespace tetrageo
