#pragma once

#include <cmath>

#include "geom.hpp"
#include "tetra.hpp"

// Central projection of a hemisphere onto its tangent plane at the pole (0, 0, -1), used to
// compare nearly Euclidean spherical developments with planar ones.
namespace tetrageo::projection {

inline const Point2 pole{0.0, 0.0, -1.0};

// Upper bound on the spherical edge when the planar angle is pi/3 + eps.
inline double edge_bound(double eps) { return pi * std::sqrt(2.0 * std::cos(pi / 12)) * std::sqrt(eps); }

// point of the unit sphere at angle phi from the pole, in the xz half-plane with x > 0
inline Point2 meridian_point(double phi) { return {std::sin(phi), 0.0, -std::cos(phi)}; }

inline Point2 along_great_circle(const Point2& p, const Point2& dir, double d)
{
    return vec::add(vec::scale(p, std::cos(d)), vec::scale(dir, std::sin(d)));
}

// Planar angle between the projections of two great circles through the meridian point at
// angle phi. The circles lie in the planes with unit normals (sin t cos phi, cos t, sin t sin phi)
// for t = t1 and t = t1 + alpha, so they meet at the angle alpha.
inline double projected_angle(double phi, double t1, double alpha)
{
    const Point2 p = meridian_point(phi);
    const auto direction = [&](double t) {
        const Point2 n{std::sin(t) * std::cos(phi), std::cos(t), std::sin(t) * std::sin(phi)};
        return vec::normalize(vec::cross(n, p));
    };
    const double step = 0.25 * (0.5 * pi - phi);
    const Point2 c = gnomonic_project(p, pole);
    const Point2 u = gnomonic_project(along_great_circle(p, direction(t1), step), pole);
    const Point2 w = gnomonic_project(along_great_circle(p, direction(t1 + alpha), step), pole);
    return angle_at(Space::euclidean, c, u, w);
}

inline double angle_bound(double phi, double eps)
{
    const double t = std::tan(phi);
    return pi * t * t + eps;
}

// Length of the projection of a unit arc on the sphere of radius 1/a starting at distance r from
// the pole, heading at angle `heading` from the direction away from the pole; in units of 1/a.
inline double projected_unit_arc(double a, double r, double heading)
{
    const Point2 p = meridian_point(a * r);
    const Point2 away{std::cos(a * r), 0.0, std::sin(a * r)};
    const Point2 side{0.0, 1.0, 0.0};
    const Point2 dir = vec::add(vec::scale(away, std::cos(heading)), vec::scale(side, std::sin(heading)));
    const Point2 q = along_great_circle(p, dir, a);
    const Point2 pp = gnomonic_project(p, pole);
    const Point2 qq = gnomonic_project(q, pole);
    return std::hypot(qq.x - pp.x, qq.y - pp.y) / a;
}

inline double length_bound(double a, double r, double eps)
{
    const double d = 1.0 - (2.0 / pi) * a * (r + 1.0);
    return std::cos(pi / 12) * (4.0 + pi * pi * (2 * r + 1) * (2 * r + 1)) / (d * d) * eps;
}

// largest r for which the bound above applies
inline double max_distance(double a) { return pi / (2.0 * a) - 1.0; }

} // namespace tetrageo::projection
