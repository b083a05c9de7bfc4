#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "geom.hpp"

namespace tetrageo {

// Regular tetrahedron. Euclidean edges are normalised to 1.
struct TetrahedronSpec {
    Space space = Space::euclidean;
    double alpha = pi / 3;
    double edge = 1.0;
};

// Vertex labels are 1..4. Edges are indexed 12, 13, 14, 23, 24, 34.
constexpr int edge_index(int i, int j) noexcept
{
    if (i > j) std::swap(i, j);
    constexpr int base[4] = {0, 3, 5, 6};
    return base[i - 1] + (j - i - 1);
}

constexpr std::array<std::array<int, 2>, 6> edge_vertices{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

struct GenericTetraSpec {
    std::array<double, 6> edges{};
    // angle[v][o]: planar angle at vertex v in the face opposite vertex o (0-based, v != o)
    std::array<std::array<double, 4>, 4> angle{};
    bool all_angles_le_quarter_pi = false;

    double edge(int i, int j) const { return edges[edge_index(i, j)]; }
};

inline bool angle_in_range(Space k, double alpha)
{
    switch (k) {
    case Space::spherical: return alpha > pi / 3 && alpha < 2 * pi / 3;
    case Space::hyperbolic: return alpha > 0 && alpha < pi / 3;
    default: return std::abs(alpha - pi / 3) <= 1e-12;
    }
}

inline double edge_from_angle(Space k, double alpha)
{
    if (!(angle_in_range(k, alpha)))
        throw Error(Errc::invalid_angle, std::string("angle outside the range for ") + to_string(k), alpha);
    if (k == Space::euclidean) return 1.0;
    // cos a = c/(1-c) written through the half-edge to keep precision near the Euclidean limit
    const double c = std::cos(alpha);
    if (k == Space::spherical) return 2.0 * std::asin(std::sqrt((1.0 - 2.0 * c) / (2.0 * (1.0 - c))));
    return 2.0 * std::asinh(std::sqrt((2.0 * c - 1.0) / (2.0 * (1.0 - c))));
}

inline double max_spherical_edge() { return pi - std::acos(1.0 / 3.0); }

inline double angle_from_edge(Space k, double a)
{
    if (!(a > 0) || !std::isfinite(a)) throw Error(Errc::invalid_edge, "edge length must be positive", a);
    switch (k) {
    case Space::spherical: {
        if (a >= max_spherical_edge()) throw Error(Errc::invalid_edge, "spherical edge too long", a);
        const double t = std::tan(0.5 * a);
        return std::acos(0.5 * (1.0 - t * t));
    }
    case Space::hyperbolic: {
        const double t = std::tanh(0.5 * a);
        return std::acos(0.5 * (1.0 + t * t));
    }
    default: return pi / 3;
    }
}

inline TetrahedronSpec regular_tetrahedron(Space k, double alpha)
{
    return {k, alpha, edge_from_angle(k, alpha)};
}

inline TetrahedronSpec regular_tetrahedron_from_edge(Space k, double a)
{
    if (k == Space::euclidean) return {k, pi / 3, 1.0};
    return {k, angle_from_edge(k, a), a};
}

// distance from a face vertex to the opposite edge
inline double face_altitude(const TetrahedronSpec& s)
{
    const double c = std::cos(0.5 * s.alpha);
    switch (s.space) {
    case Space::spherical: return std::atan2(std::sin(s.edge) * c, std::cos(s.edge));
    case Space::hyperbolic: return std::atanh(std::tanh(s.edge) * c);
    default: return std::sqrt(3.0) / 2.0;
    }
}

inline double face_circumradius(const TetrahedronSpec& s)
{
    const double c = std::cos(0.5 * s.alpha);
    switch (s.space) {
    case Space::spherical: return std::atan2(std::sin(0.5 * s.edge), std::cos(0.5 * s.edge) * c);
    case Space::hyperbolic: return std::atanh(std::tanh(0.5 * s.edge) / c);
    default: return 1.0 / std::sqrt(3.0);
    }
}

namespace detail {

// angle opposite side `opp` in a hyperbolic triangle with sides b, c adjacent to it
inline double hyperbolic_angle(double b, double c, double opp)
{
    if (!(opp < b + c && b < opp + c && c < opp + b))
        throw Error(Errc::invalid_tetrahedron, "face violates the triangle inequality", opp);
    const double cosv = (std::cosh(b) * std::cosh(c) - std::cosh(opp)) / (std::sinh(b) * std::sinh(c));
    if (!(cosv > -1.0 && cosv < 1.0)) throw Error(Errc::invalid_tetrahedron, "degenerate face", cosv);
    return std::acos(cosv);
}

} // namespace detail

// edges in the order 12, 13, 14, 23, 24, 34
inline GenericTetraSpec generic_from_edges(const std::array<double, 6>& edges)
{
    GenericTetraSpec g;
    g.edges = edges;
    for (double e : edges)
        if (!(e > 0) || !std::isfinite(e)) throw Error(Errc::invalid_tetrahedron, "edge length must be positive", e);
    bool small = true;
    for (int o = 1; o <= 4; ++o) {
        for (int v = 1; v <= 4; ++v) {
            if (v == o) continue;
            int u = 0, w = 0;
            for (int x = 1; x <= 4; ++x) {
                if (x == o || x == v) continue;
                (u == 0 ? u : w) = x;
            }
            const double ang = detail::hyperbolic_angle(g.edge(v, u), g.edge(v, w), g.edge(u, w));
            g.angle[v - 1][o - 1] = ang;
            small = small && ang <= pi / 4 + 1e-12;
        }
    }
    g.all_angles_le_quarter_pi = small;
    return g;
}

// Edge lengths and planar angles shared by regular and generic tetrahedra.
struct Metric {
    Space space = Space::euclidean;
    std::array<double, 6> edges{};
    std::array<std::array<double, 4>, 4> angles{};
    bool regular = true;
    double alpha = pi / 3;

    double edge(int i, int j) const { return edges[edge_index(i, j)]; }
    // planar angle at v in the face with vertices v, u, w
    double angle(int v, int u, int w) const { return angles[v - 1][10 - v - u - w - 1]; }
};

inline Metric metric_of(const TetrahedronSpec& s)
{
    Metric m;
    m.space = s.space;
    m.edges.fill(s.edge);
    for (auto& row : m.angles) row.fill(s.alpha);
    m.regular = true;
    m.alpha = s.alpha;
    return m;
}

inline Metric metric_of(const GenericTetraSpec& g)
{
    Metric m;
    m.space = Space::hyperbolic;
    m.edges = g.edges;
    m.angles = g.angle;
    m.regular = false;
    m.alpha = 0.0;
    return m;
}

} // namespace tetrageo
