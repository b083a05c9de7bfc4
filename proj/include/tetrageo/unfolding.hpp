#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "combinatorics.hpp"
#include "geom.hpp"
#include "strip.hpp"
#include "tetra.hpp"

namespace tetrageo {

struct PlacedFace {
    // vertex labels: the two ends of the entry edge (low, high), then the remaining vertex
    std::array<int, 3> labels{};
    std::array<Point2, 3> vertices{};

    std::array<int, 3> sorted_labels() const
    {
        auto l = labels;
        std::sort(l.begin(), l.end());
        return l;
    }
    const Point2& at(int label) const
    {
        for (int i = 0; i < 3; ++i)
            if (labels[i] == label) return vertices[i];
        throw Error(Errc::invalid_sequence, "label not on face");
    }
};

// One vertex of the development boundary: a maximal run of consecutive faces sharing a copy of
// a tetrahedron vertex.
struct BoundaryVertex {
    int label = 0;
    bool left = true;
    std::size_t first_face = 0;
    std::size_t last_face = 0;
    Point2 position;
    double angle = 0.0;  // interior angle measured in the chart
};

struct Development {
    Space space = Space::euclidean;
    double alpha = 0.0;  // zero for a generic tetrahedron
    GeodesicType type;
    std::vector<PlacedFace> faces;
    // endpoints (low, high label) of the edge crossed at each crossing 0..n in the chart
    std::vector<std::array<Point2, 2>> edges;
    std::array<Point2, 5> symmetry_points{};  // X1, Y1, X2, Y2, X1'
    std::vector<BoundaryVertex> boundary;     // left side in order, then right side backwards
    bool in_hemisphere = true;                // spherical only
    bool along_geodesic = false;              // hyperbolic chart aligned with the geodesic

    std::vector<double> angles() const
    {
        std::vector<double> a;
        for (const auto& b : boundary) a.push_back(b.angle);
        return a;
    }
};

namespace detail {

// First edge of a development: low end at the left of the direction of travel.
inline std::array<Point2, 2> canonical_edge(Space k, double len)
{
    switch (k) {
    case Space::spherical: {
        const double s = std::sin(0.5 * len), c = std::cos(0.5 * len);
        return {Point2{-s, 0.0, c}, Point2{s, 0.0, c}};
    }
    case Space::hyperbolic: return {fermi_point(-0.5 * len, 0.0), fermi_point(0.5 * len, 0.0)};
    default: return {euclidean_point(0.0, 0.0), euclidean_point(len, 0.0)};
    }
}

inline void require_chain(const CrossingSequence& s)
{
    if (s.size() < 2) throw Error(Errc::invalid_sequence, "sequence too short");
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s.pivot(k) == 0) throw Error(Errc::invalid_sequence, "consecutive crossings do not share one vertex");
}

inline void finish_development(Development& d, const Metric& m, const CrossingSequence& s)
{
    const std::size_t n = s.size();
    const Space k = m.space;
    for (std::size_t i = 0; i < 5; ++i) {
        const std::size_t c = symmetry_indices(s)[i];
        const auto& e = d.edges[c];
        d.symmetry_points[i] = point_along(k, e[0], e[1], 0.5);
    }

    const auto left = left_vertices(s);
    d.boundary.clear();
    std::vector<BoundaryVertex> right_side;
    for (int side = 0; side < 2; ++side) {
        std::vector<BoundaryVertex>& out = side == 0 ? d.boundary : right_side;
        std::size_t start = 0;
        for (std::size_t c = 0; c <= n; ++c) {
            const EdgeLabel& e = s.edge(c);
            const int lab = side == 0 ? left[c] : e.other(left[c]);
            const bool ends = c == n || (side == 0 ? left[c + 1] : s.edge(c + 1).other(left[c + 1])) != lab;
            if (!ends) continue;
            BoundaryVertex b;
            b.label = lab;
            b.left = side == 0;
            b.first_face = start == 0 ? 0 : start - 1;
            b.last_face = std::min(c, n - 1);
            const auto& ep = d.edges[start];
            b.position = s.edge(start).lo == lab ? ep[0] : ep[1];
            double ang = 0.0;
            for (std::size_t f = b.first_face; f <= b.last_face; ++f) {
                const PlacedFace& pf = d.faces[f];
                std::array<Point2, 2> others;
                int j = 0;
                for (int i = 0; i < 3; ++i)
                    if (pf.labels[i] != lab) others[j++] = pf.vertices[i];
                ang += angle_at(k, pf.at(lab), others[0], others[1]);
            }
            b.angle = ang;
            out.push_back(b);
            start = c + 1;
        }
    }
    d.boundary.insert(d.boundary.end(), right_side.rbegin(), right_side.rend());

    if (k == Space::spherical) {
        const Point2 centre = d.symmetry_points[2];
        d.in_hemisphere = true;
        for (const auto& f : d.faces)
            for (const auto& v : f.vertices) d.in_hemisphere = d.in_hemisphere && vec::dot(v, centre) > 1e-12;
    }
}

// Faces placed one after another across the shared edge, starting from the canonical edge.
inline Development develop_by_reflection(const Metric& m, const CrossingSequence& s)
{
    require_chain(s);
    const std::size_t n = s.size();
    const Space k = m.space;
    Development d;
    d.space = k;
    d.alpha = m.regular ? m.alpha : 0.0;
    d.type = s.type;

    std::map<int, Point2> pos;
    const EdgeLabel e0 = s.edge(0);
    const auto start = canonical_edge(k, m.edge(e0.lo, e0.hi));
    pos[e0.lo] = start[0];
    pos[e0.hi] = start[1];
    {
        const int w = s.apex(0);
        pos[w] = toward(k, pos[e0.lo], pos[e0.hi], m.edge(e0.lo, w), m.angle(e0.lo, e0.hi, w));
    }
    for (std::size_t f = 0; f < n; ++f) {
        const EdgeLabel& e = s.edge(f);
        const int w = s.apex(f);
        if (f > 0) {
            // e is shared with the previous face; its third vertex is replaced by w
            const int old = s.edge(f - 1).other(s.pivot(f - 1));
            const Point2 pu = pos[e.lo], pv = pos[e.hi];
            if (m.regular) {
                pos[w] = reflect_across(Segment2{k, pu, pv}, pos[old]);
            } else {
                const double side = signed_distance(k, pu, pv, pos[old]) > 0 ? 1.0 : -1.0;
                pos[w] = toward(k, pu, pv, m.edge(e.lo, w), -side * m.angle(e.lo, e.hi, w));
            }
            pos.erase(old);
        }
        PlacedFace pf;
        pf.labels = {e.lo, e.hi, w};
        pf.vertices = {pos[e.lo], pos[e.hi], pos[w]};
        d.faces.push_back(pf);
        d.edges.push_back({pos[e.lo], pos[e.hi]});
    }
    const EdgeLabel& last = s.edge(n);
    d.edges.push_back({d.faces.back().at(last.lo), d.faces.back().at(last.hi)});
    finish_development(d, m, s);
    return d;
}

// Hyperbolic chart in which the curve given by the positions x (one per crossing 0..n) runs
// along the axis from the origin; each edge is placed from its crossing point and incidence angle.
inline Development develop_along(const Metric& m, const CrossingSequence& s, const std::vector<double>& x)
{
    require_chain(s);
    const std::size_t n = s.size();
    const Space k = m.space;
    const Strip st = make_strip(m, s);
    const auto left = left_vertices(s);
    Development d;
    d.space = k;
    d.alpha = m.regular ? m.alpha : 0.0;
    d.type = s.type;
    d.along_geodesic = true;

    std::vector<double> theta(n + 1), arc(n + 1, 0.0);
    for (std::size_t f = 0; f < n; ++f) {
        const auto inc = incidence(k, st.faces[f], x[f], x[f + 1]);
        theta[f] = inc.in;
        if (f + 1 == n) theta[n] = pi - inc.out;
        arc[f + 1] = arc[f] + segment_length(k, st.faces[f], x[f], x[f + 1]);
    }
    d.edges.resize(n + 1);
    for (std::size_t c = 0; c <= n; ++c) {
        const EdgeLabel& e = s.edge(c);
        const double len = m.edge(e.lo, e.hi);
        const double bearing = left[c] == e.hi ? theta[c] : -theta[c];
        const Point2 p = axis_point(k, arc[c]);
        d.edges[c] = {toward(k, p, axis_point(k, arc[c] + 1.0), x[c], bearing + pi),
                      toward(k, p, axis_point(k, arc[c] + 1.0), len - x[c], bearing)};
    }
    for (std::size_t f = 0; f < n; ++f) {
        const EdgeLabel& e = s.edge(f);
        const int w = s.apex(f);
        const EdgeLabel& next = s.edge(f + 1);
        PlacedFace pf;
        pf.labels = {e.lo, e.hi, w};
        pf.vertices = {d.edges[f][0], d.edges[f][1], next.lo == w ? d.edges[f + 1][0] : d.edges[f + 1][1]};
        d.faces.push_back(pf);
    }
    finish_development(d, m, s);
    for (std::size_t i = 0; i < 5; ++i) d.symmetry_points[i] = axis_point(k, arc[symmetry_indices(s)[i]]);
    return d;
}

} // namespace detail

// Development of a regular tetrahedron along the crossing sequence. Hyperbolic developments are
// aligned with the midpoint geodesic when it can be computed.
inline Development build_development(const TetrahedronSpec& spec, const CrossingSequence& s)
{
    const Metric m = metric_of(spec);
    if (spec.space == Space::hyperbolic && s.size() % 4 == 0) {
        detail::require_chain(s);
        const auto st = detail::make_strip(m, s);
        const auto sol = detail::midpoint_positions(st, s);
        if (sol.converged) return detail::develop_along(m, s, sol.x);
    }
    return detail::develop_by_reflection(m, s);
}

inline Development build_development(const GenericTetraSpec& spec, const CrossingSequence& s)
{
    const Metric m = metric_of(spec);
    if (spec.all_angles_le_quarter_pi) {
        detail::require_chain(s);
        const auto st = detail::make_strip(m, s);
        const auto root = detail::closing_positions(st, s);
        if (root.found) return detail::develop_along(m, s, root.x);
    }
    return detail::develop_by_reflection(m, s);
}

// Half-turns about Y1, X2 and Y2 exchange consecutive quarters of the development.
inline bool symmetry_check(const Development& d, double tol = 1e-8)
{
    const std::size_t n = d.faces.size();
    if (n == 0 || n % 4 != 0) return false;
    const std::size_t q = n / 4;
    const auto points = [&](std::size_t first) {
        std::vector<Point2> out;
        for (std::size_t f = first; f < first + q; ++f)
            for (const auto& v : d.faces[f].vertices) out.push_back(v);
        return out;
    };
    const auto covered = [&](const std::vector<Point2>& a, const std::vector<Point2>& b) {
        for (const auto& p : a) {
            bool hit = false;
            for (const auto& r : b) {
                if (detail::dist(d.space, p, r) < tol) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    };
    for (std::size_t i = 1; i <= 3; ++i) {
        const Point2 c = d.symmetry_points[i];
        std::vector<Point2> image;
        for (const auto& p : points((i - 1) * q)) {
            // exact half-turn about a point of the axis of a hyperbolic chart
            if (d.space == Space::hyperbolic && c.y == 0.0) image.push_back(fermi_point(2.0 * c.x - p.x, -p.y));
            else image.push_back(rotate_about(d.space, c, p, pi));
        }
        const auto target = points(i * q);
        if (!covered(image, target) || !covered(target, image)) return false;
    }
    return true;
}

} // namespace tetrageo
