#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include "combinatorics.hpp"
#include "geom.hpp"
#include "strip.hpp"
#include "tetra.hpp"
#include "unfolding.hpp"

namespace tetrageo {

struct PathSegment {
    std::size_t face = 0;
    std::array<int, 3> labels{};  // sorted face labels; the segment lives in that face's chart
    Point2 a;
    Point2 b;
    double length = 0.0;
};

struct GeodesicPath {
    GeodesicType type;
    Space space = Space::euclidean;
    std::vector<Crossing> crossings;
    std::vector<PathSegment> segments;
    std::vector<double> incidence;  // angle with each crossed edge, from its higher-labelled end
    double total_length = 0.0;
    double clearance = 0.0;
    double max_residual = 0.0;      // largest deviation from supplementary incidence angles
    double margin = 0.0;            // smallest distance of a crossing from an edge end, as a fraction
    bool closed = false;
    bool simple = false;
};

// Evidence that the symmetric curve leaves the development.
struct NotContained {
    Errc reason = Errc::vertex_hit;  // vertex_hit: passes a vertex; too_long: spherical length >= 2 pi
    std::size_t face = 0;
    int vertex = 0;
    double signed_distance = 0.0;    // negative when the vertex lies on the wrong side of the curve
    double length = 0.0;
    double margin = 0.0;
    std::vector<Crossing> crossings;
};

using MidpointResult = std::variant<GeodesicPath, NotContained>;

inline constexpr double containment_margin = 1e-9;
inline constexpr double straightness_tolerance = 1e-8;

// Face with sorted labels a < b < c placed with a at the chart origin and b on the axis.
inline std::array<Point2, 3> face_chart(const Metric& m, const std::array<int, 3>& labels)
{
    const Space k = m.space;
    const auto [a, b, c] = labels;
    const Point2 pa = axis_point(k, 0.0);
    const Point2 pb = axis_point(k, m.edge(a, b));
    return {pa, pb, toward(k, pa, pb, m.edge(a, c), m.angle(a, b, c))};
}

namespace detail {

inline const Point2& chart_vertex(const std::array<int, 3>& labels, const std::array<Point2, 3>& chart, int v)
{
    for (int i = 0; i < 3; ++i)
        if (labels[i] == v) return chart[i];
    throw Error(Errc::invalid_sequence, "vertex not on face");
}

inline bool straddles(double h1, double h2, double tol)
{
    return (h1 <= tol && h2 >= -tol) || (h1 >= -tol && h2 <= tol);
}

// interiors of two segments meet; touching within tol counts
inline bool segments_meet(Space k, const PathSegment& s, const PathSegment& t, double tol = 1e-12)
{
    return straddles(signed_distance(k, s.a, s.b, t.a), signed_distance(k, s.a, s.b, t.b), tol) &&
           straddles(signed_distance(k, t.a, t.b, s.a), signed_distance(k, t.a, t.b, s.b), tol);
}

inline bool segments_simple(Space k, const std::vector<PathSegment>& segs)
{
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (segs[i].labels == segs[j].labels && segments_meet(k, segs[i], segs[j])) return false;
    return true;
}

inline double segments_clearance(const Metric& m, const std::vector<PathSegment>& segs)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& sg : segs) {
        const auto chart = face_chart(m, sg.labels);
        for (const auto& v : chart) best = std::min(best, point_segment_distance(m.space, sg.a, sg.b, v));
    }
    return best;
}

inline std::vector<double> positions_of(const Metric& m, const CrossingSequence& s)
{
    const std::size_t n = s.size();
    std::vector<double> x(n + 1);
    for (std::size_t c = 0; c <= n; ++c) {
        const auto& cr = s.crossings[c % n];
        x[c] = cr.fraction * m.edge(cr.edge.lo, cr.edge.hi);
    }
    return x;
}

inline CrossingSequence with_positions(const Metric& m, CrossingSequence s, const std::vector<double>& x)
{
    for (std::size_t c = 0; c < s.size(); ++c) {
        auto& cr = s.crossings[c];
        cr.fraction = x[c] / m.edge(cr.edge.lo, cr.edge.hi);
    }
    return s;
}

} // namespace detail

// Closed polyline through the crossings of s, measured on the tetrahedron m.
inline GeodesicPath evaluate_path(const Metric& m, const CrossingSequence& s)
{
    const std::size_t n = s.size();
    const Space k = m.space;
    const auto st = detail::make_strip(m, s);
    const auto x = detail::positions_of(m, s);
    GeodesicPath path;
    path.type = s.type;
    path.space = k;
    path.crossings = s.crossings;
    path.margin = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
        const double f = s.crossings[c].fraction;
        path.margin = std::min(path.margin, std::min(f, 1.0 - f));
        path.incidence.push_back(detail::incidence(k, st.faces[c], x[c], x[c + 1]).in);
    }
    for (std::size_t c = 1; c <= n; ++c)
        path.max_residual = std::max(path.max_residual, std::abs(detail::straightness(st, x, c)));
    path.closed = path.max_residual < straightness_tolerance;

    for (std::size_t f = 0; f < n; ++f) {
        const auto labels = s.face(f);
        const auto chart = face_chart(m, labels);
        PathSegment sg;
        sg.face = f;
        sg.labels = labels;
        const auto place = [&](std::size_t c) {
            const EdgeLabel& e = s.edge(c);
            return point_along(k, detail::chart_vertex(labels, chart, e.lo), detail::chart_vertex(labels, chart, e.hi),
                               s.crossings[c % n].fraction);
        };
        sg.a = place(f);
        sg.b = place(f + 1);
        sg.length = detail::segment_length(k, st.faces[f], x[f], x[f + 1]);
        path.total_length += sg.length;
        path.segments.push_back(sg);
    }
    path.clearance = detail::segments_clearance(m, path.segments);
    path.simple = detail::segments_simple(k, path.segments);
    return path;
}

inline bool simplicity_check(const GeodesicPath& path)
{
    return detail::segments_simple(path.space, path.segments);
}

inline double vertex_clearance(const GeodesicPath& path, const TetrahedronSpec& spec)
{
    return detail::segments_clearance(metric_of(spec), path.segments);
}

inline double vertex_clearance(const GeodesicPath& path, const GenericTetraSpec& spec)
{
    return detail::segments_clearance(metric_of(spec), path.segments);
}

// Offsets of the tiling segment start for which it avoids every tiling vertex and crosses the
// same edges as at 1/2.
inline std::pair<Rational, Rational> euclid_mu_interval_exact(const GeodesicType& t)
{
    const GeodesicType ty = make_type(t.p, t.q);
    const std::int64_t q = lattice_direction(ty)[1];
    return {Rational(q - 1, 2 * q), Rational(q + 1, 2 * q)};
}

inline std::pair<double, double> euclid_mu_interval(const GeodesicType& t)
{
    const auto [lo, hi] = euclid_mu_interval_exact(t);
    return {boost::rational_cast<double>(lo), boost::rational_cast<double>(hi)};
}

// Closed geodesic on the unit Euclidean tetrahedron traced by the tiling segment starting at (mu, 0).
inline GeodesicPath euclid_geodesic(const GeodesicType& t, double mu = 0.5)
{
    const auto [lo, hi] = euclid_mu_interval(t);
    if (!(mu > lo && mu < hi)) throw Error(Errc::vertex_hit, "offset outside the vertex-free interval", mu);
    const auto trace = tiling_trace(t);
    const auto [P, Q] = lattice_direction(t);
    CrossingSequence s = crossing_sequence(t);
    for (std::size_t c = 0; c < s.size(); ++c) {
        const auto& tc = trace[c];
        const double di = static_cast<double>(tc.hi.i - tc.lo.i), dj = static_cast<double>(tc.hi.j - tc.lo.j);
        const double f = (mu * Q + P * static_cast<double>(tc.lo.j) - Q * static_cast<double>(tc.lo.i)) / (Q * di - P * dj);
        if (!(f > 0.0 && f < 1.0)) throw Error(Errc::vertex_hit, "tiling segment leaves an edge", f);
        s.crossings[c].fraction = f;
    }
    return evaluate_path(metric_of(TetrahedronSpec{}), s);
}

namespace detail {

// Signed position along the geodesic line A->B (from A) of its intersection with the line X->Y.
inline double line_crossing(Space k, const Point2& x, const Point2& y, const Point2& a, const Point2& b)
{
    if (k == Space::spherical) {
        const Point2 n1 = vec::cross(x, y);
        const Point2 n2 = vec::normalize(vec::cross(a, b));
        Point2 p = vec::normalize(vec::cross(n1, n2));
        if (vec::dot(p, vec::add(x, y)) < 0) p = vec::scale(p, -1.0);
        return std::atan2(vec::dot(vec::cross(a, p), n2), vec::dot(a, p));
    }
    const double ux = b.x - a.x, uy = b.y - a.y, vx = y.x - x.x, vy = y.y - x.y;
    const double f = ((x.x - a.x) * vy - (x.y - a.y) * vx) / (ux * vy - uy * vx);
    return f * std::hypot(ux, uy);
}

// Positions of the chart geodesics joining consecutive symmetry points of a development.
struct ChordPositions {
    std::vector<double> x;
    double length = 0.0;
    double junction_residual = 0.0;
};

inline ChordPositions chord_positions(const Development& d, const CrossingSequence& s, const Metric& m)
{
    const std::size_t n = s.size();
    const auto idx = symmetry_indices(s);
    ChordPositions out;
    out.x.assign(n + 1, 0.0);
    for (int q = 0; q < 4; ++q) {
        const Point2& from = d.symmetry_points[q];
        const Point2& to = d.symmetry_points[q + 1];
        out.length += dist(d.space, from, to);
        out.x[idx[q]] = 0.5 * m.edge(s.edge(idx[q]).lo, s.edge(idx[q]).hi);
        for (std::size_t c = idx[q] + 1; c < idx[q + 1]; ++c) out.x[c] = line_crossing(d.space, from, to, d.edges[c][0], d.edges[c][1]);
        if (q > 0) {
            const double turn_here = turn(d.space, from, d.symmetry_points[q - 1], to);
            out.junction_residual = std::max(out.junction_residual, pi - std::abs(turn_here));
        }
    }
    out.x[n] = out.x[0];
    return out;
}

inline NotContained witness_for(const GeodesicPath& path, const Metric& m)
{
    NotContained w;
    w.length = path.total_length;
    w.margin = path.margin;
    w.crossings = path.crossings;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < path.crossings.size(); ++c) {
        const auto& cr = path.crossings[c];
        const double len = m.edge(cr.edge.lo, cr.edge.hi);
        const bool near_lo = cr.fraction < 0.5;
        const double r = near_lo ? cr.fraction * len : (1.0 - cr.fraction) * len;
        const double h = trig::asn(m.space, trig::sn(m.space, r) * std::sin(path.incidence[c]));
        if (h < worst) {
            worst = h;
            w.face = c;
            w.vertex = near_lo ? cr.edge.lo : cr.edge.hi;
            w.signed_distance = h;
        }
    }
    return w;
}

} // namespace detail

// The curve through the midpoints X1, Y1, X2, Y2 of the start, quarter, half and three-quarter
// edges, straight in between. Returned as a path when it stays inside the development.
inline MidpointResult midpoint_geodesic(const TetrahedronSpec& spec, const GeodesicType& t)
{
    const Metric m = metric_of(spec);
    const CrossingSequence s = crossing_sequence(t);
    const auto st = detail::make_strip(m, s);
    std::vector<double> x;
    double junction = 0.0;
    if (spec.space == Space::hyperbolic) {
        const auto sol = detail::midpoint_positions(st, s);
        if (!sol.converged) throw Error(Errc::numerical_failure, "midpoint curve did not converge");
        x = sol.x;
        for (std::size_t i : symmetry_indices(s))
            if (i > 0) junction = std::max(junction, std::abs(detail::straightness(st, x, i)));
    } else {
        const Development d = detail::develop_by_reflection(m, s);
        const auto chord = detail::chord_positions(d, s, m);
        x = chord.x;
        junction = chord.junction_residual;
    }
    if (!(junction < straightness_tolerance))
        throw Error(Errc::numerical_failure, "curve is not straight at a symmetry point", junction);

    const GeodesicPath path = evaluate_path(m, detail::with_positions(m, s, x));
    const bool too_long = spec.space == Space::spherical && path.total_length >= 2 * pi;
    if (path.margin > containment_margin && !too_long) return path;
    NotContained w = detail::witness_for(path, m);
    if (too_long && path.margin > containment_margin) w.reason = Errc::too_long;
    return w;
}

struct GenericGeodesic {
    GeodesicPath path;
    double s0 = 0.0;       // position of the first crossing on edge 12
    int sign_changes = 0;  // zeros of the angle defect seen on the scan grid
};

// Closed geodesic on a hyperbolic tetrahedron with all planar angles at most pi/4.
inline GenericGeodesic generic_hyperbolic_geodesic(const GenericTetraSpec& spec, const GeodesicType& t)
{
    if (!spec.all_angles_le_quarter_pi) throw Error(Errc::precondition_failed, "a planar angle exceeds pi/4");
    const Metric m = metric_of(spec);
    const CrossingSequence s = crossing_sequence(t);
    const auto st = detail::make_strip(m, s);
    const auto root = detail::closing_positions(st, s);
    if (!root.found) throw Error(Errc::numerical_failure, "angle defect has no sign change");
    GenericGeodesic out;
    out.path = evaluate_path(m, detail::with_positions(m, s, root.x));
    out.s0 = root.s0;
    out.sign_changes = root.sign_changes;
    if (!out.path.closed) throw Error(Errc::numerical_failure, "curve does not close", out.path.max_residual);
    return out;
}

} // namespace tetrageo
