#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "combinatorics.hpp"
#include "geodesics.hpp"
#include "strip.hpp"
#include "tetra.hpp"

namespace tetrageo {

namespace detail {

inline double type_norm(const GeodesicType& t)
{
    return static_cast<double>(t.p) * t.p + static_cast<double>(t.p) * t.q + static_cast<double>(t.q) * t.q;
}

} // namespace detail

// Spherical angle above which no simple closed geodesic of type t exists.
inline double necessary_alpha_bound(const GeodesicType& t)
{
    const GeodesicType ty = make_type(t.p, t.q);
    const double s = detail::type_norm(ty);
    const double den = 4.0 * s - pi * pi;
    if (!(den > 0)) throw Error(Errc::bound_vacuous, "4(p^2+pq+q^2) <= pi^2", den);
    const double ratio = s / den;
    if (!(ratio < 1.0)) throw Error(Errc::bound_vacuous, "bound exceeds the angle range", ratio);
    return 2.0 * std::asin(std::sqrt(ratio));
}

// Ingredients of the sufficient bound on alpha - pi/3, evaluated term by term.
struct EpsilonComponents {
    int upper_index = 0;          // last summation index
    double tan_sum = 0.0;         // sum of tan^2(pi i / 2n)
    double numerator = 0.0;
    double denominator = 0.0;
    double c0 = 0.0;
    double length_sum = 0.0;      // sum over i of (c_l(i) + sum_{j <= i} c_alpha(j))
    double contained_term = 0.0;  // first candidate; infinite sums make it zero
    double cap_term = 0.0;        // second candidate, keeps the chord in a hemisphere
    bool degenerate = false;
    double epsilon = 0.0;         // min of the two candidates when not degenerate
};

inline double length_coefficient(const GeodesicType& t, int i)
{
    const double n = t.p + t.q;
    const double d = (n - i - 1) * (n - i - 1);
    if (d == 0.0) return std::numeric_limits<double>::infinity();
    return std::cos(pi / 12) * n * n * (4.0 + pi * pi * (2 * i + 1) * (2 * i + 1)) / d;
}

inline double angle_coefficient(const GeodesicType& t, int j)
{
    const double n = t.p + t.q;
    const double tn = std::tan(pi * j / (2.0 * n));
    return 4.0 * (8.0 * pi * n * n * std::cos(pi / 12) * tn * tn + 1.0);
}

// extra = 2 is the printed summation range floor(n/2) + 2; extra = 1 is the variant via s = floor(n/2) + 1
inline EpsilonComponents epsilon_bound_components(const GeodesicType& t, int extra = 2)
{
    const GeodesicType ty = make_type(t.p, t.q);
    const int n = ty.p + ty.q;
    const double cpi = std::cos(pi / 12);
    EpsilonComponents c;
    c.upper_index = n / 2 + extra;
    for (int i = 0; i <= c.upper_index; ++i) {
        const double tn = std::tan(pi * i / (2.0 * n));
        c.tan_sum += tn * tn;
    }
    const double nn = static_cast<double>(n) * n;
    c.numerator = 3.0 - (n + 2) / (pi * cpi * nn) - 16.0 * c.tan_sum;
    c.denominator = 1.0 - (n + 2) / (2.0 * pi * cpi * nn) - 8.0 * c.tan_sum;
    c.c0 = c.numerator / c.denominator;
    for (int i = 0; i <= c.upper_index; ++i) {
        double inner = length_coefficient(ty, i);
        for (int j = 0; j <= i; ++j) inner += angle_coefficient(ty, j);
        c.length_sum += inner;
    }
    c.contained_term = std::isfinite(c.length_sum) ? std::sqrt(3.0) / (4.0 * c.c0 * std::sqrt(detail::type_norm(ty)) * c.length_sum) : 0.0;
    c.cap_term = 1.0 / (8.0 * cpi * nn);
    c.degenerate = !(c.denominator > 0) || !(c.numerator > 0) || !std::isfinite(c.length_sum) || !(c.tan_sum < 1e300);
    c.epsilon = c.degenerate ? std::numeric_limits<double>::quiet_NaN() : std::min(c.contained_term, c.cap_term);
    return c;
}

// Width of the angle interval above pi/3 on which a geodesic of type t is guaranteed.
inline double sufficient_epsilon_bound(const GeodesicType& t)
{
    const auto c = epsilon_bound_components(t);
    if (!(c.denominator > 0)) throw Error(Errc::bound_degenerate, "c0 denominator is not positive", c.denominator);
    if (c.degenerate) throw Error(Errc::bound_degenerate, "a constant of the bound is not finite and positive", c.length_sum);
    return c.epsilon;
}

enum class Outcome { exists, not_exists, undetermined };

inline const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::exists: return "Exists";
    case Outcome::not_exists: return "NotExists";
    default: return "Undetermined";
    }
}

struct ExistenceVerdict {
    Outcome outcome = Outcome::undetermined;
    std::optional<GeodesicPath> path;
    std::optional<NotContained> witness;
    std::string reason;
    std::optional<double> alpha1;  // pi/3 + sufficient epsilon
    std::optional<double> alpha2;  // necessary bound
    std::optional<double> beta;    // numerical threshold
};

namespace detail {

inline std::optional<double> try_alpha1(const GeodesicType& t)
{
    try {
        return pi / 3 + sufficient_epsilon_bound(t);
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline std::optional<double> try_alpha2(const GeodesicType& t)
{
    try {
        return necessary_alpha_bound(t);
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace detail

// Existence on a spherical regular tetrahedron, decided by containment of the midpoint curve.
inline ExistenceVerdict exists_geodesic(const TetrahedronSpec& spec, const GeodesicType& t)
{
    if (spec.space != Space::spherical) throw Error(Errc::precondition_failed, "existence query needs a spherical tetrahedron");
    ExistenceVerdict v;
    v.alpha1 = detail::try_alpha1(t);
    v.alpha2 = detail::try_alpha2(t);
    MidpointResult r;
    try {
        r = midpoint_geodesic(spec, t);
    } catch (const Error& e) {
        if (e.code() != Errc::numerical_failure) throw;
        v.reason = e.what();
        return v;
    }
    if (auto* path = std::get_if<GeodesicPath>(&r)) {
        if (path->closed && path->simple && path->margin >= containment_margin && path->total_length < 2 * pi) {
            v.outcome = Outcome::exists;
            v.reason = "midpoint curve contained in the development";
            v.path = *path;
        } else {
            v.reason = "midpoint curve fails closure or simplicity";
        }
        return v;
    }
    const NotContained& w = std::get<NotContained>(r);
    v.witness = w;
    if (w.reason == Errc::too_long) {
        v.outcome = Outcome::not_exists;
        v.reason = "midpoint curve is not shorter than 2 pi";
    } else if (w.margin <= -containment_margin) {
        v.outcome = Outcome::not_exists;
        v.reason = "midpoint curve leaves the development";
    } else if (v.alpha2 && spec.alpha > *v.alpha2) {
        v.outcome = Outcome::not_exists;
        v.reason = "angle above the necessary bound";
    } else {
        v.reason = "midpoint curve within tolerance of a vertex";
    }
    return v;
}

struct ThresholdBracket {
    double lo = 0.0;  // geodesic exists
    double hi = 0.0;  // no geodesic
    double beta = 0.0;
};

// Bisection for the angle at which geodesics of type t stop existing on spherical tetrahedra.
inline ThresholdBracket threshold_bracket(const GeodesicType& t, double tol)
{
    if (!(tol > 0)) throw Error(Errc::precondition_failed, "tolerance must be positive", tol);
    const auto present = [&](double a) {
        return exists_geodesic(regular_tetrahedron(Space::spherical, a), t).outcome == Outcome::exists;
    };
    ThresholdBracket b{pi / 3 + 1e-9, 2 * pi / 3 - 1e-9, 0.0};
    const bool at_lo = present(b.lo), at_hi = present(b.hi);
    if (at_lo == at_hi) throw Error(Errc::no_threshold, "existence does not change over the angle range");
    if (!at_lo) throw Error(Errc::no_threshold, "existence is not lost as the angle grows");
    while (b.hi - b.lo > tol) {
        const double mid = 0.5 * (b.lo + b.hi);
        (present(mid) ? b.lo : b.hi) = mid;
    }
    b.beta = 0.5 * (b.lo + b.hi);
    return b;
}

inline double threshold_beta(const GeodesicType& t, double tol) { return threshold_bracket(t, tol).beta; }

// Shortest curve through the symmetry points inside the development: the midpoint curve when it
// is contained, otherwise the taut polyline pulled against the vertices.
inline double abstract_shortest_curve_length(const TetrahedronSpec& spec, const GeodesicType& t, int max_sweeps = 200000)
{
    if (spec.space != Space::spherical) throw Error(Errc::precondition_failed, "abstract shortest curve needs a spherical tetrahedron");
    const MidpointResult r = midpoint_geodesic(spec, t);
    if (const auto* path = std::get_if<GeodesicPath>(&r)) return path->total_length;
    const Metric m = metric_of(spec);
    const CrossingSequence s = crossing_sequence(t);
    const auto st = detail::make_strip(m, s);
    const auto taut = detail::taut_positions(st, s, max_sweeps);
    if (!taut.converged) throw Error(Errc::numerical_failure, "shortening did not converge", taut.length);
    return taut.length;
}

// Spherical edge length below which a geodesic of type t is guaranteed.
inline double edge_sufficient_bound(const GeodesicType& t)
{
    const double s = detail::type_norm(make_type(t.p, t.q));
    return 2.0 * std::asin(pi / (std::sqrt(s) + std::sqrt(s + 2 * pi * pi)));
}

inline void require_hyperbolic_angle(double alpha)
{
    if (!(alpha > 0 && alpha < pi / 3)) throw Error(Errc::invalid_angle, "hyperbolic angle outside (0, pi/3)", alpha);
}

// Lower bound on the distance from the vertices to a simple closed geodesic, hyperbolic case.
inline double hyperbolic_clearance_bound(double alpha)
{
    require_hyperbolic_angle(alpha);
    const double r = std::sqrt(2 * pi * pi * pi);
    const double d = std::pow(pi - 3 * alpha, 1.5);
    return 0.5 * std::log((r + d) / (r - d));
}

// Lower bound on the length of a simple closed geodesic of type t, hyperbolic case.
inline double hyperbolic_length_lower_bound(double alpha, const GeodesicType& t)
{
    require_hyperbolic_angle(alpha);
    const GeodesicType ty = make_type(t.p, t.q);
    return 2.0 * (ty.p + ty.q) * std::log(2 * std::sqrt(3.0) * (1 - 3 * alpha / pi) + 1);
}

} // namespace tetrageo
