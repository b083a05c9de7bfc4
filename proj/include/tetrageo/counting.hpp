#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <variant>
#include <vector>

#include "combinatorics.hpp"
#include "existence.hpp"
#include "geodesics.hpp"
#include "tetra.hpp"

namespace tetrageo {

inline std::int64_t euler_phi(std::int64_t n)
{
    if (n < 1) throw Error(Errc::precondition_failed, "totient needs n >= 1", static_cast<double>(n));
    std::int64_t r = n;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f) continue;
        while (n % f == 0) n /= f;
        r -= r / f;
    }
    if (n > 1) r -= r / n;
    return r;
}

// sum of phi(y) for 1 <= y <= x
inline std::int64_t totient_sum(std::int64_t x)
{
    if (x < 1) return 0;
    std::vector<std::int64_t> phi(static_cast<std::size_t>(x) + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (std::int64_t i = 2; i <= x; ++i)
        if (phi[i] == i)
            for (std::int64_t j = i; j <= x; j += i) phi[j] -= phi[j] / i;
    return std::accumulate(phi.begin() + 1, phi.end(), std::int64_t{0});
}

// number of coprime pairs 1 <= p < q with p + q <= x, by enumeration
inline std::int64_t psi_brute(std::int64_t x)
{
    std::int64_t c = 0;
    for (std::int64_t q = 2; q < x; ++q)
        for (std::int64_t p = 1; p < q && p + q <= x; ++p)
            if (std::gcd(p, q) == 1) ++c;
    return c;
}

// the same count as half the totient sum: sums y = p + q >= 3 contribute phi(y)/2 pairs,
// y = 1 and y = 2 contribute none
inline std::int64_t psi(std::int64_t x)
{
    if (x < 3) return 0;
    const std::int64_t small = euler_phi(1) + euler_phi(2);
    return (totient_sum(x) - small) / 2;
}

struct TypeLength {
    int p = 0;
    int q = 0;
    double length = 0.0;
    double clearance = 0.0;

    friend bool operator==(const TypeLength&, const TypeLength&) = default;
};

struct CountReport {
    double L = 0.0;
    double alpha = 0.0;
    std::int64_t exact = 0;  // geodesics of length at most L, three per type
    std::int64_t bound = 0;  // three per type admitted by the length lower bound
    double c_derived = 0.0;
    double c_printed = 0.0;
    double asymptotic = 0.0;  // c_derived * L^2
    std::vector<TypeLength> table;

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

inline double asymptotic_constant(double alpha)
{
    require_hyperbolic_angle(alpha);
    const double l = std::log(2 * std::sqrt(3.0) * (1 - 3 * alpha / pi) + 1);
    return 9.0 / (8.0 * pi * pi * l * l);
}

// the constant with the logarithm to the first power
inline double asymptotic_constant_printed(double alpha)
{
    require_hyperbolic_angle(alpha);
    const double l = std::log(2 * std::sqrt(3.0) * (1 - 3 * alpha / pi) + 1);
    return 9.0 / (8.0 * pi * pi * l);
}

// types (0,1), (1,1) and coprime 1 <= p < q whose length lower bound is at most L, sorted
inline std::vector<GeodesicType> admissible_types(double L, double alpha)
{
    std::vector<GeodesicType> out;
    const GeodesicType unit{0, 1};
    const double per_crossing = hyperbolic_length_lower_bound(alpha, unit);
    const int max_sum = static_cast<int>(std::floor(L / per_crossing));
    for (int p = 0; p <= max_sum; ++p)
        for (int q = std::max(p, 1); p + q <= max_sum; ++q)
            if (is_valid_type(p, q) && hyperbolic_length_lower_bound(alpha, {p, q}) <= L) out.push_back({p, q});
    return out;
}

inline CountReport count_exact(double L, double alpha)
{
    require_hyperbolic_angle(alpha);
    if (!(L > 0)) throw Error(Errc::precondition_failed, "length budget must be positive", L);
    CountReport r;
    r.L = L;
    r.alpha = alpha;
    r.c_derived = asymptotic_constant(alpha);
    r.c_printed = asymptotic_constant_printed(alpha);
    r.asymptotic = r.c_derived * L * L;
    const TetrahedronSpec spec = regular_tetrahedron(Space::hyperbolic, alpha);
    for (const auto& t : admissible_types(L, alpha)) {
        r.bound += 3;
        const MidpointResult m = midpoint_geodesic(spec, t);
        const auto* path = std::get_if<GeodesicPath>(&m);
        if (!path) throw Error(Errc::numerical_failure, "hyperbolic midpoint curve not contained", static_cast<double>(t.p + t.q));
        if (path->total_length <= L) {
            r.exact += 3;
            r.table.push_back({t.p, t.q, path->total_length, path->clearance});
        }
    }
    return r;
}

} // namespace tetrageo
