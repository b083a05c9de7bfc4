#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include <tetrageo/tetrageo.hpp>

namespace tetrageo::cli {

struct CheckResult {
    std::string name;
    bool passed = true;
    int cases = 0;
    double worst = 0.0;  // largest residual or smallest slack, depending on the check
};

using Check = std::function<CheckResult()>;

inline std::vector<GeodesicType> types_up_to(int max_sum)
{
    std::vector<GeodesicType> out;
    for (int n = 1; n <= max_sum; ++n)
        for (int p = 0; 2 * p <= n; ++p)
            if (is_valid_type(p, n - p)) out.push_back({p, n - p});
    return out;
}

inline std::vector<Check> invariant_checks()
{
    std::vector<Check> checks;

    checks.push_back([] {
        CheckResult r{"euclidean_length_law"};
        for (const auto& t : types_up_to(12)) {
            const auto path = euclid_geodesic(t, 0.5);
            const double err = std::abs(path.total_length - 2 * std::sqrt(t.norm()));
            r.worst = std::max(r.worst, err);
            r.passed = r.passed && err < 1e-10 && path.closed && path.simple;
            ++r.cases;
        }
        return r;
    });

    checks.push_back([] {
        CheckResult r{"euclidean_clearance", true, 0, 1e300};
        for (const auto& t : types_up_to(12)) {
            const auto path = euclid_geodesic(t, 0.5);
            const double slack = path.clearance - std::sqrt(3.0) / (4 * std::sqrt(t.norm()));
            r.worst = std::min(r.worst, slack);
            r.passed = r.passed && slack >= -1e-12;
            ++r.cases;
        }
        return r;
    });

    checks.push_back([] {
        CheckResult r{"spherical_base_cases", true, 0, -2 * pi};
        for (int i = 0; i < 10; ++i) {
            const double a = pi / 3 + (i + 0.5) * (pi / 3) / 10;
            const auto zero_one = exists_geodesic(regular_tetrahedron(Space::spherical, a), {0, 1});
            const auto one_one = exists_geodesic(regular_tetrahedron(Space::spherical, a), {1, 1});
            const bool expect = a < pi / 2;
            r.passed = r.passed && zero_one.outcome == Outcome::exists;
            r.passed = r.passed && (one_one.outcome == Outcome::exists) == expect;
            for (const auto* v : {&zero_one, &one_one})
                if (v->path) r.worst = std::max(r.worst, v->path->total_length - 2 * pi);
            r.cases += 2;
        }
        r.passed = r.passed && r.worst < 0;
        return r;
    });

    checks.push_back([] {
        CheckResult r{"hyperbolic_midpoint_geodesics", true, 0, 1e300};
        for (double a : {0.1, 0.5, 0.9}) {
            const auto spec = regular_tetrahedron(Space::hyperbolic, a);
            for (const auto& t : types_up_to(8)) {
                const auto m = midpoint_geodesic(spec, t);
                const auto* path = std::get_if<GeodesicPath>(&m);
                ++r.cases;
                if (!path) {
                    r.passed = false;
                    continue;
                }
                const auto idx = symmetry_indices(crossing_sequence(t));
                bool mid = true;
                for (std::size_t i : idx) mid = mid && std::abs(path->crossings[i % path->crossings.size()].fraction - 0.5) < 1e-8;
                const double slack = std::min(path->clearance - hyperbolic_clearance_bound(a),
                                              path->total_length - hyperbolic_length_lower_bound(a, t));
                r.worst = std::min(r.worst, slack);
                r.passed = r.passed && mid && path->closed && path->simple && slack > 0;
            }
        }
        return r;
    });

    checks.push_back([] {
        CheckResult r{"generic_reproduces_regular"};
        const auto spec = regular_tetrahedron(Space::hyperbolic, pi / 6);
        GenericTetraSpec g = generic_from_edges({spec.edge, spec.edge, spec.edge, spec.edge, spec.edge, spec.edge});
        for (const GeodesicType& t : {GeodesicType{0, 1}, GeodesicType{1, 1}, GeodesicType{1, 2}}) {
            const auto gen = generic_hyperbolic_geodesic(g, t);
            const auto reg = std::get<GeodesicPath>(midpoint_geodesic(spec, t));
            for (std::size_t c = 0; c < reg.crossings.size(); ++c)
                r.worst = std::max(r.worst, std::abs(gen.path.crossings[c].fraction - reg.crossings[c].fraction));
            ++r.cases;
        }
        r.passed = r.worst < 1e-8;
        return r;
    });

    checks.push_back([] {
        CheckResult r{"psi_identity"};
        for (std::int64_t x = 1; x <= 300; ++x) {
            r.passed = r.passed && psi_brute(x) == psi(x);
            ++r.cases;
        }
        return r;
    });

    checks.push_back([] {
        CheckResult r{"count_multiplicity"};
        for (double L : {10.0, 20.0, 30.0}) {
            const auto c = count_exact(L, 0.5);
            r.passed = r.passed && c.exact % 3 == 0 && c.exact <= c.bound;
            ++r.cases;
        }
        return r;
    });

    checks.push_back([] {
        CheckResult r{"projection_bounds", true, 0, 1e300};
        std::mt19937_64 rng(20240607);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 300; ++i) {
            const double eps = 1e-6 + u(rng) * (pi / 6 - 2e-6);
            const double a = edge_from_angle(Space::spherical, pi / 3 + eps);
            const double phi = 1e-3 + u(rng) * (pi / 2 - 2e-3);
            const double t1 = -pi / 2 + u(rng) * (pi / 2 - eps - pi / 3 + pi / 2);
            const double ang = projection::projected_angle(phi, t1, pi / 3 + eps);
            double slack = std::min(projection::edge_bound(eps) - a, projection::angle_bound(phi, eps) - std::abs(ang - pi / 3));
            const double r_max = projection::max_distance(a);
            if (r_max > 0) {
                const double rr = u(rng) * r_max;
                const double l = projection::projected_unit_arc(a, rr, 2 * pi * u(rng));
                slack = std::min(slack, projection::length_bound(a, rr, eps) - (l - 1));
            }
            r.worst = std::min(r.worst, slack);
            r.passed = r.passed && slack > 0;
            ++r.cases;
        }
        return r;
    });

    checks.push_back([] {
        CheckResult r{"json_round_trip"};
        const auto spec = regular_tetrahedron(Space::hyperbolic, 0.5);
        const auto path = io::report(std::get<GeodesicPath>(midpoint_geodesic(spec, {2, 3})));
        const auto dev = io::report(build_development(spec, crossing_sequence({2, 3})));
        const auto count = count_exact(15, 0.5);
        r.passed = nlohmann::json::parse(io::dump(path)).get<io::PathReport>() == path &&
                   nlohmann::json::parse(io::dump(dev)).get<io::DevelopmentReport>() == dev &&
                   nlohmann::json::parse(io::dump(count)).get<CountReport>() == count;
        r.cases = 3;
        return r;
    });

    return checks;
}

// Runs every check, at most `jobs` at a time; results keep the order of the checks.
inline nlohmann::json run_checks(int jobs)
{
    const auto checks = invariant_checks();
    std::vector<CheckResult> results(checks.size());
    const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
    for (std::size_t start = 0; start < checks.size(); start += width) {
        std::vector<std::future<CheckResult>> batch;
        for (std::size_t i = start; i < std::min(checks.size(), start + width); ++i)
            batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, checks[i]));
        for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
    }
    nlohmann::json out;
    bool all = true;
    for (const auto& r : results) {
        out["checks"].push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"worst", r.worst}});
        all = all && r.passed;
    }
    out["passed"] = all;
    return out;
}

} // namespace tetrageo::cli
