#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <tetrageo/tetrageo.hpp>

using namespace tetrageo;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::vector<GeodesicType> coprime_types(int lo_sum, int hi_sum)
{
    std::vector<GeodesicType> out;
    for (int n = lo_sum; n <= hi_sum; ++n)
        for (int p = 0; 2 * p <= n; ++p)
            if (std::gcd(p, n - p) == 1) out.push_back({p, n - p});
    return out;
}

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// worst deviation from 1/2 of the crossings at the symmetry points, collected over every
// curved-space geodesic built by the other criteria
struct MidpointLaw {
    double worst = 0.0;
    int paths = 0;
    void add(const GeodesicPath& path)
    {
        for (std::size_t i : symmetry_indices(crossing_sequence(path.type)))
            worst = std::max(worst, std::abs(path.crossings[i % path.crossings.size()].fraction - 0.5));
        ++paths;
    }
};

MidpointLaw midpoint_law;

Verdict euclidean_length_law()
{
    Verdict v;
    double worst = 0;
    int n = 0;
    for (const auto& t : coprime_types(1, 30)) {
        const auto path = euclid_geodesic(t, 0.5);
        worst = std::max(worst, std::abs(path.total_length - 2 * std::sqrt(static_cast<double>(t.norm()))));
        bool mid = true;
        for (std::size_t i : symmetry_indices(crossing_sequence(t)))
            mid = mid && std::abs(path.crossings[i % path.crossings.size()].fraction - 0.5) < 1e-12;
        v.pass = v.pass && path.closed && path.simple && mid;
        ++n;
    }
    v.pass = v.pass && worst < 1e-10;
    v.detail = fmt("%d types, max length error %.3g", n, worst);
    return v;
}

Verdict euclidean_clearance()
{
    Verdict v;
    double slack = 1e300;
    for (const auto& t : coprime_types(1, 30)) {
        const auto path = euclid_geodesic(t, 0.5);
        slack = std::min(slack, path.clearance - std::sqrt(3.0) / (4 * std::sqrt(static_cast<double>(t.norm()))));
    }
    v.pass = slack >= -1e-12;
    v.detail = fmt("min slack %.3g", slack);
    return v;
}

Verdict spherical_base_cases()
{
    Verdict v;
    const double lo = pi / 3 + 1e-3, hi = 2 * pi / 3 - 1e-3;
    int zero_one = 0, below = 0, below_ok = 0, above = 0, above_ok = 0;
    double longest = 0;
    for (int i = 0; i < 50; ++i) {
        const double a = lo + (hi - lo) * i / 49.0;
        const auto spec = regular_tetrahedron(Space::spherical, a);
        for (const GeodesicType t : {GeodesicType{0, 1}, GeodesicType{1, 1}}) {
            const auto r = exists_geodesic(spec, t);
            if (r.path) {
                longest = std::max(longest, r.path->total_length);
                midpoint_law.add(*r.path);
            }
            const bool ok = r.outcome == Outcome::exists;
            if (t.p == 0) {
                zero_one += ok;
            } else if (a < pi / 2) {
                ++below;
                below_ok += ok;
            } else {
                ++above;
                above_ok += r.outcome == Outcome::not_exists;
            }
        }
    }
    v.pass = zero_one == 50 && below_ok == below && above_ok == above && longest < 2 * pi - 1e-6;
    v.detail = fmt("(0,1) %d/50, (1,1) below %d/%d, above fails %d/%d, longest 2pi-%.3g", zero_one, below_ok, below,
                   above_ok, above, 2 * pi - longest);
    return v;
}

Verdict spherical_sandwich()
{
    Verdict v;
    int upper = 0, lower = 0, types = 0;
    std::ostringstream fails;
    for (const auto& t : coprime_types(2, 8)) {
        ++types;
        const double beta = threshold_beta(t, 1e-6);
        const auto below = midpoint_geodesic(regular_tetrahedron(Space::spherical, beta - 1e-5), t);
        if (const auto* path = std::get_if<GeodesicPath>(&below)) midpoint_law.add(*path);
        if (const auto a2 = detail::try_alpha2(t)) {
            ++upper;
            if (!(beta <= *a2)) {
                v.pass = false;
                fails << " beta(" << t.p << "," << t.q << ")>alpha2";
            }
        }
        if (const auto a1 = detail::try_alpha1(t)) {
            ++lower;
            if (!(*a1 <= beta)) {
                v.pass = false;
                fails << " alpha1(" << t.p << "," << t.q << ")>beta";
            }
        }
    }
    v.detail = fmt("%d types, upper bound defined for %d, lower bound defined for %d (epsilon* degenerate elsewhere)", types,
                   upper, lower) + fails.str();
    return v;
}

Verdict threshold_behavior()
{
    Verdict v;
    const double beta = threshold_beta({1, 1}, 1e-9);
    double worst = 0;
    for (double d : {-1e-4, 1e-4}) {
        const double l = abstract_shortest_curve_length(regular_tetrahedron(Space::spherical, beta + d), {1, 1});
        worst = std::max(worst, std::abs(l - 2 * pi));
    }
    v.pass = worst < 5e-3;
    v.detail = fmt("beta(1,1) = %.9f, max |L - 2pi| = %.3g", beta, worst);
    return v;
}

Verdict hyperbolic_universality()
{
    Verdict v;
    int n = 0, failures = 0;
    double clearance_slack = 1e300, length_slack = 1e300;
    const auto types = coprime_types(1, 20);
    for (int k = 0; k < 10; ++k) {
        const double a = 0.05 + 0.1 * k;
        const auto spec = regular_tetrahedron(Space::hyperbolic, a);
        for (const auto& t : types) {
            ++n;
            try {
                const auto r = midpoint_geodesic(spec, t);
                const auto* path = std::get_if<GeodesicPath>(&r);
                if (!path || !path->closed || !path->simple) {
                    ++failures;
                    continue;
                }
                midpoint_law.add(*path);
                clearance_slack = std::min(clearance_slack, path->clearance - hyperbolic_clearance_bound(a));
                length_slack = std::min(length_slack, path->total_length - hyperbolic_length_lower_bound(a, t));
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    v.pass = failures == 0 && clearance_slack > 0 && length_slack > 0;
    v.detail = fmt("%d cases, %d failures, min clearance slack %.3g, min length slack %.3g", n, failures, clearance_slack,
                   length_slack);
    return v;
}

Verdict generic_hyperbolic()
{
    Verdict v;
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(1.6, 3.2);
    int built = 0, closed = 0, tried = 0;
    while (built < 50) {
        std::array<double, 6> e{};
        for (auto& x : e) x = u(rng);
        ++tried;
        GenericTetraSpec g;
        try {
            g = generic_from_edges(e);
        } catch (const Error&) {
            continue;
        }
        if (!g.all_angles_le_quarter_pi) continue;
        ++built;
        bool ok = true;
        for (const GeodesicType t : {GeodesicType{0, 1}, GeodesicType{1, 1}, GeodesicType{1, 2}}) {
            try {
                const auto gen = generic_hyperbolic_geodesic(g, t);
                ok = ok && gen.path.closed && gen.path.simple;
            } catch (const Error&) {
                ok = false;
            }
        }
        closed += ok;
    }
    double reproduce = 0;
    for (double a : {pi / 4, 0.5, 0.2}) {
        const auto spec = regular_tetrahedron(Space::hyperbolic, a);
        const auto g = generic_from_edges({spec.edge, spec.edge, spec.edge, spec.edge, spec.edge, spec.edge});
        for (const GeodesicType t : {GeodesicType{0, 1}, GeodesicType{1, 1}, GeodesicType{1, 2}}) {
            const auto gen = generic_hyperbolic_geodesic(g, t);
            const auto reg = std::get<GeodesicPath>(midpoint_geodesic(spec, t));
            for (std::size_t c = 0; c < reg.crossings.size(); ++c)
                reproduce = std::max(reproduce, std::abs(gen.path.crossings[c].fraction - reg.crossings[c].fraction));
        }
    }
    v.pass = closed == 50 && reproduce < 1e-8;
    v.detail = fmt("%d/50 tetrahedra closed for all three types (%d samples drawn), regular deviation %.3g", closed, tried,
                   reproduce);
    return v;
}

Verdict counting()
{
    Verdict v;
    // brute-force pair counts accumulated by sum, for every x up to 10^4
    const std::int64_t X = 10000;
    std::vector<std::int64_t> by_sum(X + 1, 0);
    for (std::int64_t q = 2; q < X; ++q)
        for (std::int64_t p = 1; p < q && p + q <= X; ++p)
            if (std::gcd(p, q) == 1) ++by_sum[p + q];
    std::int64_t running = 0, mismatches = 0;
    for (std::int64_t x = 1; x <= X; ++x) {
        running += by_sum[x];
        if (running != psi(x)) ++mismatches;
    }
    for (std::int64_t x : {17, 500, 2500, 10000})
        if (psi_brute(x) != psi(x)) ++mismatches;
    const double density = static_cast<double>(totient_sum(X)) / 1e8;
    const double density_err = std::abs(density / (3 / (pi * pi)) - 1);
    std::array<double, 3> ratio{};
    bool mult3 = true;
    const std::array<double, 3> ladder{20, 40, 80};
    for (int i = 0; i < 3; ++i) {
        const auto r = count_exact(ladder[i], 0.5);
        mult3 = mult3 && r.exact % 3 == 0;
        ratio[i] = static_cast<double>(r.exact) / (ladder[i] * ladder[i]);
    }
    const double trend = std::abs(ratio[2] - ratio[1]) / ratio[1];
    v.pass = mismatches == 0 && density_err < 0.01 && mult3 && trend < 0.25;
    v.detail = fmt("psi mismatches %lld, density error %.3g%%, count/L^2 = %.5f %.5f %.5f, last change %.3g%%",
                   static_cast<long long>(mismatches), 100 * density_err, ratio[0], ratio[1], ratio[2], 100 * trend);
    return v;
}

Verdict projection_lemmas()
{
    Verdict v;
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto eps = [&] { return 1e-6 + u(rng) * (pi / 6 - 2e-6); };
    int edge_bad = 0, angle_bad = 0, length_bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const double e = eps();
        if (!(edge_from_angle(Space::spherical, pi / 3 + e) < projection::edge_bound(e))) ++edge_bad;
    }
    for (int i = 0; i < 1000; ++i) {
        const double e = eps(), alpha = pi / 3 + e;
        const double phi = 1e-3 + u(rng) * (pi / 2 - 2e-3);
        const double t1 = -pi / 2 + u(rng) * (pi - alpha);
        if (!(std::abs(projection::projected_angle(phi, t1, alpha) - pi / 3) < projection::angle_bound(phi, e))) ++angle_bad;
    }
    for (int i = 0; i < 1000;) {
        const double e = eps();
        const double a = edge_from_angle(Space::spherical, pi / 3 + e);
        const double r_max = projection::max_distance(a);
        if (!(r_max > 0)) continue;
        const double r = u(rng) * r_max;
        if (!(projection::projected_unit_arc(a, r, 2 * pi * u(rng)) - 1 < projection::length_bound(a, r, e))) ++length_bad;
        ++i;
    }
    v.pass = edge_bad + angle_bad + length_bad == 0;
    v.detail = fmt("violations: edge %d/1000, angle %d/1000, length %d/1000", edge_bad, angle_bad, length_bad);
    return v;
}

std::string capture(const std::string& cmd, int& code)
{
    std::string out;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) {
        code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    code = pclose(f);
    return out;
}

Verdict determinism()
{
    Verdict v;
    int c1 = 0, c2 = 0;
    const std::string cmd = std::string(TETRAGEO_CLI) + " verify --jobs 4";
    const std::string a = capture(cmd, c1), b = capture(cmd, c2);
    v.pass = c1 == 0 && c2 == 0 && !a.empty() && a == b;
    v.detail = fmt("%zu and %zu bytes, exit %d/%d, identical %s", a.size(), b.size(), c1, c2, a == b ? "yes" : "no");
    return v;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
        double seconds = 1e9;  // runtime budget
    };
    const std::vector<Criterion> criteria{
        {"euclidean length law", euclidean_length_law, 10},
        {"euclidean clearance", euclidean_clearance},
        {"spherical base cases", spherical_base_cases},
        {"spherical sandwich", spherical_sandwich, 300},
        {"threshold behavior", threshold_behavior},
        {"midpoint law",
         [] {
             Verdict v;
             v.pass = midpoint_law.paths > 0 && midpoint_law.worst <= 1e-8;
             v.detail = fmt("%d curved-space geodesics, max |fraction - 1/2| = %.3g", midpoint_law.paths, midpoint_law.worst);
             return v;
         }},
        {"hyperbolic universality", hyperbolic_universality, 120},
        {"generic hyperbolic", generic_hyperbolic},
        {"counting", counting},
        {"projection lemmas", projection_lemmas},
        {"determinism", determinism},
    };
    // the midpoint law is judged on the paths built by the other criteria, so it runs after them
    const std::vector<std::size_t> order{0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 5};
    std::vector<std::string> lines(criteria.size());
    bool all = true;
    for (std::size_t i : order) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > criteria[i].seconds) {
            v.pass = false;
            v.detail += fmt(", over the %.0fs budget", criteria[i].seconds);
        }
        lines[i] = fmt("%s %2zu %s: ", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].name) + v.detail + fmt(" [%.2fs]", secs);
        all = all && v.pass;
    }
    for (const auto& l : lines) std::cout << l << "\n";
    return all ? 0 : 1;
}
