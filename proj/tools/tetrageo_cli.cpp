#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <tetrageo/tetrageo.hpp>

#include "verify.hpp"

namespace {

using nlohmann::json;
using namespace tetrageo;

enum ExitCode { ok = 0, invalid_input = 2, negative = 3, numerical = 4 };

struct RunConfig {
    std::string subcommand;
    std::string space = "euclidean";
    std::optional<double> alpha;
    std::optional<double> edge;
    std::vector<double> edges;
    bool degrees = false;
    int p = 0;
    int q = 1;
    double mu = 0.5;
    double L = 40.0;
    double tol = 1e-6;
    std::string out;
    std::string format = "json";
    int jobs = 1;
};

struct Output {
    std::string text;
    int code = ok;
};

Space parse_space(const std::string& s)
{
    if (s == "euclidean") return Space::euclidean;
    if (s == "spherical") return Space::spherical;
    if (s == "hyperbolic") return Space::hyperbolic;
    throw Error(Errc::invalid_angle, "unknown space '" + s + "'");
}

double angle_of(const RunConfig& c)
{
    if (!c.alpha) throw Error(Errc::invalid_angle, "--alpha is required");
    return c.degrees ? *c.alpha * pi / 180.0 : *c.alpha;
}

TetrahedronSpec regular_spec(const RunConfig& c)
{
    const Space k = parse_space(c.space);
    if (c.alpha && c.edge) throw Error(Errc::invalid_edge, "give either --alpha or --edge");
    if (k == Space::euclidean) return TetrahedronSpec{};
    if (c.edge) return regular_tetrahedron_from_edge(k, *c.edge);
    return regular_tetrahedron(k, angle_of(c));
}

json witness_json(const NotContained& w)
{
    return {{"outcome", "NotContained"}, {"reason", to_string(w.reason)}, {"face", w.face}, {"vertex", w.vertex},
            {"signed_distance", w.signed_distance}, {"length", w.length}, {"margin", w.margin}};
}

Output construct(const RunConfig& c, const GeodesicType& t)
{
    if (!c.edges.empty()) {
        if (c.edges.size() != 6) throw Error(Errc::invalid_tetrahedron, "--edges needs six lengths");
        std::array<double, 6> e{};
        std::copy(c.edges.begin(), c.edges.end(), e.begin());
        const GenericTetraSpec g = generic_from_edges(e);
        const auto gen = generic_hyperbolic_geodesic(g, t);
        const Development d = build_development(g, crossing_sequence(t));
        if (c.format == "svg") return {io::svg(d, gen.path.crossings)};
        json j{{"development", io::report(d)}, {"path", io::report(gen.path)}, {"s0", gen.s0}, {"sign_changes", gen.sign_changes}};
        return {io::dump(j)};
    }
    const TetrahedronSpec spec = regular_spec(c);
    const CrossingSequence seq = crossing_sequence(t);
    const Development d = build_development(spec, seq);
    GeodesicPath path;
    if (spec.space == Space::euclidean) {
        path = euclid_geodesic(t, c.mu);
    } else {
        const auto r = midpoint_geodesic(spec, t);
        if (const auto* w = std::get_if<NotContained>(&r)) {
            if (c.format == "svg") return {io::svg(d, w->crossings), negative};
            return {io::dump(witness_json(*w)), negative};
        }
        path = std::get<GeodesicPath>(r);
    }
    if (c.format == "svg") return {io::svg(d, path.crossings)};
    if (c.format != "json") throw Error(Errc::precondition_failed, "construct writes json or svg");
    return {io::dump(json{{"development", io::report(d)}, {"path", io::report(path)}})};
}

Output exists(const RunConfig& c, const GeodesicType& t)
{
    const TetrahedronSpec spec = regular_spec(c);
    const ExistenceVerdict v = exists_geodesic(spec, t);
    json j = io::report(v);
    j["reason"] = v.reason;
    if (v.path) j["path"] = io::report(*v.path);
    if (v.witness) j["witness"] = witness_json(*v.witness);
    return {io::dump(j), v.outcome == Outcome::not_exists ? negative : ok};
}

Output threshold(const RunConfig& c, const GeodesicType& t)
{
    const ThresholdBracket b = threshold_bracket(t, c.tol);
    json j{{"type", {t.p, t.q}}, {"lo", b.lo}, {"hi", b.hi}, {"beta", b.beta}, {"tol", c.tol}};
    j["alpha2"] = io::optional_number(detail::try_alpha2(t));
    return {io::dump(j)};
}

json components_json(const EpsilonComponents& e)
{
    return {{"upper_index", e.upper_index}, {"tan_sum", e.tan_sum}, {"numerator", e.numerator},
            {"denominator", e.denominator}, {"c0", e.c0}, {"length_sum", e.length_sum},
            {"contained_term", e.contained_term}, {"cap_term", e.cap_term}, {"degenerate", e.degenerate}};
}

Output bounds(const RunConfig& c, const GeodesicType& t)
{
    json j{{"type", {t.p, t.q}}};
    j["alpha1"] = io::optional_number(detail::try_alpha1(t));
    j["alpha2"] = io::optional_number(detail::try_alpha2(t));
    j["epsilon_printed_range"] = components_json(epsilon_bound_components(t, 2));
    j["epsilon_shifted_range"] = components_json(epsilon_bound_components(t, 1));
    j["a_star"] = edge_sufficient_bound(t);
    if (c.alpha && parse_space(c.space) == Space::hyperbolic) {
        const double a = angle_of(c);
        j["clearance_bound"] = hyperbolic_clearance_bound(a);
        j["length_bound"] = hyperbolic_length_lower_bound(a, t);
    }
    return {io::dump(j)};
}

Output count(const RunConfig& c)
{
    const CountReport r = count_exact(c.L, angle_of(c));
    if (c.format == "csv") return {io::csv_table(r)};
    json j = r;
    j["exact_mod_3"] = r.exact % 3;
    return {io::dump(j)};
}

Output verify(const RunConfig& c)
{
    const json j = cli::run_checks(c.jobs);
    return {io::dump(j), j.at("passed").get<bool>() ? ok : numerical};
}

Output run(const RunConfig& c)
{
    if (c.format != "json" && c.format != "svg" && c.format != "csv")
        throw Error(Errc::precondition_failed, "format must be json, svg or csv");
    const auto type = [&] { return make_type(c.p, c.q); };
    if (c.subcommand == "construct") return construct(c, type());
    if (c.subcommand == "exists") return exists(c, type());
    if (c.subcommand == "threshold") return threshold(c, type());
    if (c.subcommand == "bounds") return bounds(c, type());
    if (c.subcommand == "count") return count(c);
    if (c.subcommand == "verify") return verify(c);
    throw Error(Errc::precondition_failed, "no subcommand given");
}

int exit_code_for(Errc e)
{
    switch (e) {
    case Errc::no_threshold:
    case Errc::vertex_hit:
    case Errc::too_long:
    case Errc::bound_vacuous:
    case Errc::bound_degenerate: return negative;
    case Errc::numerical_failure: return numerical;
    default: return invalid_input;
    }
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Simple closed geodesics on regular tetrahedra"};
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    app.require_subcommand(1);
    app.add_option("--space", cfg.space, "euclidean, spherical or hyperbolic")->check(CLI::IsMember({"euclidean", "spherical", "hyperbolic"}));
    auto* alpha = app.add_option("--alpha", cfg.alpha, "planar angle (radians unless --deg)");
    auto* edge = app.add_option("--edge", cfg.edge, "edge length");
    alpha->excludes(edge);
    app.add_option("--edges", cfg.edges, "six edge lengths 12,13,14,23,24,34 of a hyperbolic tetrahedron")->delimiter(',');
    app.add_flag("--deg", cfg.degrees, "read --alpha in degrees");
    app.add_option("--p", cfg.p, "geodesic type p");
    app.add_option("--q", cfg.q, "geodesic type q");
    app.add_option("--mu", cfg.mu, "offset of the Euclidean tiling segment");
    app.add_option("--L", cfg.L, "length budget for count");
    app.add_option("--tol", cfg.tol, "bisection tolerance for threshold");
    app.add_option("--out", cfg.out, "write the artifact to this file");
    app.add_option("--format", cfg.format, "json, svg or csv");
    app.add_option("--jobs", cfg.jobs, "parallel checks in verify")->check(CLI::PositiveNumber);
    const std::vector<std::pair<const char*, const char*>> commands{
        {"construct", "development and closed geodesic of type (p, q)"},
        {"exists", "existence verdict on a spherical tetrahedron"},
        {"threshold", "angle at which spherical geodesics of type (p, q) disappear"},
        {"bounds", "necessary and sufficient angle bounds for type (p, q)"},
        {"count", "hyperbolic geodesics of length at most L"},
        {"verify", "built-in invariant checks"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return invalid_input;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    Output result;
    try {
        result = run(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    }
    if (cfg.out.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return invalid_input;
        }
        f << result.text;
    }
    return result.code;
}
