#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "counting.hpp"
#include "existence.hpp"
#include "geodesics.hpp"
#include "unfolding.hpp"

namespace tetrageo::io {

using nlohmann::json;

inline std::string format_double(double v)
{
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

namespace detail {

inline void emit(std::ostringstream& out, const json& j, int depth)
{
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out << ",\n";
            first = false;
            out << pad << json(it.key()).dump() << ": ";
            emit(out, it.value(), depth + 1);
        }
        out << "\n" << close << "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out << "[]";
            return;
        }
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out << ",\n";
            out << pad;
            emit(out, j[i], depth + 1);
        }
        out << "\n" << close << "]";
        return;
    }
    case json::value_t::number_float: out << format_double(j.get<double>()); return;
    default: out << j.dump();
    }
}

} // namespace detail

// Pretty JSON with every floating-point number at 17 significant digits.
inline std::string dump(const json& j)
{
    std::ostringstream out;
    detail::emit(out, j, 0);
    out << "\n";
    return out.str();
}

inline json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline std::optional<double> read_optional(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

struct CrossingRecord {
    std::string edge;
    double fraction = 0.0;

    friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

struct PathReport {
    std::array<int, 2> type{};
    double length = 0.0;
    double clearance = 0.0;
    std::vector<CrossingRecord> crossings;
    bool closed = false;
    bool simple = false;

    friend bool operator==(const PathReport&, const PathReport&) = default;
};

struct FaceRecord {
    std::string label;
    std::vector<std::vector<double>> vertices;
    std::array<int, 3> labels{};

    friend bool operator==(const FaceRecord&, const FaceRecord&) = default;
};

struct DevelopmentReport {
    std::string space;
    double alpha = 0.0;
    std::array<int, 2> type{};
    std::vector<FaceRecord> faces;
    std::map<std::string, std::vector<double>> symmetry_points;
    std::vector<double> angles;

    friend bool operator==(const DevelopmentReport&, const DevelopmentReport&) = default;
};

struct VerdictReport {
    std::string outcome;
    std::optional<double> alpha1;
    std::optional<double> alpha2;
    std::optional<double> beta;

    friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

inline void to_json(json& j, const CrossingRecord& c) { j = json{{"edge", c.edge}, {"fraction", c.fraction}}; }
inline void from_json(const json& j, CrossingRecord& c)
{
    j.at("edge").get_to(c.edge);
    j.at("fraction").get_to(c.fraction);
}

inline void to_json(json& j, const PathReport& r)
{
    j = json{{"type", r.type}, {"length", r.length}, {"clearance", r.clearance},
             {"crossings", r.crossings}, {"closed", r.closed}, {"simple", r.simple}};
}
inline void from_json(const json& j, PathReport& r)
{
    j.at("type").get_to(r.type);
    j.at("length").get_to(r.length);
    j.at("clearance").get_to(r.clearance);
    j.at("crossings").get_to(r.crossings);
    j.at("closed").get_to(r.closed);
    j.at("simple").get_to(r.simple);
}

inline void to_json(json& j, const FaceRecord& f) { j = json{{"label", f.label}, {"vertices", f.vertices}, {"labels", f.labels}}; }
inline void from_json(const json& j, FaceRecord& f)
{
    j.at("label").get_to(f.label);
    j.at("vertices").get_to(f.vertices);
    j.at("labels").get_to(f.labels);
}

inline void to_json(json& j, const DevelopmentReport& d)
{
    j = json{{"space", d.space}, {"alpha", d.alpha}, {"type", d.type}, {"faces", d.faces},
             {"symmetry_points", d.symmetry_points}, {"angles", d.angles}};
}
inline void from_json(const json& j, DevelopmentReport& d)
{
    j.at("space").get_to(d.space);
    j.at("alpha").get_to(d.alpha);
    j.at("type").get_to(d.type);
    j.at("faces").get_to(d.faces);
    j.at("symmetry_points").get_to(d.symmetry_points);
    j.at("angles").get_to(d.angles);
}

inline void to_json(json& j, const VerdictReport& v)
{
    j = json{{"outcome", v.outcome}, {"alpha1", optional_number(v.alpha1)}, {"alpha2", optional_number(v.alpha2)},
             {"beta", optional_number(v.beta)}};
}
inline void from_json(const json& j, VerdictReport& v)
{
    j.at("outcome").get_to(v.outcome);
    v.alpha1 = read_optional(j, "alpha1");
    v.alpha2 = read_optional(j, "alpha2");
    v.beta = read_optional(j, "beta");
}

} // namespace tetrageo::io

namespace tetrageo {

inline void to_json(nlohmann::json& j, const TypeLength& t)
{
    j = nlohmann::json{{"p", t.p}, {"q", t.q}, {"length", t.length}, {"clearance", t.clearance}};
}
inline void from_json(const nlohmann::json& j, TypeLength& t)
{
    j.at("p").get_to(t.p);
    j.at("q").get_to(t.q);
    j.at("length").get_to(t.length);
    j.at("clearance").get_to(t.clearance);
}

inline void to_json(nlohmann::json& j, const CountReport& r)
{
    j = nlohmann::json{{"L", r.L}, {"alpha", r.alpha}, {"exact", r.exact}, {"bound", r.bound}, {"c_printed", r.c_printed},
                       {"c_derived", r.c_derived}, {"asymptotic", r.asymptotic}, {"table", r.table}};
}
inline void from_json(const nlohmann::json& j, CountReport& r)
{
    j.at("L").get_to(r.L);
    j.at("alpha").get_to(r.alpha);
    j.at("exact").get_to(r.exact);
    j.at("bound").get_to(r.bound);
    j.at("c_printed").get_to(r.c_printed);
    j.at("c_derived").get_to(r.c_derived);
    j.at("asymptotic").get_to(r.asymptotic);
    j.at("table").get_to(r.table);
}

} // namespace tetrageo

namespace tetrageo::io {

// Exported coordinates: Klein for hyperbolic points, unit vectors for spherical ones.
inline std::vector<double> coordinates(Space k, const Point2& p)
{
    switch (k) {
    case Space::spherical: return {p.x, p.y, p.z};
    case Space::hyperbolic: {
        const auto c = to_klein(p);
        return {c[0], c[1]};
    }
    default: return {p.x, p.y};
    }
}

inline PathReport report(const GeodesicPath& path)
{
    PathReport r;
    r.type = {path.type.p, path.type.q};
    r.length = path.total_length;
    r.clearance = path.clearance;
    for (const auto& c : path.crossings) r.crossings.push_back({c.edge.token(), c.fraction});
    r.closed = path.closed;
    r.simple = path.simple;
    return r;
}

inline DevelopmentReport report(const Development& d)
{
    DevelopmentReport r;
    r.space = to_string(d.space);
    r.alpha = d.alpha;
    r.type = {d.type.p, d.type.q};
    for (const auto& f : d.faces) {
        FaceRecord fr;
        const auto s = f.sorted_labels();
        fr.label = std::to_string(s[0]) + std::to_string(s[1]) + std::to_string(s[2]);
        fr.labels = f.labels;
        for (const auto& v : f.vertices) fr.vertices.push_back(coordinates(d.space, v));
        r.faces.push_back(fr);
    }
    static constexpr std::array<const char*, 5> names{"X1", "Y1", "X2", "Y2", "X1p"};
    for (std::size_t i = 0; i < 5; ++i) r.symmetry_points[names[i]] = coordinates(d.space, d.symmetry_points[i]);
    r.angles = d.angles();
    return r;
}

inline VerdictReport report(const ExistenceVerdict& v)
{
    return {to_string(v.outcome), v.alpha1, v.alpha2, v.beta};
}

inline std::string csv_table(const CountReport& r)
{
    std::string out = "p,q,length,clearance\n";
    for (const auto& t : r.table)
        out += std::to_string(t.p) + "," + std::to_string(t.q) + "," + format_double(t.length) + "," + format_double(t.clearance) + "\n";
    return out;
}

namespace detail {

struct Canvas {
    Space space;
    double scale = 1000.0;
    double shift_x = 0.0;
    double shift_y = 0.0;

    std::array<double, 2> map(const Point2& p) const
    {
        double x = p.x, y = p.y;
        if (space == Space::hyperbolic) {
            const auto k = to_klein(p);
            x = k[0];
            y = k[1];
        }
        return {scale * x + shift_x, -(scale * y + shift_y)};
    }
};

inline std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// points along the chart geodesic from a to b; straight in the Klein and Euclidean pictures
inline std::vector<Point2> trace(Space k, const Point2& a, const Point2& b)
{
    if (k != Space::spherical) return {a, b};
    std::vector<Point2> out;
    for (int i = 0; i <= 16; ++i) out.push_back(point_along(k, a, b, i / 16.0));
    return out;
}

inline std::string polyline(const Canvas& c, const std::vector<Point2>& pts, const char* cls, bool closed)
{
    std::string s = closed ? "<polygon class=\"" : "<polyline class=\"";
    s += cls;
    s += "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto q = c.map(pts[i]);
        if (i) s += ' ';
        s += number(q[0]) + "," + number(q[1]);
    }
    return s + "\"/>\n";
}

} // namespace detail

// SVG picture of a development with the path through the given crossings drawn on top.
inline std::string svg(const Development& d, const std::vector<Crossing>& crossings)
{
    detail::Canvas c{d.space};
    if (d.space == Space::euclidean) {
        double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
        for (const auto& f : d.faces)
            for (const auto& v : f.vertices) {
                lo_x = std::min(lo_x, v.x);
                hi_x = std::max(hi_x, v.x);
                lo_y = std::min(lo_y, v.y);
                hi_y = std::max(hi_y, v.y);
            }
        c.scale = 1800.0 / std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
        c.shift_x = -c.scale * 0.5 * (lo_x + hi_x);
        c.shift_y = -c.scale * 0.5 * (lo_y + hi_y);
    }
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1050 -1050 2100 2100\">\n"
                    "<style>.face{fill:#eef;stroke:#99a;stroke-width:1}.boundary{fill:none;stroke:#222;stroke-width:2}"
                    ".geodesic{fill:none;stroke:#c22;stroke-width:3}.symmetry{fill:#26c;stroke:none}"
                    ".model{fill:none;stroke:#bbb;stroke-width:1}</style>\n";
    if (d.space != Space::euclidean) s += "<circle class=\"model\" cx=\"0\" cy=\"0\" r=\"1000\"/>\n";
    for (const auto& f : d.faces) {
        std::vector<Point2> pts;
        for (int i = 0; i < 3; ++i) {
            const auto seg = detail::trace(d.space, f.vertices[i], f.vertices[(i + 1) % 3]);
            pts.insert(pts.end(), seg.begin(), seg.end() - 1);
        }
        s += detail::polyline(c, pts, "face", true);
    }
    std::vector<Point2> outline;
    for (const auto& b : d.boundary) outline.push_back(b.position);
    if (!outline.empty()) s += detail::polyline(c, outline, "boundary", true);
    if (crossings.size() + 1 == d.edges.size()) {
        std::vector<Point2> pts;
        for (std::size_t k = 0; k < d.edges.size(); ++k) {
            const Point2 at = point_along(d.space, d.edges[k][0], d.edges[k][1], crossings[k % crossings.size()].fraction);
            if (k) {
                const auto seg = detail::trace(d.space, pts.back(), at);
                pts.insert(pts.end(), seg.begin() + 1, seg.end());
            } else {
                pts.push_back(at);
            }
        }
        s += detail::polyline(c, pts, "geodesic", false);
    }
    for (const auto& p : d.symmetry_points) {
        const auto q = c.map(p);
        s += "<circle class=\"symmetry\" cx=\"" + detail::number(q[0]) + "\" cy=\"" + detail::number(q[1]) + "\" r=\"8\"/>\n";
    }
    return s + "</svg>\n";
}

} // namespace tetrageo::io
