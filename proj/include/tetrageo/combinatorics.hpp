#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "error.hpp"
#include "tetra.hpp"

namespace tetrageo {

struct GeodesicType {
    int p = 0;
    int q = 1;

    friend bool operator==(const GeodesicType&, const GeodesicType&) = default;
    friend auto operator<=>(const GeodesicType&, const GeodesicType&) = default;

    int crossings() const { return 4 * (p + q); }
    long long norm() const { return 1LL * p * p + 1LL * p * q + 1LL * q * q; }
};

inline bool is_valid_type(int p, int q)
{
    return p >= 0 && p <= q && q >= 1 && std::gcd(p, q) == 1;
}

inline GeodesicType make_type(int p, int q)
{
    if (!is_valid_type(p, q))
        throw Error(Errc::invalid_type, "type must satisfy 0 <= p <= q, gcd(p, q) = 1: (" + std::to_string(p) +
                                            ", " + std::to_string(q) + ")");
    return {p, q};
}

struct EdgeLabel {
    int lo = 1;
    int hi = 2;

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;

    int index() const { return edge_index(lo, hi); }
    bool contains(int v) const { return v == lo || v == hi; }
    int other(int v) const { return v == lo ? hi : lo; }
    EdgeLabel opposite() const
    {
        int a = 0, b = 0;
        for (int v = 1; v <= 4; ++v)
            if (!contains(v)) (a == 0 ? a : b) = v;
        return {a, b};
    }
    std::string token() const { return std::to_string(lo) + std::to_string(hi); }
};

inline EdgeLabel make_edge(int i, int j)
{
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) throw Error(Errc::invalid_sequence, "bad edge label");
    return i < j ? EdgeLabel{i, j} : EdgeLabel{j, i};
}

inline EdgeLabel parse_edge(const std::string& token)
{
    if (token.size() != 2) throw Error(Errc::invalid_sequence, "bad edge token '" + token + "'");
    return make_edge(token[0] - '0', token[1] - '0');
}

// common vertex of two edges, 0 if none or if the edges coincide
inline int shared_vertex(const EdgeLabel& a, const EdgeLabel& b)
{
    if (a == b) return 0;
    if (b.contains(a.lo)) return a.lo;
    if (b.contains(a.hi)) return a.hi;
    return 0;
}

struct Crossing {
    EdgeLabel edge;
    // position along the edge from its lower-labelled vertex, as a fraction of the edge length
    double fraction = 0.5;
};

struct CrossingSequence {
    GeodesicType type;
    std::vector<Crossing> crossings;
    std::array<int, 6> multiplicity{};

    std::size_t size() const { return crossings.size(); }
    const EdgeLabel& edge(std::size_t k) const { return crossings[k % crossings.size()].edge; }
    // vertex shared by the edges of crossings k and k+1
    int pivot(std::size_t k) const { return shared_vertex(edge(k), edge(k + 1)); }
    // vertex of face k not on edge k
    int apex(std::size_t k) const { return edge(k + 1).other(pivot(k)); }
    std::array<int, 3> face(std::size_t k) const
    {
        std::array<int, 3> f{edge(k).lo, edge(k).hi, apex(k)};
        std::sort(f.begin(), f.end());
        return f;
    }
};

inline std::array<int, 6> count_multiplicity(const std::vector<Crossing>& cs)
{
    std::array<int, 6> m{};
    for (const auto& c : cs) ++m[c.edge.index()];
    return m;
}

using Rational = boost::rational<std::int64_t>;

struct LatticePoint {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// tiling vertex i*(1, 0) + j*(1/2, sqrt3/2) carries label 1 + (i mod 2) + 2 (j mod 2)
inline int lattice_label(const LatticePoint& v)
{
    const auto par = [](std::int64_t n) { return static_cast<int>(((n % 2) + 2) % 2); };
    return 1 + par(v.i) + 2 * par(v.j);
}

inline std::array<double, 2> lattice_to_plane(const LatticePoint& v)
{
    return {static_cast<double>(v.i) + 0.5 * static_cast<double>(v.j), std::sqrt(3.0) / 2 * static_cast<double>(v.j)};
}

struct TilingCrossing {
    EdgeLabel edge;
    Rational fraction;
    LatticePoint lo;
    LatticePoint hi;
};

// Lattice displacement of half the closed tiling segment, (P, Q) with Q odd.
inline std::array<int, 2> lattice_direction(const GeodesicType& t)
{
    if (t.q % 2 == 1) return {t.p, t.q};
    return {t.q, t.p};
}

// Trace of the tiling segment from (1/2, 0) to (1/2 + 2P, 2Q) in lattice coordinates.
// Returns 4(p+q) + 1 crossings; the last one is the first translated by the period.
inline std::vector<TilingCrossing> tiling_trace(const GeodesicType& t)
{
    const auto [P, Q] = lattice_direction(t);
    const std::int64_t S = P + Q;
    enum class Kind { horizontal, vertical, diagonal };
    struct Event {
        Rational time;
        Kind kind;
        std::int64_t m;
    };
    std::vector<Event> events;
    for (std::int64_t k = 0; k < 2 * Q; ++k) events.push_back({Rational(k, 2 * Q), Kind::horizontal, k});
    for (std::int64_t m = 1; m <= 2 * P; ++m) events.push_back({Rational(2 * m - 1, 4 * P), Kind::vertical, m});
    for (std::int64_t m = 1; m <= 2 * S; ++m) events.push_back({Rational(2 * m - 1, 4 * S), Kind::diagonal, m});
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.time < b.time; });
    for (std::size_t k = 1; k < events.size(); ++k)
        if (events[k].time == events[k - 1].time) throw Error(Errc::vertex_hit, "tiling segment passes a vertex");

    const auto floor_of = [](const Rational& r) {
        std::int64_t f = r.numerator() / r.denominator();
        if (r.numerator() < 0 && f * r.denominator() != r.numerator()) --f;
        return f;
    };

    std::vector<TilingCrossing> out;
    out.reserve(events.size() + 1);
    for (const auto& e : events) {
        const Rational i = Rational(1, 2) + Rational(2 * P) * e.time;
        const Rational j = Rational(2 * Q) * e.time;
        LatticePoint a, b;
        Rational frac;
        switch (e.kind) {
        case Kind::horizontal: {
            const std::int64_t i0 = floor_of(i);
            a = {i0, e.m};
            b = {i0 + 1, e.m};
            frac = i - Rational(i0);
            break;
        }
        case Kind::vertical: {
            const std::int64_t j0 = floor_of(j);
            a = {e.m, j0};
            b = {e.m, j0 + 1};
            frac = j - Rational(j0);
            break;
        }
        case Kind::diagonal: {
            const std::int64_t j0 = floor_of(j);
            a = {e.m - j0, j0};
            b = {e.m - j0 - 1, j0 + 1};
            frac = j - Rational(j0);
            break;
        }
        }
        if (frac == Rational(0)) throw Error(Errc::vertex_hit, "tiling segment passes a vertex");
        int la = lattice_label(a), lb = lattice_label(b);
        if (la > lb) {
            std::swap(la, lb);
            std::swap(a, b);
            frac = Rational(1) - frac;
        }
        out.push_back({{la, lb}, frac, a, b});
    }
    TilingCrossing last = out.front();
    last.lo.i += 2 * P;
    last.lo.j += 2 * Q;
    last.hi.i += 2 * P;
    last.hi.j += 2 * Q;
    out.push_back(last);
    return out;
}

inline CrossingSequence crossing_sequence(const GeodesicType& t)
{
    const GeodesicType ty = make_type(t.p, t.q);
    const auto trace = tiling_trace(ty);
    CrossingSequence s;
    s.type = ty;
    for (std::size_t k = 0; k + 1 < trace.size(); ++k)
        s.crossings.push_back({trace[k].edge, boost::rational_cast<double>(trace[k].fraction)});
    s.multiplicity = count_multiplicity(s.crossings);
    return s;
}

// Structural check of a crossing word against a type.
inline bool validate_sequence(const CrossingSequence& s, const GeodesicType& t)
{
    if (!is_valid_type(t.p, t.q)) return false;
    const std::size_t n = s.size();
    if (n != static_cast<std::size_t>(t.crossings())) return false;
    for (const auto& c : s.crossings) {
        const auto& e = c.edge;
        if (e.lo < 1 || e.hi > 4 || e.lo >= e.hi) return false;
    }
    const auto m = count_multiplicity(s.crossings);
    std::array<int, 3> pair_counts{};
    for (int k = 0; k < 3; ++k) {
        const EdgeLabel e{1, k + 2};
        const int a = m[e.index()], b = m[e.opposite().index()];
        if (a != b) return false;
        pair_counts[k] = a + b;
    }
    std::sort(pair_counts.begin(), pair_counts.end());
    std::array<int, 3> expected{2 * t.p, 2 * t.q, 2 * (t.p + t.q)};
    std::sort(expected.begin(), expected.end());
    if (pair_counts != expected) return false;
    for (std::size_t k = 0; k < n; ++k)
        if (s.pivot(k) == 0) return false;
    // four consecutive crossings around one vertex make the curve meet an edge twice near it
    for (std::size_t k = 0; k < n; ++k) {
        for (int v = 1; v <= 4; ++v) {
            bool all = true;
            for (std::size_t d = 0; d < 4 && all; ++d) all = s.edge(k + d).contains(v);
            if (all) return false;
        }
    }
    return true;
}

namespace detail {

inline double distance_to_vertex(const Crossing& c, int v) { return c.edge.lo == v ? c.fraction : 1.0 - c.fraction; }

// crossing k is the middle of three consecutive crossings around one vertex, each nearest that vertex
inline bool is_link_node(const CrossingSequence& s, std::size_t k)
{
    const std::size_t n = s.size();
    const EdgeLabel& a = s.edge(k + n - 1);
    const EdgeLabel& b = s.edge(k);
    const EdgeLabel& c = s.edge(k + 1);
    int v = 0;
    for (int x = 1; x <= 4; ++x)
        if (a.contains(x) && b.contains(x) && c.contains(x)) v = x;
    if (v == 0) return false;
    for (std::size_t d : {k + n - 1, k, k + 1}) {
        const Crossing& cd = s.crossings[d % n];
        const double own = distance_to_vertex(cd, v);
        for (const auto& other : s.crossings)
            if (other.edge == cd.edge && distance_to_vertex(other, v) < own - 1e-12) return false;
    }
    return true;
}

} // namespace detail

inline std::vector<std::size_t> all_link_nodes(const CrossingSequence& s)
{
    if (s.type.p == 0) throw Error(Errc::no_link_nodes, "type (0,1) has no link nodes");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (detail::is_link_node(s, k)) out.push_back(k);
    if (out.empty()) throw Error(Errc::no_link_nodes, "no link node found");
    return out;
}

// Canonical pair of link nodes: the first one and its antipode, half a period apart.
inline std::array<std::size_t, 2> link_nodes(const CrossingSequence& s)
{
    const auto all = all_link_nodes(s);
    const std::size_t k0 = all.front();
    const std::size_t k1 = (k0 + s.size() / 2) % s.size();
    if (std::find(all.begin(), all.end(), k1) == all.end())
        throw Error(Errc::no_link_nodes, "link nodes are not antipodal");
    return {k0, k1};
}

// Crossing indices of X1, Y1, X2, Y2 and X1' (the last equals the period).
inline std::array<std::size_t, 5> symmetry_indices(const CrossingSequence& s)
{
    const std::size_t n = s.size();
    return {0, n / 4, n / 2, 3 * n / 4, n};
}

// Image of the sequence under the vertex permutation label -> perm[label - 1].
inline CrossingSequence relabel(const CrossingSequence& s, const std::array<int, 4>& perm)
{
    std::array<int, 4> check = perm;
    std::sort(check.begin(), check.end());
    if (check != std::array<int, 4>{1, 2, 3, 4}) throw Error(Errc::invalid_sequence, "not a permutation of 1..4");
    CrossingSequence out = s;
    for (auto& c : out.crossings) {
        const int a = perm[c.edge.lo - 1], b = perm[c.edge.hi - 1];
        if (a < b) {
            c.edge = {a, b};
        } else {
            c.edge = {b, a};
            c.fraction = 1.0 - c.fraction;
        }
    }
    out.multiplicity = count_multiplicity(out.crossings);
    return out;
}

// The three copies of a type related by the rotations of the tetrahedron fixing vertex 4.
inline std::array<CrossingSequence, 3> isometric_copies(const GeodesicType& t)
{
    const auto s = crossing_sequence(t);
    return {s, relabel(s, {2, 3, 1, 4}), relabel(s, {3, 1, 2, 4})};
}

// Vertex on the left of the direction of travel at every crossing, starting with vertex 1 at crossing 0.
inline std::vector<int> left_vertices(const CrossingSequence& s)
{
    const std::size_t n = s.size();
    std::vector<int> left(n + 1);
    left[0] = s.edge(0).lo;
    for (std::size_t k = 0; k < n; ++k) {
        const int v = s.pivot(k);
        left[k + 1] = left[k] == v ? v : s.apex(k);
    }
    return left;
}

} // namespace tetrageo
