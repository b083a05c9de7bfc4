#pragma once

// Intrinsic description of a face chain: a curve crossing the edges of a crossing sequence is
// given by one position per crossing, and its length is a sum of per-face law-of-cosines terms.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "combinatorics.hpp"
#include "tetra.hpp"

namespace tetrageo::detail {

struct StripFace {
    double sigma = 0.0;      // sin^2(pivot angle / 2)
    double sin_gamma = 0.0;  // sin(pivot angle)
    double len_in = 1.0;
    double len_out = 1.0;
    int s_in = 1;            // +1 when the pivot is the lower-labelled end of the incoming edge
    int s_out = 1;
};

struct Strip {
    Space space = Space::euclidean;
    std::vector<StripFace> faces;  // face k joins crossing k to crossing k+1 (cyclically)
    std::vector<double> lengths;   // edge length at crossing k

    std::size_t size() const { return faces.size(); }
    double length_at(std::size_t k) const { return lengths[k % lengths.size()]; }
};

inline Strip make_strip(const Metric& m, const CrossingSequence& s)
{
    const std::size_t n = s.size();
    Strip st;
    st.space = m.space;
    st.faces.resize(n);
    st.lengths.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const EdgeLabel& e_in = s.edge(k);
        const EdgeLabel& e_out = s.edge(k + 1);
        const int v = s.pivot(k);
        if (v == 0) throw Error(Errc::invalid_sequence, "consecutive crossings do not share exactly one vertex");
        const double gamma = m.angle(v, e_in.other(v), e_out.other(v));
        const double h = std::sin(0.5 * gamma);
        st.faces[k] = {h * h, std::sin(gamma), m.edge(e_in.lo, e_in.hi), m.edge(e_out.lo, e_out.hi),
                       e_in.lo == v ? 1 : -1, e_out.lo == v ? 1 : -1};
        st.lengths[k] = m.edge(e_in.lo, e_in.hi);
    }
    return st;
}

// Segment length in a face and its derivatives with respect to the distances r (incoming
// point) and rp (outgoing point) from the pivot.
struct SegmentJet {
    double r = 0.0, rp = 0.0;
    double d = 0.0;
    double d_r = 0.0, d_rp = 0.0;
    double d_rr = 0.0, d_rprp = 0.0, d_rrp = 0.0;
};

inline SegmentJet segment_jet(Space k, const StripFace& f, double x_in, double x_out)
{
    using trig::cs;
    using trig::sn;
    SegmentJet j;
    j.r = f.s_in > 0 ? x_in : f.len_in - x_in;
    j.rp = f.s_out > 0 ? x_out : f.len_out - x_out;
    const double delta = j.r - j.rp;
    const double h = sn(k, 0.5 * delta);
    const double g = std::max(0.0, h * h + sn(k, j.r) * sn(k, j.rp) * f.sigma);
    j.d = 2.0 * trig::asn(k, std::sqrt(g));
    const double sd = sn(k, j.d);
    if (!(sd > 0.0)) return j;
    const double cd = cs(k, j.d);
    j.d_r = (sn(k, delta) + 2.0 * cs(k, j.r) * sn(k, j.rp) * f.sigma) / sd;
    j.d_rp = (-sn(k, delta) + 2.0 * cs(k, j.rp) * sn(k, j.r) * f.sigma) / sd;
    j.d_rr = cd * (1.0 - j.d_r * j.d_r) / sd;
    j.d_rprp = cd * (1.0 - j.d_rp * j.d_rp) / sd;
    const double kk = cs(k, delta) - 2.0 * f.sigma * cs(k, j.r) * cs(k, j.rp);
    j.d_rrp = -(kk + cd * j.d_r * j.d_rp) / sd;
    return j;
}

inline double segment_length(Space k, const StripFace& f, double x_in, double x_out)
{
    const double r = f.s_in > 0 ? x_in : f.len_in - x_in;
    const double rp = f.s_out > 0 ? x_out : f.len_out - x_out;
    const double h = trig::sn(k, 0.5 * (r - rp));
    const double g = std::max(0.0, h * h + trig::sn(k, r) * trig::sn(k, rp) * f.sigma);
    return 2.0 * trig::asn(k, std::sqrt(g));
}

// Angles between the segment and its two edges, both measured from the direction towards the
// higher-labelled end of the edge.
struct Incidence {
    double in = 0.0;
    double out = 0.0;
};

inline Incidence incidence(Space k, const StripFace& f, double x_in, double x_out)
{
    const SegmentJet j = segment_jet(k, f, x_in, x_out);
    const double sd = trig::sn(k, j.d);
    // angle at each end between the direction to the pivot and the segment
    const double psi_in = std::atan2(trig::sn(k, j.rp) * f.sin_gamma / sd, j.d_r);
    const double psi_out = std::atan2(trig::sn(k, j.r) * f.sin_gamma / sd, j.d_rp);
    return {f.s_in < 0 ? psi_in : pi - psi_in, f.s_out < 0 ? psi_out : pi - psi_out};
}

// x has one entry per crossing 0..n, entry n being crossing 0 after one period.
inline double strip_length(const Strip& st, const std::vector<double>& x, std::size_t i0, std::size_t i1)
{
    double total = 0.0;
    for (std::size_t j = i0; j < i1; ++j) total += segment_length(st.space, st.faces[j % st.size()], x[j], x[j + 1]);
    return total;
}

// deviation from straightness at crossing i (0 < i <= n): the incidence angles on the two sides
// of the edge must be supplementary
inline double straightness(const Strip& st, const std::vector<double>& x, std::size_t i)
{
    const std::size_t n = st.size();
    const std::size_t prev = i - 1;
    const double before = incidence(st.space, st.faces[prev % n], x[prev], x[i]).out;
    const double after = incidence(st.space, st.faces[i % n], x[i], x[i + 1 <= n ? i + 1 : 1]).in;
    return before + after - pi;
}

struct ChainStatus {
    bool converged = false;
    int iterations = 0;
    double gradient = 0.0;
};

// Newton's method for the positions strictly between crossings i0 and i1, whose positions stay fixed.
// The Hessian is tridiagonal; it is shifted towards the identity while it fails to be positive definite.
// With `inside` set, iterates never leave the open edges.
inline ChainStatus solve_chain(const Strip& st, std::vector<double>& x, std::size_t i0, std::size_t i1,
                               bool inside = false, int max_iterations = 300)
{
    ChainStatus status;
    const std::size_t m = i1 - i0 - 1;
    if (i1 <= i0 + 1) {
        status.converged = true;
        return status;
    }
    const Space k = st.space;
    const std::size_t n = st.size();
    std::vector<double> g(m), diag(m), off(m), step(m), trial(x), cp(m), dp(m);

    for (int it = 0; it < max_iterations; ++it) {
        status.iterations = it + 1;
        std::fill(g.begin(), g.end(), 0.0);
        std::fill(diag.begin(), diag.end(), 0.0);
        std::fill(off.begin(), off.end(), 0.0);
        double f0 = 0.0;
        bool degenerate = false;
        for (std::size_t j = i0; j < i1; ++j) {
            const StripFace& face = st.faces[j % n];
            const SegmentJet sj = segment_jet(k, face, x[j], x[j + 1]);
            if (!(sj.d > 0.0)) degenerate = true;
            f0 += sj.d;
            const double si = face.s_in, so = face.s_out;
            if (j > i0) {
                const std::size_t a = j - i0 - 1;
                g[a] += si * sj.d_r;
                diag[a] += sj.d_rr;
            }
            if (j + 1 < i1) {
                const std::size_t b = j - i0;
                g[b] += so * sj.d_rp;
                diag[b] += sj.d_rprp;
                if (j > i0) off[b - 1] = si * so * sj.d_rrp;
            }
        }
        double gnorm = 0.0;
        for (double v : g) gnorm = std::max(gnorm, std::abs(v));
        status.gradient = gnorm;
        if (degenerate || !std::isfinite(f0)) return status;
        if (gnorm < 1e-14) {
            status.converged = true;
            return status;
        }

        // Thomas algorithm on (H + lambda I) step = -g
        double lambda = 0.0;
        double scale = 0.0;
        for (double v : diag) scale = std::max(scale, std::abs(v));
        bool solved = false;
        for (int attempt = 0; attempt < 60 && !solved; ++attempt) {
            bool pd = true;
            double prev_c = 0.0, prev_d = 0.0;
            for (std::size_t a = 0; a < m && pd; ++a) {
                const double lower = a > 0 ? off[a - 1] : 0.0;
                const double piv = diag[a] + lambda - lower * prev_c;
                if (!(piv > 1e-14 * (scale + lambda))) {
                    pd = false;
                    break;
                }
                cp[a] = off[a] / piv;
                dp[a] = (-g[a] - lower * prev_d) / piv;
                prev_c = cp[a];
                prev_d = dp[a];
            }
            if (pd) {
                step[m - 1] = dp[m - 1];
                for (std::size_t a = m - 1; a-- > 0;) step[a] = dp[a] - cp[a] * step[a + 1];
                solved = true;
            } else {
                lambda = lambda == 0.0 ? 1e-8 * std::max(scale, 1.0) : 4.0 * lambda;
            }
        }
        if (!solved) return status;

        double slope = 0.0, smax = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
            slope += g[a] * step[a];
            smax = std::max(smax, std::abs(step[a]));
        }
        double t = 1.0;
        if (inside) {
            for (std::size_t a = 0; a < m; ++a) {
                const double xa = x[i0 + 1 + a], len = st.length_at(i0 + 1 + a);
                if (step[a] < 0.0) t = std::min(t, 0.95 * xa / -step[a]);
                if (step[a] > 0.0) t = std::min(t, 0.95 * (len - xa) / step[a]);
            }
        }
        const bool near = lambda == 0.0 && gnorm < 1e-7 && t == 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t a = 0; a < m; ++a) trial[i0 + 1 + a] = x[i0 + 1 + a] + t * step[a];
            const double f1 = strip_length(st, trial, i0, i1);
            if (std::isfinite(f1) && (near || f1 <= f0 + 1e-4 * t * slope)) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            status.converged = gnorm < 1e-9;
            return status;
        }
        for (std::size_t a = 0; a < m; ++a) x[i0 + 1 + a] = trial[i0 + 1 + a];
        if (t * smax < 1e-16) {
            status.converged = gnorm < 1e-9;
            return status;
        }
    }
    return status;
}

// Positions from the Euclidean tiling line scaled to the edge lengths.
inline std::vector<double> initial_positions(const Strip& st, const CrossingSequence& s)
{
    const std::size_t n = s.size();
    std::vector<double> x(n + 1);
    for (std::size_t k = 0; k <= n; ++k) x[k] = s.crossings[k % n].fraction * st.length_at(k);
    return x;
}

struct ChainSolution {
    std::vector<double> x;
    bool converged = false;
};

// Curve through the midpoints of the start, quarter, half and three-quarter edges, straight
// between them. Each quarter is first solved with iterates kept inside the edges, then without.
inline ChainSolution midpoint_positions(const Strip& st, const CrossingSequence& s)
{
    ChainSolution sol{initial_positions(st, s), true};
    const auto idx = symmetry_indices(s);
    for (std::size_t i : idx) sol.x[i] = 0.5 * st.length_at(i);
    for (int q = 0; q < 4; ++q) {
        const std::vector<double> start = sol.x;
        ChainStatus cs = solve_chain(st, sol.x, idx[q], idx[q + 1], true);
        if (!cs.converged) {
            sol.x = start;
            cs = solve_chain(st, sol.x, idx[q], idx[q + 1]);
        }
        sol.converged = sol.converged && cs.converged;
    }
    return sol;
}

// Shortest curve through the four fixed midpoints with every position kept on its edge,
// by coordinate-wise minimisation until a sweep shortens the curve by less than `tol`.
struct TautStatus {
    std::vector<double> x;
    double length = 0.0;
    bool converged = false;
    int sweeps = 0;
};

inline TautStatus taut_positions(const Strip& st, const CrossingSequence& s, int max_sweeps = 200000,
                                 double tol = 1e-12)
{
    const std::size_t n = s.size();
    TautStatus out;
    out.x = initial_positions(st, s);
    const auto idx = symmetry_indices(s);
    std::vector<bool> fixed(n + 1, false);
    for (std::size_t i : idx) {
        fixed[i] = true;
        out.x[i] = 0.5 * st.length_at(i);
    }
    const Space k = st.space;
    double current = strip_length(st, out.x, 0, n);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        out.sweeps = sweep + 1;
        for (std::size_t i = 1; i < n; ++i) {
            if (fixed[i]) continue;
            const StripFace& before = st.faces[i - 1];
            const StripFace& after = st.faces[i % n];
            const double xa = out.x[i - 1], xb = out.x[i + 1];
            const auto local = [&](double xi) {
                return segment_length(k, before, xa, xi) + segment_length(k, after, xi, xb);
            };
            const double len = st.length_at(i);
            const auto [xm, fm] = boost::math::tools::brent_find_minima(local, 0.0, len, std::numeric_limits<double>::digits / 2);
            if (fm < local(out.x[i])) out.x[i] = xm;
        }
        const double next = strip_length(st, out.x, 0, n);
        const double gain = current - next;
        current = next;
        if (gain < tol) {
            out.converged = true;
            break;
        }
    }
    out.length = current;
    return out;
}

struct ClosingRoot {
    std::vector<double> x;
    double s0 = 0.0;
    int sign_changes = 0;
    bool found = false;
};

// Closed curve through crossing 0 at position s: every other crossing is straightened, leaving
// the angle defect at crossing 0 as a function of s, whose first zero is located by bisection.
inline ClosingRoot closing_positions(const Strip& st, const CrossingSequence& s)
{
    const std::size_t n = s.size();
    const double len = st.length_at(0);
    std::vector<double> warm = initial_positions(st, s);
    ClosingRoot out;

    const auto defect = [&](double pos, std::vector<double>& x) {
        const std::vector<double> start = x;
        x[0] = pos;
        x[n] = pos;
        if (!solve_chain(st, x, 0, n, true).converged) {
            x = start;
            x[0] = pos;
            x[n] = pos;
            if (!solve_chain(st, x, 0, n).converged) return std::numeric_limits<double>::quiet_NaN();
        }
        return straightness(st, x, n);
    };

    std::vector<double> grid{1e-6, 1e-3};
    for (int i = 1; i < 64; ++i) grid.push_back(i / 64.0);
    grid.push_back(1.0 - 1e-3);
    grid.push_back(1.0 - 1e-6);
    std::vector<double> values(grid.size());
    std::vector<std::vector<double>> states(grid.size());
    // warm start from the middle outwards keeps the Newton iterations short
    const std::size_t mid = grid.size() / 2;
    {
        std::vector<double> x = warm;
        for (std::size_t i = mid; i < grid.size(); ++i) {
            values[i] = defect(grid[i] * len, x);
            states[i] = x;
        }
        x = warm;
        for (std::size_t i = mid; i-- > 0;) {
            values[i] = defect(grid[i] * len, x);
            states[i] = x;
        }
    }
    std::vector<std::size_t> brackets;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!std::isfinite(values[i]) || !std::isfinite(values[i + 1])) continue;
        if ((values[i] <= 0.0) != (values[i + 1] <= 0.0)) brackets.push_back(i);
    }
    out.sign_changes = static_cast<int>(brackets.size());
    // a sign change can also be a jump of the defect; only a bracket that closes the curve counts
    for (std::size_t first : brackets) {
        double lo = grid[first] * len, hi = grid[first + 1] * len;
        const bool lo_neg = values[first] <= 0.0;
        std::vector<double> x = states[first];
        while (hi - lo > 1e-12 * len) {
            const double mid_s = 0.5 * (lo + hi);
            const double v = defect(mid_s, x);
            if (!std::isfinite(v)) break;
            if ((v <= 0.0) == lo_neg)
                lo = mid_s;
            else
                hi = mid_s;
        }
        const double s0 = 0.5 * (lo + hi);
        if (!(std::abs(defect(s0, x)) < 1e-8)) continue;
        out.s0 = s0;
        out.x = x;
        out.found = true;
        break;
    }
    return out;
}

} // namespace tetrageo::detail
