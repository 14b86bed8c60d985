#include "wpv/mcshane.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "wpv/exactalg.hpp"

namespace wpv {

double sid(double b1, double bi, double l)
{
    const double c = std::cosh(l / 2);
    return std::log((c + std::cosh((b1 + bi) / 2)) / (c + std::cosh((b1 - bi) / 2)));
}

double mid(double b1, double l1, double l2)
{
    const double e = std::exp((l1 + l2) / 2);
    return 2 * std::log((std::exp(b1 / 2) + e) / (std::exp(-b1 / 2) + e));
}

double half_mid_equals_innergap(double b1, double l1, double l2) { return mid(b1, l1, l2) / 2; }

double markoff_residual(double x, double y, double z)
{
    return std::abs(x * x + y * y + z * z - x * y * z) / (x * y * z);
}

TorusPoint::TorusPoint(double x, double y, double z) : x_(x), y_(y), z_(z)
{
    if (!(x > 2 && y > 2 && z > 2)) throw Error("torus traces must exceed 2");
    if (markoff_residual(x, y, z) > 1e-12)
        throw Error("traces do not satisfy x^2+y^2+z^2 = xyz");
}

TorusPoint TorusPoint::from_xy(double x, double y, bool larger_root)
{
    const double disc = x * x * y * y - 4 * (x * x + y * y);
    if (disc < 0) throw Error("no Markoff point with the given x, y");
    const double s = std::sqrt(disc);
    // Pick the root computed without cancellation and recover the other from
    // the product z1*z2 = x^2 + y^2.
    const double big = (x * y + s) / 2;
    const double small = (x * x + y * y) / big;
    return TorusPoint(x, y, larger_root ? big : small);
}

double geodesic_length(double trace) { return 2 * std::acosh(trace / 2); }

namespace {

struct Vertex {
    double lt;  // log of the trace
    std::int64_t p, q;
};

double length_from_log(double lt)
{
    if (lt < 200) return geodesic_length(std::exp(lt));
    // 2 acosh(t/2) = 2 log(t) + 2 log((1 + sqrt(1 - 4/t^2)) / 2)
    const double inv = std::exp(-2 * lt);
    return 2 * lt + 2 * std::log((1 + std::sqrt(1 - 4 * inv)) / 2);
}

double mcshane_term(double length) { return 2 / (1 + std::exp(length)); }

void normalize(std::int64_t& p, std::int64_t& q)
{
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
}

// New vertex across edge {a,b} from c: trace ab - c, slope the other Farey
// neighbour of the edge.
Vertex flip(const Vertex& a, const Vertex& b, const Vertex& c)
{
    Vertex t;
    t.lt = a.lt + b.lt + std::log1p(-std::exp(c.lt - a.lt - b.lt));
    std::int64_t p1 = a.p + b.p, q1 = a.q + b.q;
    std::int64_t p2 = a.p - b.p, q2 = a.q - b.q;
    normalize(p1, q1);
    normalize(p2, q2);
    if (p1 == c.p && q1 == c.q) {
        t.p = p2;
        t.q = q2;
    } else {
        t.p = p1;
        t.q = q1;
    }
    return t;
}

// Relative Markoff residual evaluated in log space.
double residual_log(double la, double lb, double lc)
{
    const double s = std::exp(la - lb - lc) + std::exp(lb - la - lc) + std::exp(lc - la - lb);
    return std::abs(s - 1);
}

std::array<Vertex, 3> roots(const TorusPoint& pt)
{
    return {Vertex{std::log(pt.x()), 0, 1}, Vertex{std::log(pt.y()), 1, 0},
            Vertex{std::log(pt.z()), 1, 1}};
}

}  // namespace

std::vector<SimpleGeodesic> enumerate_torus_geodesics(const TorusPoint& pt, int depth,
                                                      EnumerationStats* stats)
{
    if (depth < 0) throw Error("depth must be non-negative");
    std::vector<SimpleGeodesic> out;
    double max_res = markoff_residual(pt.x(), pt.y(), pt.z());
    const auto r = roots(pt);
    for (const auto& v : r) out.push_back({v.p, v.q, 0, v.lt, length_from_log(v.lt)});

    std::function<void(const Vertex&, const Vertex&, const Vertex&, int)> walk =
        [&](const Vertex& a, const Vertex& b, const Vertex& c, int d) {
            if (d > depth) return;
            const Vertex t = flip(a, b, c);
            max_res = std::max(max_res, residual_log(a.lt, b.lt, t.lt));
            out.push_back({t.p, t.q, d, t.lt, length_from_log(t.lt)});
            walk(a, t, b, d + 1);
            walk(t, b, a, d + 1);
        };
    walk(r[0], r[1], r[2], 1);
    walk(r[0], r[2], r[1], 1);
    walk(r[1], r[2], r[0], 1);
    if (stats) stats->max_markoff_residual = max_res;
    return out;
}

McShaneReport verify_torus_identity(const TorusPoint& pt, int depth, double tol)
{
    if (depth < 0) throw Error("depth must be non-negative");
    constexpr double kPruneThreshold = 1e-20;
    McShaneReport rep;
    std::vector<double> level(static_cast<std::size_t>(depth) + 1, 0.0);
    rep.max_markoff_residual = markoff_residual(pt.x(), pt.y(), pt.z());

    const auto r = roots(pt);
    for (const auto& v : r) {
        level[0] += mcshane_term(length_from_log(v.lt));
        ++rep.terms;
    }

    std::function<void(const Vertex&, const Vertex&, const Vertex&, int)> walk =
        [&](const Vertex& a, const Vertex& b, const Vertex& c, int d) {
            if (d > depth) return;
            const Vertex t = flip(a, b, c);
            rep.max_markoff_residual =
                std::max(rep.max_markoff_residual, residual_log(a.lt, b.lt, t.lt));
            const double term = mcshane_term(length_from_log(t.lt));
            const int below = depth - d;  // levels strictly beneath t
            // Below a vertex that dominates its edge, traces only increase, so
            // each of the 2^(below+1)-2 descendants contributes less than term.
            const bool grows = t.lt >= std::max(a.lt, b.lt);
            const double subtree = term * std::ldexp(1.0, below + 1);
            level[static_cast<std::size_t>(d)] += term;
            ++rep.terms;
            if (grows && below > 0 && subtree < kPruneThreshold) {
                rep.pruned_bound += subtree;
                return;
            }
            walk(a, t, b, d + 1);
            walk(t, b, a, d + 1);
        };
    walk(r[0], r[1], r[2], 1);
    walk(r[0], r[2], r[1], 1);
    walk(r[1], r[2], r[0], 1);

    double s = 0.0;
    for (double l : level) {
        const double next = s + l;
        if (next < s) rep.monotone = false;
        s = next;
        rep.partial_sums.push_back(s);
        if (s > 1 + tol) rep.bounded = false;
    }
    rep.sum = s;
    rep.gap = 1 - s;
    rep.converged = rep.gap < tol;
    return rep;
}

}  // namespace wpv
