// Gap functions of the bordered McShane identity and a numeric check of the
// identity sum 2/(1+e^l) = 1 over simple closed geodesics of a once-punctured
// torus.
#pragma once

#include <cstdint>
#include <vector>

namespace wpv {

/// log((cosh(l/2) + cosh((b1+bi)/2)) / (cosh(l/2) + cosh((b1-bi)/2)))
double sid(double b1, double bi, double l);

/// 2 log((e^(b1/2) + e^((l1+l2)/2)) / (e^(-b1/2) + e^((l1+l2)/2)))
double mid(double b1, double l1, double l2);

/// Width of the middle boundary interval cut out by a pair of pants: mid/2.
double half_mid_equals_innergap(double b1, double l1, double l2);

/// Trace coordinates (x,y,z) of a once-punctured hyperbolic torus: traces of
/// the curves of slope 0/1, 1/0 and 1/1, on x^2+y^2+z^2 = xyz.
class TorusPoint {
public:
    /// Throws Error unless all traces exceed 2 and the relative Markoff
    /// residual is below 1e-12.
    TorusPoint(double x, double y, double z);

    /// The point with traces x, y and the larger (or smaller) Markoff root z.
    static TorusPoint from_xy(double x, double y, bool larger_root = true);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

private:
    double x_, y_, z_;
};

/// |x^2+y^2+z^2-xyz| / (xyz)
double markoff_residual(double x, double y, double z);

double geodesic_length(double trace);

struct SimpleGeodesic {
    std::int64_t p;  // slope p/q, q >= 0, 1/0 for infinity
    std::int64_t q;
    int depth;
    double log_trace;
    double length;
};

struct EnumerationStats {
    double max_markoff_residual = 0.0;  // over every triple produced
};

/// All simple closed geodesics whose slope sits at depth <= `depth` of the
/// Farey tree grown from the triangle {0/1, 1/0, 1/1}: 3 + 3(2^depth - 1).
std::vector<SimpleGeodesic> enumerate_torus_geodesics(const TorusPoint& p, int depth,
                                                      EnumerationStats* stats = nullptr);

struct McShaneReport {
    std::vector<double> partial_sums;  // S_0 .. S_depth
    double sum = 0.0;
    double gap = 1.0;  // 1 - S_depth
    bool monotone = true;
    bool bounded = true;  // every S_d <= 1 + tol
    bool converged = false;  // gap < tol
    std::uint64_t terms = 0;  // geodesics summed explicitly
    double pruned_bound = 0.0;  // upper bound on the subtrees skipped
    double max_markoff_residual = 0.0;

    bool pass() const { return monotone && bounded && converged; }
};

/// Partial sums of sum 2/(1+e^l) by depth. Subtrees whose total is provably
/// below 1e-20 (traces only grow beneath them) are skipped and accounted for
/// in pruned_bound.
McShaneReport verify_torus_identity(const TorusPoint& p, int depth, double tol);

}  // namespace wpv
