// Volumes of level sets of the length of a simple closed curve, and the
// leading constant of the resulting length-count polynomial.
#pragma once

#include <string>
#include <vector>

#include "wpv/exactalg.hpp"
#include "wpv/recursion.hpp"

namespace wpv {

/// The topological type of a simple closed curve on S_{g,n}.
struct CurveClass {
    enum class Kind { nonseparating, separating };

    Kind kind;
    int g;
    int n;
    // Separating pieces: (g1, I1 + new boundary) and (g2, I2 + new boundary).
    int g1 = 0;
    std::vector<int> I1;
    int g2 = 0;
    std::vector<int> I2;

    static CurveClass nonseparating(int g, int n);
    /// I2 and g2 are the complements of I1 and g1.
    static CurveClass separating(int g, int n, int g1, std::vector<int> I1);

    /// Throws Error unless the ambient surface and every piece are stable.
    void validate() const;
    /// Some mapping class preserves the curve while exchanging its sides or
    /// its pieces.
    bool symmetric() const;
    std::string describe() const;
};

/// level_poly = x * p(x, b) where p is returned here: even in x.
GradedPoly level_set_volume(const CurveClass& c, RecursionCache& cache);

struct GrowthResult {
    GradedPoly level_poly;  // p with Vol = x * p
    GradedPoly P;           // int_0^L x p(x) dx, in slot L
    int exponent;           // 6g-6+2n
    GradedPoly c_gamma;     // coefficient of L^exponent
    bool symmetric_class;   // the value is uncorrected for symmetry
};

GrowthResult growth(const CurveClass& c, RecursionCache& cache);
GradedPoly c_gamma(const CurveClass& c, RecursionCache& cache);

}  // namespace wpv
