#include "wpv/growth.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace wpv {

namespace {

// V_{g,k+1}(x, b_slots...) with the first boundary in slot x.
GradedPoly piece(int g, const std::vector<int>& slots, RecursionCache& cache)
{
    const int n = static_cast<int>(slots.size()) + 1;
    std::map<Slot, Slot> mapping{{1, kSlotX}};
    for (std::size_t k = 0; k < slots.size(); ++k) mapping[static_cast<Slot>(k) + 2] = slots[k];
    return relabel(volume(g, n, cache)->poly(), mapping);
}

}  // namespace

CurveClass CurveClass::nonseparating(int g, int n)
{
    CurveClass c{Kind::nonseparating, g, n, 0, {}, 0, {}};
    c.validate();
    return c;
}

CurveClass CurveClass::separating(int g, int n, int g1, std::vector<int> I1)
{
    std::sort(I1.begin(), I1.end());
    CurveClass c{Kind::separating, g, n, g1, std::move(I1), g - g1, {}};
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(c.I1.begin(), c.I1.end(), i)) c.I2.push_back(i);
    c.validate();
    return c;
}

void CurveClass::validate() const
{
    if (!is_stable(g, n)) throw Error("ambient surface is not stable");
    if (kind == Kind::nonseparating) {
        if (g < 1) throw Error("a nonseparating curve needs genus >= 1");
        return;
    }
    if (g1 < 0 || g2 < 0 || g1 + g2 != g) throw Error("piece genera must add up to g");
    std::set<int> seen;
    for (const auto* part : {&I1, &I2}) {
        for (int i : *part) {
            if (i < 1 || i > n) throw Error("boundary label out of range");
            if (!seen.insert(i).second) throw Error("boundary label repeated");
        }
    }
    if (static_cast<int>(seen.size()) != n) throw Error("pieces must cover every boundary");
    if (!is_stable(g1, static_cast<int>(I1.size()) + 1) || !is_stable(g2, static_cast<int>(I2.size()) + 1))
        throw Error("a piece of the separating curve is not stable");
}

bool CurveClass::symmetric() const
{
    if (kind == Kind::nonseparating) return true;
    return g1 == g2 && I1.empty() && I2.empty();
}

std::string CurveClass::describe() const
{
    std::ostringstream s;
    s << (kind == Kind::nonseparating ? "nonseparating" : "separating") << " curve on S_{" << g << ","
      << n << "}";
    if (kind == Kind::separating) {
        const auto list = [](const std::vector<int>& v) {
            std::string out;
            for (int i : v) out += (out.empty() ? "" : ",") + std::to_string(i);
            return "{" + out + "}";
        };
        s << " into (" << g1 << "," << list(I1) << ") and (" << g2 << "," << list(I2) << ")";
    }
    return s.str();
}

GradedPoly level_set_volume(const CurveClass& c, RecursionCache& cache)
{
    c.validate();
    if (c.kind == CurveClass::Kind::nonseparating) {
        // V_{g-1,n+2}(x, x, b_1..b_n)
        std::map<Slot, Slot> mapping{{1, kSlotX}, {2, kSlotY}};
        for (int k = 1; k <= c.n; ++k) mapping[k + 2] = k;
        const GradedPoly v = relabel(volume(c.g - 1, c.n + 2, cache)->poly(), mapping);
        return merge_slots(v, kSlotY, kSlotX);
    }
    return piece(c.g1, c.I1, cache) * piece(c.g2, c.I2, cache);
}

GrowthResult growth(const CurveClass& c, RecursionCache& cache)
{
    GrowthResult r;
    r.level_poly = level_set_volume(c, cache);
    r.exponent = 6 * c.g - 6 + 2 * c.n;
    r.symmetric_class = c.symmetric();
    // x^(2e+1) -> L^(2e+2)/(2e+2)
    for (const auto& [m, q] : r.level_poly.terms()) {
        const int e = m.exponent(kSlotX);
        r.P.add_term(m.without(kSlotX).with_exponent(kSlotL, e + 1), q / (2 * e + 2));
    }
    for (const auto& [m, q] : r.P.terms())
        if (2 * m.exponent(kSlotL) == r.exponent) r.c_gamma.add_term(m.without(kSlotL), q);

    if (2 * r.P.degree_in(kSlotL) != r.exponent)
        throw std::logic_error("P(L) has the wrong degree for " + c.describe());
    for (const auto& [m, q] : r.c_gamma.terms())
        if (q <= 0 || !m.vars().empty()) throw std::logic_error("leading coefficient is not a positive constant");
    return r;
}

GradedPoly c_gamma(const CurveClass& c, RecursionCache& cache) { return growth(c, cache).c_gamma; }

}  // namespace wpv
