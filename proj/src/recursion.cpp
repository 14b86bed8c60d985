#include "wpv/recursion.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "wpv/kernel.hpp"

namespace wpv {

namespace {

int complexity(int g, int n) { return 2 * g - 2 + n; }

std::string type_name(int g, int n)
{
    return "(" + std::to_string(g) + "," + std::to_string(n) + ")";
}

// Every recursive request must be for a surface of strictly smaller
// complexity 2g-2+n; this is what makes the recursion terminate.
RecursionCache::Entry lower_volume(int g, int n, int parent_g, int parent_n, RecursionCache& cache)
{
    if (complexity(g, n) >= complexity(parent_g, parent_n))
        throw std::logic_error("recursion does not descend: " + type_name(g, n) + " from " +
                               type_name(parent_g, parent_n));
    return volume(g, n, cache);
}

// The volume with slot 1 -> `first` and slots 2.. -> `rest` (in order).
GradedPoly routed(const VolumePoly& v, Slot first, const std::vector<int>& rest)
{
    std::map<Slot, Slot> mapping{{1, first}};
    for (std::size_t k = 0; k < rest.size(); ++k) mapping[static_cast<Slot>(k) + 2] = rest[k];
    return relabel(v.poly(), mapping);
}

// sum_{i,j} double_reduce(i,j) * X_i * Y_j * F_{2(i+j+1)+1}(b_1)
GradedPoly reduce_double_moments(const std::map<int, GradedPoly>& xs,
                                 const std::map<int, GradedPoly>& ys)
{
    std::map<int, GradedPoly> by_k;
    for (const auto& [i, px] : xs) {
        for (const auto& [j, py] : ys) by_k[i + j + 1] += double_reduce(i, j) * (px * py);
    }
    GradedPoly out;
    for (const auto& [k, q] : by_k) out += q * F_poly(k).poly;
    return out;
}

GradedPoly base_case(int g, int n)
{
    if (g == 0 && n == 3) return GradedPoly(1);
    // (1,1): pi^2/12 + b^2/48
    return GradedPoly::term(Rational(1, 12), Monomial::pi2_power(1)) +
           GradedPoly::term(Rational(1, 48), Monomial::var(1, 1));
}

}  // namespace

std::vector<StableSplitting> stable_splittings(int g, int n)
{
    if (!is_stable(g, n) || n < 1) throw Error("unstable type " + type_name(g, n));
    const int others = n - 1;  // indices 2..n
    std::vector<StableSplitting> out;
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (unsigned mask = 0; mask < (1u << others); ++mask) {
            StableSplitting s{g1, {}, g2, {}};
            for (int k = 0; k < others; ++k) ((mask >> k) & 1u ? s.I1 : s.I2).push_back(k + 2);
            const int size1 = static_cast<int>(s.I1.size());
            const int size2 = static_cast<int>(s.I2.size());
            if (2 * g1 + size1 >= 2 && 2 * g2 + size2 >= 2) out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const StableSplitting& a, const StableSplitting& b) {
        return std::tie(a.g1, a.I1) < std::tie(b.g1, b.I1);
    });
    return out;
}

// ------------------------------------------------------------------ terms

GradedPoly a_term(int g, int n, int i, RecursionCache& cache)
{
    if (i < 2 || i > n) throw Error("a_term: boundary index out of range");
    if (!is_stable(g, n - 1)) return {};
    std::vector<int> rest;
    for (int k = 2; k <= n; ++k)
        if (k != i) rest.push_back(k);
    const GradedPoly v = routed(*lower_volume(g, n - 1, g, n, cache), kSlotX, rest);
    GradedPoly out;
    for (const auto& [m, q] : split_by_slot(v, kSlotX)) out += q * even_shift_expand(m, 1, i);
    return out;
}

GradedPoly b_term(int g, int n, RecursionCache& cache)
{
    if (g < 1 || !is_stable(g - 1, n + 1)) return {};
    // V_{g-1,n+1}(x, y, b_2, ..., b_n)
    const auto lower = lower_volume(g - 1, n + 1, g, n, cache);
    std::map<Slot, Slot> mapping{{1, kSlotX}, {2, kSlotY}};
    for (int k = 2; k <= n; ++k) mapping[k + 1] = k;
    const GradedPoly v = relabel(lower->poly(), mapping);

    GradedPoly out;
    for (const auto& [i, qx] : split_by_slot(v, kSlotX)) {
        for (const auto& [j, qxy] : split_by_slot(qx, kSlotY))
            out += double_reduce(i, j) * (qxy * F_poly(i + j + 1).poly);
    }
    return out;
}

GradedPoly c_term(int g, int n, const StableSplitting& s, RecursionCache& cache)
{
    const int n1 = static_cast<int>(s.I1.size()) + 1;
    const int n2 = static_cast<int>(s.I2.size()) + 1;
    if (s.g1 + s.g2 != g || n1 + n2 != n + 1 || !is_stable(s.g1, n1) || !is_stable(s.g2, n2))
        throw Error("c_term: splitting is not valid for " + type_name(g, n));
    const GradedPoly first = routed(*lower_volume(s.g1, n1, g, n, cache), kSlotX, s.I1);
    const GradedPoly second = routed(*lower_volume(s.g2, n2, g, n, cache), kSlotY, s.I2);
    return reduce_double_moments(split_by_slot(first, kSlotX), split_by_slot(second, kSlotY));
}

GradedPoly recursion_rhs(int g, int n, RecursionCache& cache)
{
    GradedPoly p;
    for (int i = 2; i <= n; ++i) p += a_term(g, n, i, cache);
    p += b_term(g, n, cache);
    for (const auto& s : stable_splittings(g, n)) p += c_term(g, n, s, cache);
    return p;
}

RecursionCache::Entry volume(int g, int n, RecursionCache& cache)
{
    if (!is_stable(g, n) || n < 1) throw Error("unstable or unsupported type " + type_name(g, n));
    if (auto hit = cache.find(g, n)) return hit;

    GradedPoly poly;
    if ((g == 0 && n == 3) || (g == 1 && n == 1)) {
        poly = base_case(g, n);
    } else {
        poly = halve_integrate(recursion_rhs(g, n, cache), 1);
    }
    VolumePoly v(g, n, std::move(poly));
    const auto report = check_volume_invariants(v);
    if (!report.ok())
        throw std::logic_error("V" + type_name(g, n) + " violates " + report.violations.front());
    cache.note_computed();
    return cache.insert(std::move(v));
}

GradedPoly volume_at(int g, int n, std::span<const Rational> lengths, RecursionCache& cache)
{
    if (static_cast<int>(lengths.size()) != n)
        throw Error("expected " + std::to_string(n) + " boundary lengths, got " +
                    std::to_string(lengths.size()));
    GradedPoly p = volume(g, n, cache)->poly();
    for (int i = 1; i <= n; ++i) {
        const Rational& b = lengths[static_cast<std::size_t>(i - 1)];
        if (b < 0) throw Error("boundary lengths must be non-negative");
        p = substitute(p, i, b);
    }
    return p;
}

}  // namespace wpv
