#pragma once

#include <algorithm>
#include <vector>

#include "support.hpp"

namespace wpv::test {

/// c * pi^(2 pi2) * sum over distinct arrangements of `exps` on b_1..b_n.
inline GradedPoly sym(const Rational& c, int pi2, std::vector<int> exps)
{
    std::sort(exps.begin(), exps.end());
    GradedPoly out;
    do {
        Monomial m = Monomial::pi2_power(pi2);
        for (std::size_t i = 0; i < exps.size(); ++i) m = m * Monomial::var(static_cast<Slot>(i) + 1, exps[i]);
        out.add_term(m, c);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

inline GradedPoly v11() { return term(q(1, 12), 1) + term(q(1, 48), 0, {{1, 1}}); }

inline GradedPoly v04() { return term(2, 1) + sym(q(1, 2), 0, {1, 0, 0, 0}); }

// The displayed V_{1,2} with the x_2^2 in the last group read as x_2^4.
inline GradedPoly v12()
{
    return term(q(1, 4), 2) + sym(q(1, 12), 1, {1, 0}) + term(q(1, 96), 0, {{1, 1}, {2, 1}}) +
           sym(q(1, 192), 0, {2, 0});
}

// The displayed V_{1,3} with the b_3 in the second group read as b_3^2.
inline GradedPoly v13()
{
    return term(q(14, 9), 3) + sym(q(13, 24), 2, {1, 0, 0}) + sym(q(1, 8), 1, {1, 1, 0}) +
           sym(q(1, 24), 1, {2, 0, 0}) + term(q(1, 96), 0, {{1, 1}, {2, 1}, {3, 1}}) +
           sym(q(1, 192), 0, {2, 1, 0}) + sym(q(1, 1152), 0, {3, 0, 0});
}

// The displayed d(2 b_1 V_{1,3})/d b_1, with b_3 in its second line read
// as b_3^2.
inline GradedPoly v13_rhs()
{
    using V = std::initializer_list<std::pair<Slot, int>>;
    const auto t = [](const Rational& c, int pi2, V vars) { return term(c, pi2, vars); };
    return t(q(28, 9), 3, {}) +
           q(13, 12) * (t(3, 2, {{1, 1}}) + t(1, 2, {{2, 1}}) + t(1, 2, {{3, 1}})) +
           q(1, 4) * (t(3, 1, {{1, 1}, {2, 1}}) + t(3, 1, {{1, 1}, {3, 1}}) + t(1, 1, {{2, 1}, {3, 1}})) +
           q(1, 12) * (t(5, 1, {{1, 2}}) + t(1, 1, {{2, 2}}) + t(1, 1, {{3, 2}})) +
           t(q(1, 16), 0, {{1, 1}, {2, 1}, {3, 1}}) +
           q(1, 96) * (t(5, 0, {{1, 2}, {2, 1}}) + t(3, 0, {{1, 1}, {2, 2}}) + t(5, 0, {{1, 2}, {3, 1}}) +
                       t(3, 0, {{1, 1}, {3, 2}}) + t(1, 0, {{2, 2}, {3, 1}}) + t(1, 0, {{2, 1}, {3, 2}})) +
           q(1, 576) * (t(7, 0, {{1, 3}}) + t(1, 0, {{2, 3}}) + t(1, 0, {{3, 3}}));
}

}  // namespace wpv::test
