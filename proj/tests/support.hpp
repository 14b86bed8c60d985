#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "wpv/exactalg.hpp"

namespace wpv::test {

using Vars = std::initializer_list<std::pair<Slot, int>>;

inline Monomial mono(int pi2, Vars vars)
{
    Monomial m = Monomial::pi2_power(pi2);
    for (const auto& [s, e] : vars) m = m * Monomial::var(s, e);
    return m;
}

inline GradedPoly term(const Rational& c, int pi2, Vars vars = {})
{
    return GradedPoly::term(c, mono(pi2, vars));
}

inline Rational q(long p, long d = 1) { return make_rational(p, d); }

/// A random polynomial over the given slots with small exponents and
/// coefficients; may be zero.
inline GradedPoly random_poly(std::mt19937& rng, std::initializer_list<Slot> slots, int max_terms = 5)
{
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    GradedPoly p;
    const int k = count(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m = Monomial::pi2_power(exp(rng));
        for (Slot s : slots) m = m * Monomial::var(s, exp(rng));
        Rational c(num(rng), den(rng));
        c.canonicalize();
        p.add_term(m, c);
    }
    return p;
}

}  // namespace wpv::test
