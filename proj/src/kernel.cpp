#include "wpv/kernel.hpp"

#include <cmath>

#include "wpv/memo.hpp"

namespace wpv {

namespace {

MemoTable<int, Rational>& zeta_table()
{
    static MemoTable<int, Rational> table;
    return table;
}

MemoTable<int, GradedPoly>& f_table()
{
    static MemoTable<int, GradedPoly> table;
    return table;
}

Rational pow2(int e)
{
    Integer r = 1;
    r <<= static_cast<mp_bitcnt_t>(e);
    return Rational(r);
}

}  // namespace

Rational zeta_even_coefficient(int i)
{
    if (i < 0) throw Error("zeta_even: negative index");
    if (i == 0) return Rational(-1, 2);
    if (i == 1) return Rational(1, 6);
    return zeta_table().get(i, [i] {
        // zeta(2i) = 2/(2i+1) sum_{j=1}^{i-1} zeta(2j) zeta(2i-2j)
        Rational sum = 0;
        for (int j = 1; j < i; ++j) sum += zeta_even_coefficient(j) * zeta_even_coefficient(i - j);
        return Rational(sum * Rational(2, 2 * i + 1));
    });
}

GradedPoly zeta_even(int i)
{
    return GradedPoly::term(zeta_even_coefficient(i), Monomial::pi2_power(i));
}

KernelPoly F_poly(int k)
{
    if (k < 0) throw Error("F_poly: negative index");
    GradedPoly p = f_table().get(k, [k] {
        GradedPoly out;
        const Integer lead = factorial(static_cast<unsigned long>(2 * k + 1));
        for (int i = 0; i <= k + 1; ++i) {
            const int m = k + 1 - i;  // b^(2m)
            Rational c = zeta_even_coefficient(i) * (pow2(2 * i + 1) - 4) * Rational(lead) /
                         Rational(factorial(static_cast<unsigned long>(2 * m)));
            out.add_term(Monomial::pi2_power(i).with_exponent(1, m), c);
        }
        return out;
    });
    return {k, std::move(p)};
}

GradedPoly F_poly_in(int k, Slot slot)
{
    const GradedPoly p = F_poly(k).poly;
    return slot == 1 ? p : relabel(p, {{1, slot}});
}

double H_num(double s, double t)
{
    return 1.0 / (1.0 + std::exp((s + t) / 2)) + 1.0 / (1.0 + std::exp((s - t) / 2));
}

GradedPoly odd_moment(int i)
{
    if (i < 1) throw Error("odd_moment: index must be positive");
    const Rational c = zeta_even_coefficient(i) *
                       Rational(factorial(static_cast<unsigned long>(2 * i - 1))) *
                       (1 - 1 / pow2(2 * i - 1));
    return GradedPoly::term(c, Monomial::pi2_power(i));
}

GradedPoly even_shift_expand(int k, Slot a, Slot b)
{
    if (a == b) throw Error("even_shift_expand: slots must differ");
    const KernelPoly f = F_poly(k);
    GradedPoly out;
    for (const auto& [m, r] : f.poly.terms()) {
        const int j = m.exponent(1);
        const Monomial base = m.without(1);
        // (u+v)^(2j) + (u-v)^(2j) = 2 sum_p C(2j,2p) u^(2p) v^(2j-2p)
        for (int p = 0; p <= j; ++p) {
            const Rational c = r * 2 * Rational(binomial(2 * j, 2 * p));
            out.add_term(base * Monomial::var(a, p) * Monomial::var(b, j - p), c);
        }
    }
    return out;
}

Rational double_reduce(int i, int j)
{
    if (i < 0 || j < 0) throw Error("double_reduce: negative index");
    return make_rational(factorial(static_cast<unsigned long>(2 * i + 1)) *
                             factorial(static_cast<unsigned long>(2 * j + 1)),
                         factorial(static_cast<unsigned long>(2 * i + 2 * j + 3)));
}

}  // namespace wpv
