#include "wpv/zograf.hpp"

#include <algorithm>

#include "wpv/memo.hpp"

namespace wpv {

namespace {

MemoTable<int, Rational>& v0_table()
{
    static MemoTable<int, Rational> table;
    return table;
}

MemoTable<int, Rational>& v1_table()
{
    static MemoTable<int, Rational> table;
    return table;
}

Rational binom(int a, int b) { return Rational(binomial(a, b)); }

Rational two_pi2_power_over_factorial(int e)
{
    Integer two = 1;
    two <<= static_cast<mp_bitcnt_t>(e);
    return make_rational(two, factorial(static_cast<unsigned long>(e)));
}

}  // namespace

Rational zograf_v0(int n)
{
    if (n < 3) throw Error("zograf_v0 needs n >= 3");
    if (n == 3) return 1;
    return v0_table().get(n, [n] {
        Rational sum = 0;
        for (int k = 1; k <= n - 3; ++k) {
            sum += make_rational(k * (n - k - 2), n - 1) * binom(n - 4, k - 1) * binom(n, k + 1) *
                   zograf_v0(k + 2) * zograf_v0(n - k);
        }
        return Rational(sum / 2);
    });
}

Rational zograf_v1(int n)
{
    if (n < 1) throw Error("zograf_v1 needs n >= 1");
    return v1_table().get(n, [n] {
        Rational sum = make_rational(n, 24) * zograf_v0(n + 2);
        for (int k = 1; k <= n - 1; ++k) {
            sum += (n - k) * binom(n - 1, k) * binom(n, k - 1) * zograf_v1(k) * zograf_v0(n - k + 2);
        }
        return sum;
    });
}

ZografTable zograf_table()
{
    ZografTable t;
    t.v0[3] = 1;
    for (int n = 4; n < 4 + static_cast<int>(v0_table().size()); ++n)
        t.v0[n] = zograf_v0(n);
    for (int n = 1; n <= static_cast<int>(v1_table().size()); ++n) t.v1[n] = zograf_v1(n);
    return t;
}

GradedPoly zograf_volume(int g, int n)
{
    if (g == 0) {
        const int e = n - 3;
        return GradedPoly::term(two_pi2_power_over_factorial(e) * zograf_v0(n), Monomial::pi2_power(e));
    }
    if (g == 1) return GradedPoly::term(two_pi2_power_over_factorial(n) * zograf_v1(n), Monomial::pi2_power(n));
    throw Error("zograf recursions cover genus 0 and 1 only");
}

bool CrosscheckReport::ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.agree(); });
}

CrosscheckReport crosscheck(int max_n0, int max_n1, RecursionCache& cache)
{
    CrosscheckReport report;
    const auto compare = [&](int g, int n) {
        const std::vector<Rational> zeros(static_cast<std::size_t>(n), Rational(0));
        report.rows.push_back({g, n, volume_at(g, n, zeros, cache), zograf_volume(g, n)});
    };
    for (int n = 3; n <= max_n0; ++n) compare(0, n);
    for (int n = 1; n <= max_n1; ++n) compare(1, n);
    return report;
}

}  // namespace wpv
