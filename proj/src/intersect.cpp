#include "wpv/intersect.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

namespace wpv {

namespace {

int total(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string bracket_name(std::span<const int> a, int g)
{
    std::ostringstream s;
    s << "<";
    for (std::size_t i = 0; i < a.size(); ++i) s << (i ? "," : "") << "tau_" << a[i];
    s << ">_" << g;
    return s.str();
}

Rational pow2(int e)
{
    Integer r = 1;
    r <<= static_cast<mp_bitcnt_t>(e);
    return Rational(r);
}

// 2^|a| a!
Rational normalization(std::span<const int> a)
{
    Integer f = 1;
    for (int ai : a) f *= factorial(static_cast<unsigned long>(ai));
    return pow2(total(a)) * Rational(f);
}

// (2m-1)!! for m >= 0, with (-1)!! = 1
Integer odd_double_factorial(int m)
{
    Integer r = 1;
    for (int k = 3; k <= 2 * m - 1; k += 2) r *= k;
    return r;
}

Integer fact(int k) { return factorial(static_cast<unsigned long>(k)); }

Monomial monomial_for(std::span<const int> a)
{
    Monomial m;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) m = m * Monomial::var(static_cast<Slot>(i) + 1, a[i]);
    return m;
}

bool is_top(int g, std::span<const int> a)
{
    const int n = static_cast<int>(a.size());
    if (g < 0 || n < 1 || !is_stable(g, n)) return false;
    if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) return false;
    return total(a) == 3 * g - 3 + n;
}

// Bracket with every degenerate case mapped to zero; used inside the checks.
Rational bracket(int g, std::span<const int> a, RecursionCache& cache)
{
    if (!is_top(g, a)) return 0;
    return top_coefficient(g, a, cache) * normalization(a);
}

// Genus forced on one factor of a product term, if any.
std::optional<int> forced_genus(std::span<const int> a)
{
    if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) return std::nullopt;
    return infer_genus(a);
}

std::vector<int> concat(std::initializer_list<int> head, std::span<const int> tail)
{
    std::vector<int> out(head);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

bool is_base(int g, int n) { return (g == 0 && n == 3) || (g == 1 && n == 1); }

// The product sum over I1 u I2 = {2..n}: sum of f(j-part) * f(k-part) with
// the genus of each part forced by its own dimension count.
template <typename Value>
Rational split_sum(int g, int j, int k, std::span<const int> rest, Value value)
{
    const std::size_t m = rest.size();
    Rational sum = 0;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::vector<int> first{j};
        std::vector<int> second{k};
        for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1ul ? first : second).push_back(rest[i]);
        const auto g1 = forced_genus(first);
        const auto g2 = forced_genus(second);
        if (!g1 || !g2 || *g1 + *g2 != g) continue;
        const Rational v1 = value(*g1, std::span<const int>(first));
        if (v1 == 0) continue;
        sum += v1 * value(*g2, std::span<const int>(second));
    }
    return sum;
}

void record(IdentityReport& r, bool equal, const std::string& what, const Rational& lhs,
            const Rational& rhs)
{
    ++r.checked;
    if (!equal) r.failures.push_back(what + ": " + to_string(lhs) + " != " + to_string(rhs));
}

void string_instance(int g, std::span<const int> a, RecursionCache& cache, IdentityReport& r)
{
    // a = (0, rest...)
    const std::span<const int> rest = a.subspan(1);
    Rational rhs = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == 0) continue;
        std::vector<int> b(rest.begin(), rest.end());
        --b[i];
        rhs += bracket(g, b, cache);
    }
    const Rational lhs = bracket(g, a, cache);
    record(r, lhs == rhs, "string " + bracket_name(a, g), lhs, rhs);
}

void dilaton_instance(int g, std::span<const int> a, RecursionCache& cache, IdentityReport& r)
{
    const std::span<const int> rest = a.subspan(1);
    const int n = static_cast<int>(rest.size());
    const Rational lhs = bracket(g, a, cache);
    const Rational rhs = (2 * g - 2 + n) * bracket(g, rest, cache);
    record(r, lhs == rhs, "dilaton " + bracket_name(a, g), lhs, rhs);
}

void kdv_instance(int g, std::span<const int> a, RecursionCache& cache, IdentityReport& r)
{
    const int n = static_cast<int>(a.size());
    const int a1 = a[0];
    const std::span<const int> rest = a.subspan(1);
    const Integer d1 = odd_double_factorial(a1 + 1);  // (2a1+1)!!

    Rational rhs = 0;
    for (int j = 2; j <= n; ++j) {
        const int aj = a[static_cast<std::size_t>(j - 1)];
        std::vector<int> b(rest.begin(), rest.end());
        b[static_cast<std::size_t>(j - 2)] = a1 + aj - 1;
        const Rational f = make_rational(odd_double_factorial(a1 + aj), d1 * odd_double_factorial(aj));
        rhs += f * bracket(g, b, cache);
    }
    const auto value = [&cache](int gi, std::span<const int> v) { return bracket(gi, v, cache); };
    for (int j = 0; j <= a1 - 2; ++j) {
        const int k = a1 - 2 - j;
        const Rational f = make_rational(odd_double_factorial(j + 1) * odd_double_factorial(k + 1), 2 * d1);
        rhs += f * bracket(g - 1, concat({j, k}, rest), cache);
        rhs += f * split_sum(g, j, k, rest, value);
    }
    const Rational lhs = bracket(g, a, cache);
    record(r, lhs == rhs, "kdv " + bracket_name(a, g), lhs, rhs);
}

void coeff_instance(int g, std::span<const int> a, RecursionCache& cache, IdentityReport& r)
{
    const int n = static_cast<int>(a.size());
    const int a1 = a[0];
    const std::span<const int> rest = a.subspan(1);
    const auto value = [&cache](int gi, std::span<const int> v) {
        return is_top(gi, v) ? top_coefficient(gi, v, cache) : Rational(0);
    };

    Rational rhs = 0;
    for (int j = 2; j <= n; ++j) {
        const int aj = a[static_cast<std::size_t>(j - 1)];
        if (a1 + aj == 0) continue;
        std::vector<int> b(rest.begin(), rest.end());
        b[static_cast<std::size_t>(j - 2)] = a1 + aj - 1;
        const Rational f = make_rational(fact(2 * a1 + 2 * aj - 1), fact(2 * a1) * fact(2 * aj));
        rhs += f * value(g, b);
    }
    for (int j = 0; j <= a1 - 2; ++j) {
        const int k = a1 - 2 - j;
        const Rational f = make_rational(fact(2 * j + 1) * fact(2 * k + 1), 2 * fact(2 * a1));
        rhs += f * value(g - 1, concat({j, k}, rest));
        rhs += f * split_sum(g, j, k, rest, value);
    }
    const Rational lhs = (2 * a1 + 1) * value(g, a);
    record(r, lhs == rhs, "coeff-recursion " + bracket_name(a, g), lhs, rhs);
}

std::vector<std::vector<int>> top_vectors(int g, int n)
{
    return compositions(3 * g - 3 + n, n);
}

}  // namespace

void IdentityReport::merge(const IdentityReport& other)
{
    checked += other.checked;
    skipped += other.skipped;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<std::vector<int>> compositions(int total_value, int parts)
{
    std::vector<std::vector<int>> out;
    if (parts < 0 || total_value < 0) return out;
    if (parts == 0) {
        if (total_value == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current(static_cast<std::size_t>(parts), 0);
    const auto fill = [&](auto&& self, int index, int left) -> void {
        if (index == parts - 1) {
            current[static_cast<std::size_t>(index)] = left;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            current[static_cast<std::size_t>(index)] = v;
            self(self, index + 1, left - v);
        }
    };
    fill(fill, 0, total_value);
    return out;
}

std::optional<int> infer_genus(std::span<const int> a)
{
    const int n = static_cast<int>(a.size());
    const int num = total(a) - n + 3;
    if (n == 0 || num < 0 || num % 3 != 0) return std::nullopt;
    return num / 3;
}

TauVector make_tau(std::vector<int> a)
{
    if (a.empty()) throw Error("empty exponent vector");
    if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }))
        throw Error("exponents must be non-negative");
    const auto g = infer_genus(a);
    if (!g || !is_stable(*g, static_cast<int>(a.size())))
        throw Error("no genus makes the exponent vector admissible");
    return {std::move(a), *g};
}

Rational top_coefficient(int g, std::span<const int> a, RecursionCache& cache)
{
    if (!is_top(g, a)) return 0;
    const int n = static_cast<int>(a.size());
    return volume(g, n, cache)->poly().coefficient(monomial_for(a));
}

Rational tau_bracket(const TauVector& t, RecursionCache& cache)
{
    if (t.g < 0) throw Error("genus must be non-negative");
    if (t.a.empty()) throw Error("empty exponent vector");
    if (std::any_of(t.a.begin(), t.a.end(), [](int x) { return x < 0; }))
        throw Error("exponents must be non-negative");
    return bracket(t.g, t.a, cache);
}

GradedPoly mixed_number(const MixedSpec& m, RecursionCache& cache)
{
    const int n = static_cast<int>(m.a.size());
    if (n < 1 || !is_stable(m.g, n)) throw Error("mixed number needs a stable (g,n) with n >= 1");
    if (std::any_of(m.a.begin(), m.a.end(), [](int x) { return x < 0; }))
        throw Error("exponents must be non-negative");
    const int d = 3 * m.g - 3 + n;
    const int k = d - total(m.a);
    if (k < 0 || m.omega_power != k)
        throw Error("omega power must equal 3g-3+n-|a| = " + std::to_string(k));
    const Monomial mono = monomial_for(m.a).with_pi2(k);
    const Rational c = volume(m.g, n, cache)->poly().coefficient(mono);
    return GradedPoly::term(c * normalization(m.a) * Rational(fact(k)), Monomial::pi2_power(k));
}

IdentityReport check_string(int g, int n_max, RecursionCache& cache)
{
    IdentityReport r{"string"};
    for (int n = 2; n <= n_max; ++n) {
        if (!is_stable(g, n - 1)) continue;
        for (const auto& rest : compositions(3 * g - 3 + n, n - 1))
            string_instance(g, concat({0}, rest), cache, r);
    }
    return r;
}

IdentityReport check_dilaton(int g, int n_max, RecursionCache& cache)
{
    IdentityReport r{"dilaton"};
    for (int n = 2; n <= n_max; ++n) {
        if (!is_stable(g, n - 1)) continue;
        for (const auto& rest : top_vectors(g, n - 1)) dilaton_instance(g, concat({1}, rest), cache, r);
    }
    return r;
}

IdentityReport check_kdv(const TauVector& t, RecursionCache& cache)
{
    IdentityReport r{"kdv"};
    if (t.a.empty() || t.a[0] < 1) throw Error("kdv check needs a_1 >= 1");
    if (!is_top(t.g, t.a)) throw Error("inadmissible " + bracket_name(t.a, t.g));
    if (is_base(t.g, static_cast<int>(t.a.size()))) {
        ++r.skipped;
        return r;
    }
    kdv_instance(t.g, t.a, cache, r);
    return r;
}

IdentityReport check_coeff_recursion(int g, int n, RecursionCache& cache)
{
    IdentityReport r{"coeff-recursion"};
    if (!is_stable(g, n) || n < 1) throw Error("unstable type");
    for (const auto& a : top_vectors(g, n)) {
        if (is_base(g, n)) {
            ++r.skipped;
            continue;
        }
        coeff_instance(g, a, cache, r);
    }
    return r;
}

VirasoroReport check_virasoro(int max_complexity, RecursionCache& cache, unsigned jobs)
{
    std::vector<std::pair<int, int>> types;
    for (int g = 0; 2 * g - 2 + 1 <= max_complexity; ++g)
        for (int n = 1; 2 * g - 2 + n <= max_complexity; ++n)
            if (is_stable(g, n)) types.emplace_back(g, n);

    // Volumes first, in order, so the parallel phase only reads.
    for (const auto& [g, n] : types) volume(g, n, cache);

    const auto run_type = [&cache](int g, int n) {
        VirasoroReport r;
        for (const auto& a : top_vectors(g, n)) {
            const bool reduced_stable = n >= 2 && is_stable(g, n - 1);
            if (a[0] == 0 && reduced_stable) string_instance(g, a, cache, r.string_eq);
            if (a[0] == 1 && reduced_stable) dilaton_instance(g, a, cache, r.dilaton);
            if (is_base(g, n)) {
                if (a[0] >= 1) ++r.kdv.skipped;
                ++r.coeff_recursion.skipped;
                continue;
            }
            if (a[0] >= 1) kdv_instance(g, a, cache, r.kdv);
            coeff_instance(g, a, cache, r.coeff_recursion);
        }
        return r;
    };

    VirasoroReport total_report;
    const auto absorb = [&total_report](const VirasoroReport& r) {
        total_report.string_eq.merge(r.string_eq);
        total_report.dilaton.merge(r.dilaton);
        total_report.kdv.merge(r.kdv);
        total_report.coeff_recursion.merge(r.coeff_recursion);
    };
    const std::size_t width = std::max(1u, jobs);
    for (std::size_t start = 0; start < types.size(); start += width) {
        std::vector<std::future<VirasoroReport>> batch;
        for (std::size_t i = start; i < std::min(types.size(), start + width); ++i) {
            const auto [g, n] = types[i];
            batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                       run_type, g, n));
        }
        for (auto& f : batch) absorb(f.get());
    }
    return total_report;
}

}  // namespace wpv
