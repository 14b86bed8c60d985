// psi-class intersection numbers read off volume coefficients, and exact
// checks of the string, dilaton and KdV/Virasoro identities they satisfy.
//
// Dictionary: the coefficient of b^(2a) in V_{g,n}, |a| <= 3g-3+n, equals
//   int psi^a omega^(3g-3+n-|a|) / (2^|a| a! (3g-3+n-|a|)!)
// and at top degree |a| = 3g-3+n it is <tau_a1 ... tau_an>_g / (2^|a| a!).
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wpv/exactalg.hpp"
#include "wpv/recursion.hpp"

namespace wpv {

/// <tau_a1 ... tau_an>_g
struct TauVector {
    std::vector<int> a;
    int g;
};

/// The unique g with |a| = 3g-3+n, if it is a non-negative integer.
std::optional<int> infer_genus(std::span<const int> a);

/// TauVector with the genus inferred; throws Error if none exists.
TauVector make_tau(std::vector<int> a);

/// Zero when |a| != 3g-3+n. Throws Error for g < 0, empty a or negative
/// exponents.
Rational tau_bracket(const TauVector& t, RecursionCache& cache);

struct MixedSpec {
    std::vector<int> a;
    int g;
    int omega_power;  // must equal 3g-3+n-|a|
};

/// int psi_1^a1 ... psi_n^an omega^k as a rational multiple of pi^(2k).
GradedPoly mixed_number(const MixedSpec& m, RecursionCache& cache);

/// Coefficient C_g(a) of b^(2a) in V_{g,n} for a top-degree a; zero when
/// (g,n) is unstable, g < 0, or |a| is not the top degree.
Rational top_coefficient(int g, std::span<const int> a, RecursionCache& cache);

struct IdentityReport {
    explicit IdentityReport(std::string label = {}) : name(std::move(label)) {}

    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;  // base-case normalizations, not identities
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void merge(const IdentityReport& other);
};

/// <tau_0 tau_a1..tau_an>_g = sum_{a_i>0} <..tau_{a_i-1}..>_g for every
/// admissible left side with at most n_max points.
IdentityReport check_string(int g, int n_max, RecursionCache& cache);

/// <tau_1 tau_a1..tau_an>_g = (2g-2+n) <tau_a1..tau_an>_g, same range.
IdentityReport check_dilaton(int g, int n_max, RecursionCache& cache);

/// The double-factorial identity for <tau_a1 ... tau_an>_g with a1 >= 1.
IdentityReport check_kdv(const TauVector& t, RecursionCache& cache);

/// (2a1+1) C_g(a) against the three sums of the recursion restricted to
/// top-degree coefficients, for every top multi-index of (g,n).
IdentityReport check_coeff_recursion(int g, int n, RecursionCache& cache);

struct VirasoroReport {
    IdentityReport string_eq{"string"};
    IdentityReport dilaton{"dilaton"};
    IdentityReport kdv{"kdv"};
    IdentityReport coeff_recursion{"coeff-recursion"};

    bool ok() const
    {
        return string_eq.ok() && dilaton.ok() && kdv.ok() && coeff_recursion.ok();
    }
    std::size_t checked() const
    {
        return string_eq.checked + dilaton.checked + kdv.checked + coeff_recursion.checked;
    }
};

/// All four families for every stable (g,n), n >= 1, with 2g-2+n <= max_complexity.
VirasoroReport check_virasoro(int max_complexity, RecursionCache& cache, unsigned jobs = 1);

/// Every composition of `total` into `parts` non-negative integers.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace wpv
