// Exact arithmetic: rationals and sparse polynomials in pi^2 and squared
// boundary variables.
#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <boost/multiprecision/mpfr.hpp>

namespace wpv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
/// terms; values built from a numerator/denominator pair go through
/// make_rational().
using Rational = mpq_class;
using Integer = mpz_class;
using BigFloat = boost::multiprecision::mpfr_float;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

Integer factorial(unsigned long k);
Integer binomial(long a, long b);  // 0 outside 0 <= b <= a

/// A variable slot. Positive values are boundary indices b_1, b_2, ...;
/// negative values are the named integration symbols.
using Slot = int;
inline constexpr Slot kSlotX = -1;
inline constexpr Slot kSlotY = -2;
inline constexpr Slot kSlotL = -3;

std::string slot_name(Slot s);
Slot parse_slot(const std::string& name);

/// pi^(2*pi2) * prod b_v^(2*e_v). Only squared powers are representable.
class Monomial {
public:
    Monomial() = default;

    static Monomial pi2_power(int e);
    static Monomial var(Slot s, int e);

    int pi2_exp() const { return pi2_; }
    int exponent(Slot s) const;
    const std::vector<std::pair<Slot, int>>& vars() const { return vars_; }
    int weight() const;

    Monomial operator*(const Monomial& rhs) const;
    Monomial with_exponent(Slot s, int e) const;
    Monomial without(Slot s) const { return with_exponent(s, 0); }
    Monomial with_pi2(int e) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    int pi2_ = 0;
    std::vector<std::pair<Slot, int>> vars_;  // sorted by slot, exponents > 0
};

class GradedPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    GradedPoly() = default;
    GradedPoly(const Rational& c);  // NOLINT: constants convert implicitly
    GradedPoly(long c) : GradedPoly(Rational(c)) {}  // NOLINT

    static GradedPoly term(const Rational& c, const Monomial& m);
    static GradedPoly pi2(int e = 1) { return term(1, Monomial::pi2_power(e)); }
    static GradedPoly var(Slot s, int e = 1) { return term(1, Monomial::var(s, e)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;
    std::set<Slot> slots() const;
    /// Highest exponent (of the squared variable) of slot s; 0 if absent.
    int degree_in(Slot s) const;

    GradedPoly& operator+=(const GradedPoly& rhs);
    GradedPoly& operator-=(const GradedPoly& rhs);
    GradedPoly& operator*=(const Rational& c);
    GradedPoly& operator*=(const GradedPoly& rhs);

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
    friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    GradedPoly operator-() const;

    bool operator==(const GradedPoly& rhs) const { return terms_ == rhs.terms_; }

private:
    TermMap terms_;
};

GradedPoly poly_add(const GradedPoly& p, const GradedPoly& q);
GradedPoly poly_mul(const GradedPoly& p, const GradedPoly& q);

/// Renames variable slots. The mapping must be injective and cover every
/// slot occurring in p.
GradedPoly relabel(const GradedPoly& p, const std::map<Slot, Slot>& mapping);

/// Identifies slot `from` with slot `into` (exponents add).
GradedPoly merge_slots(const GradedPoly& p, Slot from, Slot into);

/// Groups p by the exponent of `slot`; the slot is removed from each group.
std::map<int, GradedPoly> split_by_slot(const GradedPoly& p, Slot slot);

/// Substitutes b_slot := value exactly. value is the unsquared length.
GradedPoly substitute(const GradedPoly& p, Slot slot, const Rational& value);

/// (int_0^b p db) / (2b): c*b^(2m)*M -> c/(2(2m+1)) * b^(2m)*M.
GradedPoly halve_integrate(const GradedPoly& p, Slot slot);

/// d(2bV)/db written back in squared variables; inverse of halve_integrate.
GradedPoly double_derivative(const GradedPoly& v, Slot slot);

BigFloat pi_value(unsigned digits10);
BigFloat evaluate(const GradedPoly& p, const std::map<Slot, Rational>& values,
                  unsigned digits10 = 50);

/// RAII guard for the default precision of BigFloat (process wide).
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits10);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

/// V_{g,n}: GradedPoly over slots 1..n for a stable (g,n).
class VolumePoly {
public:
    VolumePoly(int g, int n, GradedPoly poly);

    int g() const { return g_; }
    int n() const { return n_; }
    int dimension() const { return 3 * g_ - 3 + n_; }
    const GradedPoly& poly() const { return poly_; }

    bool operator==(const VolumePoly&) const = default;

private:
    int g_;
    int n_;
    GradedPoly poly_;
};

inline bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

struct InvariantReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Homogeneity, strict positivity and slot-permutation symmetry.
InvariantReport check_volume_invariants(const VolumePoly& v);

}  // namespace wpv
