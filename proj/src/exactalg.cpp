#include "wpv/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wpv {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error("not an exact rational: '" + text + "'");
    const std::string n = num[0] == '+' ? num.substr(1) : num;
    return make_rational(Integer(n), Integer(den));
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned long k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binomial(long a, long b)
{
    if (a < 0 || b < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

std::string slot_name(Slot s)
{
    switch (s) {
    case kSlotX: return "x";
    case kSlotY: return "y";
    case kSlotL: return "L";
    default: break;
    }
    if (s <= 0) throw Error("invalid slot " + std::to_string(s));
    return std::to_string(s);
}

Slot parse_slot(const std::string& name)
{
    if (name == "x") return kSlotX;
    if (name == "y") return kSlotY;
    if (name == "L") return kSlotL;
    if (name.empty() || !std::all_of(name.begin(), name.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; }))
        throw Error("invalid slot name '" + name + "'");
    const int s = std::stoi(name);
    if (s <= 0) throw Error("invalid slot name '" + name + "'");
    return s;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::pi2_power(int e)
{
    if (e < 0) throw Error("negative exponent");
    Monomial m;
    m.pi2_ = e;
    return m;
}

Monomial Monomial::var(Slot s, int e) { return Monomial().with_exponent(s, e); }

int Monomial::exponent(Slot s) const
{
    auto it = std::lower_bound(vars_.begin(), vars_.end(), s,
                               [](const auto& p, Slot v) { return p.first < v; });
    return (it != vars_.end() && it->first == s) ? it->second : 0;
}

int Monomial::weight() const
{
    return std::accumulate(vars_.begin(), vars_.end(), pi2_,
                           [](int acc, const auto& p) { return acc + p.second; });
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    Monomial r;
    r.pi2_ = pi2_ + rhs.pi2_;
    r.vars_.reserve(vars_.size() + rhs.vars_.size());
    auto a = vars_.begin();
    auto b = rhs.vars_.begin();
    while (a != vars_.end() || b != rhs.vars_.end()) {
        if (b == rhs.vars_.end() || (a != vars_.end() && a->first < b->first)) {
            r.vars_.push_back(*a++);
        } else if (a == vars_.end() || b->first < a->first) {
            r.vars_.push_back(*b++);
        } else {
            r.vars_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::with_exponent(Slot s, int e) const
{
    if (e < 0) throw Error("negative exponent");
    Monomial r = *this;
    auto it = std::lower_bound(r.vars_.begin(), r.vars_.end(), s,
                               [](const auto& p, Slot v) { return p.first < v; });
    if (it != r.vars_.end() && it->first == s) {
        if (e == 0)
            r.vars_.erase(it);
        else
            it->second = e;
    } else if (e != 0) {
        r.vars_.insert(it, {s, e});
    }
    return r;
}

Monomial Monomial::with_pi2(int e) const
{
    if (e < 0) throw Error("negative exponent");
    Monomial r = *this;
    r.pi2_ = e;
    return r;
}

// -------------------------------------------------------------- GradedPoly

GradedPoly::GradedPoly(const Rational& c)
{
    if (c != 0) terms_.emplace(Monomial(), c);
}

GradedPoly GradedPoly::term(const Rational& c, const Monomial& m)
{
    GradedPoly p;
    p.add_term(m, c);
    return p;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational GradedPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Slot> GradedPoly::slots() const
{
    std::set<Slot> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.vars()) out.insert(s);
    return out;
}

int GradedPoly::degree_in(Slot s) const
{
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
    return d;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs)
{
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b)
{
    GradedPoly r;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma * mb, prod);
        }
    }
    return r;
}

GradedPoly GradedPoly::operator-() const
{
    GradedPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

GradedPoly poly_add(const GradedPoly& p, const GradedPoly& q) { return p + q; }
GradedPoly poly_mul(const GradedPoly& p, const GradedPoly& q) { return p * q; }

GradedPoly relabel(const GradedPoly& p, const std::map<Slot, Slot>& mapping)
{
    std::set<Slot> images;
    for (const auto& [from, to] : mapping) {
        if (!images.insert(to).second) throw Error("relabeling is not injective");
    }
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial out = Monomial::pi2_power(m.pi2_exp());
        for (const auto& [s, e] : m.vars()) {
            auto it = mapping.find(s);
            if (it == mapping.end()) throw Error("incomplete relabeling");
            out = out * Monomial::var(it->second, e);
        }
        r.add_term(out, c);
    }
    return r;
}

GradedPoly merge_slots(const GradedPoly& p, Slot from, Slot into)
{
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(from);
        r.add_term(m.without(from).with_exponent(into, m.exponent(into) + e), c);
    }
    return r;
}

std::map<int, GradedPoly> split_by_slot(const GradedPoly& p, Slot slot)
{
    std::map<int, GradedPoly> groups;
    for (const auto& [m, c] : p.terms()) groups[m.exponent(slot)].add_term(m.without(slot), c);
    return groups;
}

GradedPoly substitute(const GradedPoly& p, Slot slot, const Rational& value)
{
    const Rational sq = value * value;
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        Rational f = 1;
        for (int k = 0; k < m.exponent(slot); ++k) f *= sq;
        r.add_term(m.without(slot), c * f);
    }
    return r;
}

GradedPoly halve_integrate(const GradedPoly& p, Slot slot)
{
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(slot);
        r.add_term(m, c / Rational(2 * (2 * e + 1)));
    }
    return r;
}

GradedPoly double_derivative(const GradedPoly& v, Slot slot)
{
    GradedPoly r;
    for (const auto& [m, c] : v.terms()) {
        const int e = m.exponent(slot);
        r.add_term(m, c * Rational(2 * (2 * e + 1)));
    }
    return r;
}

ScopedPrecision::ScopedPrecision(unsigned digits10)
    : saved_(BigFloat::default_precision())
{
    BigFloat::default_precision(digits10);
}

ScopedPrecision::~ScopedPrecision() { BigFloat::default_precision(saved_); }

BigFloat pi_value(unsigned digits10)
{
    ScopedPrecision guard(digits10);
    BigFloat pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

namespace {

BigFloat to_big(const Rational& q)
{
    BigFloat num(q.get_num().get_str());
    BigFloat den(q.get_den().get_str());
    return num / den;
}

}  // namespace

BigFloat evaluate(const GradedPoly& p, const std::map<Slot, Rational>& values, unsigned digits10)
{
    ScopedPrecision guard(digits10 + 5);
    const BigFloat pi = pi_value(digits10 + 5);
    const BigFloat pi2 = pi * pi;
    BigFloat total = 0;
    for (const auto& [m, c] : p.terms()) {
        BigFloat t = to_big(c) * pow(pi2, m.pi2_exp());
        for (const auto& [s, e] : m.vars()) {
            auto it = values.find(s);
            if (it == values.end()) throw Error("missing value for slot " + slot_name(s));
            Rational v = it->second * it->second;
            t *= pow(to_big(v), e);
        }
        total += t;
    }
    BigFloat out;
    out.precision(digits10);
    out = total;
    return out;
}

// -------------------------------------------------------------- VolumePoly

VolumePoly::VolumePoly(int g, int n, GradedPoly poly) : g_(g), n_(n), poly_(std::move(poly))
{
    if (!is_stable(g, n) || n < 1)
        throw Error("unstable or unsupported type (g,n)=(" + std::to_string(g) + "," +
                    std::to_string(n) + ")");
}

namespace {

std::string describe(const Monomial& m, const Rational& c)
{
    std::ostringstream os;
    os << to_string(c) << " * pi^" << 2 * m.pi2_exp();
    for (const auto& [s, e] : m.vars()) os << " * b" << slot_name(s) << "^" << 2 * e;
    return os.str();
}

}  // namespace

InvariantReport check_volume_invariants(const VolumePoly& v)
{
    InvariantReport rep;
    const int dim = v.dimension();
    for (const auto& [m, c] : v.poly().terms()) {
        if (m.weight() != dim)
            rep.violations.push_back("homogeneity: weight " + std::to_string(m.weight()) +
                                     " != " + std::to_string(dim) + " in " + describe(m, c));
        if (c <= 0) rep.violations.push_back("positivity: " + describe(m, c));
        for (const auto& [s, e] : m.vars()) {
            if (s < 1 || s > v.n())
                rep.violations.push_back("slot out of range in " + describe(m, c));
        }
    }
    if (v.poly().is_zero()) rep.violations.push_back("positivity: zero polynomial");

    // Every permutation for small n; beyond that the transpositions (1 i),
    // which generate the symmetric group.
    const int n = v.n();
    auto check_perm = [&](const std::vector<int>& perm) {
        std::map<Slot, Slot> mapping;
        for (int i = 0; i < n; ++i) mapping[i + 1] = perm[static_cast<std::size_t>(i)];
        if (relabel(v.poly(), mapping) == v.poly()) return;
        std::ostringstream os;
        os << "symmetry: not invariant under permutation (";
        for (int i = 0; i < n; ++i) os << (i ? " " : "") << perm[static_cast<std::size_t>(i)];
        os << ")";
        rep.violations.push_back(os.str());
    };
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    if (n <= 6) {
        while (std::next_permutation(perm.begin(), perm.end())) check_perm(perm);
    } else {
        for (int i = 2; i <= n; ++i) {
            std::vector<int> t = perm;
            std::swap(t[0], t[static_cast<std::size_t>(i - 1)]);
            check_perm(t);
        }
    }
    return rep;
}

}  // namespace wpv
