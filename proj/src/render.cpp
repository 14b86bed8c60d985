#include "wpv/render.hpp"

#include <algorithm>

#include "wpv/serialize.hpp"

namespace wpv {

namespace {

std::string plain_monomial(const Monomial& m)
{
    std::string out;
    const auto factor = [&out](const std::string& base, int e) {
        if (!out.empty()) out += "*";
        out += base + "^" + std::to_string(2 * e);
    };
    if (m.pi2_exp() > 0) factor("pi", m.pi2_exp());
    for (const auto& [s, e] : m.vars()) factor(s > 0 ? "b" + std::to_string(s) : slot_name(s), e);
    return out;
}

std::string braced(const std::string& s) { return s.size() == 1 ? s : "{" + s + "}"; }

std::string latex_monomial(const Monomial& m)
{
    std::string out;
    if (m.pi2_exp() > 0) out += "\\pi^" + braced(std::to_string(2 * m.pi2_exp()));
    for (const auto& [s, e] : m.vars()) {
        out += s > 0 ? "b_" + braced(std::to_string(s)) : slot_name(s);
        out += "^" + braced(std::to_string(2 * e));
    }
    return out;
}

}  // namespace

std::vector<std::pair<Monomial, Rational>> display_order(const GradedPoly& p)
{
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.pi2_exp() != b.first.pi2_exp()) return a.first.pi2_exp() > b.first.pi2_exp();
        return a.first.vars() < b.first.vars();
    });
    return terms;
}

std::string render_plain(const GradedPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : display_order(p)) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = plain_monomial(m);
        if (mono.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

std::string render_latex(const GradedPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : display_order(p)) {
        const bool negative = c < 0;
        if (negative) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        const Integer num = abs(c.get_num());
        const Integer den = c.get_den();
        const std::string mono = latex_monomial(m);
        const std::string top = (num == 1 && !mono.empty()) ? mono : num.get_str() + mono;
        out += den == 1 ? top : "\\frac{" + top + "}{" + den.get_str() + "}";
    }
    return out;
}

std::string render_json(const VolumePoly& v) { return volume_to_json(v).dump(); }

}  // namespace wpv
