#include "wpv/serialize.hpp"

namespace wpv {

using nlohmann::json;

json terms_to_json(const GradedPoly& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json vars = json::object();
        for (const auto& [s, e] : m.vars()) vars[slot_name(s)] = e;
        terms.push_back({{"pi2", m.pi2_exp()}, {"vars", vars}, {"coeff", to_string(c)}});
    }
    return terms;
}

GradedPoly terms_from_json(const json& terms)
{
    if (!terms.is_array()) throw Error("terms must be an array");
    GradedPoly p;
    try {
        for (const auto& t : terms) {
            const int pi2 = t.at("pi2").get<int>();
            Monomial m = Monomial::pi2_power(pi2);
            for (const auto& [name, e] : t.at("vars").items()) {
                const int exponent = e.get<int>();
                if (exponent <= 0) throw Error("variable exponents must be positive");
                m = m * Monomial::var(parse_slot(name), exponent);
            }
            const Rational c = parse_rational(t.at("coeff").get<std::string>());
            if (c == 0) throw Error("zero coefficient in serialized polynomial");
            if (p.coefficient(m) != 0) throw Error("duplicate monomial in serialized polynomial");
            p.add_term(m, c);
        }
    } catch (const json::exception& e) {
        throw Error(std::string("malformed polynomial: ") + e.what());
    }
    return p;
}

json volume_to_json(const VolumePoly& v)
{
    return {{"g", v.g()}, {"n", v.n()}, {"terms", terms_to_json(v.poly())}};
}

VolumePoly volume_from_json(const json& j)
{
    try {
        return VolumePoly(j.at("g").get<int>(), j.at("n").get<int>(), terms_from_json(j.at("terms")));
    } catch (const json::exception& e) {
        throw Error(std::string("malformed volume: ") + e.what());
    }
}

}  // namespace wpv
