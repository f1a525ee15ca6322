#include "ckx/json_io.hpp"

namespace ckx {

nlohmann::json blades_to_json(const CliffordElement& e) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [mask, c] : e.terms()) j[blade_token(mask)] = c.str();
    return j;
}

nlohmann::json element_to_json(const CliffordElement& e) {
    return nlohmann::json{{"m", e.dim()}, {"blades", blades_to_json(e)}};
}

CliffordElement element_from_blades_json(const nlohmann::json& j, unsigned m) {
    CliffordElement e(m);
    for (const auto& [token, value] : j.items())
        e.add_term(blade_from_token(token, m), Rational::from_string(value.get<std::string>()));
    return e;
}

nlohmann::json polynomial_to_json(const CliffordPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, c] : p.terms())
        terms.push_back({{"exps", mono}, {"coeff", blades_to_json(c)}});
    return nlohmann::json{{"m", p.dim()}, {"terms", std::move(terms)}};
}

CliffordPolynomial polynomial_from_json(const nlohmann::json& j) {
    unsigned m = j.at("m").get<unsigned>();
    CliffordPolynomial p(m);
    for (const auto& t : j.at("terms")) {
        Monomial mono = t.at("exps").get<Monomial>();
        p.add_term(mono, element_from_blades_json(t.at("coeff"), m));
    }
    return p;
}

nlohmann::json axial_to_json(const AxialPair& pair) {
    auto profile = [](const RadialPolynomial& r) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, c] : r.terms())
            arr.push_back({k.first, k.second, blades_to_json(c)});
        return arr;
    };
    return nlohmann::json{{"m", pair.m}, {"A", profile(pair.A)}, {"B", profile(pair.B)}};
}

nlohmann::json univariate_to_json(const UnivariatePoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : p.coeffs()) arr.push_back({{"exp", k}, {"coeff", blades_to_json(c)}});
    return nlohmann::json{{"m", p.dim()}, {"coeffs", std::move(arr)}};
}

}  // namespace ckx
