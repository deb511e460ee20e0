#include "thetapark/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace thetapark {

using nlohmann::json;

json poly_to_json(const QPoly& p) {
    json terms = json::array();
    for (int e = 0; e <= p.degree(); ++e) {
        const Rational& c = p.coeff(e);
        if (c == 0) continue;
        if (denominator(c) != 1) throw std::invalid_argument("serialized polynomials must have integer coefficients");
        terms.push_back(json::array({e, numerator(c).str()}));
    }
    return terms;
}

QPoly poly_from_json(const json& j) {
    QPoly p;
    for (const auto& term : j) {
        int exp = term.at(0).get<int>();
        Int coeff(term.at(1).get<std::string>());
        p += QPoly::monomial(exp, Rational(coeff));
    }
    return p;
}

json expansion_to_json(const EExpansion& e) {
    json terms = json::array();
    for (const auto& [eta, poly] : e.terms()) {
        json term;
        term["eta"] = eta.parts();
        term["poly"] = poly_to_json(poly);
        terms.push_back(std::move(term));
    }
    json out;
    out["degree"] = e.degree();
    out["basis"] = "e";
    out["terms"] = std::move(terms);
    return out;
}

EExpansion expansion_from_json(const json& j) {
    EExpansion e(j.at("degree").get<int>());
    for (const auto& term : j.at("terms"))
        e.add_term(Partition(term.at("eta").get<std::vector<int>>()), poly_from_json(term.at("poly")));
    return e;
}

json path_pair_to_json(const PathPair& p) {
    json out;
    out["P"] = p.top;
    out["Q"] = p.bottom;
    out["w"] = p.labels;
    out["area"] = area(p);
    if (static_cast<int>(p.labels.size()) == p.height())
        out["eta"] = e_composition(p).sorted().parts();
    else
        out["eta"] = eta_partition(p.top).parts();
    return out;
}

PathPair path_pair_from_json(const json& j) {
    PathPair p;
    p.top = j.at("P").get<std::string>();
    p.bottom = j.at("Q").get<std::string>();
    if (j.contains("w")) p.labels = j.at("w").get<Word>();
    if (!valid_steps(p.top) || !valid_steps(p.bottom))
        throw std::invalid_argument("paths must consist of N and E steps");
    return p;
}

json epositivity_to_json(const EPositivityReport& report) {
    json out;
    out["lambda"] = report.lambda.parts();
    out["gamma"] = report.gamma.parts();
    out["all_nonnegative"] = report.all_nonnegative;
    if (!report.all_nonnegative) out["counterexample"] = report.counterexample;
    json terms = json::array();
    for (const EPositivityTerm& term : report.terms) {
        json entry;
        entry["eta"] = term.eta.parts();
        json coeffs = json::array();
        for (int t_exp = 0; t_exp < static_cast<int>(term.u_polys_by_t.size()); ++t_exp) {
            const QPoly& pu = term.u_polys_by_t[static_cast<size_t>(t_exp)];
            for (int u_exp = 0; u_exp <= pu.degree(); ++u_exp) {
                const Rational& c = pu.coeff(u_exp);
                if (c == 0) continue;
                std::ostringstream s;
                s << c;
                coeffs.push_back(json::array({u_exp, t_exp, s.str()}));
            }
        }
        entry["coeffs"] = std::move(coeffs);
        terms.push_back(std::move(entry));
    }
    out["terms"] = std::move(terms);
    return out;
}

Partition parse_partition(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad partition entry: " + item);
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

} // namespace thetapark
