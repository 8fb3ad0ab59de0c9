#pragma once

#include <json.hpp>

#include "wittrb/algebra.hpp"

namespace wittrb {

// ordered_json keeps insertion order, so reports are byte-stable across runs.
using Json = nlohmann::ordered_json;

// CoeffPoly <-> JSON array of rational strings, index = degree in c.
inline Json poly_to_json(const CoeffPoly& p) {
    Json arr = Json::array();
    for (const auto& r : p.coeffs()) arr.push_back(rational_str(r));
    return arr;
}

inline CoeffPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("CoeffPoly must be a JSON array of rational strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError("CoeffPoly entries must be rational strings");
        coeffs.push_back(parse_rational(item.get<std::string>()));
    }
    return CoeffPoly(std::move(coeffs));
}

inline Json basis_to_json(const BasisVector& bv) {
    return Json{{"family", bv.family == BasisVector::Family::L ? "L" : "G"},
                {"degree", bv.degree}};
}

inline BasisVector basis_from_json(const Json& j) {
    const std::string fam = j.at("family").get<std::string>();
    if (fam != "L" && fam != "G") throw ParseError("basis vector family must be 'L' or 'G'");
    return {fam == "L" ? BasisVector::Family::L : BasisVector::Family::G,
            j.at("degree").get<int>()};
}

inline Json element_to_json(const Element& e) {
    Json arr = Json::array();
    for (const auto& [bv, coeff] : e.terms()) {
        Json t = basis_to_json(bv);
        t["coeff"] = poly_to_json(coeff);
        arr.push_back(std::move(t));
    }
    return arr;
}

inline Element element_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("Element must be a JSON array of terms");
    Element e;
    for (const auto& t : j) e.add_term(basis_from_json(t), poly_from_json(t.at("coeff")));
    return e;
}

} // namespace wittrb
