#include "vlink/jsonio.hpp"

namespace vlink {

nlohmann::ordered_json lp_to_json(const LaurentPolynomial& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e, c});
    return out;
}

LaurentPolynomial lp_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("polynomial json must be an array of pairs");
    LaurentPolynomial p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
            !t[1].is_number_integer())
            throw DomainError("polynomial term must be an [exponent, coefficient] pair");
        p.add_term(t[1].get<int64_t>(), t[0].get<int64_t>());
    }
    return p;
}

nlohmann::ordered_json es_to_json(const ExponentSum& e) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [g, c] : e.terms())
        out.push_back(nlohmann::ordered_json{{"coeff", c}, {"exp", lp_to_json(g)}});
    return out;
}

ExponentSum es_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("series json must be an array of terms");
    ExponentSum e;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exp") ||
            !t["coeff"].is_number_integer())
            throw DomainError("series term must be {coeff, exp}");
        e.add_term(t["coeff"].get<int64_t>(), lp_from_json(t["exp"]));
    }
    return e;
}

nlohmann::ordered_json report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["input"] = r.input;
    j["components"] = r.components;
    j["spans"] = r.spans;
    auto wi = nlohmann::ordered_json::array();
    for (const auto& p : r.W_i) wi.push_back(lp_to_json(p));
    j["W"] = lp_to_json(r.W);
    j["Wbar"] = lp_to_json(r.Wbar);
    j["W_i"] = wi;
    j["P"] = r.P ? lp_to_json(*r.P) : nlohmann::ordered_json(nullptr);
    j["f"] = r.f ? lp_to_json(*r.f) : nlohmann::ordered_json(nullptr);
    j["L_ts"] = es_to_json(r.L_ts);
    j["B"] = es_to_json(r.B);
    j["Bbar"] = es_to_json(r.Bbar);
    j["self_crossing_lower_bound"] = r.self_crossing_lower_bound;
    j["nonclassical"] = r.nonclassical;
    j["nontrivial_flat"] = r.nontrivial_flat;
    return j;
}

}  // namespace vlink
