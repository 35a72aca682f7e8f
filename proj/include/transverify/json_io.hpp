#pragma once

#include <json.hpp>

#include "transverify/cancel.hpp"
#include "transverify/numeval.hpp"

namespace transverify {

using Json = nlohmann::ordered_json;

inline Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

// {"pi_degree": d, "zeta8": ["p/q", ...]} per term.
inline Json to_json(const Scalar& s) {
    Json arr = Json::array();
    for (const auto& [d, c] : s.terms()) {
        Json t;
        t["pi_degree"] = d;
        Json z = Json::array();
        for (int k = 0; k < 4; ++k) z.push_back(rational_to_string(c.coeff(k)));
        t["zeta8"] = z;
        arr.push_back(t);
    }
    return arr;
}

inline Json to_json(const QExpansion& q) {
    Json j;
    j["denom"] = kQDenom;
    j["trunc_num"] = q.trunc() >= kInfTrunc ? Json(nullptr) : Json(q.trunc());
    Json terms = Json::array();
    for (const auto& [n, c] : q.terms()) {
        Json t;
        t["num"] = n;
        t["coeff"] = to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        case Parity::None: return "none";
    }
    return "?";
}

inline Json to_json(const YSeries& s) {
    Json j;
    j["y_trunc"] = s.y_trunc();
    j["parity"] = parity_name(s.parity());
    Json terms = Json::array();
    for (const auto& [d, c] : s.terms()) {
        Json t;
        t["y_degree"] = d;
        t["coeff"] = to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline Json to_json(const ModularForm& f) {
    Json j;
    j["weight"] = f.weight;
    j["group"] = name(f.group);
    j["series"] = to_json(f.series);
    return j;
}

inline Json to_json(const Monomial& m) {
    Json j;
    j["X"] = m.x;
    j["U"] = m.u;
    j["odd"] = m.odd == kOddNone ? Json(nullptr) : Json(odd_name(m.odd));
    return j;
}

inline Json to_json(const FormElement& e) {
    Json arr = Json::array();
    for (const auto& [m, c] : e.terms()) {
        Json t;
        t["monomial"] = to_json(m);
        t["coeff"] = to_json(c);
        arr.push_back(t);
    }
    return arr;
}

inline Json to_json(const LawResult& r) {
    Json j;
    j["law_id"] = r.law_id;
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        Json t;
        t["v"] = to_json(s.v);
        t["tau"] = to_json(s.tau);
        t["lhs"] = to_json(s.lhs);
        t["rhs"] = to_json(s.rhs);
        t["residual"] = s.residual;
        samples.push_back(t);
    }
    j["samples"] = samples;
    j["max_residual"] = r.max_residual;
    j["pass"] = r.pass;
    return j;
}

inline Json to_json(const CancellationReport& r) {
    Json j;
    j["case"] = r.case_id;
    j["q_order"] = r.q_order;
    j["q_window_num"] = r.q_window;
    j["residual_zero"] = r.residual_zero;
    j["gamma0_side"] = r.gamma0_side_ok;
    j["const_term_equal"] = r.const_term_ok;
    j["q_integrality"] = r.q_integrality_ok;
    j["pass"] = r.ok();
    j["z0"] = to_json(r.z0);
    j["z1"] = to_json(r.z1);
    j["lhs_const"] = to_json(r.lhs_const);
    j["rhs_const"] = to_json(r.rhs_const);
    Json m;
    m["z0"] = r.matched_z0;
    m["z1"] = r.matched_z1;
    m["lhs_const"] = r.matched_lhs;
    j["matched_display"] = m;
    if (!r.failure_detail.empty()) j["detail"] = r.failure_detail;
    return j;
}

}  // namespace transverify
