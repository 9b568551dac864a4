#ifndef PFAFFELL_MODEL_IO_HPP
#define PFAFFELL_MODEL_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfaffell/errors.hpp"
#include "pfaffell/tau_model.hpp"

namespace pfaffell::hirota {

/// Model file schema:
/// { "variant": "KP"|"Toda", "M": int,
///   "terms": [ { "t": [e0, e1, ...], "tbar": [..]?, "coeff": [re, im] }, ... ] }
/// KP terms must have real coefficients and no tbar block; Toda files are
/// rejected when conjugation symmetry fails beyond 1e-12.
inline PolynomialTauModel model_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("variant") || !j.contains("M") || !j.contains("terms")) {
        throw domain_error("model file: expected object with variant, M, terms");
    }
    const std::string variant = j.at("variant").get<std::string>();
    if (variant != "KP" && variant != "Toda") {
        throw domain_error("model file: variant must be \"KP\" or \"Toda\"");
    }
    const int m = j.at("M").get<int>();
    PolynomialTauModel model(variant == "KP" ? Variant::KP : Variant::Toda, m);
    for (const auto& term : j.at("terms")) {
        std::vector<int> te, tbe;
        if (term.contains("t")) te = term.at("t").get<std::vector<int>>();
        if (term.contains("tbar")) tbe = term.at("tbar").get<std::vector<int>>();
        const auto& cj = term.at("coeff");
        complex coeff;
        if (cj.is_array()) {
            if (cj.size() != 2) throw domain_error("model file: coeff must be [re, im]");
            coeff = complex(cj[0].get<double>(), cj[1].get<double>());
        } else {
            coeff = complex(cj.get<double>(), 0.0);
        }
        model.add_term(std::move(te), std::move(tbe), coeff);
    }
    model.require_real_form(1e-12);
    return model;
}

inline PolynomialTauModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open model file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        return model_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("model file schema error: ") + e.what());
    }
}

inline nlohmann::json model_to_json(const PolynomialTauModel& model) {
    nlohmann::json j;
    j["variant"] = model.variant() == Variant::KP ? "KP" : "Toda";
    j["M"] = model.max_index();
    j["terms"] = nlohmann::json::array();
    for (const auto& [key, coeff] : model.terms()) {
        nlohmann::json term;
        term["t"] = key.first;
        if (!key.second.empty()) term["tbar"] = key.second;
        term["coeff"] = {coeff.real(), coeff.imag()};
        j["terms"].push_back(term);
    }
    return j;
}

inline void save_model(const PolynomialTauModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write model file: " + path);
    out << model_to_json(model).dump(2) << "\n";
}

} // namespace pfaffell::hirota

#endif // PFAFFELL_MODEL_IO_HPP
