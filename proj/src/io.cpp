#include "lfe/io.hpp"

#include <charconv>

#include <json.hpp>

#include "lfe/oracles.hpp"

namespace lfe {

namespace {

using nlohmann::ordered_json;

Complex parse_complex(const ordered_json& j, const std::string& where) {
    if (!j.is_object())
        throw SchemaError("instance document: " + where + " must be a {re, im} object");
    for (const auto& [key, value] : j.items())
        if (key != "re" && key != "im")
            throw SchemaError("instance document: unknown field '" + key + "' in " + where);
    if (!j.contains("re") || !j.contains("im"))
        throw SchemaError("instance document: " + where + " needs both re and im");
    if (!j["re"].is_number() || !j["im"].is_number())
        throw SchemaError("instance document: " + where + " re/im must be numbers");
    return {j["re"].get<double>(), j["im"].get<double>()};
}

ordered_json complex_json(const Complex& z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

LFunctionInstance parse_instance(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("instance document: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("instance document: top level must be an object");

    static const char* known[] = {"label", "m", "d", "N", "kappa", "mu", "coefficients",
                                  "builtin"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw SchemaError("instance document: unknown field '" + key + "'");
    }

    if (doc.contains("builtin")) {
        for (const auto& [key, value] : doc.items())
            if (key != "builtin" && key != "label")
                throw SchemaError("instance document: builtin reference admits only an "
                                  "optional label, found '" + key + "'");
        if (!doc["builtin"].is_string())
            throw SchemaError("instance document: builtin must be a string");
        LFunctionInstance inst = oracles::builtin_fixture(doc["builtin"].get<std::string>());
        if (doc.contains("label")) inst.label = doc["label"].get<std::string>();
        return inst;
    }

    for (const char* field : {"label", "m", "d", "N", "kappa", "mu", "coefficients"})
        if (!doc.contains(field))
            throw SchemaError(std::string("instance document: missing field '") + field + "'");

    LFunctionInstance inst;
    if (!doc["label"].is_string())
        throw SchemaError("instance document: label must be a string");
    inst.label = doc["label"].get<std::string>();
    for (const char* field : {"m", "d", "N"})
        if (!doc[field].is_number_integer())
            throw SchemaError(std::string("instance document: ") + field +
                              " must be an integer");
    inst.m = doc["m"].get<int>();
    inst.d = doc["d"].get<int>();
    inst.conductor = doc["N"].get<std::int64_t>();
    inst.root_number = parse_complex(doc["kappa"], "kappa");
    if (!doc["mu"].is_array())
        throw SchemaError("instance document: mu must be an array");
    for (std::size_t j = 0; j < doc["mu"].size(); ++j)
        inst.arch.mu.push_back(parse_complex(doc["mu"][j], "mu[" + std::to_string(j) + "]"));
    if (!doc["coefficients"].is_array())
        throw SchemaError("instance document: coefficients must be an array");
    std::vector<Complex> a;
    a.reserve(doc["coefficients"].size());
    for (std::size_t n = 0; n < doc["coefficients"].size(); ++n)
        a.push_back(
            parse_complex(doc["coefficients"][n], "coefficients[" + std::to_string(n) + "]"));
    inst.coefficients = std::make_shared<CoefficientSource>(std::move(a));
    validate_instance(inst);
    return inst;
}

std::string serialize_instance(const LFunctionInstance& inst) {
    ordered_json doc;
    doc["label"] = inst.label;
    doc["m"] = inst.m;
    doc["d"] = inst.d;
    doc["N"] = inst.conductor;
    doc["kappa"] = complex_json(inst.root_number);
    doc["mu"] = ordered_json::array();
    for (const Complex& mu : inst.arch.mu) doc["mu"].push_back(complex_json(mu));
    doc["coefficients"] = ordered_json::array();
    for (std::int64_t n = 1; n <= inst.coefficients->declared_length(); ++n)
        doc["coefficients"].push_back(complex_json(inst.coefficients->at(n)));
    return doc.dump(2) + "\n";
}

std::string serialize_result(const CentralValueResult& result) {
    ordered_json doc;
    doc["value"] = complex_json(result.value);
    doc["method"] = method_name(result.method);
    doc["terms_used"] = result.terms_used;
    doc["error_estimate"] = result.error_estimate;
    doc["C"] = result.constants.C;
    doc["eta"] = result.constants.eta;
    doc["lambda"] = complex_json(result.constants.lambda);
    return doc.dump(2) + "\n";
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace lfe
