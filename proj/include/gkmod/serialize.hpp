#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and CSV encodings of the library's value types. Field order is
 *        fixed (insertion order) so equal inputs always produce equal bytes.
 */

#include <charconv>
#include <complex>
#include <stdexcept>
#include <string>
#include <system_error>

#include <json.hpp>

#include "gkmod/deform.hpp"
#include "gkmod/families.hpp"
#include "gkmod/hermitian.hpp"
#include "gkmod/structure.hpp"

namespace gkmod {

using Json = nlohmann::ordered_json;

// Shortest round-trip decimal text for a double.
inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buf, res.ptr);
}

// {"c": ["re", "im"], "q": "n"} with lowest-terms rational strings.
inline Json scalar_to_json(const RadicalScalar& s) {
    Json j;
    j["c"] = Json::array({format_rat(s.coeff().re), format_rat(s.coeff().im)});
    j["q"] = s.radicand().str();
    return j;
}

inline RadicalScalar scalar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("c") || !j.contains("q") || !j["c"].is_array() ||
        j["c"].size() != 2)
        throw std::invalid_argument("scalar JSON needs {\"c\":[re,im],\"q\":radicand}");
    const CRat c(parse_rat(j["c"][0].get<std::string>()), parse_rat(j["c"][1].get<std::string>()));
    return RadicalScalar(c, parse_rat(j["q"].get<std::string>()));
}

// Exact parameters carry rational strings; float parameters carry a pair of
// doubles under "float".
inline Json nu_to_json(const NuParameter& nu) {
    Json j;
    if (const auto* r = std::get_if<ExactReal>(&nu)) {
        j["re"] = format_rat(r->value);
        j["im"] = "0";
    } else if (const auto* i = std::get_if<ExactImaginary>(&nu)) {
        j["re"] = "0";
        j["im"] = format_rat(i->t);
    } else {
        const std::complex<double> z = std::get<FloatNu>(nu).z;
        j["float"] = Json::array({z.real(), z.imag()});
    }
    return j;
}

inline NuParameter nu_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("parameter JSON must be an object");
    if (j.contains("float")) {
        if (!j["float"].is_array() || j["float"].size() != 2)
            throw std::invalid_argument("float parameter needs [re, im]");
        return nu_float({j["float"][0].get<double>(), j["float"][1].get<double>()});
    }
    const Rat re = parse_rat(j.value("re", std::string("0")));
    const Rat im = parse_rat(j.value("im", std::string("0")));
    if (re != 0 && im != 0)
        throw std::invalid_argument("exact parameters live on the real or imaginary axis");
    if (im != 0) return nu_imag(im);
    return nu_real(re);
}

inline std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Principal: return "pi";
        case FamilyKind::Deformed: return "Pi";
        case FamilyKind::Alternate: return "piPrime";
        case FamilyKind::PsiDeformed: return "psiCustom";
    }
    throw std::invalid_argument("unknown family kind");
}

inline FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "pi") return FamilyKind::Principal;
    if (name == "Pi") return FamilyKind::Deformed;
    if (name == "piPrime") return FamilyKind::Alternate;
    if (name == "psiCustom") return FamilyKind::PsiDeformed;
    throw std::invalid_argument("unknown family kind '" + name + "'");
}

// Gauge handles are referred to by registry name; arbitrary closures have no
// serialized form.
inline PsiHandle psi_handle_by_name(const std::string& name) {
    if (name == "canonical") return canonical_psi();
    if (name == "one") return trivial_psi();
    throw std::invalid_argument("unknown psi handle '" + name + "' (use \"canonical\" or \"one\")");
}

inline Json family_spec_to_json(const FamilySpec& spec) {
    Json j;
    j["kind"] = family_kind_name(spec.kind);
    j["epsilon"] = spec.epsilon;
    j["nu"] = nu_to_json(spec.nu);
    j["window"] = spec.window;
    if (spec.kind == FamilyKind::PsiDeformed) {
        if (!spec.psi) throw std::invalid_argument("psiCustom spec without a psi handle");
        if (spec.psi->description.rfind("canonical", 0) == 0)
            j["psi"] = "canonical";
        else if (spec.psi->description == "constant 1")
            j["psi"] = "one";
        else
            throw std::invalid_argument("psi handle '" + spec.psi->description +
                                        "' has no registry name");
    }
    return j;
}

inline FamilySpec family_spec_from_json(const Json& j) {
    FamilySpec spec;
    spec.kind = family_kind_from_name(j.at("kind").get<std::string>());
    spec.epsilon = j.at("epsilon").get<int>();
    if (spec.epsilon != 1 && spec.epsilon != -1)
        throw std::invalid_argument("epsilon must be +1 or -1");
    spec.nu = nu_from_json(j.at("nu"));
    spec.window = j.value("window", 30);
    if (spec.kind == FamilyKind::PsiDeformed)
        spec.psi = psi_handle_by_name(j.value("psi", std::string("canonical")));
    return spec;
}

// Ascending-source list of banded entries.
inline Json operator_to_json(const WeightOperator<RadicalScalar>& op) {
    Json arr = Json::array();
    for (const auto& [src, val] : op.entries()) {
        Json entry;
        entry["src"] = src;
        entry["dst"] = src + op.shift();
        entry["val"] = scalar_to_json(val);
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline WeightOperator<RadicalScalar> operator_from_json(const Json& j, const WeightWindow& window,
                                                        int shift) {
    WeightOperator<RadicalScalar> op(window, shift);
    if (!j.is_array()) throw std::invalid_argument("operator JSON must be a list of entries");
    for (const Json& entry : j) {
        const int src = entry.at("src").get<int>();
        if (entry.at("dst").get<int>() != src + shift)
            throw std::invalid_argument("entry destination does not match the weight shift");
        op.set(src, scalar_from_json(entry.at("val")));
    }
    return op;
}

inline Json series_report_to_json(const SeriesReport& report) {
    Json j;
    Json factors = Json::array();
    for (const FactorLabel& label : report.factors) factors.push_back(label.str());
    j["factors"] = std::move(factors);
    j["bracket"] = report.bracket;
    j["completelyReducible"] = report.completely_reducible;
    j["indecomposable"] = report.indecomposable;
    return j;
}

inline std::string probe_direction_name(ProbeDirection direction) {
    switch (direction) {
        case ProbeDirection::FromAbove: return "+";
        case ProbeDirection::FromBelow: return "-";
        case ProbeDirection::Imaginary: return "i";
    }
    throw std::invalid_argument("unknown probe direction");
}

inline Json probe_to_json(long nu0, int m, ProbeDirection direction, const ProbeResult& result) {
    Json j;
    j["nu0"] = nu0;
    j["m"] = m;
    j["exists"] = result.exists;
    j["value"] = Json::array({result.value.real(), result.value.imag()});
    j["rate"] = result.rate;
    j["direction"] = probe_direction_name(direction);
    return j;
}

// CSV rows ascending in weight; header "weight,value,sign".
inline std::string form_to_csv(const FormTable<Rat>& form) {
    std::string out = "weight,value,sign\n";
    for (const auto& [j, value] : form.values) {
        out += std::to_string(j);
        out += ',';
        out += format_rat(value);
        out += ',';
        out += std::to_string(rat_sign(value));
        out += '\n';
    }
    return out;
}

inline std::string form_to_csv(const FormTable<double>& form) {
    std::string out = "weight,value,sign\n";
    for (const auto& [j, value] : form.values) {
        out += std::to_string(j);
        out += ',';
        out += format_double(value);
        out += ',';
        out += std::to_string(value > 0 ? 1 : value < 0 ? -1 : 0);
        out += '\n';
    }
    return out;
}

} // namespace gkmod
