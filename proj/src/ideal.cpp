#include "lct/ideal.hpp"

#include "lct/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

namespace lct {

using nlohmann::json;

std::int64_t h_degree(const ExponentVector& v, const std::vector<std::int64_t>& weights) {
    if (v.size() != weights.size()) throw Error("h_degree: vector/weights length mismatch");
    __int128 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
        acc += static_cast<__int128>(v[j]) * static_cast<__int128>(weights[j]);
    if (acc > std::numeric_limits<std::int64_t>::max() ||
        acc < std::numeric_limits<std::int64_t>::min())
        throw Error("h_degree: overflow");
    return static_cast<std::int64_t>(acc);
}

namespace {

bool all_zero(const ExponentVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; });
}

}  // namespace

std::vector<std::string> IdealSpec::validate() const {
    std::vector<std::string> diags;
    const std::size_t n = variables.size();

    if (variables.empty()) diags.push_back("variables: at least one variable is required");
    std::set<std::string> names;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].empty())
            diags.push_back("variables: name " + std::to_string(i + 1) + " is empty");
        else if (!names.insert(variables[i]).second)
            diags.push_back("variables: duplicate name \"" + variables[i] + "\"");
    }

    bool weights_usable = false;
    if (weights) {
        weights_usable = weights->size() == n;
        if (!weights_usable)
            diags.push_back("weights: expected " + std::to_string(n) + " entries, got " +
                            std::to_string(weights->size()));
        for (std::int64_t w : *weights)
            if (w <= 0) {
                diags.push_back("weights: entries must be positive");
                weights_usable = false;
                break;
            }
    }

    if (binomials.empty() && monomials.empty())
        diags.push_back("generators: at least one generator is required");

    const auto exps_ok = [&](const ExponentVector& v, const std::string& label) {
        if (v.size() != n) {
            diags.push_back(label + ": expected " + std::to_string(n) + " exponents, got " +
                            std::to_string(v.size()));
            return false;
        }
        for (std::int64_t e : v)
            if (e < 0) {
                diags.push_back(label + ": exponents must be nonnegative");
                return false;
            }
        return true;
    };

    for (std::size_t i = 0; i < binomials.size(); ++i) {
        const auto& b = binomials[i];
        const std::string label = "binomial " + std::to_string(i + 1);
        const bool plus_ok = exps_ok(b.plus, label + " plus");
        const bool minus_ok = exps_ok(b.minus, label + " minus");
        if (plus_ok && all_zero(b.plus)) diags.push_back(label + ": plus exponents are all zero");
        if (minus_ok && all_zero(b.minus)) diags.push_back(label + ": minus exponents are all zero");
        if (plus_ok && minus_ok && b.plus == b.minus)
            diags.push_back(label + ": plus and minus exponents coincide");
        if (b.coeff.is_zero()) diags.push_back(label + ": coefficient is zero");
        if (weights && weights_usable && plus_ok && minus_ok &&
            h_degree(b.plus, *weights) != h_degree(b.minus, *weights))
            diags.push_back(label + ": not homogeneous for the given weights (degrees " +
                            std::to_string(h_degree(b.plus, *weights)) + " and " +
                            std::to_string(h_degree(b.minus, *weights)) + ")");
    }

    for (std::size_t i = 0; i < monomials.size(); ++i) {
        const std::string label = "monomial " + std::to_string(i + 1);
        if (exps_ok(monomials[i].exponents, label) && all_zero(monomials[i].exponents))
            diags.push_back(label + ": exponents are all zero");
    }

    return diags;
}

namespace {

// Shape phase of parsing: JSON types and keys only. Value-level rules live
// in IdealSpec::validate so hand-built specs get the same checks.
std::optional<ExponentVector> read_exponents(const json& v, const std::string& label,
                                             std::vector<std::string>& diags) {
    if (!v.is_array()) {
        diags.push_back(label + ": must be an array of integers");
        return std::nullopt;
    }
    ExponentVector out;
    for (const auto& e : v) {
        if (!e.is_number_integer() && !e.is_number_unsigned()) {
            diags.push_back(label + ": must be an array of integers");
            return std::nullopt;
        }
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& label,
                std::vector<std::string>& diags) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            diags.push_back(label + ": unknown key \"" + item.key() + "\"");
}

}  // namespace

IdealSpec parse_ideal(const std::string& text) {
    const json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (root.is_discarded()) throw ValidationError({"input is not valid JSON"});
    if (!root.is_object()) throw ValidationError({"top level must be a JSON object"});

    std::vector<std::string> diags;
    check_keys(root, {"variables", "weights", "generators"}, "top level", diags);

    IdealSpec spec;

    if (!root.contains("variables")) {
        diags.push_back("\"variables\" is required");
    } else if (!root["variables"].is_array() ||
               !std::all_of(root["variables"].begin(), root["variables"].end(),
                            [](const json& s) { return s.is_string(); })) {
        diags.push_back("variables: must be an array of strings");
    } else {
        for (const auto& s : root["variables"]) spec.variables.push_back(s.get<std::string>());
    }

    if (root.contains("weights")) {
        if (auto w = read_exponents(root["weights"], "weights", diags))
            spec.weights = std::move(*w);
    }

    if (!root.contains("generators")) {
        diags.push_back("\"generators\" is required");
    } else if (!root["generators"].is_array()) {
        diags.push_back("generators: must be an array");
    } else {
        std::size_t index = 0;
        for (const auto& g : root["generators"]) {
            ++index;
            const std::string label = "generator " + std::to_string(index);
            if (!g.is_object()) {
                diags.push_back(label + ": must be an object");
                continue;
            }
            const std::string type =
                g.contains("type") && g["type"].is_string() ? g["type"].get<std::string>() : "";
            if (type == "binomial") {
                check_keys(g, {"type", "plus", "minus", "coeff"}, label, diags);
                BinomialGen b;
                bool ok = true;
                if (g.contains("plus")) {
                    auto e = read_exponents(g["plus"], label + " plus", diags);
                    if (e) b.plus = std::move(*e); else ok = false;
                } else { diags.push_back(label + ": \"plus\" is required"); ok = false; }
                if (g.contains("minus")) {
                    auto e = read_exponents(g["minus"], label + " minus", diags);
                    if (e) b.minus = std::move(*e); else ok = false;
                } else { diags.push_back(label + ": \"minus\" is required"); ok = false; }
                if (g.contains("coeff")) {
                    if (!g["coeff"].is_string()) {
                        diags.push_back(label + ": coeff must be a string \"p\" or \"p/q\"");
                        ok = false;
                    } else if (auto c = Rational::parse(g["coeff"].get<std::string>())) {
                        b.coeff = *c;
                    } else {
                        diags.push_back(label + ": coeff \"" + g["coeff"].get<std::string>() +
                                        "\" is not a rational \"p\" or \"p/q\"");
                        ok = false;
                    }
                }
                if (ok) spec.binomials.push_back(std::move(b));
            } else if (type == "monomial") {
                check_keys(g, {"type", "exponents"}, label, diags);
                if (g.contains("exponents")) {
                    if (auto e = read_exponents(g["exponents"], label + " exponents", diags))
                        spec.monomials.push_back(MonomialGen{std::move(*e)});
                } else {
                    diags.push_back(label + ": \"exponents\" is required");
                }
            } else {
                diags.push_back(label + ": type must be \"binomial\" or \"monomial\"");
            }
        }
    }

    if (!diags.empty()) throw ValidationError(std::move(diags));
    diags = spec.validate();
    if (!diags.empty()) throw ValidationError(std::move(diags));
    return spec;
}

std::string serialize_ideal(const IdealSpec& spec) {
    json root;
    root["variables"] = spec.variables;
    if (spec.weights) root["weights"] = *spec.weights;
    json gens = json::array();
    for (const auto& b : spec.binomials) {
        json g;
        g["type"] = "binomial";
        g["plus"] = b.plus;
        g["minus"] = b.minus;
        g["coeff"] = b.coeff.str();
        gens.push_back(std::move(g));
    }
    for (const auto& m : spec.monomials) {
        json g;
        g["type"] = "monomial";
        g["exponents"] = m.exponents;
        gens.push_back(std::move(g));
    }
    root["generators"] = std::move(gens);
    return root.dump();
}

}  // namespace lct
