#include "lct/charp.hpp"
#include "lct/curves.hpp"
#include "lct/error.hpp"
#include "lct/ideal.hpp"
#include "lct/lct_engine.hpp"
#include "lct/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace lct;

struct Outcome {
    json report;
    std::vector<std::string> lines;
    int exit_code = 0;
};

json make_report(const std::string& command, json inputs) {
    json r;
    r["command"] = command;
    r["inputs"] = std::move(inputs);
    r["result"] = json::object();
    r["status"] = "ok";
    r["diagnostics"] = json::array();
    return r;
}

Outcome error_outcome(const std::string& command, json inputs,
                      const std::vector<std::string>& diagnostics, int exit_code) {
    Outcome out;
    out.report = make_report(command, std::move(inputs));
    out.report["status"] = "error";
    for (const std::string& d : diagnostics) out.report["diagnostics"].push_back(d);
    out.exit_code = exit_code;
    return out;
}

json rational_array(const RatVec& v) {
    json a = json::array();
    for (const Rational& r : v) a.push_back(r.str());
    return a;
}

json matrix_rows(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError({"cannot open input file '" + path + "'"});
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::int64_t budget_limit() {
    const char* env = std::getenv("LCT_BUDGET");
    if (env == nullptr) return Budget{}.limit;
    const std::string text(env);
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size() || v <= 0) throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw ValidationError({"LCT_BUDGET must be a positive integer, got '" + text + "'"});
    }
}

ExponentVector parse_exponent_list(const std::string& text, std::size_t expected) {
    ExponentVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string token = text.substr(start, comma - start);
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(token, &pos);
            if (pos != token.size() || v < 0) throw std::invalid_argument("range");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError({"--contains entries must be nonnegative integers, got '" +
                                   token + "'"});
        }
        start = comma + 1;
    }
    if (out.size() != expected)
        throw ValidationError({"--contains needs " + std::to_string(expected) +
                               " entries, got " + std::to_string(out.size())});
    return out;
}

Outcome run_ideal(json inputs, const std::string& path, bool with_certificate,
                  bool allow_upper_bound) {
    Outcome out;
    out.report = make_report("ideal", std::move(inputs));
    const IdealSpec spec = parse_ideal(read_file(path));
    const LctCertificate cert = compute_lct(spec);

    json& result = out.report["result"];
    result["lct"] = cert.value.str();
    result["certified"] = cert.status == CertStatus::exact;
    result["solution"] = rational_array(cert.solution);
    if (with_certificate) {
        json c;
        c["rank"] = cert.rank;
        c["kernel_dimension"] = cert.kernel_dim;
        c["matrix"] = matrix_rows(cert.matrix);
        c["witness"] =
            cert.criterion_witness ? rational_array(*cert.criterion_witness) : json();
        result["certificate"] = std::move(c);
    }
    for (const std::string& note : cert.notes) out.report["diagnostics"].push_back(note);

    out.lines.push_back("lct = " + cert.value.str());
    out.lines.push_back(cert.status == CertStatus::exact
                            ? "status: exact (criterion witness found)"
                            : "status: upper bound only (no criterion witness)");
    if (with_certificate) {
        if (cert.criterion_witness)
            out.lines.push_back("witness = " + to_string(*cert.criterion_witness));
        out.lines.push_back("rank = " + std::to_string(cert.rank) + ", kernel dimension = " +
                            std::to_string(cert.kernel_dim));
    }
    if (cert.status != CertStatus::exact) {
        out.report["status"] = "upper_bound_only";
        out.exit_code = allow_upper_bound ? 0 : 3;
    }
    return out;
}

Outcome run_curve(json inputs, const std::array<std::int64_t, 3>& exponents,
                  const std::string& method_name) {
    Outcome out;
    out.report = make_report("curve", std::move(inputs));
    const CurveMethod method = method_name == "table"  ? CurveMethod::table
                               : method_name == "lp"   ? CurveMethod::lp
                                                       : CurveMethod::both;
    const CurveReport rep = curve_lct(exponents, method);
    const bool ci = rep.params.kind == CurveKind::complete_intersection;

    json& result = out.report["result"];
    result["kind"] = ci ? "complete_intersection" : "almost_complete_intersection";
    result["weights"] =
        json::array({rep.params.weights[0], rep.params.weights[1], rep.params.weights[2]});
    result["permutation"] = json::array(
        {rep.params.permutation[0], rep.params.permutation[1], rep.params.permutation[2]});
    std::string param_line;
    if (ci) {
        const auto& p = std::get<CiParams>(rep.params.params);
        result["parameters"] = json{{"a1", p.a1}, {"b1", p.b1}, {"c", p.c},
                                    {"a2", p.a2}, {"b2", p.b2}};
        param_line = "a1 = " + std::to_string(p.a1) + ", b1 = " + std::to_string(p.b1) +
                     ", c = " + std::to_string(p.c) + ", a2 = " + std::to_string(p.a2) +
                     ", b2 = " + std::to_string(p.b2);
    } else {
        const auto& p = std::get<HerzogParams>(rep.params.params);
        result["parameters"] = json{{"a1", p.a1}, {"a2", p.a2}, {"b1", p.b1},
                                    {"b2", p.b2}, {"c1", p.c1}, {"c2", p.c2}};
        param_line = "a1 = " + std::to_string(p.a1) + ", a2 = " + std::to_string(p.a2) +
                     ", b1 = " + std::to_string(p.b1) + ", b2 = " + std::to_string(p.b2) +
                     ", c1 = " + std::to_string(p.c1) + ", c2 = " + std::to_string(p.c2);
    }
    if (rep.table)
        result["table"] = json{{"row", rep.table->row}, {"value", rep.table->value.str()}};
    if (rep.certificate)
        result["program"] = json{{"value", rep.certificate->value.str()},
                                 {"certified", rep.certificate->status == CertStatus::exact}};
    result["lct"] = rep.lct.str();

    out.lines.push_back(std::string("kind = ") +
                        (ci ? "complete intersection" : "almost complete intersection"));
    out.lines.push_back("weights: x = " + std::to_string(rep.params.weights[0]) +
                        ", y = " + std::to_string(rep.params.weights[1]) +
                        ", z = " + std::to_string(rep.params.weights[2]));
    out.lines.push_back("parameters: " + param_line);
    if (rep.table)
        out.lines.push_back("table row " + std::to_string(rep.table->row) + ": " +
                            rep.table->value.str());
    if (rep.certificate)
        out.lines.push_back("program value = " + rep.certificate->value.str() +
                            (rep.certificate->status == CertStatus::exact ? " (certified)"
                                                                          : " (upper bound)"));
    out.lines.push_back("lct = " + rep.lct.str());
    return out;
}

Outcome run_verify(json inputs, const std::string& path, std::int64_t p, int e) {
    Outcome out;
    out.report = make_report("verify", std::move(inputs));
    Budget budget;
    budget.limit = budget_limit();
    const IdealSpec spec = parse_ideal(read_file(path));
    const LctCertificate cert = compute_lct(spec);

    std::vector<std::string> warnings;
    std::optional<std::int64_t> modulus;
    std::optional<NuReport> nr;
    if (cert.status == CertStatus::exact && cert.criterion_witness) {
        modulus = n_modulus(cert);
        if ((p - 1) % *modulus == 0) {
            nr = fpt_lower_check(spec, cert, p, e, budget);
        } else {
            warnings.push_back("p = " + std::to_string(p) + " is not 1 mod " +
                               std::to_string(*modulus) +
                               "; the lower bound is not guaranteed");
        }
    } else {
        warnings.push_back("the threshold is only an upper bound; no lower-bound guarantee");
    }
    if (!nr) {
        NuReport manual;
        manual.p = p;
        manual.e = e;
        manual.nu = nu(spec, p, e, budget, &cert);
        manual.q = 1;
        for (int t = 0; t < e; ++t) manual.q *= p;
        manual.ratio = Rational(manual.nu, manual.q);
        if (cert.status == CertStatus::exact) {
            manual.lower_bound = cert.value * Rational(manual.q - 1);
            manual.bound_satisfied = Rational(manual.nu) >= *manual.lower_bound;
        }
        nr = std::move(manual);
    }

    json& result = out.report["result"];
    result["p"] = nr->p;
    result["e"] = nr->e;
    result["q"] = nr->q;
    result["nu"] = nr->nu;
    result["ratio"] = nr->ratio.str();
    result["lct"] = cert.value.str();
    result["certified"] = cert.status == CertStatus::exact;
    result["budget_used"] = budget.used;
    if (modulus) result["witness_modulus"] = *modulus;
    if (nr->lower_bound) {
        result["lower_bound"] = nr->lower_bound->str();
        result["bound_satisfied"] = *nr->bound_satisfied;
    }
    for (const std::string& w : warnings) out.report["diagnostics"].push_back(w);

    out.lines.push_back("p = " + std::to_string(nr->p) + ", e = " + std::to_string(nr->e) +
                        ", q = " + std::to_string(nr->q));
    out.lines.push_back("nu = " + std::to_string(nr->nu));
    out.lines.push_back("ratio nu/q = " + nr->ratio.str());
    out.lines.push_back("lct = " + cert.value.str() +
                        (cert.status == CertStatus::exact ? "" : " (upper bound)"));
    if (nr->lower_bound)
        out.lines.push_back("lower bound " + nr->lower_bound->str() +
                            (*nr->bound_satisfied ? ": satisfied" : ": VIOLATED"));
    return out;
}

Outcome run_monomial(json inputs, const std::string& path,
                     const std::optional<std::string>& t_text,
                     const std::optional<std::string>& contains_text) {
    Outcome out;
    out.report = make_report("monomial", std::move(inputs));
    if (t_text.has_value() != contains_text.has_value())
        throw ValidationError({"--t and --contains must be given together"});

    const IdealSpec spec = parse_ideal(read_file(path));
    if (!spec.binomials.empty())
        throw ValidationError({"binomial generators are not supported by this command"});
    std::vector<ExponentVector> monomials;
    for (const MonomialGen& m : spec.monomials) monomials.push_back(m.exponents);

    const Rational value = monomial_lct(monomials);
    out.report["result"]["lct"] = value.str();
    out.lines.push_back("lct = " + value.str());

    if (t_text) {
        const std::optional<Rational> t = Rational::parse(*t_text);
        if (!t || t->sign() <= 0)
            throw ValidationError({"--t must be a positive rational, got '" + *t_text + "'"});
        const ExponentVector c = parse_exponent_list(*contains_text, spec.var_count());
        const bool member = multiplier_monomial_contains(c, *t, monomials);
        out.report["result"]["contains"] = member;
        out.lines.push_back(std::string("contains = ") + (member ? "true" : "false"));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact log canonical thresholds of binomial ideals"};
    app.require_subcommand(1);
    bool json_mode = false, quiet = false;
    app.add_flag("--json", json_mode, "emit a machine-readable JSON report");
    app.add_flag("--quiet", quiet, "suppress stdout, keep the exit code");

    std::string ideal_path;
    bool with_certificate = false, allow_upper_bound = false;
    CLI::App* ideal = app.add_subcommand("ideal", "threshold of a binomial ideal from a JSON file");
    ideal->add_option("file", ideal_path, "ideal description")->required();
    ideal->add_flag("--certificate", with_certificate,
                    "include witness, matrix, rank and kernel dimension");
    ideal->add_flag("--allow-upper-bound", allow_upper_bound,
                    "exit 0 even when the value is only an upper bound");
    ideal->fallthrough();

    std::array<std::int64_t, 3> exponents{};
    std::string method = "both";
    CLI::App* curve = app.add_subcommand("curve", "threshold of a space monomial curve");
    curve->add_option("n1", exponents[0], "first exponent")->required();
    curve->add_option("n2", exponents[1], "second exponent")->required();
    curve->add_option("n3", exponents[2], "third exponent")->required();
    curve->add_option("--method", method, "table, lp or both")
        ->check(CLI::IsMember({"table", "lp", "both"}));
    curve->fallthrough();

    std::string verify_path;
    std::int64_t prime = 0;
    int exp = 1;
    CLI::App* verify = app.add_subcommand("verify", "characteristic-p count against the threshold");
    verify->add_option("file", verify_path, "ideal description")->required();
    verify->add_option("--prime", prime, "prime characteristic")->required();
    verify->add_option("--exp", exp, "power of p to test");
    verify->fallthrough();

    std::string monomial_path;
    std::string t_text, contains_text;
    CLI::App* monomial = app.add_subcommand("monomial", "threshold of a monomial ideal");
    monomial->add_option("file", monomial_path, "ideal description")->required();
    CLI::Option* t_opt = monomial->add_option("--t", t_text, "multiplier ideal parameter");
    CLI::Option* contains_opt =
        monomial->add_option("--contains", contains_text, "comma-separated exponents to test");
    monomial->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    json inputs;
    Outcome out;
    try {
        if (ideal->parsed()) {
            command = "ideal";
            inputs = json{{"file", ideal_path},
                          {"certificate", with_certificate},
                          {"allow_upper_bound", allow_upper_bound}};
            out = run_ideal(inputs, ideal_path, with_certificate, allow_upper_bound);
        } else if (curve->parsed()) {
            command = "curve";
            inputs = json{{"exponents", json::array({exponents[0], exponents[1], exponents[2]})},
                          {"method", method}};
            out = run_curve(inputs, exponents, method);
        } else if (verify->parsed()) {
            command = "verify";
            inputs = json{{"file", verify_path}, {"prime", prime}, {"exp", exp}};
            out = run_verify(inputs, verify_path, prime, exp);
        } else {
            command = "monomial";
            inputs = json{{"file", monomial_path}};
            std::optional<std::string> t, contains;
            if (t_opt->count() > 0) {
                t = t_text;
                inputs["t"] = t_text;
            }
            if (contains_opt->count() > 0) {
                contains = contains_text;
                inputs["contains"] = contains_text;
            }
            out = run_monomial(inputs, monomial_path, t, contains);
        }
    } catch (const ValidationError& e) {
        out = error_outcome(command, inputs, e.diagnostics(), 2);
    } catch (const BudgetError& e) {
        out = error_outcome(command, inputs, {e.what()}, 4);
    } catch (const Error& e) {
        out = error_outcome(command, inputs, {e.what()}, 2);
    }

    if (!quiet) {
        if (json_mode) {
            std::cout << out.report.dump() << "\n";
        } else {
            for (const std::string& line : out.lines) std::cout << line << "\n";
        }
    }
    const bool failed = out.report["status"] == "error";
    for (const auto& d : out.report["diagnostics"])
        std::cerr << (failed ? "error: " : "note: ") << d.get<std::string>() << "\n";
    return out.exit_code;
}
