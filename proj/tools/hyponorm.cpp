// hyponorm: construct weighted mean matrices, certify positivity of finite
// sections of I - P, and re-derive the closed forms symbolically.
//
// Exit codes: 0 certified / all checks green, 1 not positive / check failed,
// 2 inconclusive or refused, 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hyponorm/errors.hpp"
#include "hyponorm/matrices.hpp"
#include "hyponorm/positivity.hpp"
#include "hyponorm/regression.hpp"
#include "hyponorm/report.hpp"
#include "hyponorm/symbolic.hpp"

namespace {

using namespace hyponorm;

constexpr int kUsageError = 64;
constexpr const char* kOutputDirEnv = "HYPONORM_OUTPUT_DIR";

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            p = std::filesystem::path(dir) / p;
        }
    }
    return p;
}

void write_json(const Json& j, const std::optional<std::string>& path) {
    const std::string text = j.dump(2) + "\n";
    if (!path || *path == "-") {
        std::cout << text;
        return;
    }
    const auto target = resolve_output(*path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + target.string());
    out << text;
}

std::vector<Rational> parse_coefficients(const std::string& list) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        out.push_back(parse_rational(list.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct DumpArgs {
    std::string weights = "linear:2,1";
    std::string kind = "Q";
    std::size_t N = 0;
    std::optional<std::string> out;
    bool serial = false;
};

struct CertifyArgs {
    std::string weights = "linear:2,1";
    std::size_t N = 0;
    bool cross_check = false;
    bool bounds = false;
    bool override_hypotheses = false;
    bool serial = false;
    bool timings = false;
    bool deltas = false;
    std::optional<std::string> json;
};

struct SymbolicArgs {
    std::string weights = "linear:2,1";
    std::string emit = "qdiag";
    bool json = false;
    std::optional<std::string> bound_num;
    std::optional<std::string> bound_den;
};

struct CheckArgs {
    std::optional<std::string> json;
    bool serial = false;
};

int run_dump(const DumpArgs& args) {
    const FactorableGenerators g(parse_weights(args.weights));
    const auto kind = parse_matrix_kind(args.kind);
    const auto m = finite_section(g, kind, args.N, args.serial ? Execution::serial : Execution::parallel);
    write_json(to_json(m), args.out);
    return 0;
}

int run_certify(const CertifyArgs& args) {
    const FactorableGenerators g(parse_weights(args.weights));
    CertifyOptions options;
    options.cross_check_minors = args.cross_check;
    options.bounds = args.bounds;
    options.override_hypotheses = args.override_hypotheses;
    options.execution = args.serial ? Execution::serial : Execution::parallel;
    const auto report = certify(g, args.N, options);

    std::cout << "family      " << report.family << "\n"
              << "N           " << report.N << "\n"
              << "route       " << (report.route.empty() ? "-" : report.route) << "\n"
              << "verdict     " << to_string(report.verdict) << "\n";
    if (!report.refused && !report.deltas.empty()) {
        std::cout << "min delta   " << to_scientific(report.min_delta) << "\n"
                  << "det Q_N     " << to_scientific(report.determinant) << "\n";
    }
    if (report.bounds) {
        std::cout << "bounds      " << report.bounds->interior_checked << " interior, "
                  << report.bounds->interior_failures.size() << " failures, final "
                  << (report.bounds->final_holds ? "holds" : "FAILS") << "\n";
    }
    if (report.cross_check.ran) {
        std::cout << "minors      " << (report.cross_check.all_minors_positive ? "all positive" : "NOT all positive")
                  << ", determinant " << (report.cross_check.determinant_matches ? "matches" : "MISMATCH") << "\n";
    }
    std::cout << report.conclusion << "\n";

    if (args.json) write_json(to_json(report, args.timings, args.deltas), args.json);
    return exit_code(report.verdict);
}

int run_symbolic(const SymbolicArgs& args) {
    const auto seq = parse_weights(args.weights);
    const auto* lin = seq.as_linear();
    if (lin == nullptr) throw std::invalid_argument("symbolic mode supports linear weights only");

    Json out;
    out["weights"] = weights_spec(seq);
    out["emit"] = args.emit;
    int code = 0;
    if (args.emit == "qdiag") {
        const auto deg = degree_report(*lin);
        out["degrees"] = {{"numerator", deg.q_diag_num_degree}, {"denominator", deg.q_diag_den_degree}};
        try {
            const auto q = symbolic_q(*lin);
            out["diagonal"] = to_json(q.diagonal);
            out["offdiag_row"] = to_json(q.offdiag_row);
            out["offdiag_col"] = to_json(q.offdiag_col);
        } catch (const StructureError& e) {
            out["offdiag_note"] = e.what();
        }
    } else if (args.emit == "tridiag") {
        const auto t = symbolic_tridiagonal(*lin);
        out["z"] = to_json(t.z);
        out["d"] = to_json(t.d);
        out["s"] = to_json(t.s);
    } else if (args.emit == "certificate") {
        RationalFunction bound;
        if (args.bound_num || args.bound_den) {
            if (!args.bound_num || !args.bound_den) throw std::invalid_argument("--bound-num and --bound-den go together");
            bound = RationalFunction(Polynomial(parse_coefficients(*args.bound_num)),
                                     Polynomial(parse_coefficients(*args.bound_den)));
        } else if (seq.is_odd_integers()) {
            bound = odd_weights_interior_bound();
        } else {
            throw std::invalid_argument("no default bound for this family; pass --bound-num/--bound-den");
        }
        const auto cert = induction_certificate(*lin, bound);
        out["bound"] = to_json(bound);
        out["step_expression"] = to_json(cert.step_expression);
        out["certificate"] = to_json(cert.certificate);
        out["certificate_text"] = cert.certificate.to_string();
        out["numerator_scale"] = to_string(cert.numerator_scale);
        out["denominator_sign_definite"] = cert.denominator_sign_definite;
        out["nonneg_for_n_ge_1"] = cert.nonneg_for_n_ge_1;
        out["nonneg_for_n_ge_0"] = cert.nonneg_for_n_ge_0;
        out["base_case_holds"] = cert.base_case_holds;
        out["method"] = cert.method;
        if (seq.is_odd_integers()) {
            const auto k = positive_proportionality(cert.certificate, reference_induction_polynomial());
            out["reference"] = to_json(reference_induction_polynomial());
            out["proportional_to_reference"] = k.has_value();
            out["proportionality_constant"] = k ? Json(to_string(*k)) : Json(nullptr);
        }
        code = cert.nonneg_for_n_ge_1 && cert.base_case_holds ? 0 : 2;
    } else {
        throw std::invalid_argument("--emit must be qdiag, tridiag or certificate");
    }

    if (args.json) {
        write_json(out, std::nullopt);
    } else {
        for (const auto& [key, value] : out.items()) {
            if (value.is_object() && value.contains("text")) {
                std::cout << key << ": " << value["text"].get<std::string>() << "\n";
            } else {
                std::cout << key << ": " << value.dump() << "\n";
            }
        }
    }
    return code;
}

int run_paper_check(const CheckArgs& args) {
    RegressionConfig config;
    config.execution = args.serial ? Execution::serial : Execution::parallel;
    const auto checks = run_regression_bundle(config);
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.passed;
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    }
    if (args.json) write_json(to_json(checks), args.json);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of hyponormality for weighted mean matrices"};
    app.require_subcommand(1);

    DumpArgs dump;
    auto* dump_cmd = app.add_subcommand("dump", "Emit a finite section as JSON (array of p/q strings)");
    dump_cmd->add_option("--weights", dump.weights, "linear:ALPHA,BETA or table:v0,v1,...");
    dump_cmd->add_option("--kind", dump.kind, "M, B, P_closed, P_oracle or Q");
    dump_cmd->add_option("--N", dump.N, "section index (matrix is (N+1)x(N+1))")->required();
    dump_cmd->add_option("--out", dump.out, "output file (default stdout)");
    dump_cmd->add_flag("--serial", dump.serial, "use the serial reference kernels");

    CertifyArgs cert;
    auto* cert_cmd = app.add_subcommand("certify", "Certify positive definiteness of Q_N");
    cert_cmd->add_option("--weights", cert.weights, "linear:ALPHA,BETA or table:v0,v1,...");
    cert_cmd->add_option("--N", cert.N, "section index")->required();
    cert_cmd->add_flag("--cross-check-minors", cert.cross_check, "also compute all leading minors (Bareiss)");
    cert_cmd->add_flag("--bounds", cert.bounds, "check the explicit delta_n lower bounds (2n+1 only)");
    cert_cmd->add_flag("--override-hypotheses", cert.override_hypotheses, "proceed past violated hypotheses");
    cert_cmd->add_flag("--serial", cert.serial, "use the serial reference kernels");
    cert_cmd->add_flag("--timings", cert.timings, "include wall-clock timings in the JSON report");
    cert_cmd->add_flag("--deltas", cert.deltas, "include every delta_n in the JSON report");
    cert_cmd->add_option("--json", cert.json, "write the JSON report here ('-' for stdout)");

    SymbolicArgs sym;
    auto* sym_cmd = app.add_subcommand("symbolic", "Closed forms for linear weights");
    sym_cmd->add_option("--weights", sym.weights, "linear:ALPHA,BETA");
    sym_cmd->add_option("--emit", sym.emit, "qdiag, tridiag or certificate");
    sym_cmd->add_flag("--json", sym.json, "print JSON instead of text");
    sym_cmd->add_option("--bound-num", sym.bound_num, "ascending coefficients of the bound's numerator");
    sym_cmd->add_option("--bound-den", sym.bound_den, "ascending coefficients of the bound's denominator");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("paper-check", "Full regression bundle for w_n = 2n+1");
    check_cmd->add_option("--json", check.json, "write the check results here");
    check_cmd->add_flag("--serial", check.serial, "use the serial reference kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*dump_cmd) return run_dump(dump);
        if (*cert_cmd) return run_certify(cert);
        if (*sym_cmd) return run_symbolic(sym);
        if (*check_cmd) return run_paper_check(check);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return kUsageError;
}
