// Command-line front end: classification, normal forms, certificates and
// parameter sweeps for perturbations of quadratic Lotka-Volterra fields.
//
// Exit codes: 0 success / integrable, 1 obstructed, 2 usage or parse error,
// 3 internal invariant failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lvint/analyzer.hpp"
#include "lvint/aplica.hpp"
#include "lvint/errors.hpp"
#include "lvint/homological.hpp"
#include "lvint/serialize.hpp"

namespace {

using lvint::BiPoly;
using lvint::PlanarField;
using lvint::Rational;
using nlohmann::json;

constexpr int kExitIntegrable = 0;
constexpr int kExitObstructed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct FieldInput {
    std::string aplica;
    std::string field_path;
    int max_degree = 0;  // 0: default (7 for --aplica, 12 for --field)

    void add_options(CLI::App* cmd) {
        cmd->add_option("--aplica", aplica,
                        "parameters k=v,... of the cubic perturbation family");
        cmd->add_option("--field", field_path, "path to a field json {\"P\":..,\"Q\":..}");
        cmd->add_option("--max-degree", max_degree, "truncation degree");
    }

    PlanarField load() const {
        if (aplica.empty() == field_path.empty())
            throw CLI::ValidationError("exactly one of --aplica or --field is required");
        if (!aplica.empty()) return lvint::aplica_field(lvint::parse_aplica_params(aplica));
        std::ifstream in(field_path);
        if (!in) throw CLI::ValidationError("cannot open field file: " + field_path);
        json j;
        in >> j;
        return lvint::field_from_json(j);
    }

    int degree() const { return max_degree > 0 ? max_degree : (!aplica.empty() ? 7 : 12); }
};

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string describe_obstruction(const lvint::Obstruction& o) {
    std::string s = "obstructed at degree " + std::to_string(o.degree) + " (";
    for (std::size_t i = 0; i < o.coords.size(); ++i) {
        if (i) s += ", ";
        s += o.coords[i].str() + " * " + o.basis[i].str();
    }
    return s + ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrability analysis of planar quadratic Lotka-Volterra perturbations"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file; command line flags win");
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    FieldInput classify_in, nf_in, fi_in, iif_in, curve_in;
    int fi_seed_power = 1;
    std::string curve_text, cofactor_text, dump_dir;

    CLI::App* classify_cmd = app.add_subcommand("classify", "decide formal integrability");
    classify_in.add_options(classify_cmd);

    CLI::App* nf_cmd = app.add_subcommand("normal-form", "orbital normal form report");
    nf_in.add_options(nf_cmd);
    nf_cmd->add_option("--dump-operators", dump_dir,
                       "write the homological operator matrices as CSV files");

    CLI::App* fi_cmd = app.add_subcommand("first-integral", "solve for a first integral");
    fi_in.add_options(fi_cmd);
    fi_cmd->add_option("--seed-power", fi_seed_power, "power of the primitive integral seed");

    CLI::App* iif_cmd = app.add_subcommand("iif", "solve for an inverse integrating factor");
    iif_in.add_options(iif_cmd);

    CLI::App* curve_cmd = app.add_subcommand("verify-curve", "check an invariant curve");
    curve_in.add_options(curve_cmd);
    curve_cmd->add_option("--curve", curve_text, "curve polynomial")->required();
    curve_cmd->add_option("--cofactor", cofactor_text, "expected cofactor (optional)");

    std::string c6_b02 = "0", c6_b11 = "0";
    int c6_degree = 12;
    CLI::App* c6_cmd = app.add_subcommand("case6-curve", "invariant curve of the sixth family");
    c6_cmd->add_option("--b02", c6_b02, "parameter b02");
    c6_cmd->add_option("--b11", c6_b11, "parameter b11");
    c6_cmd->add_option("--max-degree", c6_degree, "truncation degree");

    std::uint64_t sweep_seed = 1;
    std::size_t sweep_count = 20;
    std::string sweep_mode = "generic";
    int sweep_degree = 7;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "seeded parameter sweep");
    sweep_cmd->add_option("--seed", sweep_seed, "rng seed");
    sweep_cmd->add_option("--count", sweep_count, "number of samples");
    sweep_cmd->add_option("--mode", sweep_mode, "on-case-1..6 or generic");
    sweep_cmd->add_option("--max-degree", sweep_degree, "truncation degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (*classify_cmd) {
            auto verdict = lvint::classify(classify_in.load(), classify_in.degree());
            std::string text = verdict.integrable
                                   ? "integrable through degree " +
                                         std::to_string(classify_in.degree()) + "\n"
                                   : describe_obstruction(*verdict.obstruction);
            emit(lvint::to_json(verdict), format, text);
            return verdict.integrable ? kExitIntegrable : kExitObstructed;
        }
        if (*nf_cmd) {
            PlanarField f = nf_in.load();
            auto report = lvint::normal_form(f, nf_in.degree());
            if (!dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                for (int k = 2; k <= report.chain.max_degree(); ++k) {
                    std::ofstream out(dump_dir + "/ell_" + std::to_string(k) + ".csv");
                    out << lvint::operator_csv(lvint::build_ell(report.lv, k));
                }
            }
            std::string text = report.eta_all_zero()
                                   ? "normal form coefficients vanish through degree " +
                                         std::to_string(report.max_degree) + "\n"
                                   : "first nonzero coefficient at eta degree " +
                                         std::to_string(report.first_nonzero_eta()) + "\n";
            emit(lvint::to_json(report), format, text);
            return report.eta_all_zero() ? kExitIntegrable : kExitObstructed;
        }
        if (*fi_cmd) {
            auto result =
                lvint::solve_first_integral(fi_in.load(), fi_in.degree(), fi_seed_power);
            if (result.success) {
                emit(lvint::to_json(result.certificate), format,
                     "first integral: " + result.certificate.integral.str() + "\n");
                return kExitIntegrable;
            }
            emit(lvint::to_json(result.obstruction), format,
                 describe_obstruction(result.obstruction));
            return kExitObstructed;
        }
        if (*iif_cmd) {
            auto result = lvint::solve_iif(iif_in.load(), iif_in.degree());
            if (result.success) {
                emit(lvint::to_json(result.certificate), format,
                     "inverse integrating factor: " + result.certificate.v.str() + "\n");
                return kExitIntegrable;
            }
            emit(lvint::to_json(result.obstruction), format,
                 describe_obstruction(result.obstruction));
            return kExitObstructed;
        }
        if (*curve_cmd) {
            PlanarField f = curve_in.load();
            BiPoly curve = BiPoly::parse(curve_text);
            auto check = lvint::check_invariant_curve(f, curve, curve_in.degree());
            if (!check.invariant) {
                emit(json{{"invariant", false}, {"failing_degree", check.failing_degree}},
                     format,
                     "not invariant: fails at degree " + std::to_string(check.failing_degree) +
                         "\n");
                return kExitObstructed;
            }
            if (!cofactor_text.empty() &&
                !(check.certificate.cofactor == BiPoly::parse(cofactor_text))) {
                emit(json{{"invariant", true},
                          {"cofactor", check.certificate.cofactor.str()},
                          {"cofactor_matches", false}},
                     format,
                     "invariant, but cofactor is " + check.certificate.cofactor.str() + "\n");
                return kExitObstructed;
            }
            emit(lvint::to_json(check.certificate), format,
                 "invariant with cofactor " + check.certificate.cofactor.str() + "\n");
            return kExitIntegrable;
        }
        if (*c6_cmd) {
            auto cert = lvint::build_case6_curve(Rational::from_string(c6_b02),
                                                 Rational::from_string(c6_b11), c6_degree);
            emit(lvint::to_json(cert), format,
                 "curve: " + cert.curve.str() + "\ncofactor: " + cert.cofactor.str() + "\n");
            return kExitIntegrable;
        }
        if (*sweep_cmd) {
            auto report = lvint::run_sweep(sweep_seed, sweep_count, sweep_mode, sweep_degree);
            std::string text = "sweep " + report.mode + ": " +
                               std::to_string(report.integrable_count) + " integrable, " +
                               std::to_string(report.obstructed_count) + " obstructed, " +
                               std::to_string(report.disagreement_count) + " disagreements\n";
            emit(lvint::to_json(report), format, text);
            return report.disagreement_count == 0 ? kExitIntegrable : kExitInternal;
        }
    } catch (const lvint::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lvint::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const lvint::ComplementVerificationFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const lvint::HomologicalSolveFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const lvint::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
