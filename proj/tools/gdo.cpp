// gdo: command-line front end for the generalized Dirac oscillator library.
//
//   gdo check|spectrum|wavefunction|verify|models --config <path> [--out <path>]
//       [--numeric] [--level N] [--model gdo|gajc|gjc] [--mode contour|real_line]

#include "gdo/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const gdo::CommandResult& result, const std::string& out_path)
{
    if (!result.error.empty()) std::cerr << result.error << "\n";
    if (result.output.empty()) return result.exit_code;
    if (out_path.empty()) {
        std::cout << result.output;
        std::cout.flush();
        return result.exit_code;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write \"" << out_path << "\"\n";
        return gdo::kExitInputError;
    }
    out << result.output;
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Dirac oscillator: checks, spectra, wavefunctions and model reports"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool numeric = false;
    int level = -1;
    std::string model = "gdo";
    std::string mode;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--out", out_path, "write the artifact here instead of stdout");
        sub->add_option("--mode", mode, "numeric route for cot: contour or real_line")
            ->check(CLI::IsMember({"contour", "real_line"}));
    };

    CLI::App* check = app.add_subcommand("check", "pseudo-Hermiticity condition report (JSON)");
    CLI::App* spectrum = app.add_subcommand("spectrum", "Dirac spectrum table (JSON)");
    CLI::App* wavefunction = app.add_subcommand("wavefunction", "sampled spinor (CSV)");
    CLI::App* verify = app.add_subcommand("verify", "full verification suite (JSON)");
    CLI::App* models = app.add_subcommand("models", "GAJC/GJC ground-state report (JSON)");
    for (CLI::App* sub : {check, spectrum, wavefunction, verify, models}) add_common(sub);
    spectrum->add_flag("--numeric", numeric, "add finite-difference eigenvalues");
    wavefunction->add_option("--level", level, "-1 for the singlet, n >= 0 for E_{n+1}");
    wavefunction->add_option("--model", model, "spinor convention")->check(CLI::IsMember({"gdo", "gajc", "gjc"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return gdo::kExitInputError;
    }

    const gdo::CommandResult result = gdo::guarded([&]() -> gdo::CommandResult {
        gdo::RunConfig cfg = gdo::load_config(config_path);
        if (!mode.empty()) cfg.mode = mode == "contour" ? gdo::NumericMode::Contour : gdo::NumericMode::RealLine;
        if (check->parsed()) return gdo::run_check(cfg);
        if (spectrum->parsed()) return gdo::run_spectrum(cfg, numeric);
        if (wavefunction->parsed())
            return gdo::run_wavefunction(cfg, level, model == "gjc" ? gdo::SpinorModel::GJC : gdo::SpinorModel::GDO);
        if (verify->parsed()) return gdo::run_verify(cfg);
        return gdo::run_models(cfg);
    });
    return emit(result, out_path);
}
