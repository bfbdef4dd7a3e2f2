#pragma once

/**
 * @file app.hpp
 * @brief The five CLI commands as library calls. Each returns the exit code
 *        and the artifact text; tools/gdo.cpp only parses flags and writes.
 *
 * Exit codes: 0 pass, 1 verification or range failure, 2 input error.
 */

#include "gdo/config.hpp"
#include "gdo/eigensolve.hpp"
#include "gdo/models.hpp"
#include "gdo/operators.hpp"
#include "gdo/report.hpp"
#include "gdo/spectra.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>

namespace gdo {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
    int exit_code = kExitPass;
    std::string output;
    std::string error;
};

// ---------------------------------------------------------------------------
// Logging to stderr, level from GDO_LOG.

enum class LogLevel { Quiet, Info, Debug };

inline LogLevel log_level()
{
    const char* env = std::getenv("GDO_LOG");
    if (!env) return LogLevel::Info;
    const std::string v(env);
    if (v == "quiet") return LogLevel::Quiet;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Info;
}

inline void log_message(LogLevel level, const std::string& msg)
{
    if (level == LogLevel::Quiet || static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::cerr << "[gdo " << (level == LogLevel::Debug ? "debug" : "info") << "] " << msg << "\n";
}

// ---------------------------------------------------------------------------
// Numeric routes for the lower-branch eigenvalues

/// Offset applied to the grid before sampling: the contour for Cot in
/// contour mode, the real line otherwise.
inline Complex sampling_shift(const RunConfig& cfg)
{
    if (std::holds_alternative<Cot>(cfg.interaction) && cfg.mode == NumericMode::Contour)
        return contour_shift(cfg.interaction, cfg.constants);
    return {};
}

/// The lowest `count` eigenvalues of the real problem -hbar^2 d^2 + V- on the
/// Hermitian-equivalent (Morse) or contour (Cot) route.
inline RealVector contour_route_eigenvalues(const RunConfig& cfg, std::size_t count)
{
    InteractionSpec spec = cfg.interaction;
    Complex shift{};
    if (std::holds_alternative<Morse>(spec)) spec = hermitian_equivalent_interaction(spec);
    else if (std::holds_alternative<Cot>(spec)) shift = contour_shift(spec, cfg.constants);
    const EffectivePotentialSample pot = effective_potentials(spec, cfg.grid, cfg.constants, shift);
    RealVector v(pot.v_minus.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = pot.v_minus[i].real();
    RealVector ev = schrodinger_eigenvalues(v, cfg.grid.spacing(), cfg.constants.hbar);
    if (ev.size() > count) ev.resize(count);
    return ev;
}

/// Eigenvalue of the complex real-line V- matrix nearest `seed`, or nullopt
/// when inverse iteration fails.
inline std::optional<Complex> real_line_eigenvalue(const RunConfig& cfg, Real seed)
{
    const EffectivePotentialSample pot = effective_potentials(cfg.interaction, cfg.grid, cfg.constants);
    const OperatorMatrix m = assemble_schrodinger(pot.v_minus, cfg.grid, cfg.constants);
    try {
        return inverse_iteration(m, seed, cfg.tolerances.residual, 100, cfg.grid.spacing()).eigenvalue;
    } catch (const ConvergenceError& e) {
        log_message(LogLevel::Debug, std::string("real-line inverse iteration: ") + e.what());
    } catch (const SingularPivotError& e) {
        log_message(LogLevel::Debug, std::string("real-line inverse iteration: ") + e.what());
    }
    return std::nullopt;
}

inline bool within_eigen_tolerance(Real analytic, Real numeric, Real eigen_rel)
{
    return std::abs(analytic - numeric) <= eigen_rel * std::max<Real>(1.0, std::abs(analytic));
}

// ---------------------------------------------------------------------------
// Commands

inline CommandResult run_check(const RunConfig& cfg)
{
    const Real theta = cfg.theta_override ? *cfg.theta_override : metric_theta(cfg.interaction, cfg.constants);
    const Grid grid = cfg.condition_grid ? *cfg.condition_grid : default_condition_grid(cfg.interaction);
    const ConditionReport r =
        check_pseudo_hermiticity_condition(cfg.interaction, theta, grid, cfg.constants, cfg.tolerances.condition);
    Json j;
    j["interaction"] = kind_name(cfg.interaction);
    j["theta_used"] = r.theta_used;
    j["max_deviation"] = r.max_deviation;
    j["tolerance"] = r.tolerance;
    j["worst_point"] = r.worst_point;
    j["passed"] = r.passed;
    return {r.passed ? kExitPass : kExitFailure, to_deterministic_json(j), {}};
}

inline CommandResult run_spectrum(const RunConfig& cfg, bool numeric)
{
    const std::vector<SpectralLine> lines = dirac_spectrum(cfg.interaction, cfg.constants, cfg.levels);
    RealVector contour;
    if (numeric && cfg.mode == NumericMode::Contour) contour = contour_route_eigenvalues(cfg, lines.size());

    bool all_within = true;
    Json out = Json::array();
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const SpectralLine& line = lines[k];
        Json j;
        j["n"] = line.n;
        j["epsilon"] = line.epsilon;
        j["energy_plus"] = line.energy_plus;
        j["energy_minus"] = line.energy_minus;
        j["source"] = to_string(line.source);
        if (numeric) {
            // The singlet pairs with eps-_0, line n with eps-_{n+1}.
            j["numeric_route"] = to_string(cfg.mode);
            if (cfg.mode == NumericMode::Contour) {
                if (k < contour.size()) {
                    const Real eps = contour[k];
                    const bool ok = within_eigen_tolerance(line.epsilon, eps, cfg.tolerances.eigen_rel);
                    all_within = all_within && ok;
                    j["epsilon_numeric"] = eps;
                    j["epsilon_numeric_imag"] = 0.0;
                    j["energy_numeric"] = eps > -cfg.constants.mass * cfg.constants.mass * cfg.constants.c * cfg.constants.c
                                              ? dirac_energy(eps, cfg.constants)
                                              : std::numeric_limits<Real>::quiet_NaN();
                    j["abs_deviation"] = std::abs(line.epsilon - eps);
                    j["within_tolerance"] = ok;
                } else {
                    all_within = false;
                    j["epsilon_numeric"] = nullptr;
                    j["within_tolerance"] = false;
                }
            } else {
                // Real-line values are a reality probe only; they never fail the run.
                const std::optional<Complex> lam = real_line_eigenvalue(cfg, line.epsilon);
                j["epsilon_numeric"] = lam ? Json(lam->real()) : Json(nullptr);
                j["epsilon_numeric_imag"] = lam ? Json(lam->imag()) : Json(nullptr);
                j["abs_deviation"] = lam ? Json(std::abs(line.epsilon - *lam)) : Json(nullptr);
                j["within_tolerance"] = lam ? Json(within_eigen_tolerance(line.epsilon, lam->real(), cfg.tolerances.eigen_rel))
                                            : Json(false);
            }
        }
        out.push_back(std::move(j));
    }
    return {all_within ? kExitPass : kExitFailure, to_deterministic_json(out), {}};
}

/// CSV number: %.17g without touching the sign of zero, so values re-parse bit-exactly.
inline std::string format_csv_real(Real x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline CommandResult run_wavefunction(const RunConfig& cfg, int level, SpinorModel model)
{
    if (level < -1) throw LevelOutOfRangeError("level must be >= -1");
    const std::vector<SpectralLine> lines = dirac_spectrum(cfg.interaction, cfg.constants, level + 2);
    if (static_cast<int>(lines.size()) < level + 2) {
        throw LevelOutOfRangeError("level " + std::to_string(level) + " is outside the bound spectrum (highest is " +
                                   std::to_string(lines.back().n) + ")");
    }
    const SpinorSample s = analytic_spinor(cfg.interaction, level, cfg.grid, cfg.constants, model, sampling_shift(cfg));
    std::string csv = "x,re_psi1,im_psi1,re_psi2,im_psi2\n";
    csv.reserve(csv.size() + s.grid.size() * 120);
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        csv += format_csv_real(s.grid[i]) + ',' + format_csv_real(s.psi1[i].real()) + ',' +
               format_csv_real(s.psi1[i].imag()) + ',' + format_csv_real(s.psi2[i].real()) + ',' +
               format_csv_real(s.psi2[i].imag()) + '\n';
    }
    return {kExitPass, std::move(csv), {}};
}

/// The nine verification checks on one configuration.
inline VerificationReport verification_report(const RunConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const InteractionSpec& spec = cfg.interaction;
    const PhysicalConstants& consts = cfg.constants;
    const Grid& grid = cfg.grid;
    const Complex shift = sampling_shift(cfg);
    VerificationReport report;

    {
        const Real theta = cfg.theta_override ? *cfg.theta_override : metric_theta(spec, consts);
        const Grid cgrid = cfg.condition_grid ? *cfg.condition_grid : default_condition_grid(spec);
        const ConditionReport r = check_pseudo_hermiticity_condition(spec, theta, cgrid, consts, cfg.tolerances.condition);
        report.add("pseudo_hermiticity_condition", r.max_deviation, r.tolerance, r.passed,
                   "max |f(x + i hbar theta) - conj f(x)|, theta = " + format_real(theta));
    }
    log_message(LogLevel::Debug, "condition check done");

    {
        const EffectivePotentialSample pot = effective_potentials(spec, grid, consts, shift);
        Real worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex z = grid[i] + shift;
            const auto [vm, vp] = closed_form_potentials(spec, z, consts);
            const Complex f = eval_f(spec, z, consts);
            const Real scale =
                std::max({std::abs(vm), std::abs(vp), std::norm(f), consts.hbar * std::abs(eval_f_prime(spec, z, consts)), 1e-300});
            worst = std::max({worst, std::abs(pot.v_minus[i] - vm) / scale, std::abs(pot.v_plus[i] - vp) / scale});
        }
        report.add_upper_bound("potential_closed_form", worst, 1e-12,
                               "max |V(f, f') - V(closed form)| / max(|V|, |f|^2, hbar |f'|)");
    }

    {
        const VerificationReport f = factorization_check(spec, grid, consts);
        const CheckResult& identity = f.checks.at(0);
        const CheckResult& order = f.checks.at(1);
        report.add("factorization", identity.measured, identity.threshold, identity.passed && order.passed,
                   "identity residual; commutator error ratio under h halving = " + format_real(order.measured) +
                       (order.passed ? "" : " (outside [3.5, 4.5])"));
    }
    log_message(LogLevel::Debug, "factorization check done");

    {
        const auto minus_count = bound_state_count(spec, Branch::Minus, consts);
        const auto plus_count = bound_state_count(spec, Branch::Plus, consts);
        const int limit = std::max(cfg.levels, 4);
        Real worst = 0.0;
        for (int n = 0; n < limit; ++n) {
            if (minus_count && n + 1 >= *minus_count) break;
            if (plus_count && n >= *plus_count) break;
            worst = std::max(worst, std::abs(epsilon_plus(spec, n, consts) - epsilon_minus(spec, n + 1, consts)));
        }
        const auto [partner, offset] = shape_partner(spec, consts);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex z = grid[i] + shift;
            const Complex vp = closed_form_potentials(spec, z, consts).second;
            const Complex vm = closed_form_potentials(partner, z, consts).first;
            worst = std::max(worst, std::abs(vp - vm - offset) / std::max<Real>(1.0, std::abs(vp)));
        }
        report.add_upper_bound("shape_invariance", worst, 1e-12,
                               "max of |eps+_n - eps-_{n+1}| and |V+(P) - V-(P') - R| / max(1, |V+|)");
    }

    const std::vector<SpectralLine> lines = dirac_spectrum(spec, consts, cfg.levels);
    {
        const RealVector numeric = contour_route_eigenvalues(cfg, lines.size());
        Real worst = 0.0;
        bool ok = numeric.size() == lines.size();
        for (std::size_t k = 0; k < lines.size() && k < numeric.size(); ++k) {
            worst = std::max(worst, std::abs(lines[k].epsilon - numeric[k]) / std::max<Real>(1.0, std::abs(lines[k].epsilon)));
        }
        ok = ok && worst <= cfg.tolerances.eigen_rel;
        report.add("eigenvalues_numeric", worst, cfg.tolerances.eigen_rel, ok,
                   "max |eps - eps_numeric| / max(1, |eps|) over " + std::to_string(lines.size()) + " lines");
    }
    log_message(LogLevel::Debug, "eigenvalue check done");

    {
        Real worst = 0.0;
        for (const SpectralLine& line : lines) {
            const SpinorCoefficients c = spinor_coefficients(line.energy_plus, consts);
            worst = std::max(worst, std::abs(c.a * c.a + c.b * c.b - 1.0));
        }
        report.add_upper_bound("spinor_coefficients", worst, 1e-12, "max |a^2 + b^2 - 1|");
    }

    {
        const OperatorMatrix gajc = assemble_model(ModelSpec::identified(ModelKind::GAJC, spec, consts), grid, consts);
        const OperatorMatrix dirac = assemble_dirac(spec, grid, consts);
        report.add_upper_bound("gajc_equals_gdo", max_abs_difference(gajc, dirac), 1e-14,
                               "max |H_GAJC(Omega = c, delta = mc^2) - H_GDO|");
        const OperatorMatrix gjc = assemble_model(ModelSpec::identified(ModelKind::GJC, spec, consts), grid, consts);
        const OperatorMatrix dual =
            assemble_model(ModelSpec::identified(ModelKind::GAJC, negate(spec), consts), grid, consts);
        report.add_upper_bound("gjc_duality", max_abs_difference(gjc, dual), 1e-14, "max |H_GJC(f) - H_GAJC(-f)|");
    }

    {
        const SpinorSample gdo = analytic_spinor(spec, -1, grid, consts, SpinorModel::GDO, shift);
        const SpinorSample gjc = analytic_spinor(spec, -1, grid, consts, SpinorModel::GJC, shift);
        Real empty = 0.0;
        for (const auto& z : gdo.psi2) empty = std::max(empty, std::abs(z));
        for (const auto& z : gjc.psi1) empty = std::max(empty, std::abs(z));
        const OperatorMatrix h_gdo = assemble_dirac(spec, grid, consts, shift);
        const OperatorMatrix h_gjc =
            assemble_model(ModelSpec::identified(ModelKind::GJC, spec, consts), grid, consts, shift);
        const Real e_gdo = singlet_energy(SpinorModel::GDO, consts);
        const Real e_gjc = singlet_energy(SpinorModel::GJC, consts);
        const Real rq_dev = std::max(std::abs(rayleigh_quotient(h_gdo, stacked(gdo)) - e_gdo),
                                     std::abs(rayleigh_quotient(h_gjc, stacked(gjc)) - e_gjc)) /
                            consts.rest_energy();
        const bool ok = empty == 0.0 && rq_dev <= 1e-12;
        report.add("singlet_structure", std::max(empty, rq_dev), 1e-12, ok,
                   "empty component exactly zero (max |.| = " + format_real(empty) +
                       ") and Rayleigh quotient at +-mc^2");
    }

    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline Json report_to_json(const VerificationReport& report)
{
    Json j;
    j["overall"] = report.overall();
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json item;
        item["name"] = c.name;
        item["measured"] = c.measured;
        item["threshold"] = c.threshold;
        item["passed"] = c.passed;
        item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline CommandResult run_verify(const RunConfig& cfg)
{
    const VerificationReport report = verification_report(cfg);
    // runtime_ms goes to the log, not the artifact, so reruns are byte-identical.
    log_message(LogLevel::Info, "verify runtime_ms = " + std::to_string(report.runtime_ms));
    for (const CheckResult& c : report.checks) {
        log_message(LogLevel::Debug, c.name + (c.passed ? " pass " : " FAIL ") + format_real(c.measured));
    }
    return {report.overall() ? kExitPass : kExitFailure, to_deterministic_json(report_to_json(report)), {}};
}

inline CommandResult run_models(const RunConfig& cfg)
{
    Json out;
    out["interaction"] = interaction_to_json(cfg.interaction);
    Json models = Json::array();
    for (ModelKind kind : {ModelKind::GAJC, ModelKind::GJC}) {
        const ModelSpec ms = ModelSpec::identified(kind, cfg.interaction, cfg.constants);
        const GroundStateReport r = ground_state_structure(ms, cfg.grid, cfg.constants, sampling_shift(cfg));
        Json j;
        j["kind"] = to_string(kind);
        j["omega"] = ms.omega_coupling;
        j["delta"] = ms.delta;
        j["ground_energy"] = r.ground_energy;
        j["singlet_spin"] = to_string(r.singlet_spin);
        j["occupied_component"] = to_string(r.occupied_component);
        j["rayleigh_quotient_re"] = r.rayleigh_quotient.real();
        j["rayleigh_quotient_im"] = r.rayleigh_quotient.imag();
        j["residual"] = r.residual;
        models.push_back(std::move(j));
    }
    out["models"] = std::move(models);
    const OperatorMatrix gjc = assemble_model(ModelSpec::identified(ModelKind::GJC, cfg.interaction, cfg.constants),
                                              cfg.grid, cfg.constants);
    const OperatorMatrix dual = assemble_model(
        ModelSpec::identified(ModelKind::GAJC, negate(cfg.interaction), cfg.constants), cfg.grid, cfg.constants);
    const Real duality = max_abs_difference(gjc, dual);
    out["duality_defect"] = duality;
    out["duality_passed"] = duality <= 1e-14;
    return {duality <= 1e-14 ? kExitPass : kExitFailure, to_deterministic_json(out), {}};
}

/// Runs `body`, mapping exceptions onto exit codes with the message in `error`.
inline CommandResult guarded(const std::function<CommandResult()>& body)
{
    try {
        return body();
    } catch (const ConfigError& e) {
        return {kExitInputError, {}, std::string("config error: ") + e.what()};
    } catch (const ParameterError& e) {
        return {kExitInputError, {}, std::string("parameter error: ") + e.what()};
    } catch (const UnsupportedError& e) {
        return {kExitInputError, {}, std::string("unsupported: ") + e.what()};
    } catch (const LevelOutOfRangeError& e) {
        return {kExitFailure, {}, std::string("level out of range: ") + e.what()};
    } catch (const std::exception& e) {
        return {kExitFailure, {}, std::string("error: ") + e.what()};
    }
}

} // namespace gdo
