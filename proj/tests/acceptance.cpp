// Acceptance runner: one PASS/FAIL line per criterion A1..A11.
//
//   gdo_acceptance --cli <gdo binary> --configs <dir> [--only A<k>]
//
// Exit status is 0 only when every selected criterion passes.

#include "gdo/app.hpp"
#include "oracles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace gdo;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Context {
    std::string cli;
    std::string configs;
};

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Closed-form level formulas, written out here rather than taken from the library.
double morse_eps_minus(double D, double alpha, int n) { return D * D - (D - n * alpha) * (D - n * alpha); }
double cot_eps_minus(double A, double alpha, int n) { return (A + n * alpha) * (A + n * alpha) - A * A; }

// ---------------------------------------------------------------------------

Outcome a1_morse_spectrum(const Context& ctx)
{
    const RunConfig cfg = load_config(ctx.configs + "/morse.json");
    const Morse m = std::get<Morse>(cfg.interaction);
    if (m.D != 2.5 || m.A != 1.0 || m.B != 0.5 || m.alpha != 1.0 || cfg.grid.x_min() != -6.0 ||
        cfg.grid.x_max() != 20.0 || cfg.grid.size() != 4000)
        return {false, "morse preset does not carry the acceptance parameters"};

    const auto t0 = std::chrono::steady_clock::now();
    // Hermitian-equivalent coupling A' = |A + iB|, B = 0.
    const Morse equivalent{2.5, std::sqrt(1.25), 0.0, 1.0};
    const auto pot = effective_potentials(equivalent, cfg.grid);
    RealVector v(cfg.grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = pot.v_minus[i].real();
    const RealVector ev = schrodinger_eigenvalues(v, cfg.grid.spacing());
    const double runtime = seconds_since(t0);

    double worst = 0.0;
    for (int n = 0; n < 2; ++n) worst = std::max(worst, std::abs(ev[n] - morse_eps_minus(2.5, 1.0, n)));
    const bool ok = worst <= 1e-3 && runtime < 5.0;
    return {ok, "eps0=" + fmt(ev[0]) + " eps1=" + fmt(ev[1]) + " max|dev|=" + fmt(worst) + " (tol 1e-3) runtime=" +
                    fmt(runtime) + "s (limit 5s)"};
}

Outcome a2_cot_spectrum(const Context& ctx)
{
    const RunConfig cfg = load_config(ctx.configs + "/cot.json");
    const Cot c = std::get<Cot>(cfg.interaction);
    const double delta = 1e-3;
    if (c.A != 1.0 || c.alpha != 1.0 || c.a != 0.0 || c.b != 0.3 || std::abs(cfg.grid.x_min() - delta) > 1e-15 ||
        std::abs(cfg.grid.x_max() - (kPi - delta)) > 1e-15 || cfg.grid.size() != 4000)
        return {false, "cot preset does not carry the acceptance parameters"};

    // Contour x = t + (a + ib)/alpha: the coupling becomes -A cot(alpha t), real.
    const ComplexVector shifted = sample_interaction(c, cfg.grid, {}, contour_shift(c));
    RealVector v(cfg.grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double t = cfg.grid[i];
        const double s = std::sin(t);
        // Direct real Poschl-Teller form A(A - alpha) cosec^2 - A^2.
        v[i] = c.A * (c.A - c.alpha) / (s * s) - c.A * c.A;
        if (std::abs(shifted[i].imag()) > 1e-12 * std::max(1.0, std::abs(shifted[i]))) {
            return {false, "contour coupling is not real at t=" + fmt(t)};
        }
    }
    const auto t0 = std::chrono::steady_clock::now();
    const RealVector ev = contour_route_eigenvalues(cfg, 4);
    const double runtime = seconds_since(t0);
    const RealVector direct = schrodinger_eigenvalues(v, cfg.grid.spacing());

    double worst = 0.0;
    std::string detail;
    for (int n = 0; n < 4; ++n) {
        const double exact = cot_eps_minus(1.0, 1.0, n);
        const double dev = std::abs(ev[n] - exact);
        const double rel = exact == 0.0 ? dev : dev / exact;
        worst = std::max(worst, rel);
        if (std::abs(ev[n] - direct[n]) > 1e-9 * std::max(1.0, exact)) return {false, "library and direct contour potentials disagree"};
        detail += "eps" + std::to_string(n) + "=" + fmt(ev[n]) + " ";
    }
    return {worst <= 1e-3 && runtime < 5.0,
            detail + "max rel dev=" + fmt(worst) + " (tol 1e-3) runtime=" + fmt(runtime) + "s (limit 5s)"};
}

Outcome a3_dirac_energies(const Context& ctx)
{
    const RunConfig morse = load_config(ctx.configs + "/morse.json");
    const RunConfig cot = load_config(ctx.configs + "/cot.json");
    const RealVector em = contour_route_eigenvalues(morse, 2);
    const RealVector ec = contour_route_eigenvalues(cot, 3);
    // E = +-sqrt(m^2 c^4 + c^2 eps) with m = c = 1.
    const auto energy = [](double eps) { return std::sqrt(1.0 + eps); };
    struct Case {
        const char* name;
        double numeric_eps;
        double expected;
    };
    const Case cases[] = {{"morse E1", em[1], std::sqrt(5.0)}, {"cot E1", ec[1], 2.0}, {"cot E2", ec[2], 3.0}};
    double worst = 0.0;
    std::string detail;
    for (const Case& c : cases) {
        for (const double sign : {1.0, -1.0}) {
            const double e = sign * energy(c.numeric_eps);
            const double rel = std::abs(e - sign * c.expected) / c.expected;
            worst = std::max(worst, rel);
            // The library conversion must agree with the direct formula.
            if (std::abs(dirac_energy(c.numeric_eps) - energy(c.numeric_eps)) > 1e-14 * c.expected)
                return {false, "dirac_energy disagrees with sqrt(1 + eps)"};
        }
        detail += std::string(c.name) + "=+-" + fmt(energy(c.numeric_eps)) + " ";
    }
    return {worst <= 1e-3, detail + "max rel dev=" + fmt(worst) + " (tol 1e-3)"};
}

Outcome a4_condition(const Context&)
{
    struct Case {
        const char* name;
        InteractionSpec spec;
        double theta;
        std::function<Complex(Complex)> f;
    };
    const oracle::MorseDirect md{2.5, 1.0, 0.5, 1.0};
    const oracle::CotDirect cd{1.0, 1.0, 0.0, 0.3};
    const std::vector<Case> cases = {
        {"morse", Morse{2.5, 1.0, 0.5, 1.0}, 2.0 * std::atan(0.5), [&](Complex x) { return md.f(x); }},
        {"cot", Cot{1.0, 1.0, 0.0, 0.3}, 0.6, [&](Complex x) { return cd.f(x); }},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const Grid grid = default_condition_grid(c.spec);
        if (grid.size() != 401) return {false, "condition grid is not 401 points"};
        const ConditionReport good = check_pseudo_hermiticity_condition(c.spec, c.theta, grid);
        const ConditionReport bad = check_pseudo_hermiticity_condition(c.spec, c.theta / 2.0, grid);
        // Independent evaluation of max |f(x + i theta) - conj f(x)| with hbar = 1.
        double direct = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            direct = std::max(direct, std::abs(c.f(Complex(grid[i], c.theta)) - std::conj(c.f(grid[i]))));
        }
        ok = ok && good.max_deviation <= 1e-10 && direct <= 1e-10 && bad.max_deviation > 1e-3;
        detail += std::string(c.name) + ": dev=" + fmt(good.max_deviation) + " direct=" + fmt(direct) +
                  " control(theta/2)=" + fmt(bad.max_deviation) + "; ";
    }
    return {ok, detail + "tol 1e-10, control > 1e-3"};
}

Outcome a5_reality_probe(const Context&)
{
    const Grid grid(-6.0, 20.0, 4000);
    const oracle::MorseDirect md{2.5, 1.0, 0.5, 1.0};
    ComplexVector v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = md.v_minus(grid[i]);
    const OperatorMatrix m = assemble_schrodinger(v, grid);
    bool ok = true;
    std::string detail;
    for (const double seed : {0.0, 4.0}) {
        const EigenResult r = inverse_iteration(m, seed, 1e-10, 200, grid.spacing());
        const double im = std::abs(r.eigenvalue.imag());
        const double re = std::abs(r.eigenvalue.real() - seed);
        ok = ok && r.converged && im <= 1e-6 && re <= 1e-3;
        detail += "seed " + fmt(seed) + ": lambda=" + fmt(r.eigenvalue.real()) + (r.eigenvalue.imag() < 0 ? "" : "+") +
                  fmt(r.eigenvalue.imag()) + "i; ";
    }
    return {ok, detail + "tol |Im|<=1e-6, |Re-seed|<=1e-3"};
}

Outcome a6_shape_invariance(const Context&)
{
    double worst_level = 0.0;
    int compared = 0;
    const std::vector<InteractionSpec> specs = {Morse{2.5, 1.0, 0.5, 1.0}, Morse{6.5, 1.5, -0.3, 0.8},
                                                Cot{1.0, 1.0, 0.0, 0.3}, Cot{2.5, 0.7, 0.4, -0.2}};
    for (const InteractionSpec& spec : specs) {
        const std::optional<int> count = bound_state_count(spec, Branch::Plus);
        const int top = count ? *count : 40;
        for (int n = 0; n < top; ++n) {
            worst_level = std::max(worst_level, std::abs(epsilon_plus(spec, n) - epsilon_minus(spec, n + 1)));
            ++compared;
        }
    }

    // Eigenfunction identity for Cot{A=1, b=0.3}. phi+_n(x; A) is obtained independently by
    // applying (d/dw + f) to the free-box state sin((n+2) w) of V-(A=1):
    //   phi+_n  ~  (n+2) cos((n+2) w) - cot(w) sin((n+2) w),   w = x - ib.
    const Cot base{1.0, 1.0, 0.0, 0.3};
    const Cot raised{2.0, 1.0, 0.0, 0.3};
    const auto phi_plus_oracle = [](int n, Complex w) {
        const double k = n + 2;
        return k * std::cos(k * w) - std::cos(w) / std::sin(w) * std::sin(k * w);
    };
    const Grid grid(0.05, kPi - 0.05, 801);
    double spread_stated = 0.0;
    double spread_same_index = 0.0;
    for (int n = 0; n < 2; ++n) {
        std::vector<Complex> oracle_vals, stated, same_index;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex x = grid[i];
            oracle_vals.push_back(phi_plus_oracle(n, x - Complex(0.0, 0.3)));
            stated.push_back(closed_form_phi(raised, Branch::Minus, n + 1, x).value);
            same_index.push_back(closed_form_phi(raised, Branch::Minus, n, x).value);
        }
        spread_stated = std::max(spread_stated, oracle::ratio_spread(stated, oracle_vals));
        spread_same_index = std::max(spread_same_index, oracle::ratio_spread(same_index, oracle_vals));
    }
    const bool ok = worst_level <= 1e-12 && spread_stated <= 1e-8;
    return {ok, "levels compared=" + std::to_string(compared) + " max|eps+_n - eps-_{n+1}|=" + fmt(worst_level) +
                    " (tol 1e-12); spread phi-_{n+1}(A+1)/phi+_n(A)=" + fmt(spread_stated) +
                    " (tol 1e-8); info: spread phi-_n(A+1)/phi+_n(A)=" + fmt(spread_same_index)};
}

Outcome a7_operator_algebra(const Context&)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> npts(11, 3000);
    const std::vector<std::pair<InteractionSpec, Grid>> cases = {
        {Morse{2.5, 1.0, 0.5, 1.0}, Grid(-6.0, 20.0, 4000)},
        {Cot{1.0, 1.0, 0.0, 0.3}, Grid(0.05, kPi - 0.05, 2000)},
        {Linear{1.3, 1}, Grid(-8.0, 8.0, 1000)},
    };
    double worst_rel = 0.0;
    double worst_abs = 0.0;
    for (const auto& [spec, base] : cases) {
        for (int trial = 0; trial < 4; ++trial) {
            const Grid grid = trial == 0 ? base : Grid(base.x_min(), base.x_max(), static_cast<std::size_t>(npts(rng)));
            const LadderPair l = assemble_ladder(spec, grid);
            const OperatorMatrix F = OperatorMatrix::diagonal_matrix(sample_interaction(spec, grid), "F");
            const OperatorMatrix p = momentum_matrix(grid);
            const OperatorMatrix lhs = l.A_sharp * l.A;
            const OperatorMatrix rhs = p * p + F * F + Complex(0.0, 1.0) * (F * p - p * F);
            const double diff = (lhs - rhs).max_abs();
            worst_abs = std::max(worst_abs, diff);
            worst_rel = std::max(worst_rel, diff / std::max(1.0, lhs.max_abs()));
        }
    }

    // (i/-hbar)[F, p] v against f' v with f' written out by hand.
    const oracle::MorseDirect md{2.5, 1.0, 0.5, 1.0};
    const auto morse_fp = [&](double x) { return Complex(md.A, md.B) * md.alpha * std::exp(-md.alpha * x); };
    const auto comm_error = [&](std::size_t n) {
        const Grid grid(-3.0, 6.0, n);
        const OperatorMatrix F = OperatorMatrix::diagonal_matrix(sample_interaction(Morse{2.5, 1.0, 0.5, 1.0}, grid));
        const OperatorMatrix p = momentum_matrix(grid);
        const OperatorMatrix c = Complex(0.0, -1.0) * (F * p - p * F);
        ComplexVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(grid[i]);
        const ComplexVector cv = c.apply(v);
        double err = 0.0;
        for (std::size_t i = 1; i + 1 < n; ++i) err = std::max(err, std::abs(cv[i] - morse_fp(grid[i]) * v[i]));
        return err;
    };
    const double ratio = comm_error(401) / comm_error(801);
    const bool ok = worst_rel <= 1e-12 && ratio >= 3.5 && ratio <= 4.5;
    return {ok, "max|A#A - (p^2+F^2+i[F,p])| relative=" + fmt(worst_rel) + " absolute=" + fmt(worst_abs) +
                    " (tol 1e-12 relative to max|A#A|); commutator error ratio=" + fmt(ratio) + " (band [3.5, 4.5])"};
}

Outcome a8_residual_convergence(const Context&)
{
    // phi1- of real Morse{D=2.5, A=1}: z^(s-1) e^(-z/2) L_1^(2s-2)(z), z = 2 e^-x, s = 2.5.
    const auto phi1 = [](double x) {
        const double z = 2.0 * std::exp(-x);
        return std::pow(z, 1.5) * std::exp(-z / 2.0) * (1.0 + 3.0 - z);
    };
    const oracle::MorseDirect md{2.5, 1.0, 0.0, 1.0};
    double err[2];
    const std::size_t sizes[2] = {2000, 4000};
    for (int k = 0; k < 2; ++k) {
        const Grid grid(-6.0, 20.0, sizes[k]);
        ComplexVector v(grid.size()), pot(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            v[i] = phi1(grid[i]);
            pot[i] = md.v_minus(grid[i]);
        }
        const OperatorMatrix m = assemble_schrodinger(pot, grid);
        err[k] = std::abs(rayleigh_quotient(m, v) - 4.0);
        // Same quotient from the library's sampled eigenfunction.
        const double lib = std::abs(rayleigh_quotient(m, analytic_phi(Morse{2.5, 1.0, 0.0, 1.0}, Branch::Minus, 1, grid)) - 4.0);
        if (std::abs(lib - err[k]) > 1e-9) return {false, "library phi1- disagrees with the direct form"};
    }
    const double ratio = err[0] / err[1];
    return {ratio >= 3.5 && ratio <= 4.5,
            "|RQ-4| n=2000: " + fmt(err[0]) + ", n=4000: " + fmt(err[1]) + ", ratio=" + fmt(ratio) + " (band [3.5, 4.5])"};
}

Outcome a9_model_identities(const Context&)
{
    double identification = 0.0;
    double duality = 0.0;
    const std::vector<std::pair<InteractionSpec, Grid>> cases = {
        {Morse{2.5, 1.0, 0.5, 1.0}, Grid(-6.0, 20.0, 1000)},
        {Cot{1.0, 1.0, 0.0, 0.3}, Grid(0.01, kPi - 0.01, 1000)},
        {Linear{1.0, 1}, Grid(-8.0, 8.0, 1000)},
    };
    for (const auto& [spec, grid] : cases) {
        identification = std::max(identification, (assemble_model(ModelSpec{ModelKind::GAJC, 1.0, 1.0, spec}, grid) -
                                                   assemble_dirac(spec, grid))
                                                      .max_abs());
        duality = std::max(duality, (assemble_model(ModelSpec{ModelKind::GJC, 1.0, 1.0, spec}, grid) -
                                     assemble_model(ModelSpec{ModelKind::GAJC, 1.0, 1.0, negate(spec)}, grid))
                                        .max_abs());
    }

    bool zeros = true;
    const Grid grid(-6.0, 20.0, 1000);
    const Morse morse{2.5, 1.0, 0.5, 1.0};
    const SpinorSample gdo_singlet = analytic_spinor(morse, -1, grid, {}, SpinorModel::GDO);
    const SpinorSample gjc_singlet = analytic_spinor(morse, -1, grid, {}, SpinorModel::GJC);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        zeros = zeros && gdo_singlet.psi2[i] == Complex{} && gjc_singlet.psi1[i] == Complex{};
    }

    double unit = 0.0;
    for (const double energy : {1.0, std::sqrt(5.0), 2.0, 3.0, 17.5}) {
        const SpinorCoefficients c = spinor_coefficients(energy);
        unit = std::max(unit, std::abs(c.a * c.a + c.b * c.b - 1.0));
    }
    const bool ok = identification <= 1e-14 && duality <= 1e-14 && zeros && unit <= 1e-12;
    return {ok, "GAJC vs Dirac=" + fmt(identification) + " GJC(f) vs GAJC(-f)=" + fmt(duality) +
                    " (tol 1e-14); singlet zeros " + (zeros ? "exact" : "NOT exact") + "; max|a^2+b^2-1|=" + fmt(unit) +
                    " (tol 1e-12)"};
}

Outcome a10_polynomials(const Context&)
{
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> param(-10.0, 10.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> degree(0, 10);
    const auto argument = [&] {
        const double r = 10.0 * std::sqrt(unit(rng));
        const double phase = 2.0 * kPi * unit(rng);
        return std::polar(r, phase);
    };
    int evaluated = 0;
    int degenerate = 0;
    double worst = 0.0;
    std::string worst_case;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = degree(rng);
        const Complex p1(param(rng), param(rng));
        const Complex p2(param(rng), param(rng));
        const Complex z = argument();
        Complex rec, ser;
        std::string label;
        if (trial % 2 == 0) {
            rec = laguerre(n, p1, z);
            ser = oracle::laguerre_series(n, p1, z);
            label = "laguerre";
        } else {
            try {
                rec = jacobi(n, p1, p2, z);
            } catch (const DegenerateRecurrenceError&) {
                ++degenerate;
                continue;
            }
            ser = oracle::jacobi_series(n, p1, p2, z);
            label = "jacobi";
        }
        ++evaluated;
        const double rel = std::abs(rec - ser) / std::abs(ser);
        if (!(rel <= worst)) {
            worst = rel;
            worst_case = label + " n=" + std::to_string(n);
        }
    }
    return {worst <= 1e-10, "cases=" + std::to_string(evaluated) + " degenerate excluded=" + std::to_string(degenerate) +
                                " max rel diff=" + fmt(worst) + " (" + worst_case + ", tol 1e-10)"};
}

// ---------------------------------------------------------------------------

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

int run_process(const std::string& cli, const std::string& args)
{
    const std::string cmd = "\"" + cli + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome a11_cli_contract(const Context& ctx)
{
    const fs::path dir = fs::temp_directory_path() / ("gdo_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string morse = ctx.configs + "/morse.json";
    const std::string cot = ctx.configs + "/cot.json";
    const auto q = [](const std::string& s) { return "\"" + s + "\""; };

    bool ok = true;
    std::string detail;
    const auto expect = [&](const std::string& what, int got, int want) {
        ok = ok && got == want;
        detail += what + "=" + std::to_string(got) + (got == want ? "" : " (want " + std::to_string(want) + ")") + "; ";
    };

    expect("verify morse", run_process(ctx.cli, "verify --config " + q(morse)), 0);
    expect("verify cot", run_process(ctx.cli, "verify --config " + q(cot)), 0);

    const std::string text = read_file(morse);
    const fs::path corrupt = dir / "corrupt.json";
    std::ofstream(corrupt) << text.substr(0, text.size() / 2);
    expect("corrupted", run_process(ctx.cli, "verify --config " + q(corrupt.string())), 2);

    Json j = Json::parse(text);
    j["theta_override"] = std::atan(0.5); // half of the true 2 atan(B/A)
    const fs::path control = dir / "theta_control.json";
    std::ofstream(control) << to_deterministic_json(j);
    expect("theta control", run_process(ctx.cli, "check --config " + q(control.string())), 1);

    const std::vector<std::pair<std::string, std::string>> artifacts = {
        {"check.json", "check --config " + q(morse)},
        {"spectrum.json", "spectrum --numeric --config " + q(cot)},
        {"verify.json", "verify --config " + q(morse)},
        {"models.json", "models --config " + q(morse)},
        {"wave_gdo.csv", "wavefunction --level 0 --config " + q(morse)},
        {"wave_gjc.csv", "wavefunction --level 1 --model gjc --config " + q(cot)},
    };
    int stable = 0;
    for (const auto& [name, args] : artifacts) {
        const fs::path first = dir / ("1_" + name);
        const fs::path second = dir / ("2_" + name);
        run_process(ctx.cli, args + " --out " + q(first.string()));
        run_process(ctx.cli, args + " --out " + q(second.string()));
        const std::string a = read_file(first);
        if (!a.empty() && a == read_file(second)) ++stable;
        else ok = false;
    }
    detail += "byte-stable artifacts " + std::to_string(stable) + "/" + std::to_string(artifacts.size());
    fs::remove_all(dir);
    return {ok, detail};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria runner"};
    Context ctx;
    std::string only;
    app.add_option("--cli", ctx.cli, "path to the gdo binary")->required();
    app.add_option("--configs", ctx.configs, "directory holding morse.json and cot.json")->required();
    app.add_option("--only", only, "run a single criterion, e.g. A6");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> criteria = {
        {"A1", a1_morse_spectrum},  {"A2", a2_cot_spectrum},         {"A3", a3_dirac_energies},
        {"A4", a4_condition},       {"A5", a5_reality_probe},        {"A6", a6_shape_invariance},
        {"A7", a7_operator_algebra}, {"A8", a8_residual_convergence}, {"A9", a9_model_identities},
        {"A10", a10_polynomials},   {"A11", a11_cli_contract},
    };
    bool all = true;
    bool matched = false;
    for (const auto& [id, fn] : criteria) {
        if (!only.empty() && only != id) continue;
        matched = true;
        Outcome o;
        try {
            o = fn(ctx);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.passed;
        std::cout << id << " " << (o.passed ? "PASS" : "FAIL") << "  " << o.detail << "\n";
    }
    if (!matched) {
        std::cerr << "unknown criterion \"" << only << "\"\n";
        return 2;
    }
    return all ? 0 : 1;
}
