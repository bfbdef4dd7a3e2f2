#pragma once

/**
 * @file spectra.hpp
 * @brief Closed-form Schrodinger levels, Dirac energies, spinor weights and
 *        sampled analytic eigenfunctions for the exactly solvable couplings.
 *
 * Conventions:
 *  - Level counts follow "n < [s]" with [.] = floor and a strict bound.
 *  - Eigenfunctions are grid-normalized: sum |phi|^2 h = 1.
 *  - A Dirac line with index n >= 0 is the level E_{n+1} built from
 *    phi-_{n+1} and phi+_n. Index -1 is the one-component singlet.
 *  - The singlet (phi0-, 0) carries E = +mc^2 and (0, phi0-) carries
 *    E = -mc^2; both follow from A phi0- = 0 and the sigma_z mass term.
 */

#include "gdo/interactions.hpp"
#include "gdo/polynomials.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdo {

enum class Branch { Minus, Plus };
enum class Source { Analytic, Numeric };
/// GDO is also the GAJC model under Omega = c, delta = mc^2.
enum class SpinorModel { GDO, GJC };

inline std::string to_string(Branch b) { return b == Branch::Minus ? "minus" : "plus"; }
inline std::string to_string(Source s) { return s == Source::Analytic ? "analytic" : "numeric"; }
inline std::string to_string(SpinorModel m) { return m == SpinorModel::GDO ? "gdo" : "gjc"; }

struct SpectralLine {
    int n = -1; ///< -1 is the singlet
    Real epsilon = 0.0;
    Real energy_plus = 0.0;
    Real energy_minus = 0.0;
    Source source = Source::Analytic;
};

struct SpinorCoefficients {
    Real a = 1.0; ///< upper weight sqrt((E + mc^2) / 2E)
    Real b = 0.0; ///< lower weight sqrt((E - mc^2) / 2E)
    Real energy = 0.0;
};

struct SpinorSample {
    Grid grid;
    ComplexVector psi1;
    ComplexVector psi2;
    int level = -1;
    SpinorModel model = SpinorModel::GDO;
};

/// Dimensionless s: D/(hbar alpha) for Morse, A/(hbar alpha) for Cot.
inline Real shape_parameter(const InteractionSpec& spec, const PhysicalConstants& consts = {})
{
    if (const auto* m = std::get_if<Morse>(&spec)) return m->D / (consts.hbar * m->alpha);
    if (const auto* c = std::get_if<Cot>(&spec)) return c->A / (consts.hbar * c->alpha);
    throw UnsupportedError("shape parameter is defined for morse and cot only");
}

/// Number of levels of the branch; nullopt means unbounded.
inline std::optional<int> bound_state_count(const InteractionSpec& spec, Branch branch,
                                            const PhysicalConstants& consts = {})
{
    if (std::holds_alternative<Morse>(spec)) {
        const Real s = shape_parameter(spec, consts);
        const Real top = branch == Branch::Minus ? s : s - 1.0;
        return std::max(0, static_cast<int>(std::floor(top)));
    }
    if (std::holds_alternative<Custom>(spec)) throw UnsupportedError("no closed-form spectrum for custom interactions");
    return std::nullopt;
}

namespace detail {

inline void require_level(const InteractionSpec& spec, Branch branch, int n, const PhysicalConstants& consts)
{
    if (n < 0) throw LevelOutOfRangeError("level index must be >= 0");
    const auto count = bound_state_count(spec, branch, consts);
    if (count && n >= *count) {
        throw LevelOutOfRangeError("level " + std::to_string(n) + " of the " + to_string(branch) +
                                   " branch exceeds the bound-state count " + std::to_string(*count));
    }
}

} // namespace detail

/// Schrodinger level of V-.
inline Real epsilon_minus(const InteractionSpec& spec, int n, const PhysicalConstants& consts = {})
{
    validate(spec);
    detail::require_level(spec, Branch::Minus, n, consts);
    if (const auto* m = std::get_if<Morse>(&spec)) {
        const Real d = m->D - n * consts.hbar * m->alpha;
        return m->D * m->D - d * d;
    }
    if (const auto* c = std::get_if<Cot>(&spec)) {
        const Real t = c->A + n * consts.hbar * c->alpha;
        return t * t - c->A * c->A;
    }
    const auto& l = std::get<Linear>(spec);
    return 2.0 * n * consts.hbar * consts.mass * l.omega;
}

/// Schrodinger level of V+.
inline Real epsilon_plus(const InteractionSpec& spec, int n, const PhysicalConstants& consts = {})
{
    validate(spec);
    detail::require_level(spec, Branch::Plus, n, consts);
    if (const auto* m = std::get_if<Morse>(&spec)) {
        const Real d = m->D - n * consts.hbar * m->alpha - consts.hbar * m->alpha;
        return m->D * m->D - d * d;
    }
    if (const auto* c = std::get_if<Cot>(&spec)) {
        const Real t = c->A + (n + 1) * consts.hbar * c->alpha;
        return t * t - c->A * c->A;
    }
    const auto& l = std::get<Linear>(spec);
    return 2.0 * (n + 1) * consts.hbar * consts.mass * l.omega;
}

/// c sqrt(m^2 c^2 + epsilon)
inline Real dirac_energy(Real epsilon, const PhysicalConstants& consts = {})
{
    return consts.c * std::sqrt(consts.mass * consts.mass * consts.c * consts.c + epsilon);
}

/// (E^2 - m^2 c^4) / c^2
inline Real epsilon_from_energy(Real energy, const PhysicalConstants& consts = {})
{
    const Real mc2 = consts.rest_energy();
    return (energy * energy - mc2 * mc2) / (consts.c * consts.c);
}

inline Real singlet_energy(SpinorModel model, const PhysicalConstants& consts = {})
{
    return model == SpinorModel::GDO ? consts.rest_energy() : -consts.rest_energy();
}

/// Dirac levels: the singlet followed by +-E_{n+1}, at most max_levels lines.
/// Morse lines stop once phi-_{n+1} or phi+_n leaves the bound range.
inline std::vector<SpectralLine> dirac_spectrum(const InteractionSpec& spec, const PhysicalConstants& consts,
                                                int max_levels, SpinorModel model = SpinorModel::GDO)
{
    if (max_levels < 1) throw ParameterError("max_levels must be >= 1");
    validate(spec);
    consts.validate();
    std::vector<SpectralLine> lines;
    const Real e0 = singlet_energy(model, consts);
    lines.push_back({-1, 0.0, e0, e0, Source::Analytic});

    const auto minus_count = bound_state_count(spec, Branch::Minus, consts);
    const auto plus_count = bound_state_count(spec, Branch::Plus, consts);
    for (int n = 0; static_cast<int>(lines.size()) < max_levels; ++n) {
        if (minus_count && n + 1 >= *minus_count) break;
        if (plus_count && n >= *plus_count) break;
        const Real eps = epsilon_plus(spec, n, consts);
        const Real e = dirac_energy(eps, consts);
        lines.push_back({n, eps, e, -e, Source::Analytic});
    }
    return lines;
}

/// Partner parameters P' and constant R with V+(x; P) = V-(x; P') + R.
///   Morse: D' = D - hbar alpha, R = D^2 - D'^2
///   Cot:   A' = A + hbar alpha, R = A'^2 - A^2
///   Linear: same coupling,     R = 2 hbar m omega
inline std::pair<InteractionSpec, Real> shape_partner(const InteractionSpec& spec, const PhysicalConstants& consts = {})
{
    if (const auto* m = std::get_if<Morse>(&spec)) {
        Morse p = *m;
        p.D = m->D - consts.hbar * m->alpha;
        return {p, m->D * m->D - p.D * p.D};
    }
    if (const auto* c = std::get_if<Cot>(&spec)) {
        Cot p = *c;
        p.A = c->A + consts.hbar * c->alpha;
        return {p, p.A * p.A - c->A * c->A};
    }
    if (const auto* l = std::get_if<Linear>(&spec)) return {*l, 2.0 * consts.hbar * consts.mass * l->omega};
    throw UnsupportedError("no shape partner for custom interactions");
}

/// Upper/lower weights of the positive-branch spinor at energy E >= mc^2.
inline SpinorCoefficients spinor_coefficients(Real energy, const PhysicalConstants& consts = {})
{
    const Real mc2 = consts.rest_energy();
    if (!std::isfinite(energy) || energy < mc2) {
        throw BranchError("spinor coefficients need E >= mc^2 (positive branch)");
    }
    return {std::sqrt((energy + mc2) / (2.0 * energy)), std::sqrt((energy - mc2) / (2.0 * energy)), energy};
}

// ---------------------------------------------------------------------------
// Closed-form eigenfunctions

/// Unnormalized eigenfunction value and x-derivative.
struct PhiValue {
    Complex value;
    Complex derivative;
};

namespace detail {

/// z^sigma e^{-z/2} L_n^k(z), z = 2W/(hbar alpha) e^{-alpha x}, sigma = s - n, k = 2s - 2n.
inline PhiValue morse_phi(const Morse& m, Real s, int n, Complex x, const PhysicalConstants& consts)
{
    const Complex z = 2.0 * m.weight() / (consts.hbar * m.alpha) * std::exp(-m.alpha * x);
    const Real sigma = s - n;
    const Complex k = 2.0 * s - 2.0 * n;
    const Complex lag = laguerre<Real>(n, k, z);
    const Complex dlag = laguerre_derivative<Real>(n, k, z);
    const Complex envelope = std::exp(sigma * std::log(z) - 0.5 * z);
    const Complex value = envelope * lag;
    // d/dz [z^sigma e^{-z/2} L] = z^sigma e^{-z/2} [(sigma/z - 1/2) L + L']
    const Complex d_dz = envelope * ((sigma / z - 0.5) * lag + dlag);
    return {value, -m.alpha * z * d_dz};
}

/// sin(w)^{s+n} P_n^{(-s-n,-s-n)}(i cot w), w = alpha x - a - ib. This equals
/// (y^2 - 1)^{-(s+n)/2} P_n(y) up to a constant phase on 0 < Re w < pi.
inline PhiValue cot_phi(const Cot& c, Real s, int n, Complex x)
{
    const Complex w = c.phase(x);
    const Complex cot = complex_cot(w);
    const Complex cosec2 = complex_cosec2(w);
    const Complex y = kI * cot;
    const Complex par = -s - n;
    const Complex poly = jacobi_robust<Real>(n, par, par, y);
    const Complex dpoly = jacobi_derivative<Real>(n, par, par, y);
    const Complex power = std::exp((s + n) * std::log(std::sin(w)));
    // d/dw: (s+n) cot w P + P'(y) dy/dw, dy/dw = -i cosec^2 w
    return {power * poly, c.alpha * power * ((s + n) * cot * poly - kI * cosec2 * dpoly)};
}

/// Hermite functions psi_0..psi_{n+1} at xi.
inline ComplexVector hermite_functions(int n, Complex xi)
{
    ComplexVector psi(static_cast<std::size_t>(n) + 2);
    psi[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
    psi[1] = std::sqrt(2.0) * xi * psi[0];
    for (int k = 1; k <= n; ++k) {
        psi[k + 1] = std::sqrt(2.0 / (k + 1)) * xi * psi[k] - std::sqrt(static_cast<Real>(k) / (k + 1)) * psi[k - 1];
    }
    return psi;
}

inline PhiValue linear_phi(const Linear& l, int n, Complex x, const PhysicalConstants& consts)
{
    const Real scale = std::sqrt(consts.mass * l.omega / consts.hbar);
    const ComplexVector psi = hermite_functions(n, scale * x);
    const Complex lower = n > 0 ? std::sqrt(n / 2.0) * psi[n - 1] : Complex{};
    return {psi[n], scale * (lower - std::sqrt((n + 1) / 2.0) * psi[n + 1])};
}

} // namespace detail

/// Unnormalized closed-form phi^{branch}_n at complex x.
///   Morse minus: z^{s-n} e^{-z/2} L_n^{2s-2n}(z); plus: the same with s -> s - 1.
///   Cot minus: sin(w)^{s+n} P_n^{(-s-n,-s-n)}(i cot w); plus: minus with A -> A + hbar alpha.
///   Linear: Hermite functions (V+ and V- share eigenfunctions).
inline PhiValue closed_form_phi(const InteractionSpec& spec, Branch branch, int n, Complex x,
                                const PhysicalConstants& consts = {})
{
    validate(spec);
    detail::require_level(spec, branch, n, consts);
    if (const auto* m = std::get_if<Morse>(&spec)) {
        const Real s = shape_parameter(spec, consts) - (branch == Branch::Plus ? 1.0 : 0.0);
        return detail::morse_phi(*m, s, n, x, consts);
    }
    if (const auto* c = std::get_if<Cot>(&spec)) {
        // V+(x; A) = V-(x; A + hbar alpha) + const, level for level.
        const Real s = shape_parameter(spec, consts) + (branch == Branch::Plus ? 1.0 : 0.0);
        return detail::cot_phi(*c, s, n, x);
    }
    if (const auto* l = std::get_if<Linear>(&spec)) return detail::linear_phi(*l, n, x, consts);
    throw UnsupportedError("no closed-form eigenfunctions for custom interactions");
}

/// Grid-normalized samples of phi^{branch}_n at grid[i] + shift.
inline ComplexVector analytic_phi(const InteractionSpec& spec, Branch branch, int n, const Grid& grid,
                                  const PhysicalConstants& consts = {}, Complex shift = {})
{
    ComplexVector out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = closed_form_phi(spec, branch, n, grid[i] + shift, consts).value;
    grid_normalize(out, grid.spacing());
    return out;
}

/// Concatenated (psi1, psi2).
inline ComplexVector stacked(const SpinorSample& s)
{
    ComplexVector v(s.psi1);
    v.insert(v.end(), s.psi2.begin(), s.psi2.end());
    return v;
}

/// kappa in A phi-_{n+1} = kappa phi+_n for the unnormalized closed forms,
/// evaluated at the grid point where |phi+_n| peaks.
inline Complex intertwining_constant(const InteractionSpec& spec, int n, const Grid& grid,
                                     const PhysicalConstants& consts = {}, Complex shift = {})
{
    std::size_t peak = 0;
    Real best = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Real mag = std::abs(closed_form_phi(spec, Branch::Plus, n, grid[i] + shift, consts).value);
        if (mag > best) {
            best = mag;
            peak = i;
        }
    }
    const Complex x = grid[peak] + shift;
    const PhiValue lower = closed_form_phi(spec, Branch::Minus, n + 1, x, consts);
    const PhiValue upper = closed_form_phi(spec, Branch::Plus, n, x, consts);
    const Complex a_phi = -kI * consts.hbar * lower.derivative - kI * eval_f(spec, x, consts) * lower.value;
    return a_phi / upper.value;
}

inline Complex intertwining_phase(const InteractionSpec& spec, int n, const Grid& grid,
                                  const PhysicalConstants& consts = {}, Complex shift = {})
{
    const Complex kappa = intertwining_constant(spec, n, grid, consts, shift);
    return kappa / std::abs(kappa);
}

/// Analytic Dirac spinor, grid-normalized as a whole. level -1 is the
/// singlet, level n >= 0 the positive-branch state E_{n+1}:
///   GDO: (phi0-, 0) and (a phi-_{n+1}, b k phi+_n)
///   GJC: (0, phi0-) and (a k phi+_n, b phi-_{n+1})
/// with phi+- grid-normalized, A phi-_{n+1} = kappa phi+_n between the
/// normalized samples and k = kappa / sqrt(eps+_n). For real f, |k| = 1.
/// GJC is [[mc^2, cA], [cA#, -mc^2]] built from the same f.
inline SpinorSample analytic_spinor(const InteractionSpec& spec, int level, const Grid& grid,
                                    const PhysicalConstants& consts = {}, SpinorModel model = SpinorModel::GDO,
                                    Complex shift = {})
{
    if (level < -1) throw LevelOutOfRangeError("spinor level must be >= -1");
    SpinorSample out{grid, ComplexVector(grid.size()), ComplexVector(grid.size()), level, model};
    if (level == -1) {
        ComplexVector ground = analytic_phi(spec, Branch::Minus, 0, grid, consts, shift);
        (model == SpinorModel::GDO ? out.psi1 : out.psi2) = std::move(ground);
        return out;
    }
    const int n = level;
    const Real eps = epsilon_plus(spec, n, consts);
    const Real energy = dirac_energy(eps, consts);
    ComplexVector minus(grid.size());
    ComplexVector plus(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        minus[i] = closed_form_phi(spec, Branch::Minus, n + 1, grid[i] + shift, consts).value;
        plus[i] = closed_form_phi(spec, Branch::Plus, n, grid[i] + shift, consts).value;
    }
    const Real scale_minus = grid_normalize(minus, grid.spacing());
    const Real scale_plus = grid_normalize(plus, grid.spacing());
    const Complex kappa = intertwining_constant(spec, n, grid, consts, shift) * scale_minus / scale_plus;
    const Complex k = kappa / std::sqrt(eps);
    const SpinorCoefficients coeff = spinor_coefficients(energy, consts);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (model == SpinorModel::GDO) {
            out.psi1[i] = coeff.a * minus[i];
            out.psi2[i] = coeff.b * k * plus[i];
        } else {
            out.psi1[i] = coeff.a * k * plus[i];
            out.psi2[i] = coeff.b * minus[i];
        }
    }
    ComplexVector both = stacked(out);
    const Real scale = grid_normalize(both, grid.spacing());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.psi1[i] *= scale;
        out.psi2[i] *= scale;
    }
    return out;
}

/// Dirac energy of a spinor level: singlet energy for -1, +E_{n+1} otherwise.
inline Real spinor_energy(const InteractionSpec& spec, int level, const PhysicalConstants& consts,
                          SpinorModel model)
{
    if (level == -1) return singlet_energy(model, consts);
    return dirac_energy(epsilon_plus(spec, level, consts), consts);
}


} // namespace gdo
