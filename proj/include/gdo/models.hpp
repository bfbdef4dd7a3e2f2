#pragma once

/**
 * @file models.hpp
 * @brief Generalized anti-Jaynes-Cummings (GAJC) and Jaynes-Cummings (GJC)
 *        models built from the ladder operators A, A#.
 *
 *   H_GAJC = Omega (s+ A# + s- A) + delta s_z = [[delta, Omega A#], [Omega A, -delta]]
 *   H_GJC  = Omega (s+ A + s- A#) + delta s_z = [[delta, Omega A], [Omega A#, -delta]]
 *
 * with s+- = (s_x +- i s_y)/2, so s+ is the upper-right entry. Omega = c and
 * delta = mc^2 turn H_GAJC into the Dirac matrix; f -> -f swaps A and A#
 * and hence the two models.
 */

#include "gdo/eigensolve.hpp"
#include "gdo/operators.hpp"
#include "gdo/spectra.hpp"

namespace gdo {

enum class ModelKind { GAJC, GJC };
enum class Spin { Up, Down };
enum class Component { Upper, Lower };

inline std::string to_string(ModelKind k) { return k == ModelKind::GAJC ? "gajc" : "gjc"; }
inline std::string to_string(Spin s) { return s == Spin::Up ? "up" : "down"; }
inline std::string to_string(Component c) { return c == Component::Upper ? "upper" : "lower"; }

struct ModelSpec {
    ModelKind kind = ModelKind::GAJC;
    Real omega_coupling = 1.0; ///< Omega
    Real delta = 1.0;          ///< delta
    InteractionSpec interaction = Morse{};

    /// Omega = c, delta = mc^2.
    static ModelSpec identified(ModelKind kind, InteractionSpec interaction, const PhysicalConstants& consts = {})
    {
        return {kind, consts.c, consts.rest_energy(), std::move(interaction)};
    }
};

inline bool same_model(const ModelSpec& lhs, const ModelSpec& rhs)
{
    return lhs.kind == rhs.kind && lhs.omega_coupling == rhs.omega_coupling && lhs.delta == rhs.delta &&
           same_interaction(lhs.interaction, rhs.interaction);
}

/// `shift` samples the coupling at grid[i] + shift, as in assemble_dirac.
inline OperatorMatrix assemble_model(const ModelSpec& ms, const Grid& grid, const PhysicalConstants& consts = {},
                                     Complex shift = {})
{
    if (!(ms.omega_coupling >= 0.0)) throw ParameterError("model coupling Omega must be non-negative");
    const LadderPair ladder = assemble_ladder(ms.interaction, grid, consts, shift);
    if (ms.kind == ModelKind::GAJC) {
        return assemble_spin_coupled(ladder.A_sharp, ladder.A, ms.omega_coupling, ms.delta, "H_GAJC");
    }
    return assemble_spin_coupled(ladder.A, ladder.A_sharp, ms.omega_coupling, ms.delta, "H_GJC");
}

/// The dual model: GAJC <-> GJC with f -> -f. Same matrix.
inline ModelSpec spin_flip(const ModelSpec& ms)
{
    ModelSpec out = ms;
    out.kind = ms.kind == ModelKind::GAJC ? ModelKind::GJC : ModelKind::GAJC;
    out.interaction = negate(ms.interaction);
    return out;
}

struct GroundStateReport {
    ModelKind kind = ModelKind::GAJC;
    Real ground_energy = 0.0;
    Spin singlet_spin = Spin::Up;
    Component occupied_component = Component::Upper;
    Complex rayleigh_quotient{};
    /// sqrt(h) * ||H psi - E psi|| for the grid-normalized singlet.
    Real residual = 0.0;
};

namespace detail {

inline bool in_closed_form_domain(const InteractionSpec& spec)
{
    if (!std::holds_alternative<Morse>(spec) && !std::holds_alternative<Cot>(spec)) return false;
    try {
        validate(spec);
        return true;
    } catch (const ParameterError&) {
        return false;
    }
}

} // namespace detail

/// Singlet of the model: (phi0-, 0) at +delta for GAJC, (0, phi0-) at -delta
/// for GJC. A model whose coupling is the negation of a solvable one is
/// handled through its spin-flipped twin, which has the same matrix.
inline GroundStateReport ground_state_structure(const ModelSpec& ms, const Grid& grid,
                                                const PhysicalConstants& consts = {}, Complex shift = {})
{
    ModelSpec solvable = ms;
    if (!detail::in_closed_form_domain(ms.interaction)) {
        if (std::holds_alternative<Custom>(ms.interaction) || std::holds_alternative<Linear>(ms.interaction))
            throw UnsupportedError("ground state structure needs a morse or cot interaction");
        solvable = spin_flip(ms);
        if (!detail::in_closed_form_domain(solvable.interaction))
            throw UnsupportedError("interaction is outside the solvable parameter domain");
    }

    GroundStateReport report;
    report.kind = ms.kind;
    const bool upper = solvable.kind == ModelKind::GAJC;
    report.ground_energy = upper ? solvable.delta : -solvable.delta;
    report.singlet_spin = upper ? Spin::Up : Spin::Down;
    report.occupied_component = upper ? Component::Upper : Component::Lower;

    const SpinorSample singlet = analytic_spinor(solvable.interaction, -1, grid, consts,
                                                 upper ? SpinorModel::GDO : SpinorModel::GJC, shift);
    const ComplexVector v = stacked(singlet);
    const OperatorMatrix h = assemble_model(ms, grid, consts, shift);
    report.rayleigh_quotient = rayleigh_quotient(h, v);
    const ComplexVector hv = h.apply(v);
    Real res = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) res += std::norm(hv[i] - report.ground_energy * v[i]);
    report.residual = std::sqrt(res * grid.spacing());
    return report;
}

} // namespace gdo
