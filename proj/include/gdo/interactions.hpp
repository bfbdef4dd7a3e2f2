#pragma once

/**
 * @file interactions.hpp
 * @brief Interaction families f(x) for the generalized Dirac oscillator,
 *        their metric parameters and the pseudo-Hermiticity condition
 *        f(x + i*hbar*theta) == conj(f(x)).
 *
 * All functions here are pure; an InteractionSpec is an immutable value.
 */

#include "gdo/core.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <type_traits>
#include <variant>

namespace gdo {

/// f(x) = sign * m * omega * x, the ordinary Dirac oscillator coupling.
struct Linear {
    Real omega = 1.0;
    int sign = 1; ///< -1 after a spin flip; omega itself stays positive

    friend bool operator==(const Linear&, const Linear&) = default;
};

/// f(x) = D - (A + iB) exp(-alpha x), the complexified Morse coupling.
struct Morse {
    Real D = 1.0;
    Real A = 1.0;
    Real B = 0.0;
    Real alpha = 1.0;

    Complex weight() const { return {A, B}; }

    friend bool operator==(const Morse&, const Morse&) = default;
};

/// f(x) = -A cot(alpha x - a - ib), the complex-shifted Rosen-Morse coupling.
struct Cot {
    Real A = 1.0;
    Real alpha = 1.0;
    Real a = 0.0;
    Real b = 0.0;

    Complex phase(Complex z) const { return alpha * z - Complex(a, b); }

    friend bool operator==(const Cot&, const Cot&) = default;
};

/// User-supplied coupling with a claimed metric parameter.
struct Custom {
    std::function<Complex(Complex)> f;
    std::function<Complex(Complex)> f_prime;
    Real theta_claim = 0.0;
    std::string name = "custom";
};

using InteractionSpec = std::variant<Linear, Morse, Cot, Custom>;

enum class InteractionKind { Linear, Morse, Cot, Custom };

inline InteractionKind kind_of(const InteractionSpec& spec)
{
    return static_cast<InteractionKind>(spec.index());
}

inline std::string kind_name(const InteractionSpec& spec)
{
    switch (kind_of(spec)) {
    case InteractionKind::Linear: return "linear";
    case InteractionKind::Morse: return "morse";
    case InteractionKind::Cot: return "cot";
    case InteractionKind::Custom: return "custom";
    }
    return "unknown";
}

/// Structural equality; Custom specs never compare equal.
inline bool same_interaction(const InteractionSpec& lhs, const InteractionSpec& rhs)
{
    if (lhs.index() != rhs.index()) return false;
    if (const auto* l = std::get_if<Linear>(&lhs)) return *l == std::get<Linear>(rhs);
    if (const auto* m = std::get_if<Morse>(&lhs)) return *m == std::get<Morse>(rhs);
    if (const auto* c = std::get_if<Cot>(&lhs)) return *c == std::get<Cot>(rhs);
    return false;
}

namespace detail {

inline constexpr Real kPoleGuard = 1e-12;

inline void require_finite(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("non-finite argument to interaction");
    }
}

inline void guard_pole(Complex w)
{
    if (std::abs(std::sin(w)) < kPoleGuard) {
        throw PoleError("cot interaction evaluated at a pole (|sin| < 1e-12)");
    }
}

/// Reduced exponential q = exp(2iw) or exp(-2iw), whichever has |q| <= 1.
/// Returns q and whether the upper half plane form was used.
inline std::pair<Complex, bool> reduced_exp(Complex w)
{
    if (w.imag() >= 0.0) return {std::exp(2.0 * kI * w), true};
    return {std::exp(-2.0 * kI * w), false};
}

} // namespace detail

/// cot(w) = cos w / sin w written through the bounded exponential, valid
/// over the whole complex plane away from the poles w = k pi.
inline Complex complex_cot(Complex w)
{
    detail::require_finite(w);
    detail::guard_pole(w);
    if (w.imag() == 0.0) return std::cos(w.real()) / std::sin(w.real()); // keep real input exactly real
    const auto [q, upper] = detail::reduced_exp(w);
    // upper: cot = i (q+1)/(q-1); lower: cot = i (1+q)/(1-q)
    return upper ? kI * (q + 1.0) / (q - 1.0) : kI * (1.0 + q) / (1.0 - q);
}

/// cosec^2(w) = -4q / (1-q)^2 with the same bounded q as complex_cot.
inline Complex complex_cosec2(Complex w)
{
    detail::require_finite(w);
    detail::guard_pole(w);
    if (w.imag() == 0.0) {
        const Real sn = std::sin(w.real());
        return 1.0 / (sn * sn);
    }
    const Complex q = detail::reduced_exp(w).first;
    const Complex d = 1.0 - q;
    return -4.0 * q / (d * d);
}

/// f(z) for complex z.
inline Complex eval_f(const InteractionSpec& spec, Complex z, const PhysicalConstants& consts = {})
{
    detail::require_finite(z);
    const Complex value = std::visit(
        [&](const auto& s) -> Complex {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return static_cast<Real>(s.sign) * consts.mass * s.omega * z;
            } else if constexpr (std::is_same_v<T, Morse>) {
                return s.D - s.weight() * std::exp(-s.alpha * z);
            } else if constexpr (std::is_same_v<T, Cot>) {
                return -s.A * complex_cot(s.phase(z));
            } else {
                if (!s.f) throw UnsupportedError("custom interaction has no f");
                return s.f(z);
            }
        },
        spec);
    detail::require_finite(value);
    return value;
}

/// f'(z), analytic.
inline Complex eval_f_prime(const InteractionSpec& spec, Complex z, const PhysicalConstants& consts = {})
{
    detail::require_finite(z);
    const Complex value = std::visit(
        [&](const auto& s) -> Complex {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return static_cast<Real>(s.sign) * consts.mass * s.omega;
            } else if constexpr (std::is_same_v<T, Morse>) {
                return s.alpha * s.weight() * std::exp(-s.alpha * z);
            } else if constexpr (std::is_same_v<T, Cot>) {
                return s.A * s.alpha * complex_cosec2(s.phase(z));
            } else {
                if (!s.f_prime) throw UnsupportedError("custom interaction has no f_prime");
                return s.f_prime(z);
            }
        },
        spec);
    detail::require_finite(value);
    return value;
}

/// Metric parameter theta of eta = exp(-theta p).
inline Real metric_theta(const InteractionSpec& spec, const PhysicalConstants& consts = {})
{
    return std::visit(
        [&](const auto& s) -> Real {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, Morse>) {
                if (s.A == 0.0) throw ParameterError("morse metric parameter requires A != 0");
                return 2.0 / (consts.hbar * s.alpha) * std::atan2(s.B, s.A);
            } else if constexpr (std::is_same_v<T, Cot>) {
                return 2.0 * s.b / (consts.hbar * s.alpha);
            } else {
                return s.theta_claim;
            }
        },
        spec);
}

/// Checks the parameter domain the closed-form results are stated for:
/// Morse D, A, alpha > 0; Cot A, alpha > 0; Linear omega > 0 (unflipped).
inline void validate(const InteractionSpec& spec)
{
    auto finite = [](std::initializer_list<Real> xs) {
        return std::all_of(xs.begin(), xs.end(), [](Real x) { return std::isfinite(x); });
    };
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Linear>) {
                if (!finite({s.omega}) || !(s.omega > 0.0) || s.sign != 1)
                    throw ParameterError("linear interaction requires omega > 0");
            } else if constexpr (std::is_same_v<T, Morse>) {
                if (!finite({s.D, s.A, s.B, s.alpha}))
                    throw ParameterError("morse parameters must be finite");
                if (!(s.D > 0.0) || !(s.A > 0.0) || !(s.alpha > 0.0))
                    throw ParameterError("morse interaction requires D, A, alpha > 0");
            } else if constexpr (std::is_same_v<T, Cot>) {
                if (!finite({s.A, s.alpha, s.a, s.b}))
                    throw ParameterError("cot parameters must be finite");
                if (!(s.A > 0.0) || !(s.alpha > 0.0))
                    throw ParameterError("cot interaction requires A, alpha > 0");
            } else {
                if (!s.f || !s.f_prime) throw ParameterError("custom interaction needs f and f_prime");
            }
        },
        spec);
}

/// -f, expressed in the same family where possible.
inline InteractionSpec negate(const InteractionSpec& spec)
{
    return std::visit(
        [](const auto& s) -> InteractionSpec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return Linear{s.omega, -s.sign};
            } else if constexpr (std::is_same_v<T, Morse>) {
                return Morse{-s.D, -s.A, -s.B, s.alpha};
            } else if constexpr (std::is_same_v<T, Cot>) {
                return Cot{-s.A, s.alpha, s.a, s.b};
            } else {
                if (!s.f || !s.f_prime) throw UnsupportedError("custom interaction cannot be negated without f and f_prime");
                Custom out;
                out.f = [f = s.f](Complex z) { return -f(z); };
                out.f_prime = [fp = s.f_prime](Complex z) { return -fp(z); };
                out.theta_claim = s.theta_claim;
                out.name = "-" + s.name;
                return out;
            }
        },
        spec);
}

/// B -> -B (Morse) or b -> -b (Cot); the coupling whose Dirac matrix is the adjoint.
inline InteractionSpec conjugate(const InteractionSpec& spec)
{
    if (const auto* m = std::get_if<Morse>(&spec)) return Morse{m->D, m->A, -m->B, m->alpha};
    if (const auto* c = std::get_if<Cot>(&spec)) return Cot{c->A, c->alpha, c->a, -c->b};
    if (std::holds_alternative<Linear>(spec)) return spec;
    throw UnsupportedError("conjugate is not defined for custom interactions");
}

// ---------------------------------------------------------------------------

struct ConditionReport {
    Real theta_used = 0.0;
    Real max_deviation = 0.0;
    Real tolerance = 0.0;
    bool passed = false;
    Real worst_point = 0.0;
};

inline constexpr Real kDefaultConditionTolerance = 1e-10;

/// 401 points on [x0 - 2/alpha, x0 + 2/alpha]; x0 = 0 for Morse and the
/// pole-free midpoint a/alpha + pi/(2 alpha) for Cot.
inline Grid default_condition_grid(const InteractionSpec& spec)
{
    Real alpha = 1.0;
    Real center = 0.0;
    if (const auto* m = std::get_if<Morse>(&spec)) {
        alpha = m->alpha;
    } else if (const auto* c = std::get_if<Cot>(&spec)) {
        alpha = c->alpha;
        center = c->a / c->alpha + kPi / (2.0 * c->alpha);
    }
    return Grid(center - 2.0 / alpha, center + 2.0 / alpha, 401);
}

/// max_x |f(x + i hbar theta) - conj(f(x))| over the grid.
inline ConditionReport check_pseudo_hermiticity_condition(const InteractionSpec& spec, Real theta,
                                                          const Grid& grid, const PhysicalConstants& consts = {},
                                                          Real tol = kDefaultConditionTolerance)
{
    ConditionReport report;
    report.theta_used = theta;
    report.tolerance = tol;
    report.worst_point = grid[0];
    const Complex shift{0.0, consts.hbar * theta};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Real x = grid[i];
        const Real dev = std::abs(eval_f(spec, x + shift, consts) - std::conj(eval_f(spec, x, consts)));
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_point = x;
        }
    }
    report.passed = report.max_deviation <= tol;
    return report;
}

/// The real coupling g = rho f rho^{-1}, i.e. f evaluated at x + i hbar theta / 2.
inline InteractionSpec hermitian_equivalent_interaction(const InteractionSpec& spec)
{
    return std::visit(
        [](const auto& s) -> InteractionSpec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return s;
            } else if constexpr (std::is_same_v<T, Morse>) {
                return Morse{s.D, std::hypot(s.A, s.B), 0.0, s.alpha};
            } else if constexpr (std::is_same_v<T, Cot>) {
                return Cot{s.A, s.alpha, s.a, 0.0};
            } else {
                throw UnsupportedError("hermitian equivalent is not available for custom interactions");
            }
        },
        spec);
}

} // namespace gdo
