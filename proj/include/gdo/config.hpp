#pragma once

/**
 * @file config.hpp
 * @brief Run configuration (JSON in) and the deterministic JSON writer used
 *        for every report.
 *
 * Config layout:
 *
 *   {
 *     "constants":   {"hbar": 1, "c": 1, "mass": 1},                  optional
 *     "interaction": {"kind": "morse", "D": 2.5, "A": 1, "B": 0.5, "alpha": 1},
 *     "grid":        {"x_min": -6, "x_max": 20, "n_points": 4000},
 *     "condition_grid": {...},                                         optional
 *     "tolerances":  {"condition": 1e-10, "eigen_rel": 1e-3, "residual": 1e-8},
 *     "levels": 3,
 *     "mode": "contour" | "real_line",
 *     "theta_override": 0.0                                            optional
 *   }
 *
 * Interaction kinds: "linear" {omega}, "morse" {D, A, B, alpha},
 * "cot" {A, alpha, a, b}.
 */

#include "gdo/interactions.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace gdo {

using Json = nlohmann::ordered_json;

/// Malformed or invalid configuration input.
class ConfigError : public Error { using Error::Error; };

enum class NumericMode { Contour, RealLine };

inline std::string to_string(NumericMode m) { return m == NumericMode::Contour ? "contour" : "real_line"; }

struct Tolerances {
    Real condition = kDefaultConditionTolerance;
    Real eigen_rel = 1e-3;
    Real residual = 1e-8;
};

struct RunConfig {
    PhysicalConstants constants;
    InteractionSpec interaction = Morse{};
    Grid grid{-6.0, 20.0, 4000};
    std::optional<Grid> condition_grid;
    Tolerances tolerances;
    int levels = 3;
    NumericMode mode = NumericMode::Contour;
    std::optional<Real> theta_override;
};

namespace detail {

inline void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw ConfigError("unknown key \"" + key + "\" in " + where);
    }
}

inline const Json& require_key(const Json& obj, const std::string& key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) throw ConfigError("missing required key \"" + key + "\" in " + where);
    return obj.at(key);
}

inline Real read_real(const Json& obj, const std::string& key, const std::string& where)
{
    const Json& v = require_key(obj, key, where);
    if (!v.is_number()) throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
    return v.get<Real>();
}

inline Real read_real_or(const Json& obj, const std::string& key, Real fallback, const std::string& where)
{
    return obj.contains(key) ? read_real(obj, key, where) : fallback;
}

inline Grid read_grid(const Json& g, const std::string& where)
{
    if (!g.is_object()) throw ConfigError(where + " must be an object");
    reject_unknown_keys(g, {"x_min", "x_max", "n_points"}, where);
    const Json& n = require_key(g, "n_points", where);
    if (!n.is_number_integer() || n.get<long long>() < 3) throw ConfigError("\"n_points\" in " + where + " must be an integer >= 3");
    try {
        return Grid(read_real(g, "x_min", where), read_real(g, "x_max", where), n.get<std::size_t>());
    } catch (const ParameterError& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

inline InteractionSpec read_interaction(const Json& j)
{
    const std::string where = "interaction";
    if (!j.is_object()) throw ConfigError("\"interaction\" must be an object");
    const Json& kind = require_key(j, "kind", where);
    if (!kind.is_string()) throw ConfigError("interaction \"kind\" must be a string");
    const std::string k = kind.get<std::string>();
    InteractionSpec spec;
    if (k == "linear") {
        reject_unknown_keys(j, {"kind", "omega"}, where);
        spec = Linear{read_real(j, "omega", where), 1};
    } else if (k == "morse") {
        reject_unknown_keys(j, {"kind", "D", "A", "B", "alpha"}, where);
        spec = Morse{read_real(j, "D", where), read_real(j, "A", where), read_real_or(j, "B", 0.0, where),
                     read_real(j, "alpha", where)};
    } else if (k == "cot") {
        reject_unknown_keys(j, {"kind", "A", "alpha", "a", "b"}, where);
        spec = Cot{read_real(j, "A", where), read_real(j, "alpha", where), read_real_or(j, "a", 0.0, where),
                   read_real_or(j, "b", 0.0, where)};
    } else {
        throw ConfigError("unknown interaction kind \"" + k + "\" (expected linear, morse or cot)");
    }
    try {
        validate(spec);
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

} // namespace detail

inline RunConfig parse_config(const Json& root)
{
    using namespace detail;
    if (!root.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown_keys(root,
                        {"constants", "interaction", "grid", "condition_grid", "tolerances", "levels", "mode",
                         "theta_override"},
                        "config");
    RunConfig cfg;
    if (root.contains("constants")) {
        const Json& c = root.at("constants");
        if (!c.is_object()) throw ConfigError("\"constants\" must be an object");
        reject_unknown_keys(c, {"hbar", "c", "mass"}, "constants");
        cfg.constants = {read_real_or(c, "hbar", 1.0, "constants"), read_real_or(c, "c", 1.0, "constants"),
                         read_real_or(c, "mass", 1.0, "constants")};
        try {
            cfg.constants.validate();
        } catch (const ParameterError& e) {
            throw ConfigError(e.what());
        }
    }
    cfg.interaction = read_interaction(require_key(root, "interaction", "config"));
    cfg.grid = read_grid(require_key(root, "grid", "config"), "grid");
    if (root.contains("condition_grid")) cfg.condition_grid = read_grid(root.at("condition_grid"), "condition_grid");
    if (root.contains("tolerances")) {
        const Json& t = root.at("tolerances");
        if (!t.is_object()) throw ConfigError("\"tolerances\" must be an object");
        reject_unknown_keys(t, {"condition", "eigen_rel", "residual"}, "tolerances");
        cfg.tolerances = {read_real_or(t, "condition", cfg.tolerances.condition, "tolerances"),
                          read_real_or(t, "eigen_rel", cfg.tolerances.eigen_rel, "tolerances"),
                          read_real_or(t, "residual", cfg.tolerances.residual, "tolerances")};
        const Tolerances& tol = cfg.tolerances;
        if (!(tol.condition > 0.0) || !(tol.eigen_rel > 0.0) || !(tol.residual > 0.0))
            throw ConfigError("all tolerances must be > 0");
    }
    if (root.contains("levels")) {
        const Json& l = root.at("levels");
        if (!l.is_number_integer() || l.get<long long>() < 1) throw ConfigError("\"levels\" must be an integer >= 1");
        cfg.levels = l.get<int>();
    }
    if (root.contains("mode")) {
        const Json& m = root.at("mode");
        const std::string mode = m.is_string() ? m.get<std::string>() : "";
        if (mode == "contour") cfg.mode = NumericMode::Contour;
        else if (mode == "real_line") cfg.mode = NumericMode::RealLine;
        else throw ConfigError("\"mode\" must be \"contour\" or \"real_line\"");
    }
    if (root.contains("theta_override")) cfg.theta_override = read_real(root, "theta_override", "config");
    return cfg;
}

inline RunConfig parse_config_text(const std::string& text)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    return parse_config(root);
}

inline RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

inline Json grid_to_json(const Grid& g)
{
    Json j;
    j["x_min"] = g.x_min();
    j["x_max"] = g.x_max();
    j["n_points"] = g.size();
    return j;
}

inline Json interaction_to_json(const InteractionSpec& spec)
{
    Json j;
    j["kind"] = kind_name(spec);
    if (const auto* l = std::get_if<Linear>(&spec)) {
        j["omega"] = l->omega;
    } else if (const auto* m = std::get_if<Morse>(&spec)) {
        j["D"] = m->D;
        j["A"] = m->A;
        j["B"] = m->B;
        j["alpha"] = m->alpha;
    } else if (const auto* c = std::get_if<Cot>(&spec)) {
        j["A"] = c->A;
        j["alpha"] = c->alpha;
        j["a"] = c->a;
        j["b"] = c->b;
    } else {
        throw UnsupportedError("custom interactions have no JSON form");
    }
    return j;
}

inline Json config_to_json(const RunConfig& cfg)
{
    Json j;
    j["constants"] = {{"hbar", cfg.constants.hbar}, {"c", cfg.constants.c}, {"mass", cfg.constants.mass}};
    j["interaction"] = interaction_to_json(cfg.interaction);
    j["grid"] = grid_to_json(cfg.grid);
    if (cfg.condition_grid) j["condition_grid"] = grid_to_json(*cfg.condition_grid);
    j["tolerances"] = {{"condition", cfg.tolerances.condition},
                       {"eigen_rel", cfg.tolerances.eigen_rel},
                       {"residual", cfg.tolerances.residual}};
    j["levels"] = cfg.levels;
    j["mode"] = to_string(cfg.mode);
    if (cfg.theta_override) j["theta_override"] = *cfg.theta_override;
    return j;
}

// ---------------------------------------------------------------------------
// Deterministic writer: insertion-ordered keys, floats as %.17g, two-space indent.

inline std::string format_real(Real x)
{
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline void write_json(const Json& j, std::string& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += inner + Json(key).dump() + ": ";
            write_json(value, out, indent + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += inner;
            write_json(j[i], out, indent + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case Json::value_t::number_float:
        out += format_real(j.get<Real>());
        return;
    default:
        out += j.dump();
        return;
    }
}

} // namespace detail

inline std::string to_deterministic_json(const Json& j)
{
    std::string out;
    detail::write_json(j, out, 0);
    out += "\n";
    return out;
}

} // namespace gdo
