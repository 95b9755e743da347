#ifndef RPT_IO_HPP
#define RPT_IO_HPP

// File formats: potential specifications, series tables, eigenvalue records
// and scheme configuration blocks.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include <json.hpp>

#include "errors.hpp"
#include "numeric.hpp"
#include "numerov.hpp"
#include "potential.hpp"
#include "renormalization.hpp"
#include "series.hpp"

namespace rpt
{

using json = nlohmann::ordered_json;

namespace detail
{

// JSON numbers are taken at their literal text, so 0.1 stays 1/10.
inline Rational rational_from_json(const json& value, const std::string& field)
{
    try {
        if (value.is_string()) {
            return parse_rational(value.get<std::string>());
        }
        if (value.is_number_integer()) {
            return parse_rational(value.dump());
        }
        if (value.is_number_float()) {
            return parse_rational(value.dump());
        }
    } catch (const ValidationError& e) {
        throw ValidationError("field '" + field + "': " + e.what());
    }
    throw ValidationError("field '" + field + "' must be a number or a numeric string");
}

inline json rational_to_json(const Rational& q) { return q.str(); }

} // namespace detail

// {"m": ..., "omega": ..., "hbar": ..., "couplings": {"1": f1, ...}}
inline PotentialSpec<Rational> potential_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw ValidationError("potential specification must be a JSON object");
    }
    PotentialSpec<Rational> p;
    for (const auto& [key, value] : doc.items()) {
        if (key == "m" || key == "mass") {
            p.mass = detail::rational_from_json(value, key);
        } else if (key == "omega") {
            p.omega = detail::rational_from_json(value, key);
        } else if (key == "hbar") {
            p.hbar = detail::rational_from_json(value, key);
        } else if (key == "couplings") {
            if (!value.is_object()) {
                throw ValidationError("'couplings' must map indices to numbers");
            }
            for (const auto& [index, f] : value.items()) {
                int i = 0;
                std::size_t used = 0;
                try {
                    i = std::stoi(index, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != index.size()) {
                    throw ValidationError("coupling index '" + index + "' is not an integer");
                }
                Rational fi = detail::rational_from_json(f, "couplings." + index);
                if (fi != 0) {
                    p.couplings[i] = fi;
                }
            }
        } else {
            throw ValidationError("unknown potential field '" + key + "'");
        }
    }
    p.validate();
    return p;
}

inline json potential_to_json(const PotentialSpec<Rational>& p)
{
    json couplings = json::object();
    for (const auto& [i, f] : p.couplings) {
        couplings[std::to_string(i)] = detail::rational_to_json(f);
    }
    return json{{"m", detail::rational_to_json(p.mass)},
                {"omega", detail::rational_to_json(p.omega)},
                {"hbar", detail::rational_to_json(p.hbar)},
                {"couplings", couplings}};
}

inline PotentialSpec<Rational> parse_potential(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("potential file is not valid JSON: ") + e.what());
    }
    return potential_from_json(doc);
}

inline PotentialSpec<Rational> read_potential_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open potential file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_potential(buffer.str());
}

inline void write_potential_file(const std::string& path, const PotentialSpec<Rational>& p)
{
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write potential file '" + path + "'");
    }
    out << potential_to_json(p).dump(2) << '\n';
}

enum class SeriesFormat { Csv, Json };

inline SeriesFormat parse_series_format(const std::string& name)
{
    if (name == "csv") {
        return SeriesFormat::Csv;
    }
    if (name == "json") {
        return SeriesFormat::Json;
    }
    throw ValidationError("unknown format '" + name + "' (expected csv or json)");
}

// CSV header `k,E_k`; values at full stored precision (exact p/q in rational mode).
template <Scalar T>
std::string series_to_csv(const EnergySeries<T>& series)
{
    std::string out = "k,E_k\n";
    for (int k = 1; k <= series.max_order(); ++k) {
        out += std::to_string(k) + "," + to_string(series[k]) + "\n";
    }
    return out;
}

template <Scalar T>
json series_to_json(const EnergySeries<T>& series)
{
    json orders = json::array();
    for (int k = 1; k <= series.max_order(); ++k) {
        orders.push_back(to_string(series[k]));
    }
    return json{{"n", series.quantum_number},
                {"K", series.max_order()},
                {"hbar", to_string(series.hbar)},
                {"field", scalar_traits<T>::name},
                {"E", orders},
                {"partial_sum", to_string(partial_sum(series, series.max_order()))}};
}

template <Scalar T>
std::string format_series(const EnergySeries<T>& series, SeriesFormat format)
{
    return format == SeriesFormat::Csv ? series_to_csv(series) : series_to_json(series).dump(2) + "\n";
}

inline json eigen_result_to_json(const EigenResult& r)
{
    return json{{"energy", r.energy}, {"nodes", r.nodes}, {"mismatch", r.log_derivative_mismatch}, {"L", r.L},
                {"h", r.h}};
}

inline EigenResult eigen_result_from_json(const json& doc)
{
    EigenResult r;
    try {
        r.energy = doc.at("energy").get<double>();
        r.nodes = doc.at("nodes").get<int>();
        r.log_derivative_mismatch = doc.at("mismatch").get<double>();
        r.L = doc.at("L").get<double>();
        r.h = doc.at("h").get<double>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed eigenvalue record: ") + e.what());
    }
    return r;
}

// Field-independent form of a scheme configuration block:
// {"scheme": ..., "N": ..., "root": ..., "interval": [a, b], "grid": ..., "tol": ...}
//
// N counts corrections beyond the leading term, as in the rows of the
// sextic table: the series is truncated at order 1 + s N, s the closure
// order. "order" sets the truncation directly and takes precedence.
struct SchemeConfig {
    SchemeKind kind = SchemeKind::MinimalSensitivitySum;
    std::optional<int> corrections;
    std::optional<int> order;
    RootSelection root = RootSelection::FlattestExtremum;
    std::optional<std::pair<Rational, Rational>> interval;
    int grid_points = 512;
    std::optional<Rational> tolerance;
};

inline SchemeConfig scheme_config_from_json(const json& doc)
{
    if (!doc.is_object()) {
        throw ValidationError("scheme configuration must be a JSON object");
    }
    SchemeConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "scheme") {
                cfg.kind = parse_scheme(value.get<std::string>());
            } else if (key == "N") {
                cfg.corrections = value.get<int>();
            } else if (key == "order") {
                cfg.order = value.get<int>();
            } else if (key == "root") {
                cfg.root = parse_root_selection(value.get<std::string>());
            } else if (key == "interval") {
                if (!value.is_array() || value.size() != 2) {
                    throw ValidationError("'interval' must be a two-element array");
                }
                cfg.interval = std::pair{detail::rational_from_json(value[0], "interval[0]"),
                                         detail::rational_from_json(value[1], "interval[1]")};
            } else if (key == "grid") {
                cfg.grid_points = value.get<int>();
            } else if (key == "tol") {
                cfg.tolerance = detail::rational_from_json(value, "tol");
            } else {
                throw ValidationError("unknown scheme field '" + key + "'");
            }
        } catch (const json::exception& e) {
            throw ValidationError("scheme field '" + key + "': " + e.what());
        }
    }
    return cfg;
}

inline SchemeConfig parse_scheme_config(const std::string& text)
{
    try {
        return scheme_config_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scheme configuration is not valid JSON: ") + e.what());
    }
}

// Missing interval: default_search_interval(); missing tolerance: ten digits
// short of the field's resolution.
template <FloatScalar T>
SchemeSpec<T> to_scheme_spec(const SchemeConfig& cfg, const PotentialSpec<T>& potential, int n)
{
    SchemeSpec<T> spec;
    spec.kind = cfg.kind;
    const int closure = closure_order(potential);
    if (cfg.corrections && *cfg.corrections < 1) {
        throw ValidationError("N must be >= 1");
    }
    spec.order = cfg.order.value_or(1 + closure * cfg.corrections.value_or(1));
    spec.closure_order = closure;
    spec.root_selection = cfg.root;
    spec.grid_points = cfg.grid_points;
    if (cfg.interval) {
        spec.omega0_min = from_rational<T>(cfg.interval->first);
        spec.omega0_max = from_rational<T>(cfg.interval->second);
    } else {
        std::tie(spec.omega0_min, spec.omega0_max) = default_search_interval(potential, n);
    }
    if (cfg.tolerance) {
        spec.tolerance = from_rational<T>(*cfg.tolerance);
    } else {
        const int digits = static_cast<int>(scalar_traits<T>::digits());
        spec.tolerance = ipow(T(10), -std::max(digits - 10, 4));
    }
    return spec;
}

template <FloatScalar T>
json optimization_to_json(const OptimizationResult<T>& r)
{
    json candidates = json::array();
    for (const auto& c : r.candidates) {
        candidates.push_back(json{{"omega0", to_string(c.omega0)},
                                  {"objective", to_string(c.objective)},
                                  {"flatness", to_string(c.flatness)},
                                  {"partial_sum", to_string(c.partial_sum)}});
    }
    json sums = json::array();
    for (const auto& s : r.partial_sums) {
        sums.push_back(to_string(s));
    }
    return json{{"omega0", to_string(r.omega0)},
                {"chosen", r.chosen},
                {"closure_order", r.closure_order},
                {"candidates", candidates},
                {"partial_sums", sums}};
}

} // namespace rpt

#endif
