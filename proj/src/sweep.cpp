#include "rindler_dicke/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "rindler_dicke/version.hpp"

namespace rindler_dicke::cli {

namespace {

using json = nlohmann::ordered_json;
using amplitudes::Complex;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void append_output_columns(Output o, std::vector<std::string>& header) {
    switch (o) {
        case Output::p_s: header.push_back("P_s"); break;
        case Output::p_a: header.push_back("P_a"); break;
        case Output::p_single: header.push_back("P_single"); break;
        case Output::p_e1e2:
            header.push_back("P_e1e2");
            header.push_back("P_e1e2_valid");
            break;
        case Output::alpha:
            for (const char* n : {"alpha_plus_re", "alpha_plus_im", "alpha_minus_re",
                                  "alpha_minus_im"})
                header.emplace_back(n);
            break;
        case Output::beta:
            for (const char* n : {"beta_ll_re", "beta_ll_im", "beta_rr_re", "beta_rr_im",
                                  "beta_rl_re", "beta_rl_im", "beta_lr_re", "beta_lr_im"})
                header.emplace_back(n);
            break;
    }
}

void push_complex(std::vector<double>& row, Complex z) {
    row.push_back(z.real());
    row.push_back(z.imag());
}

void eval_outputs_dimensionless(const kinematics::DimensionlessParams& dp,
                                const std::vector<Output>& outputs,
                                std::vector<double>& row) {
    for (const Output o : outputs) {
        switch (o) {
            case Output::p_s: {
                const double c = std::cos(0.5 * dp.kd);
                row.push_back(c * c);
                break;
            }
            case Output::p_a: {
                const double s = std::sin(0.5 * dp.kd);
                row.push_back(s * s);
                break;
            }
            case Output::p_single:
                row.push_back(0.5);
                break;
            case Output::p_e1e2: {
                const auto de = amplitudes::double_excitation_bracket(dp);
                row.push_back(de.bracket);
                row.push_back(de.valid ? 1.0 : 0.0);
                break;
            }
            case Output::alpha:
                push_complex(row, amplitudes::alpha_pm(amplitudes::Sign::plus, dp));
                push_complex(row, amplitudes::alpha_pm(amplitudes::Sign::minus, dp));
                break;
            case Output::beta: {
                const auto so = amplitudes::second_order(dp);
                push_complex(row, so.beta_ll);
                push_complex(row, so.beta_rr);
                push_complex(row, so.beta_rl);
                push_complex(row, so.beta_lr);
                break;
            }
        }
    }
}

void eval_outputs_si(const kinematics::PhysicalParams& p,
                     const std::vector<Output>& outputs, std::vector<double>& row) {
    const auto dp = kinematics::to_dimensionless(p);
    const double scale1 = p.c / p.a;
    const double scale2 = scale1 * scale1;
    for (const Output o : outputs) {
        switch (o) {
            case Output::p_s: row.push_back(amplitudes::prob_symmetric(p)); break;
            case Output::p_a: row.push_back(amplitudes::prob_antisymmetric(p)); break;
            case Output::p_single: row.push_back(amplitudes::prob_single_atom(p)); break;
            case Output::p_e1e2: {
                const auto de = amplitudes::prob_double_excitation(p);
                row.push_back(de.value);
                row.push_back(de.valid ? 1.0 : 0.0);
                break;
            }
            case Output::alpha:
                push_complex(row, scale1 * amplitudes::alpha_pm(amplitudes::Sign::plus, dp));
                push_complex(row, scale1 * amplitudes::alpha_pm(amplitudes::Sign::minus, dp));
                break;
            case Output::beta: {
                const auto so = amplitudes::second_order(dp);
                push_complex(row, scale2 * so.beta_ll);
                push_complex(row, scale2 * so.beta_rr);
                push_complex(row, scale2 * so.beta_rl);
                push_complex(row, scale2 * so.beta_lr);
                break;
            }
        }
    }
}

json complex_json(Complex z) {
    return json{{"re", z.real()},
                {"im", z.imag()},
                {"modulus", std::abs(z)},
                {"phase", std::arg(z)}};
}

json params_json(const SweepSpec& spec) {
    json j;
    if (spec.mode == Mode::si) {
        const auto& p = spec.fixed_si;
        j = {{"a", p.a},   {"omega", p.omega}, {"nu", p.nu}, {"chi", p.chi},
             {"d1", p.d1}, {"d2", p.d2},       {"c", p.c},   {"hbar", p.hbar},
             {"kB", p.kB}};
    } else {
        const auto& dp = spec.fixed_dimensionless;
        j = {{"xi", dp.xi}, {"kappa", dp.kappa}, {"kd", dp.kd}, {"n_atoms", dp.n_atoms}};
    }
    return j;
}

} // namespace

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::d: return "d";
        case SweepVariable::a: return "a";
        case SweepVariable::omega: return "omega";
        case SweepVariable::nu: return "nu";
        case SweepVariable::kd: return "kd";
        case SweepVariable::xi: return "xi";
    }
    return "?";
}

std::string to_string(Mode m) { return m == Mode::si ? "si" : "dimensionless"; }

std::string to_string(Output o) {
    switch (o) {
        case Output::p_s: return "P_s";
        case Output::p_a: return "P_a";
        case Output::p_single: return "P_single";
        case Output::p_e1e2: return "P_e1e2";
        case Output::alpha: return "alpha";
        case Output::beta: return "beta";
    }
    return "?";
}

SweepVariable sweep_variable_from_string(const std::string& s) {
    if (s == "d") return SweepVariable::d;
    if (s == "a") return SweepVariable::a;
    if (s == "omega") return SweepVariable::omega;
    if (s == "nu") return SweepVariable::nu;
    if (s == "kd") return SweepVariable::kd;
    if (s == "xi") return SweepVariable::xi;
    throw ConfigError("unknown sweep variable: " + s);
}

Mode mode_from_string(const std::string& s) {
    if (s == "si") return Mode::si;
    if (s == "dimensionless") return Mode::dimensionless;
    throw ConfigError("unknown mode: " + s + " (expected si|dimensionless)");
}

Output output_from_string(const std::string& s) {
    if (s == "P_s") return Output::p_s;
    if (s == "P_a") return Output::p_a;
    if (s == "P_single") return Output::p_single;
    if (s == "P_e1e2") return Output::p_e1e2;
    if (s == "alpha") return Output::alpha;
    if (s == "beta") return Output::beta;
    throw ConfigError("unknown output: " + s);
}

void SweepSpec::validate() const {
    if (points < 2) throw ConfigError("sweep: points must be >= 2");
    if (outputs.empty()) throw ConfigError("sweep: at least one output required");
    const bool dimless_var = (variable == SweepVariable::kd || variable == SweepVariable::xi);
    if (mode == Mode::dimensionless && !dimless_var)
        throw ConfigError("sweep: dimensionless mode supports variables kd and xi");
    if (mode == Mode::si && dimless_var)
        throw ConfigError("sweep: SI mode supports variables d, a, omega, nu");
    if (!default_range && !(start < stop))
        throw ConfigError("sweep: start must be < stop");
    if (default_range && variable != SweepVariable::d)
        throw ConfigError("sweep: explicit --start/--stop required for variable " +
                          to_string(variable));
    try {
        if (mode == Mode::si)
            fixed_si.validate();
        else
            fixed_dimensionless.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("sweep: invalid fixed parameters: ") + e.what());
    }
}

SweepResult cmd_sweep(const SweepSpec& spec) {
    spec.validate();
    double lo = spec.start;
    double hi = spec.stop;
    if (spec.default_range && spec.variable == SweepVariable::d) {
        const double lambda = 2.0 * std::numbers::pi * spec.fixed_si.c / spec.fixed_si.nu;
        lo = 0.0;
        hi = 2.0 * lambda;
    }

    SweepResult result;
    result.header.push_back(to_string(spec.variable));
    for (const Output o : spec.outputs) append_output_columns(o, result.header);
    result.header.push_back("error");

    result.metadata.emplace_back("library", "rindler_dicke");
    result.metadata.emplace_back("version", kVersion);
    result.metadata.emplace_back("params", params_json(spec).dump());
    result.metadata.emplace_back("mode", to_string(spec.mode));
    result.metadata.emplace_back("variable", to_string(spec.variable));
    result.metadata.emplace_back("start", fmt17(lo));
    result.metadata.emplace_back("stop", fmt17(hi));
    result.metadata.emplace_back("points", std::to_string(spec.points));
    result.metadata.emplace_back("series_tol", fmt17(specfun::kDefaultTol));
    result.metadata.emplace_back("series_cap", std::to_string(specfun::kSeriesCap));
    if (spec.timestamp) result.metadata.emplace_back("generated_at", utc_now());

    const std::size_t ncols = result.header.size() - 2; // minus variable and error
    for (int i = 0; i < spec.points; ++i) {
        SweepRow row;
        row.x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(spec.points - 1);
        try {
            if (spec.mode == Mode::dimensionless) {
                auto dp = spec.fixed_dimensionless;
                if (spec.variable == SweepVariable::kd)
                    dp.kd = row.x;
                else
                    dp.xi = row.x;
                dp.validate();
                eval_outputs_dimensionless(dp, spec.outputs, row.values);
            } else {
                auto p = spec.fixed_si;
                switch (spec.variable) {
                    case SweepVariable::d: p.d2 = p.d1 + row.x; break;
                    case SweepVariable::a: p.a = row.x; break;
                    case SweepVariable::omega: p.omega = row.x; break;
                    case SweepVariable::nu: p.nu = row.x; break;
                    default: break;
                }
                p.validate();
                eval_outputs_si(p, spec.outputs, row.values);
            }
        } catch (const std::exception& e) {
            row.error = e.what();
            row.values.assign(ncols, std::numeric_limits<double>::quiet_NaN());
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream os;
    for (std::size_t i = 0; i < result.header.size(); ++i)
        os << (i ? "," : "") << result.header[i];
    os << "\n";
    for (const auto& row : result.rows) {
        os << fmt17(row.x);
        for (const double v : row.values) os << "," << fmt17(v);
        std::string err = row.error;
        if (err.find(',') != std::string::npos || err.find('"') != std::string::npos) {
            std::string quoted = "\"";
            for (const char ch : err) {
                if (ch == '"') quoted += '"';
                quoted += ch;
            }
            quoted += '"';
            err = quoted;
        }
        os << "," << err << "\n";
    }
    return os.str();
}

std::string sweep_to_json(const SweepResult& result) {
    json doc;
    doc["command"] = "sweep";
    json meta;
    for (const auto& [k, v] : result.metadata)
        meta[k] = (k == "params") ? json::parse(v) : json(v);
    doc["metadata"] = meta;
    doc["header"] = result.header;
    json rows = json::array();
    for (const auto& row : result.rows) {
        json r;
        r[result.header.front()] = row.x;
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            const std::string& name = result.header[i + 1];
            if (name.ends_with("_valid"))
                r[name] = (row.values[i] != 0.0);
            else
                r[name] = row.values[i];
        }
        if (!row.error.empty()) r["error"] = row.error;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2);
}

std::string cmd_eval_json(const EvalRequest& request) {
    json doc;
    doc["command"] = "eval";
    doc["version"] = kVersion;
    doc["mode"] = to_string(request.mode);
    if (request.timestamp) doc["generated_at"] = utc_now();

    kinematics::DimensionlessParams dp;
    double scale1 = 1.0;
    if (request.mode == Mode::si) {
        request.p.validate();
        dp = kinematics::to_dimensionless(request.p);
        scale1 = request.p.c / request.p.a;
        doc["params"] = {{"a", request.p.a},   {"omega", request.p.omega},
                         {"nu", request.p.nu}, {"chi", request.p.chi},
                         {"d1", request.p.d1}, {"d2", request.p.d2},
                         {"c", request.p.c},   {"hbar", request.p.hbar},
                         {"kB", request.p.kB}};
        doc["derived"] = {{"xi", dp.xi},
                          {"kappa", dp.kappa},
                          {"kd", dp.kd},
                          {"unruh_temperature_K", kinematics::unruh_temperature(request.p)},
                          {"prob_prefactor", amplitudes::prob_prefactor(request.p)},
                          {"mode_norm_W", kinematics::mode_norm_w(request.p)}};
    } else {
        dp = request.dp;
        dp.validate();
        doc["params"] = {{"xi", dp.xi}, {"kappa", dp.kappa}, {"kd", dp.kd},
                         {"n_atoms", dp.n_atoms}};
    }
    const double scale2 = scale1 * scale1;

    json res;
    for (const Output o : request.outputs) {
        switch (o) {
            case Output::p_s:
                res["P_s"] = (request.mode == Mode::si)
                                 ? amplitudes::prob_symmetric(request.p)
                                 : std::pow(std::cos(0.5 * dp.kd), 2);
                break;
            case Output::p_a:
                res["P_a"] = (request.mode == Mode::si)
                                 ? amplitudes::prob_antisymmetric(request.p)
                                 : std::pow(std::sin(0.5 * dp.kd), 2);
                break;
            case Output::p_single:
                res["P_single"] = (request.mode == Mode::si)
                                      ? amplitudes::prob_single_atom(request.p)
                                      : 0.5;
                break;
            case Output::p_e1e2: {
                const auto de = (request.mode == Mode::si)
                                    ? amplitudes::prob_double_excitation(request.p)
                                    : amplitudes::double_excitation_bracket(dp);
                res["P_e1e2"] = {{"value", de.value}, {"bracket", de.bracket},
                                 {"valid", de.valid}};
                break;
            }
            case Output::alpha:
                res["alpha_plus"] =
                    complex_json(scale1 * amplitudes::alpha_pm(amplitudes::Sign::plus, dp));
                res["alpha_minus"] =
                    complex_json(scale1 * amplitudes::alpha_pm(amplitudes::Sign::minus, dp));
                break;
            case Output::beta: {
                const auto so = amplitudes::second_order(dp);
                res["beta_ll"] = complex_json(scale2 * so.beta_ll);
                res["beta_rr"] = complex_json(scale2 * so.beta_rr);
                res["beta_rl"] = complex_json(scale2 * so.beta_rl);
                res["beta_lr"] = complex_json(scale2 * so.beta_lr);
                res["H"] = complex_json(so.h);
                res["phi_RL"] = so.phi_rl;
                break;
            }
        }
    }

    // Dicke-basis block: SI normalization when physical parameters are
    // available, chi W c/a = 1 stripped normalization otherwise.
    json dicke;
    if (request.mode == Mode::si) {
        const auto d = amplitudes::dicke_decomposition(request.p);
        dicke = {{"ground", complex_json(d.amp_ground)},
                 {"symmetric_left", complex_json(d.amp_symmetric_left)},
                 {"symmetric_right", complex_json(d.amp_symmetric_right)},
                 {"antisymmetric_left", complex_json(d.amp_antisymmetric_left)},
                 {"antisymmetric_right", complex_json(d.amp_antisymmetric_right)},
                 {"doubly_excited_2L", complex_json(d.amp_doubly_excited_2l)},
                 {"doubly_excited_2R", complex_json(d.amp_doubly_excited_2r)},
                 {"doubly_excited_RL", complex_json(d.amp_doubly_excited_rl)}};
    } else {
        const auto fo = amplitudes::first_order(dp);
        const auto so = amplitudes::second_order(dp);
        const double two_sqrt2 = 2.0 * std::sqrt(2.0);
        dicke = {{"ground", complex_json({1.0, 0.0})},
                 {"symmetric_left", complex_json(fo.a_s_left)},
                 {"symmetric_right", complex_json(fo.a_s_right)},
                 {"antisymmetric_left", complex_json(fo.a_a_left)},
                 {"antisymmetric_right", complex_json(fo.a_a_right)},
                 {"doubly_excited_2L", complex_json(two_sqrt2 * so.beta_ll)},
                 {"doubly_excited_2R", complex_json(two_sqrt2 * so.beta_rr)},
                 {"doubly_excited_RL",
                  complex_json((so.beta_rl + so.beta_lr) * std::cos(dp.kd))}};
    }
    res["dicke"] = std::move(dicke);
    doc["results"] = std::move(res);
    return doc.dump(2);
}

} // namespace rindler_dicke::cli
