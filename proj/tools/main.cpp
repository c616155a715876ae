#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rindler_dicke/sweep.hpp"
#include "rindler_dicke/verify.hpp"
#include "rindler_dicke/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rindler_dicke;

constexpr double kNoValue = -1.0e308; // "flag not given" sentinel

struct Settings {
    std::string mode = "si";
    // SI-mode inputs (interpreted per --angular/--cyclic)
    double omega = 1e9;
    double nu = 1e8;
    double chi = 1e7;
    double accel = kNoValue; // default: omega_angular * c  (xi = 1)
    double d1 = 0.0;
    double d2 = 0.0;
    double c = kinematics::kSpeedOfLight;
    double hbar = kinematics::kHbar;
    double kB = kinematics::kBoltzmann;
    bool cyclic = false;
    // dimensionless-mode inputs
    double xi = 1.0;
    double kappa = 0.1;
    double kd = 0.0;
    int n_atoms = 2;
    // sweep controls
    std::string var = "d";
    double start = kNoValue;
    double stop = kNoValue;
    int points = 201;
    std::string out = "csv";
    std::string output_file;
    std::string outputs = "P_s,P_a";
    bool no_timestamp = false;
    // verify controls
    double tol = 0.0;
    std::string grid;
};

json settings_json(const Settings& s) {
    return json{{"mode", s.mode},
                {"omega", s.omega},
                {"nu", s.nu},
                {"chi", s.chi},
                {"accel", s.accel == kNoValue ? json(nullptr) : json(s.accel)},
                {"d1", s.d1},
                {"d2", s.d2},
                {"c", s.c},
                {"hbar", s.hbar},
                {"kB", s.kB},
                {"frequency_input", s.cyclic ? "cyclic" : "angular"},
                {"xi", s.xi},
                {"kappa", s.kappa},
                {"kd", s.kd},
                {"n_atoms", s.n_atoms},
                {"var", s.var},
                {"start", s.start == kNoValue ? json(nullptr) : json(s.start)},
                {"stop", s.stop == kNoValue ? json(nullptr) : json(s.stop)},
                {"points", s.points},
                {"out", s.out},
                {"output_file", s.output_file},
                {"outputs", s.outputs},
                {"no_timestamp", s.no_timestamp},
                {"tol", s.tol},
                {"grid", s.grid}};
}

void load_config_file(const std::string& path, Settings& s) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    const auto num = [&](const char* key, double& target) {
        if (doc.contains(key)) target = doc.at(key).get<double>();
    };
    const auto str = [&](const char* key, std::string& target) {
        if (doc.contains(key)) target = doc.at(key).get<std::string>();
    };
    const auto boolean = [&](const char* key, bool& target) {
        if (doc.contains(key)) target = doc.at(key).get<bool>();
    };
    str("mode", s.mode);
    num("omega", s.omega);
    num("nu", s.nu);
    num("chi", s.chi);
    num("accel", s.accel);
    num("d1", s.d1);
    num("d2", s.d2);
    num("c", s.c);
    num("hbar", s.hbar);
    num("kB", s.kB);
    boolean("cyclic", s.cyclic);
    num("xi", s.xi);
    num("kappa", s.kappa);
    num("kd", s.kd);
    if (doc.contains("n_atoms")) s.n_atoms = doc.at("n_atoms").get<int>();
    str("var", s.var);
    num("start", s.start);
    num("stop", s.stop);
    if (doc.contains("points")) s.points = doc.at("points").get<int>();
    str("out", s.out);
    str("output_file", s.output_file);
    str("outputs", s.outputs);
    boolean("no_timestamp", s.no_timestamp);
    num("tol", s.tol);
    str("grid", s.grid);
}

kinematics::PhysicalParams make_physical(const Settings& s) {
    kinematics::PhysicalParams p;
    const double unit = s.cyclic ? 2.0 * 3.14159265358979323846 : 1.0;
    p.omega = unit * s.omega;
    p.nu = unit * s.nu;
    p.chi = unit * s.chi;
    p.a = (s.accel == kNoValue) ? p.omega * s.c : s.accel;
    p.d1 = s.d1;
    p.d2 = s.d2;
    p.c = s.c;
    p.hbar = s.hbar;
    p.kB = s.kB;
    return p;
}

kinematics::DimensionlessParams make_dimensionless(const Settings& s) {
    return {s.xi, s.kappa, s.kd, s.n_atoms};
}

std::vector<cli::Output> parse_outputs(const std::string& csv) {
    std::vector<cli::Output> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(cli::output_from_string(item));
    }
    if (out.empty()) throw ConfigError("no outputs requested");
    return out;
}

std::vector<verify::GridPoint> parse_grid(const std::string& text) {
    std::vector<verify::GridPoint> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ConfigError("grid entries must look like xi:kappa, got: " + item);
        grid.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    }
    return grid;
}

void emit(const std::string& text, const std::string& output_file) {
    if (output_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(output_file);
    if (!out) throw ConfigError("cannot open output file: " + output_file);
    out << text;
}

void add_param_flags(CLI::App* cmd, Settings& s) {
    cmd->add_option("--omega", s.omega, "atomic transition frequency (SI mode)");
    cmd->add_option("--nu", s.nu, "field mode frequency (SI mode)");
    cmd->add_option("--chi", s.chi, "atom-field coupling (SI mode)");
    cmd->add_option("--accel", s.accel, "proper acceleration m/s^2 (default omega*c)");
    cmd->add_option("--d1", s.d1, "atom 1 offset (m)");
    cmd->add_option("--d2", s.d2, "atom 2 offset (m)");
    cmd->add_option("--c", s.c, "speed of light override (natural-unit runs)");
    cmd->add_option("--hbar", s.hbar, "hbar override");
    cmd->add_option("--kB", s.kB, "Boltzmann constant override");
    cmd->add_option("--xi", s.xi, "omega c / a (dimensionless mode)");
    cmd->add_option("--kappa", s.kappa, "nu c / a (dimensionless mode)");
    cmd->add_option("--kd", s.kd, "k (d2 - d1) in radians (dimensionless mode)");
    cmd->add_option("--n-atoms", s.n_atoms, "atom count for N-scaling outputs");
    cmd->add_option("--mode", s.mode, "dimensionless|si")
        ->check(CLI::IsMember({"dimensionless", "si"}));
    auto* ang = cmd->add_flag("--angular", "frequencies are angular (rad/s, default)");
    cmd->add_flag("--cyclic", s.cyclic, "frequencies are cyclic (Hz); multiplied by 2 pi")
        ->excludes(ang);
    cmd->add_flag("--no-timestamp", s.no_timestamp, "omit the timestamp metadata field");
}

int run_cli(int argc, char** argv) {
    Settings s;

    // config precedence: flags > config file > defaults
    std::string config_path;
    if (const char* env = std::getenv("RINDLER_DICKE_CONFIG")) config_path = env;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (!config_path.empty()) load_config_file(config_path, s);

    CLI::App app{"Excitation amplitudes and probabilities of uniformly accelerated "
                 "two-level atom pairs coupled to a massless scalar field"};
    app.set_version_flag("--version", kVersion);
    std::string config_dummy;
    app.add_option("--config", config_dummy, "JSON config file (flags still win)");
    bool show_config = false;
    app.add_flag("--show-config", show_config, "print the effective configuration and exit");

    auto* sweep = app.add_subcommand("sweep", "tabulate quantities along a parameter grid");
    add_param_flags(sweep, s);
    sweep->add_option("--var", s.var, "sweep variable: d|a|omega|nu (SI), kd|xi (dimensionless)");
    sweep->add_option("--start", s.start, "grid start (default for d: 0)");
    sweep->add_option("--stop", s.stop, "grid stop (default for d: 2 lambda)");
    sweep->add_option("--points", s.points, "grid size (>= 2)");
    sweep->add_option("--out", s.out, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--output-file", s.output_file, "write here instead of stdout");
    sweep->add_option("--outputs", s.outputs,
                      "comma list of P_s,P_a,P_single,P_e1e2,alpha,beta");

    auto* eval = app.add_subcommand("eval", "evaluate every requested quantity at one point");
    add_param_flags(eval, s);
    eval->add_option("--outputs", s.outputs, "comma list, default all");
    eval->add_option("--out", s.out, "json only")->check(CLI::IsMember({"json"}));
    eval->add_option("--output-file", s.output_file, "write here instead of stdout");

    auto* verify_cmd = app.add_subcommand(
        "verify", "run the identity and analytic-vs-oracle battery; exit 0 iff all pass");
    verify_cmd->add_option("--tol", s.tol,
                           "override every check tolerance (1e-30 forces failure)");
    verify_cmd->add_option("--grid", s.grid, "override the (xi:kappa,...) oracle grid");
    verify_cmd->add_option("--output-file", s.output_file, "write the report here too");
    std::string verify_out = "text";
    verify_cmd->add_option("--out", verify_out, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--no-timestamp", s.no_timestamp, "accepted for symmetry; no effect");

    app.require_subcommand(0, 1);
    CLI11_PARSE(app, argc, argv);

    if (show_config) {
        std::cout << settings_json(s).dump(2) << "\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 0;
    }

    if (sweep->parsed()) {
        cli::SweepSpec spec;
        spec.variable = cli::sweep_variable_from_string(s.var);
        spec.mode = cli::mode_from_string(s.mode);
        spec.points = s.points;
        spec.outputs = parse_outputs(s.outputs);
        spec.timestamp = !s.no_timestamp;
        if (s.start != kNoValue || s.stop != kNoValue) {
            if (s.start == kNoValue || s.stop == kNoValue)
                throw ConfigError("sweep: give both --start and --stop or neither");
            spec.start = s.start;
            spec.stop = s.stop;
            spec.default_range = false;
        }
        spec.fixed_si = make_physical(s);
        spec.fixed_dimensionless = make_dimensionless(s);
        const auto result = cli::cmd_sweep(spec);
        emit(s.out == "csv" ? cli::sweep_to_csv(result) : cli::sweep_to_json(result),
             s.output_file);
        return 0;
    }

    if (eval->parsed()) {
        cli::EvalRequest req;
        req.mode = cli::mode_from_string(s.mode);
        req.p = make_physical(s);
        req.dp = make_dimensionless(s);
        req.outputs = parse_outputs(s.outputs);
        req.timestamp = !s.no_timestamp;
        emit(cli::cmd_eval_json(req), s.output_file);
        return 0;
    }

    // verify
    verify::VerifyOptions opt;
    if (verify_cmd->count("--grid")) {
        opt.grid = parse_grid(s.grid);
        if (opt.grid.empty()) throw ConfigError("verify: empty grid override");
    }
    opt.tol_override = s.tol;
    const auto report = verify::run(opt);
    const std::string rendered =
        (verify_out == "json") ? report.to_json() : report.render();
    std::cout << rendered;
    if (rendered.back() != '\n') std::cout << "\n";
    if (!s.output_file.empty()) emit(rendered, s.output_file);
    return report.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
