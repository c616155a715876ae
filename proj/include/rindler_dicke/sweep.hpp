#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rindler_dicke/amplitudes.hpp"
#include "rindler_dicke/kinematics.hpp"

namespace rindler_dicke::cli {

enum class SweepVariable { d, a, omega, nu, kd, xi };
enum class Mode { dimensionless, si };
enum class Output { p_s, p_a, p_single, p_e1e2, alpha, beta };

std::string to_string(SweepVariable v);
std::string to_string(Mode m);
std::string to_string(Output o);
SweepVariable sweep_variable_from_string(const std::string& s); // ConfigError
Mode mode_from_string(const std::string& s);
Output output_from_string(const std::string& s);

/// One parameter sweep. In SI mode the variable is one of {d, a, omega,
/// nu} over `fixed_si`; in dimensionless mode one of {kd, xi} over
/// `fixed_dimensionless`. With `default_range` set and variable d, the
/// grid is d in [0, 2 lambda], lambda = 2 pi c / nu.
struct SweepSpec {
    SweepVariable variable = SweepVariable::d;
    double start = 0.0;
    double stop = 0.0;
    bool default_range = true;
    int points = 201;
    Mode mode = Mode::si;
    kinematics::PhysicalParams fixed_si;
    kinematics::DimensionlessParams fixed_dimensionless;
    std::vector<Output> outputs = {Output::p_s, Output::p_a};
    bool timestamp = true;

    void validate() const; ///< throws ConfigError
};

struct SweepRow {
    double x = 0.0;
    std::vector<double> values;
    std::string error; ///< empty on success; row kept, run continues
};

struct SweepResult {
    std::vector<std::string> header;
    std::vector<SweepRow> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

/// Dimensionless-mode normalization: the interference columns P_s / P_a
/// are emitted as the unit-peak shapes cos^2(kd/2) / sin^2(kd/2) (the
/// thermal factor divided out; it is constant along every dimensionless
/// sweep axis), P_single = 1/2, and P_e1e2 is the bare closed-form
/// bracket with its validity flag. SI mode reports absolute values.
SweepResult cmd_sweep(const SweepSpec& spec);

/// RFC-4180-style CSV: header row then one line per grid point, '.'
/// decimal separator, 17 significant digits. Metadata lives in the JSON
/// form only, so equal specs produce byte-identical CSV.
std::string sweep_to_csv(const SweepResult& result);

/// The same table as a single JSON document (metadata included).
std::string sweep_to_json(const SweepResult& result);

/// Single-point evaluation.
struct EvalRequest {
    Mode mode = Mode::si;
    kinematics::PhysicalParams p;
    kinematics::DimensionlessParams dp;
    std::vector<Output> outputs = {Output::p_s, Output::p_a, Output::p_single,
                                   Output::p_e1e2, Output::alpha, Output::beta};
    bool timestamp = true;
};

/// JSON document with every requested quantity; complex values carry
/// re/im/modulus/phase, and a Dicke-basis block is always included
/// (stripped normalization in dimensionless mode).
std::string cmd_eval_json(const EvalRequest& request);

} // namespace rindler_dicke::cli
