#pragma once

#include <string>
#include <vector>

#include "eigenflow/homotopy.hpp"
#include "eigenflow/render.hpp"

namespace eigenflow::cli {

struct RunConfig {
    std::string family = "fibonacci";
    int n_max = 100;
    double tolerance = 1e-12;
    double eps_ring = 0.01;
    double arg_tol = 0.01;
    int denominator_cap = 64;
    std::string out_dir = "out";
    std::vector<double> t_grid{0.0, 0.25, 0.5, 0.75, 1.0};
    homotopy::TuningParams tuning;
    homotopy::RotatedCardioidParams rotated;
    homotopy::RadialBulbParams radial;
    bool rotated_translate = true;
    int jungreis_m = 65;
    render::Window window;
    int render_max_iter = 400;
};

// Thrown on malformed configuration; message carries line/column.
class ConfigError : public Error {
  public:
    using Error::Error;
};

RunConfig load_config(const std::string& path);

// Applies a JSON object onto cfg; unknown keys are rejected.
void merge_json_into(RunConfig& cfg, const std::string& json_text, const std::string& origin);

// Entry point behind main(): 0 success, 1 validation/computation failure,
// 2 usage or configuration error.
int run(const std::vector<std::string>& args);

}  // namespace eigenflow::cli
