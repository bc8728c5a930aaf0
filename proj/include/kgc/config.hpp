#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgc/casimir.hpp"
#include "kgc/initial_condition.hpp"
#include "kgc/quadrature.hpp"

// Run configuration. Sources are layered: built-in defaults, then a config
// file, then command-line flags. The config file is flat key = value text
// with optional [table] headers; "[grid]\nnx = 81" and "grid.nx = 81" are
// the same setting. '#' starts a comment.

namespace kgc::config {

inline constexpr double kFigure3SeparationNm = 0.759554;

struct RunConfig {
    physics::PhysicalConstants constants;

    // casimir
    int sign = +1;
    double effective_area_nm2 = 1.0;
    double area_m2 = 1e-4;  // plate area for the force command
    std::optional<double> d_nm;

    // kinematics
    double v_over_c = 0.01;

    // solver
    double length_scale_nm = 1.0;
    std::optional<double> q_override;
    std::string ic = "gaussian";
    double bump_center = 0.0;
    double bump_half_width = 0.5;
    std::string ic_table;
    QuadratureSpec quad;
    unsigned threads = 1;

    // output grid (dimensionless)
    double x_min = -6.0;
    double x_max = 6.0;
    std::size_t nx = 121;
    double t_min = 0.0;
    double t_max = 2.0;
    std::size_t nt = 41;

    // fdm / verify
    double cfl = 0.5;
    std::size_t fdm_nx = 4001;
    double verify_bound = 1e-3;

    // q-sweep
    double sweep_d_min_nm = 0.5;
    double sweep_d_max_nm = 1.0;
    std::size_t sweep_d_count = 101;
    double sweep_v_min = 0.005;
    double sweep_v_max = 0.02;
    std::size_t sweep_v_count = 0;  // 0: single v = v_over_c

    // find-zero
    double bracket_lo_nm = 0.1;
    double bracket_hi_nm = 10.0;
    double tol_nm = 1e-4;

    // pulse regime
    double pulse_duration_s = 1e-18;
    double pulse_ratio_max = physics::kDefaultPulseRatio;

    // output
    std::string out_path;
    std::string format = "csv";

    double velocity() const { return v_over_c * constants.c; }
    double separation_nm() const { return d_nm.value_or(kFigure3SeparationNm); }
    physics::CasimirModel casimir_model() const;

    /// Throws InvalidArgument on inconsistent or out-of-range settings.
    void validate() const;
};

/// Parse config text into dotted keys. Throws InvalidArgument with the line
/// number on malformed input.
std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text);

/// Set one dotted key. Throws InvalidArgument for unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Reads and applies a config file.
void apply_file(RunConfig& cfg, const std::string& path);

/// Every setting as (key, value) in a fixed order, for metadata headers.
std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg);

/// Builds the initial condition named by the config (loads ic_table).
InitialCondition make_initial_condition(const RunConfig& cfg);

}  // namespace kgc::config
