#include "kgc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "kgc/casimir.hpp"
#include "kgc/config.hpp"
#include "kgc/csv.hpp"
#include "kgc/errors.hpp"
#include "kgc/fdm.hpp"
#include "kgc/kg_solver.hpp"

namespace kgc::cli {

namespace {

using config::RunConfig;
using Overrides = std::vector<std::pair<std::string, std::string>>;

constexpr double kNm = 1e-9;
constexpr double kDegeneracyQ = 1e-10;
constexpr double kFigureVOverC = 0.01;

struct Session {
    RunConfig cfg;
    std::ostream& out;
    std::ostream& err;
    bool quiet = false;
    std::string command;

    void warn(const std::string& msg) const {
        if (!quiet) err << "warning: " << msg << '\n';
    }
};

class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string version_line() { return std::string("kgcasimir ") + KGC_VERSION; }

std::vector<std::string> header(const Session& s, std::string_view provenance,
                                std::vector<std::string> extra = {}) {
    std::vector<std::string> lines{version_line(), "command: " + s.command,
                                   "provenance: " + std::string(provenance)};
    for (auto& e : extra) lines.push_back(std::move(e));
    for (const auto& [k, v] : config::describe(s.cfg)) lines.push_back("config: " + k + " = " + v);
    return lines;
}

// Writes to cfg.out_path when set, otherwise to the session stream.
void emit(const Session& s, const io::CsvTable& table) {
    if (s.cfg.out_path.empty()) {
        io::write_csv(s.out, table);
        return;
    }
    std::ofstream f(s.cfg.out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot open output file '" + s.cfg.out_path + "'");
    io::write_csv(f, table);
}

std::string num(double v) { return io::format_value(v); }

struct ResolvedQ {
    physics::ReducedParams params;
    std::optional<double> d_nm;
};

ResolvedQ resolve_q(const RunConfig& cfg) {
    const double length = cfg.length_scale_nm * kNm;
    const double v = cfg.velocity();
    if (cfg.q_override) {
        return {physics::to_dimensionless(*cfg.q_override / (length * length), v, length), std::nullopt};
    }
    const double d = cfg.separation_nm();
    const double q = physics::q_at_separation(d * kNm, cfg.casimir_model(), v, cfg.constants);
    return {physics::to_dimensionless(q, v, length), d};
}

std::string branch_name(double q) {
    if (q > 0.0) return "J0 (K-G, q > 0)";
    if (q < 0.0) return "I0 (modified K-G, q < 0)";
    return "none (q = 0, d'Alembert)";
}

void check_pulse(const Session& s) {
    const double tau = physics::relaxation_time(s.cfg.velocity(), s.cfg.constants);
    if (!physics::pulse_regime_ok(s.cfg.pulse_duration_s, tau, s.cfg.pulse_ratio_max)) {
        s.warn("pulse duration " + num(s.cfg.pulse_duration_s) + " s exceeds " + num(s.cfg.pulse_ratio_max) +
               " * tau (tau = " + num(tau) + " s); T ~ u is not justified");
    }
}

// ---- commands ---------------------------------------------------------------

void cmd_force(Session& s) {
    const double d_nm = s.cfg.separation_nm();
    const double force = physics::casimir_force(d_nm * kNm, s.cfg.area_m2, s.cfg.constants);
    io::CsvTable t;
    t.comments = header(s, "physics");
    t.columns = {"d_nm", "area_m2", "force_N"};
    t.rows.push_back({d_nm, s.cfg.area_m2, force});
    emit(s, t);
}

io::CsvTable q_sweep_table(const Session& s, double d_min, double d_max, std::size_t d_count,
                           std::optional<std::pair<double, double>> v_range, std::size_t v_count,
                           double v_fixed, bool with_dimless) {
    const auto& cfg = s.cfg;
    const auto model = cfg.casimir_model();
    const double length = cfg.length_scale_nm * kNm;
    io::CsvTable t;
    t.columns = {"d_nm"};
    if (v_range) t.columns.push_back("v_over_c");
    t.columns.push_back("q_m^-2");
    if (with_dimless) t.columns.push_back("q_dimless");
    const auto ds = linspace(d_min, d_max, d_count);
    const auto vs = v_range ? linspace(v_range->first, v_range->second, v_count) : std::vector<double>{v_fixed};
    for (double d : ds) {
        for (double vc : vs) {
            const double q = physics::q_at_separation(d * kNm, model, vc * cfg.constants.c, cfg.constants);
            std::vector<double> row{d};
            if (v_range) row.push_back(vc);
            row.push_back(q);
            if (with_dimless) row.push_back(q * length * length);
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

void cmd_q_sweep(Session& s) {
    const auto& cfg = s.cfg;
    std::optional<std::pair<double, double>> v_range;
    if (cfg.sweep_v_count > 0) v_range = std::pair{cfg.sweep_v_min, cfg.sweep_v_max};
    auto t = q_sweep_table(s, cfg.sweep_d_min_nm, cfg.sweep_d_max_nm, cfg.sweep_d_count, v_range,
                           cfg.sweep_v_count, cfg.v_over_c, true);
    t.comments = header(s, "physics");
    emit(s, t);
}

void cmd_find_zero(Session& s) {
    const auto& cfg = s.cfg;
    const auto model = cfg.casimir_model();
    const double v = cfg.velocity();
    const double d_star = physics::find_sign_change(model, v, cfg.constants, cfg.bracket_lo_nm * kNm,
                                                    cfg.bracket_hi_nm * kNm, cfg.tol_nm * kNm);
    const double q_lo = physics::q_at_separation(cfg.bracket_lo_nm * kNm, model, v, cfg.constants);
    const double q_hi = physics::q_at_separation(cfg.bracket_hi_nm * kNm, model, v, cfg.constants);
    io::CsvTable t;
    t.comments = header(s, "physics");
    t.columns = {"d_star_nm", "q_lo_m^-2", "q_hi_m^-2"};
    t.rows.push_back({d_star / kNm, q_lo, q_hi});
    emit(s, t);
}

std::vector<std::string> solve_metadata(const ResolvedQ& rq, const InitialCondition& ic, const RunConfig& cfg) {
    return {"q_dimless = " + num(rq.params.q_dimless), "q_m^-2 = " + num(rq.params.q_phys),
            "d_nm = " + (rq.d_nm ? num(*rq.d_nm) : std::string("none (q override)")),
            "v_over_c = " + num(cfg.v_over_c), "length_scale_nm = " + num(cfg.length_scale_nm),
            "kernel = " + branch_name(rq.params.q_dimless), "ic = " + ic.describe()};
}

void cmd_solve(Session& s) {
    const auto& cfg = s.cfg;
    const auto rq = resolve_q(cfg);
    const auto ic = config::make_initial_condition(cfg);
    check_pulse(s);
    const auto xs = linspace(cfg.x_min, cfg.x_max, cfg.nx);
    const auto ts = linspace(cfg.t_min, cfg.t_max, cfg.nt);
    const auto field = solver::solve_grid(xs, ts, rq.params, ic, cfg.quad, cfg.threads);
    emit(s, io::field_table(field, header(s, to_string(field.provenance), solve_metadata(rq, ic, cfg))));
}

void cmd_verify(Session& s) {
    const auto& cfg = s.cfg;
    const auto rq = resolve_q(cfg);
    const auto ic = config::make_initial_condition(cfg);
    check_pulse(s);

    const double dx = (cfg.x_max - cfg.x_min) / static_cast<double>(cfg.fdm_nx - 1);
    const double t_end = cfg.t_max;
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / (cfg.cfl * dx) - 1e-9));
    const std::size_t t_stride = cfg.nt > 1 ? std::max<std::size_t>(1, steps / (cfg.nt - 1)) : steps;
    const std::size_t x_stride = cfg.nx > 1 ? std::max<std::size_t>(1, (cfg.fdm_nx - 1) / (cfg.nx - 1)) : 1;

    const auto grid = fdm::FdmGrid::make(cfg.x_min, cfg.x_max, cfg.fdm_nx, cfg.cfl, t_end, t_stride);
    const auto numeric = subsample(fdm::fdm_solve(rq.params.q_dimless, ic, grid), x_stride, 1);
    const auto exact = solver::solve_grid(numeric.xs, numeric.ts, rq.params, ic, cfg.quad, cfg.threads);
    const auto norms = fdm::compare_fields(exact, numeric);
    const bool pass = norms.rel_max_abs <= cfg.verify_bound;

    auto meta = solve_metadata(rq, ic, cfg);
    meta.push_back("fdm: nx = " + std::to_string(grid.nx) + ", dx = " + num(grid.dx()) + ", dt = " +
                   num(grid.dt) + ", nt = " + std::to_string(grid.nt));
    meta.push_back("compared points = " + std::to_string(exact.values.size()));
    io::CsvTable t;
    t.comments = header(s, "closed-form vs fdm", std::move(meta));
    t.columns = {"max_abs", "rel_max_abs", "rms", "bound", "pass"};
    t.rows.push_back({norms.max_abs, norms.rel_max_abs, norms.rms, cfg.verify_bound, pass ? 1.0 : 0.0});
    emit(s, t);
    if (!s.quiet) {
        s.err << (pass ? "PASS" : "FAIL") << ": relative max-abs " << num(norms.rel_max_abs)
              << (pass ? " <= " : " > ") << num(cfg.verify_bound) << '\n';
    }
    if (!pass) throw VerificationFailed("closed-form and fdm fields disagree beyond the bound");
}

// ---- figures ----------------------------------------------------------------

std::filesystem::path figure_dir(const Session& s) {
    if (!s.cfg.out_path.empty()) return s.cfg.out_path;
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return ".";
}

void write_figure(const Session& s, const std::filesystem::path& dir, const std::string& id,
                  const io::CsvTable& table) {
    std::filesystem::create_directories(dir);
    const auto path = dir / ("fig" + id + ".csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + path.string() + "'");
    io::write_csv(f, table);
    if (!s.quiet) s.err << "wrote " << path.string() << '\n';
}

io::CsvTable figure_field(Session& s, const std::string& id, double q_dimless, std::optional<double> d_nm,
                          std::vector<std::string> notes) {
    const auto& cfg = s.cfg;
    const auto ic = config::make_initial_condition(cfg);
    const auto xs = linspace(cfg.x_min, cfg.x_max, cfg.nx);
    const auto ts = linspace(cfg.t_min, cfg.t_max, cfg.nt);
    const auto field = solver::solve_grid(xs, ts, q_dimless, ic, cfg.quad, cfg.threads);
    std::vector<std::string> meta{"figure: " + id, "q_dimless = " + num(q_dimless),
                                  "d_nm = " + (d_nm ? num(*d_nm) : std::string("none")),
                                  "v_over_c = " + num(kFigureVOverC), "kernel = " + branch_name(q_dimless),
                                  "ic = " + ic.describe()};
    for (auto& n : notes) meta.push_back(std::move(n));
    return io::field_table(field, header(s, to_string(field.provenance), std::move(meta)));
}

double figure_q(const Session& s, double d_nm) {
    const double length = s.cfg.length_scale_nm * kNm;
    const double q = physics::q_at_separation(d_nm * kNm, s.cfg.casimir_model(),
                                              kFigureVOverC * s.cfg.constants.c, s.cfg.constants);
    return q * length * length;
}

void cmd_figures(Session& s, const std::string& which) {
    static const std::vector<std::string> all = {"2a", "2b", "3a", "3b", "4a", "4b"};
    std::vector<std::string> ids;
    if (which == "all") {
        ids = all;
    } else if (std::find(all.begin(), all.end(), which) != all.end()) {
        ids = {which};
    } else {
        throw InvalidArgument("unknown figure id '" + which + "' (expected 2a, 2b, 3a, 3b, 4a, 4b or all)");
    }
    const auto dir = figure_dir(s);
    for (const auto& id : ids) {
        io::CsvTable t;
        if (id == "2a") {
            t = q_sweep_table(s, 0.5, 1.0, 51, std::pair{0.005, 0.02}, 16, kFigureVOverC, true);
            t.comments = header(s, "physics", {"figure: 2a, q over (d, v/c)"});
        } else if (id == "2b") {
            t = q_sweep_table(s, 0.5, 1.0, 501, std::nullopt, 1, kFigureVOverC, false);
            t.comments = header(s, "physics", {"figure: 2b, q over d at v/c = 0.01"});
        } else if (id == "3a" || id == "3b") {
            // The q = 0 point itself; each branch is approached from its own side.
            const double q = (id == "3a") ? kDegeneracyQ : -kDegeneracyQ;
            t = figure_field(s, id, q, config::kFigure3SeparationNm,
                             {"q = 0 target, evaluated at q_dimless = " + num(q) + " on the " +
                                  (id == "3a" ? std::string("J0") : std::string("I0")) + " branch",
                              "physics-chain q_dimless at d_nm under this calibration = " +
                                  num(figure_q(s, config::kFigure3SeparationNm))});
        } else {
            const double d_nm = (id == "4a") ? 0.720 : 0.760;
            t = figure_field(s, id, figure_q(s, d_nm), d_nm, {});
        }
        write_figure(s, dir, id, t);
    }
}

// ---- option wiring ----------------------------------------------------------

void add_setting(CLI::App* app, Overrides& ov, const std::string& flag, const std::string& key,
                 const std::string& help) {
    app->add_option_function<std::string>(
           flag, [&ov, key](const std::string& v) { ov.emplace_back(key, v); }, help)
        ->allow_extra_args(false);
}

void add_physics(CLI::App* app, Overrides& ov) {
    add_setting(app, ov, "--mass", "constants.mass", "particle mass [kg]");
    add_setting(app, ov, "--hbar", "constants.hbar", "reduced Planck constant [J s]");
    add_setting(app, ov, "--c", "constants.c", "speed of light [m/s]");
    add_setting(app, ov, "--sign", "casimir.sign", "Casimir sign: +1 repulsive, -1 attractive");
    add_setting(app, ov, "--area-nm2", "casimir.effective_area_nm2", "effective area of the potential [nm^2]");
    add_setting(app, ov, "--v-over-c", "kinematics.v_over_c", "thermal signal speed as a fraction of c");
    add_setting(app, ov, "--length-scale-nm", "solver.length_scale_nm", "length unit of the dimensionless solver [nm]");
}

void add_solver(CLI::App* app, Overrides& ov) {
    add_setting(app, ov, "--d-nm", "casimir.d_nm", "plate separation [nm]");
    add_setting(app, ov, "--q-override", "solver.q_override", "dimensionless q (replaces the physics chain)");
    add_setting(app, ov, "--ic", "solver.ic", "initial condition: gaussian, bump, tabulated");
    add_setting(app, ov, "--bump-center", "solver.bump_center", "bump centre");
    add_setting(app, ov, "--bump-half-width", "solver.bump_half_width", "bump half-width");
    add_setting(app, ov, "--ic-table", "solver.ic_table", "CSV with x,f columns");
    add_setting(app, ov, "--quad", "solver.quadrature", "adaptive-simpson or gauss-legendre-composite");
    add_setting(app, ov, "--abs-tol", "solver.abs_tol", "quadrature absolute tolerance");
    add_setting(app, ov, "--rel-tol", "solver.rel_tol", "quadrature relative tolerance");
    add_setting(app, ov, "--max-subdivisions", "solver.max_subdivisions", "quadrature interval budget");
    add_setting(app, ov, "--threads", "solver.threads", "worker threads for grid evaluation (0 = all cores)");
    add_setting(app, ov, "--x-min", "grid.x_min", "grid start (dimensionless)");
    add_setting(app, ov, "--x-max", "grid.x_max", "grid end (dimensionless)");
    add_setting(app, ov, "--nx", "grid.nx", "number of x samples");
    add_setting(app, ov, "--t-min", "grid.t_min", "first time (dimensionless)");
    add_setting(app, ov, "--t-max", "grid.t_max", "last time (dimensionless)");
    add_setting(app, ov, "--nt", "grid.nt", "number of time samples");
    add_setting(app, ov, "--pulse-s", "pulse.duration_s", "laser pulse duration [s] for the regime check");
}

int exit_code_for(const std::exception_ptr& ep, std::ostream& err) {
    try {
        std::rethrow_exception(ep);
    } catch (const VerificationFailed& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << '\n';
        return kAccuracyFailure;
    } catch (const BracketError& e) {
        err << "error: " << e.what() << '\n';
        return kBracketFailure;
    } catch (const UnsupportedModelError& e) {
        err << "error: " << e.what() << '\n';
        return kBracketFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thermal Klein-Gordon solver with a parallel-plate Casimir potential", "kgcasimir"};
    app.set_version_flag("--version", version_line());
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    bool quiet = false;
    app.add_option("--config", config_path, "config file (key = value, [table] headers)");
    app.add_option("--out", out_path, "output file (figures: output directory)");
    app.add_flag("--quiet", quiet, "suppress warnings and progress messages");

    Overrides ov;
    auto* force = app.add_subcommand("force", "parallel-plate Casimir force");
    add_physics(force, ov);
    add_setting(force, ov, "--d-nm", "casimir.d_nm", "plate separation [nm]");
    add_setting(force, ov, "--area-m2", "casimir.area_m2", "plate area [m^2]");

    auto* sweep = app.add_subcommand("q-sweep", "q over plate separation (and optionally v/c)");
    add_physics(sweep, ov);
    add_setting(sweep, ov, "--d-min-nm", "sweep.d_min_nm", "first separation [nm]");
    add_setting(sweep, ov, "--d-max-nm", "sweep.d_max_nm", "last separation [nm]");
    add_setting(sweep, ov, "--d-count", "sweep.d_count", "number of separations");
    add_setting(sweep, ov, "--v-min", "sweep.v_min", "first v/c");
    add_setting(sweep, ov, "--v-max", "sweep.v_max", "last v/c");
    add_setting(sweep, ov, "--v-count", "sweep.v_count", "number of v/c values (0: use --v-over-c only)");

    auto* zero = app.add_subcommand("find-zero", "plate separation where q changes sign");
    add_physics(zero, ov);
    add_setting(zero, ov, "--lo-nm", "findzero.lo_nm", "bracket lower end [nm]");
    add_setting(zero, ov, "--hi-nm", "findzero.hi_nm", "bracket upper end [nm]");
    add_setting(zero, ov, "--tol-nm", "findzero.tol_nm", "bisection tolerance [nm]");

    auto* solve = app.add_subcommand("solve", "closed-form field u(x, t) as long-format CSV");
    add_physics(solve, ov);
    add_solver(solve, ov);

    auto* verify = app.add_subcommand("verify", "compare the closed-form field with the finite-difference solver");
    add_physics(verify, ov);
    add_solver(verify, ov);
    add_setting(verify, ov, "--fdm-nx", "fdm.nx", "finite-difference nodes");
    add_setting(verify, ov, "--cfl", "fdm.cfl", "dt / dx");
    add_setting(verify, ov, "--bound", "fdm.bound", "pass bound on the relative max-abs difference");

    std::string which;
    auto* figures = app.add_subcommand("figures", "write the figure data sets as CSV files");
    figures->add_option("which", which, "2a, 2b, 3a, 3b, 4a, 4b or all")->required();
    add_physics(figures, ov);
    add_solver(figures, ov);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << version_line() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    Session s{RunConfig{}, out, err, quiet, app.get_subcommands().front()->get_name()};
    try {
        if (!config_path.empty()) config::apply_file(s.cfg, config_path);
        for (const auto& [k, v] : ov) config::apply_setting(s.cfg, k, v);
        if (!out_path.empty()) s.cfg.out_path = out_path;
        s.cfg.validate();

        if (s.command == "force") {
            cmd_force(s);
        } else if (s.command == "q-sweep") {
            cmd_q_sweep(s);
        } else if (s.command == "find-zero") {
            cmd_find_zero(s);
        } else if (s.command == "solve") {
            cmd_solve(s);
        } else if (s.command == "verify") {
            cmd_verify(s);
        } else if (s.command == "figures") {
            cmd_figures(s, which);
        }
    } catch (...) {
        return exit_code_for(std::current_exception(), err);
    }
    return kOk;
}

}  // namespace kgc::cli
