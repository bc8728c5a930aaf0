#include "kgc/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "kgc/csv.hpp"
#include "kgc/errors.hpp"

namespace kgc::config {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string unquote(std::string s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw InvalidArgument(key + ": expected a finite number, got '" + s + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& s) {
    unsigned long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidArgument(key + ": expected a non-negative integer, got '" + s + "'");
    }
    return static_cast<std::size_t>(v);
}

std::optional<double> parse_optional(const std::string& key, const std::string& s) {
    if (s.empty() || s == "none") return std::nullopt;
    return parse_double(key, s);
}

struct Setting {
    const char* key;
    std::function<void(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define KGC_DOUBLE(name, member)                                                                \
    Setting {                                                                                   \
        name, [](RunConfig& c, const std::string& v) { c.member = parse_double(name, v); },   \
            [](const RunConfig& c) { return fmt(c.member); }                                    \
    }
#define KGC_COUNT(name, member)                                                                 \
    Setting {                                                                                   \
        name, [](RunConfig& c, const std::string& v) { c.member = parse_count(name, v); },    \
            [](const RunConfig& c) { return std::to_string(c.member); }                         \
    }
#define KGC_OPTIONAL(name, member)                                                              \
    Setting {                                                                                   \
        name, [](RunConfig& c, const std::string& v) { c.member = parse_optional(name, v); }, \
            [](const RunConfig& c) { return c.member ? fmt(*c.member) : std::string("none"); } \
    }
#define KGC_STRING(name, member)                                                      \
    Setting {                                                                         \
        name, [](RunConfig& c, const std::string& v) { c.member = v; },               \
            [](const RunConfig& c) { return c.member.empty() ? std::string("\"\"") : c.member; } \
    }

const std::vector<Setting>& settings() {
    static const std::vector<Setting> table = {
        KGC_DOUBLE("constants.mass", constants.mass),
        KGC_DOUBLE("constants.hbar", constants.hbar),
        KGC_DOUBLE("constants.c", constants.c),
        Setting{"casimir.sign",
                [](RunConfig& c, const std::string& v) {
                    if (v == "+1" || v == "1" || v == "repulsive") {
                        c.sign = +1;
                    } else if (v == "-1" || v == "attractive") {
                        c.sign = -1;
                    } else {
                        throw InvalidArgument("casimir.sign: expected +1/-1 (repulsive/attractive), got '" + v + "'");
                    }
                },
                [](const RunConfig& c) { return std::string(c.sign > 0 ? "+1" : "-1"); }},
        KGC_DOUBLE("casimir.effective_area_nm2", effective_area_nm2),
        KGC_DOUBLE("casimir.area_m2", area_m2),
        KGC_OPTIONAL("casimir.d_nm", d_nm),
        KGC_DOUBLE("kinematics.v_over_c", v_over_c),
        KGC_DOUBLE("solver.length_scale_nm", length_scale_nm),
        KGC_OPTIONAL("solver.q_override", q_override),
        KGC_STRING("solver.ic", ic),
        KGC_DOUBLE("solver.bump_center", bump_center),
        KGC_DOUBLE("solver.bump_half_width", bump_half_width),
        KGC_STRING("solver.ic_table", ic_table),
        Setting{"solver.quadrature",
                [](RunConfig& c, const std::string& v) {
                    if (v == "adaptive-simpson") {
                        c.quad.method = QuadratureMethod::adaptive_simpson;
                    } else if (v == "gauss-legendre-composite" || v == "gauss-legendre") {
                        c.quad.method = QuadratureMethod::gauss_legendre;
                    } else {
                        throw InvalidArgument("solver.quadrature: expected adaptive-simpson or gauss-legendre-composite");
                    }
                },
                [](const RunConfig& c) {
                    return std::string(c.quad.method == QuadratureMethod::gauss_legendre ? "gauss-legendre-composite"
                                                                                          : "adaptive-simpson");
                }},
        KGC_DOUBLE("solver.abs_tol", quad.abs_tol),
        KGC_DOUBLE("solver.rel_tol", quad.rel_tol),
        KGC_COUNT("solver.max_subdivisions", quad.max_subdivisions),
        Setting{"solver.threads",
                [](RunConfig& c, const std::string& v) {
                    c.threads = static_cast<unsigned>(parse_count("solver.threads", v));
                },
                [](const RunConfig& c) { return std::to_string(c.threads); }},
        KGC_DOUBLE("grid.x_min", x_min),
        KGC_DOUBLE("grid.x_max", x_max),
        KGC_COUNT("grid.nx", nx),
        KGC_DOUBLE("grid.t_min", t_min),
        KGC_DOUBLE("grid.t_max", t_max),
        KGC_COUNT("grid.nt", nt),
        KGC_DOUBLE("fdm.cfl", cfl),
        KGC_COUNT("fdm.nx", fdm_nx),
        KGC_DOUBLE("fdm.bound", verify_bound),
        KGC_DOUBLE("sweep.d_min_nm", sweep_d_min_nm),
        KGC_DOUBLE("sweep.d_max_nm", sweep_d_max_nm),
        KGC_COUNT("sweep.d_count", sweep_d_count),
        KGC_DOUBLE("sweep.v_min", sweep_v_min),
        KGC_DOUBLE("sweep.v_max", sweep_v_max),
        KGC_COUNT("sweep.v_count", sweep_v_count),
        KGC_DOUBLE("findzero.lo_nm", bracket_lo_nm),
        KGC_DOUBLE("findzero.hi_nm", bracket_hi_nm),
        KGC_DOUBLE("findzero.tol_nm", tol_nm),
        KGC_DOUBLE("pulse.duration_s", pulse_duration_s),
        KGC_DOUBLE("pulse.ratio_max", pulse_ratio_max),
        KGC_STRING("output.path", out_path),
        KGC_STRING("output.format", format),
    };
    return table;
}

#undef KGC_DOUBLE
#undef KGC_COUNT
#undef KGC_OPTIONAL
#undef KGC_STRING

}  // namespace

physics::CasimirModel RunConfig::casimir_model() const {
    return {sign > 0 ? physics::CasimirSign::repulsive : physics::CasimirSign::attractive,
            effective_area_nm2 * 1e-18};
}

void RunConfig::validate() const {
    const auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw InvalidArgument(msg);
    };
    require(constants.mass > 0.0 && constants.hbar > 0.0 && constants.c > 0.0,
            "constants.mass, constants.hbar and constants.c must be > 0");
    require(sign == 1 || sign == -1, "casimir.sign must be +1 or -1");
    require(effective_area_nm2 > 0.0, "casimir.effective_area_nm2 must be > 0");
    require(area_m2 > 0.0, "casimir.area_m2 must be > 0");
    require(!d_nm || *d_nm > 0.0, "casimir.d_nm (--d-nm) must be > 0");
    require(v_over_c > 0.0 && v_over_c < 1.0, "kinematics.v_over_c must lie in (0, 1)");
    require(length_scale_nm > 0.0, "solver.length_scale_nm must be > 0");
    require(!(d_nm && q_override), "exactly one of casimir.d_nm and solver.q_override may supply q");
    require(ic == "gaussian" || ic == "bump" || ic == "tabulated", "solver.ic must be gaussian, bump or tabulated");
    require(ic != "bump" || bump_half_width > 0.0, "solver.bump_half_width must be > 0");
    require(ic != "tabulated" || !ic_table.empty(), "solver.ic_table is required for a tabulated ic");
    require(quad.abs_tol > 0.0 && quad.rel_tol > 0.0, "solver.abs_tol and solver.rel_tol must be > 0");
    require(quad.max_subdivisions >= 1, "solver.max_subdivisions must be >= 1");
    require(x_max >= x_min, "grid.x_max must be >= grid.x_min");
    require(nx >= 1 && nt >= 1, "grid.nx and grid.nt must be >= 1");
    require(t_min >= 0.0 && t_max >= t_min, "grid times must satisfy 0 <= t_min <= t_max");
    require(nx == 1 || x_max > x_min, "grid.x_max must exceed grid.x_min when nx > 1");
    require(cfl > 0.0 && cfl <= 1.0, "fdm.cfl must lie in (0, 1]");
    require(fdm_nx >= 3, "fdm.nx must be >= 3");
    require(verify_bound > 0.0, "fdm.bound must be > 0");
    require(sweep_d_min_nm > 0.0 && sweep_d_max_nm >= sweep_d_min_nm, "sweep d range must satisfy 0 < min <= max");
    require(sweep_d_count >= 1, "sweep.d_count must be >= 1");
    require(sweep_v_count == 0 || (sweep_v_min > 0.0 && sweep_v_max < 1.0 && sweep_v_max >= sweep_v_min),
            "sweep v/c range must satisfy 0 < min <= max < 1");
    require(bracket_lo_nm > 0.0 && bracket_hi_nm > bracket_lo_nm, "find-zero bracket must satisfy 0 < lo < hi");
    require(tol_nm > 0.0, "findzero.tol_nm must be > 0");
    require(pulse_duration_s > 0.0 && pulse_ratio_max > 0.0, "pulse settings must be > 0");
    require(format == "csv", "output.format: only csv is supported");
}

std::vector<std::pair<std::string, std::string>> parse_config_text(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string table;
    std::size_t line_no = 0;
    std::istringstream is{std::string(text)};
    std::string raw;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        // strip comments outside quotes
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw InvalidArgument("config line " + std::to_string(line_no) + ": malformed table header");
            }
            table = trim(std::string_view(line).substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = unquote(trim(std::string_view(line).substr(eq + 1)));
        if (key.empty()) throw InvalidArgument("config line " + std::to_string(line_no) + ": empty key");
        if (!table.empty()) key = table + "." + key;
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    for (const auto& s : settings()) {
        if (key == s.key) {
            s.set(cfg, value);
            return;
        }
    }
    throw InvalidArgument("unknown config key '" + key + "'");
}

void apply_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    for (const auto& [k, v] : parse_config_text(text.str())) apply_setting(cfg, k, v);
}

std::vector<std::pair<std::string, std::string>> describe(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : settings()) out.emplace_back(s.key, s.get(cfg));
    return out;
}

InitialCondition make_initial_condition(const RunConfig& cfg) {
    if (cfg.ic == "gaussian") return InitialCondition::gaussian();
    if (cfg.ic == "bump") return InitialCondition::bump(cfg.bump_center, cfg.bump_half_width);
    if (cfg.ic == "tabulated") {
        std::ifstream in(cfg.ic_table);
        if (!in) throw InvalidArgument("cannot open ic table '" + cfg.ic_table + "'");
        const auto table = io::read_csv(in);
        const auto cx = table.column("x");
        const auto cf = table.column("f");
        std::vector<double> xs;
        std::vector<double> fs;
        for (const auto& r : table.rows) {
            xs.push_back(r[cx]);
            fs.push_back(r[cf]);
        }
        return InitialCondition::tabulated(std::move(xs), std::move(fs));
    }
    throw InvalidArgument("solver.ic must be gaussian, bump or tabulated");
}

}  // namespace kgc::config
