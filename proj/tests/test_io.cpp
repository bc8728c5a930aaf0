#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "kgc/config.hpp"
#include "kgc/csv.hpp"
#include "kgc/errors.hpp"

using namespace kgc;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / ("kgc_test_io_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("format_value") {
    CHECK(io::format_value(0.0) == "0.000000000000e+00");
    CHECK(io::format_value(-1.300125772448e-7) == "-1.300125772448e-07");
    CHECK(io::format_value(1.0 / 3.0) == "3.333333333333e-01");
}

TEST_CASE("csv round trip") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> dist(0.0, 1e3);
    io::CsvTable t;
    t.comments = {"kgcasimir test", "config: grid.nx = 3"};
    t.columns = {"a", "b"};
    for (int i = 0; i < 50; ++i) t.rows.push_back({dist(rng), dist(rng) * 1e-20});

    std::ostringstream first;
    io::write_csv(first, t);
    std::istringstream in(first.str());
    const auto back = io::read_csv(in);
    CHECK(back.comments == t.comments);
    CHECK(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            CHECK(back.rows[i][k] == doctest::Approx(t.rows[i][k]).epsilon(1e-12));
        }
    }
    std::ostringstream second;
    io::write_csv(second, back);
    CHECK(second.str() == first.str());
    CHECK(back.column("b") == 1);
    CHECK_THROWS_AS(back.column("c"), InvalidArgument);
}

TEST_CASE("malformed csv") {
    std::istringstream empty("# only a comment\n");
    CHECK_THROWS_AS(io::read_csv(empty), InvalidArgument);
    std::istringstream ragged("a,b\n1,2\n3\n");
    CHECK_THROWS_AS(io::read_csv(ragged), InvalidArgument);
    std::istringstream text("a\nfoo\n");
    CHECK_THROWS_AS(io::read_csv(text), InvalidArgument);
    std::istringstream late("a\n1\n# late\n");
    CHECK_THROWS_AS(io::read_csv(late), InvalidArgument);
    std::istringstream crlf("a,b\r\n1, 2\r\n");
    CHECK(io::read_csv(crlf).rows.at(0).at(1) == 2.0);
}

TEST_CASE("field table round trip") {
    Field2D f({-1.0, 0.0, 1.0}, {0.0, 0.5}, 4.0, Provenance::fdm);
    f.values = {0.0, 0.0, 0.0, 0.1, 0.2, 0.3};
    const auto t = io::field_table(f, {"x"});
    CHECK(t.columns == std::vector<std::string>{"t", "x", "u"});
    CHECK(t.rows.size() == 6);
    CHECK(t.rows[4] == std::vector<double>{0.5, 0.0, 0.2});
    const auto g = io::table_field(t);
    CHECK(g.xs == f.xs);
    CHECK(g.ts == f.ts);
    CHECK(g.values == f.values);

    auto broken = t;
    broken.rows.pop_back();
    CHECK_THROWS_AS(io::table_field(broken), ShapeError);
}

TEST_CASE("config text parsing") {
    const auto kv = config::parse_config_text(
        "# comment\n"
        "kinematics.v_over_c = 0.02\n"
        "[grid]\n"
        "nx = 81   # trailing\n"
        "[solver]\n"
        "ic = \"bump\"\n");
    REQUIRE(kv.size() == 3);
    CHECK(kv[0] == std::pair<std::string, std::string>{"kinematics.v_over_c", "0.02"});
    CHECK(kv[1] == std::pair<std::string, std::string>{"grid.nx", "81"});
    CHECK(kv[2] == std::pair<std::string, std::string>{"solver.ic", "bump"});
    CHECK_THROWS_AS(config::parse_config_text("no equals sign\n"), InvalidArgument);
    CHECK_THROWS_AS(config::parse_config_text("[grid\n"), InvalidArgument);
    CHECK_THROWS_AS(config::parse_config_text(" = 3\n"), InvalidArgument);
}

TEST_CASE("apply_setting and validate") {
    config::RunConfig c;
    CHECK_NOTHROW(c.validate());
    CHECK(c.separation_nm() == config::kFigure3SeparationNm);
    CHECK(c.velocity() == doctest::Approx(0.01 * 2.99792458e8));

    config::apply_setting(c, "casimir.d_nm", "0.72");
    CHECK(c.separation_nm() == 0.72);
    config::apply_setting(c, "casimir.sign", "attractive");
    CHECK(c.casimir_model().sign == physics::CasimirSign::attractive);
    CHECK(c.casimir_model().effective_area == doctest::Approx(1e-18));
    config::apply_setting(c, "solver.quadrature", "gauss-legendre-composite");
    CHECK(c.quad.method == QuadratureMethod::gauss_legendre);
    config::apply_setting(c, "casimir.d_nm", "none");
    CHECK_FALSE(c.d_nm.has_value());

    CHECK_THROWS_AS(config::apply_setting(c, "grid.nope", "1"), InvalidArgument);
    CHECK_THROWS_AS(config::apply_setting(c, "grid.nx", "-3"), InvalidArgument);
    CHECK_THROWS_AS(config::apply_setting(c, "grid.x_min", "abc"), InvalidArgument);
    CHECK_THROWS_AS(config::apply_setting(c, "casimir.sign", "0"), InvalidArgument);

    config::RunConfig d;
    d.d_nm = 0.0;
    CHECK_THROWS_AS(d.validate(), InvalidArgument);
    d.d_nm = 0.7;
    d.q_override = 4.0;
    CHECK_THROWS_AS(d.validate(), InvalidArgument);
    config::RunConfig v;
    v.v_over_c = 1.0;
    CHECK_THROWS_AS(v.validate(), InvalidArgument);
    config::RunConfig cfl;
    cfl.cfl = 1.2;
    CHECK_THROWS_AS(cfl.validate(), InvalidArgument);
}

TEST_CASE("describe lists every key and round-trips through apply_setting") {
    config::RunConfig c;
    c.v_over_c = 0.015;
    c.d_nm = 0.74;
    c.nx = 33;
    const auto kv = config::describe(c);
    CHECK(kv.size() >= 40);
    config::RunConfig back;
    for (const auto& [k, v] : kv) {
        if (v == "\"\"") continue;
        config::apply_setting(back, k, v);
    }
    CHECK(config::describe(back) == kv);
}

TEST_CASE("config files and initial conditions") {
    const auto p = temp_file("cfg.toml", "[kinematics]\nv_over_c = 0.02\n[solver]\nic = bump\nbump_half_width = 0.25\n");
    config::RunConfig c;
    config::apply_file(c, p.string());
    CHECK(c.v_over_c == 0.02);
    const auto ic = config::make_initial_condition(c);
    CHECK(ic.kind() == InitialCondition::Kind::bump);
    REQUIRE(ic.support().has_value());
    CHECK(ic.support()->hi == doctest::Approx(0.25));
    CHECK_THROWS_AS(config::apply_file(c, "/nonexistent/kgc.toml"), InvalidArgument);

    const auto table = temp_file("ic.csv", "x,f\n-1,0\n0,1\n1,0\n");
    config::RunConfig t;
    t.ic = "tabulated";
    t.ic_table = table.string();
    const auto tab = config::make_initial_condition(t);
    CHECK(tab(0.5) == doctest::Approx(0.5));
    CHECK(tab(2.0) == 0.0);
    std::filesystem::remove(p);
    std::filesystem::remove(table);
}
