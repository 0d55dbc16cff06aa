#include "ston/errors.hpp"
#include "ston/homotopy.hpp"
#include "ston/io.hpp"

#include "doctest.h"

#include <algorithm>
#include <sstream>

using namespace ston;

namespace
{
std::size_t count_lines(std::string const & s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::vector<std::vector<std::string>> csv_rows(std::string const & text)
{
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
  {
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ','))
      cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

char const * const corridor = R"({
  "obstacles": [[0, 0.5], [3, 3]],
  "path": [[-1, 0], [0, 1], [1, 0]]
})";
}  // namespace

TEST_SUITE("cli_io")
{
  TEST_CASE("load_scene examples")
  {
    auto const scene = io::parse_scene(corridor);
    CHECK(scene.obstacles.size() == 2);
    CHECK(scene.path.size() == 3);
    CHECK(scene.mode == io::Mode::tighten);
    CHECK_FALSE(scene.closed);

    CHECK_THROWS_AS(io::parse_scene(R"({"obstacles": [[0, 0], [1, 1]], "path": [[0, 0]]})"), SceneError);
    CHECK_THROWS_AS(io::parse_scene(R"({"obstacles": [[0, 0], [1, 1]], "mode": "hull"})"), SceneError);
    CHECK_THROWS_AS(io::parse_scene("not json"), SceneError);
    CHECK_THROWS_AS(io::parse_scene(R"({"obstacles": [[0]], "path": [[0, 0], [1, 1]]})"), SceneError);
    CHECK_THROWS_AS(io::parse_scene(R"({"path": [[0, 0], [1, 1]], "mode": "sideways"})"), SceneError);
    CHECK_THROWS_AS(io::parse_scene(R"({"path": [[0, 0], [1, 1]], "config": {"max_sweeps": 0}})"), SceneError);
    CHECK_THROWS_AS(io::load_scene("/nonexistent/scene.json"), SceneError);
  }

  TEST_CASE("duplicate obstacles are merged with a warning")
  {
    auto const scene = io::parse_scene(R"({"obstacles": [[0, 2], [0, 2], [1, 3]], "path": [[-1, 0], [1, 0]]})");
    CHECK(scene.obstacles.size() == 2);
    REQUIRE(scene.warnings.size() == 1);
  }

  TEST_CASE("config overrides apply in order scene then command line")
  {
    auto const scene = io::parse_scene(R"({"path": [[0, 0], [1, 1]], "config": {"beta": 0.2, "T": 7}})");
    io::RunOptions opts;
    opts.overrides.horizon = 9;
    auto const p = io::resolve_params(io::Mode::tighten, scene.config, opts);
    CHECK(p.beta == 0.2);
    CHECK(p.horizon == 9);
    CHECK(p.epsilon_pct == 0.001);
    CHECK(io::resolve_params(io::Mode::smooth, {}, {}).epsilon_pct == 0.1);
    opts.overrides.beta = 0.7;
    CHECK_THROWS_AS(io::resolve_params(io::Mode::tighten, scene.config, opts), std::invalid_argument);
  }

  TEST_CASE("corridor scene converges near the oracle length")
  {
    auto const scene = io::parse_scene(corridor);
    io::RunOptions opts;
    opts.oracle = true;
    auto const out = io::run(scene, opts);
    CHECK(out.exit_code == io::exit_converged);
    REQUIRE(out.oracle);
    REQUIRE(out.oracle->status == oracle::SearchStatus::found);
    CHECK(string_length(out.result.config) >= out.oracle->length - 1e-12);
    CHECK(string_length(out.result.config) <= out.oracle->length * 1.005);
  }

  TEST_CASE("one sweep on a hard scene hits the limit")
  {
    auto const scene = io::parse_scene(R"({
      "obstacles": [[0.2, 0.5], [0.5, 0.4], [0.8, 0.6]],
      "path": [[0, 0], [0.3, 1], [0.6, -0.2], [1, 1]],
      "config": {"max_sweeps": 1}
    })");
    auto const out = io::run(scene, {});
    CHECK(out.exit_code == io::exit_sweep_limit);
    auto const rows = csv_rows(io::trace_csv(out.result.trace));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][0] == "1");
  }

  TEST_CASE("trace columns and a non-increasing length column")
  {
    auto const out = io::run(io::parse_scene(corridor), {});
    auto const rows = csv_rows(io::trace_csv(out.result.trace));
    REQUIRE(rows.size() == out.result.trace.size() + 1);
    CHECK(rows[0] == std::vector<std::string>{"sweep", "length", "phi", "max_disp", "k", "created", "selected", "multi"});
    for (std::size_t i = 2; i < rows.size(); ++i)
      REQUIRE(std::stod(rows[i][1]) <= std::stod(rows[i - 1][1]) + 1e-9);
  }

  TEST_CASE("result scene round-trips with the same signature")
  {
    auto const scene = io::parse_scene(corridor);
    auto const out = io::run(scene, {});
    auto const again = io::parse_scene(io::result_json(scene, out));
    ObstacleSet const os(scene.obstacles);
    CHECK(again.path == out.result.config.weights);
    CHECK(signature(again.path, os) == signature(scene.path, os));
    CHECK(again.config.beta == out.params.beta);
  }

  TEST_CASE("numbers are written with round-trip precision")
  {
    CHECK(io::format_number(0.1) == "0.10000000000000001");
    CHECK(std::stod(io::format_number(1.0 / 3.0)) == 1.0 / 3.0);
  }

  TEST_CASE("hull mode loops enclose the obstacles")
  {
    auto const scene = io::parse_scene(R"({"obstacles": [[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]], "mode": "hull"})");
    auto const out = io::run(scene, {});
    CHECK(out.exit_code == io::exit_converged);
    CHECK(out.result.config.closed);
    for (auto const & p : scene.obstacles)
      CHECK(point_in_polygon(p, out.result.config.weights));
    CHECK(string_length(out.result.config) == doctest::Approx(4.0).epsilon(1e-4));
  }

  TEST_CASE("oracle requests are limited to small open scenes")
  {
    io::RunOptions opts;
    opts.oracle = true;
    auto const hull = io::parse_scene(R"({"obstacles": [[0, 0], [1, 0], [0, 1]], "mode": "hull"})");
    CHECK_THROWS_AS(io::run(hull, opts), SceneError);
  }

  TEST_CASE("svg overlays draw obstacles and both paths")
  {
    auto const scene = io::parse_scene(corridor);
    auto const out = io::run(scene, {});
    auto const svg = io::svg(scene.obstacles, out.initial, out.result.config.weights, false);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count_lines(svg) == 2 + 2 + scene.obstacles.size());
  }
}
