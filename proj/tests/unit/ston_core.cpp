#include "ston/errors.hpp"
#include "ston/homotopy.hpp"
#include "ston/ston.hpp"

#include "scenes.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using namespace ston;
using ston::testing::Rng;

TEST_SUITE("ston_core")
{
  TEST_CASE("phi examples")
  {
    CHECK(phi({{{0, 0}, {3, 4}}, false}) == 25.0);
    CHECK(phi({{{0, 0}, {1, 0}, {2, 0}}, false}) == 2.0);
    CHECK(phi({{{0, 0}, {1, 0}, {1, 1}}, true}) == 4.0);
  }

  TEST_CASE("alpha schedule")
  {
    StonParams p;
    CHECK(alpha(0, FeatureKind::created, p) == 1.0);
    CHECK(alpha(12345, FeatureKind::created, p) == 1.0);
    CHECK(alpha(0, FeatureKind::selected, p) == doctest::Approx(0.01));
    CHECK(alpha(5000, FeatureKind::selected, p) == doctest::Approx(0.02));
    CHECK(alpha(10'000'000, FeatureKind::selected, p) == p.alpha_cap);
    p.selected_alpha = 1.0;
    CHECK(alpha(0, FeatureKind::selected, p) == 1.0);
  }

  TEST_CASE("parameter validation")
  {
    StonParams p;
    CHECK_NOTHROW(p.validate());
    p.beta = 0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.horizon = 0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.epsilon_pct = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.alpha_cap = 1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.max_sweeps = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    CHECK_NOTHROW(tighten_defaults().validate());
    CHECK_NOTHROW(smooth_defaults().validate());
    CHECK_NOTHROW(hull_defaults().validate());
    CHECK(smooth_defaults().epsilon_pct == 0.1);
    CHECK_THROWS_AS(validate({{{0, 0}, {1, 0}}, false}), std::invalid_argument);
    CHECK_THROWS_AS(validate({{{0, 0}, {NAN, 0}, {1, 0}}, false}), std::invalid_argument);
  }

  TEST_CASE("compute_feature examples")
  {
    StringConfig const cfg{{{0, 0}, {1, 1}, {2, 0}}, false};
    auto const created = compute_feature(1, cfg, ObstacleSet{});
    CHECK(created.kind == FeatureKind::created);
    CHECK(created.vector == Point{1, 0});

    ObstacleSet const single(std::vector<Point>{{1, 0.4}});
    auto const selected = compute_feature(1, cfg, single);
    CHECK(selected.kind == FeatureKind::selected);
    CHECK(selected.vector == Point{1, 0.4});
    CHECK(selected.obstacles == std::vector<ObstacleId>{0});

    ObstacleSet const pair(std::vector<Point>{{0.9, 0.4}, {1.1, 0.4}});
    auto const multi = compute_feature(1, cfg, pair);
    CHECK(multi.kind == FeatureKind::multi);
    CHECK(multi.obstacles == std::vector<ObstacleId>{0, 1});

    CHECK_THROWS_AS(compute_feature(0, cfg, pair), std::invalid_argument);
  }

  TEST_CASE("obstacles outside the triangle are ignored")
  {
    StringConfig const cfg{{{0, 0}, {1, 1}, {2, 0}}, false};
    ObstacleSet const os(std::vector<Point>{{1, 0.5}, {10, 10}});
    CHECK(compute_feature(1, cfg, os).kind == FeatureKind::selected);
  }

  TEST_CASE("update_weight examples")
  {
    CHECK(update_weight({0, 0}, {2, 2}, 0.5) == Point{1, 1});
    CHECK(update_weight({0, 1}, {1, 0}, 1.0) == Point{1, 0});
    CHECK(update_weight({5, 5}, {0, 0}, 0.0) == Point{5, 5});
  }

  TEST_CASE("sweep examples")
  {
    StringConfig free{{{0, 0}, {1, 1}, {2, 0}}, false};
    auto const r1 = sweep(free, ObstacleSet{}, tighten_defaults(), 0);
    CHECK(free.weights[1] == Point{1, 0});
    CHECK(r1.max_displacement == 1.0);
    CHECK(r1.events.created == 1);

    StringConfig held{{{0, 0}, {1, 1}, {2, 0}}, false};
    auto const r2 = sweep(held, ObstacleSet(std::vector<Point>{{1, 0.5}}), tighten_defaults(), 0);
    CHECK(held.weights[1].x == doctest::Approx(1.0));
    CHECK(held.weights[1].y == doctest::Approx(0.995));
    CHECK(r2.max_displacement == doctest::Approx(0.005));
    CHECK(r2.events.selected == 1);

    StringConfig zig{{{0, 0}, {1, 1}, {2, -1}, {3, 1}, {4, 0}}, false};
    double const before = string_length(zig);
    sweep(zig, ObstacleSet{}, tighten_defaults(), 0);
    CHECK(string_length(zig) < before);
    CHECK(zig.weights.front() == Point{0, 0});
    CHECK(zig.weights.back() == Point{4, 0});
  }

  TEST_CASE("with the extension off a multi triangle holds its processor")
  {
    StringConfig cfg{{{0, 0}, {1, 1}, {2, 0}}, false};
    StonParams p = tighten_defaults();
    p.extension = false;
    auto const r = sweep(cfg, ObstacleSet(std::vector<Point>{{0.9, 0.4}, {1.1, 0.4}}), p, 0);
    CHECK(cfg.weights[1] == Point{1, 1});
    CHECK(r.events.multi == 1);
    CHECK(cfg.size() == 3);
  }

  TEST_CASE("zigzag tightens to a straight segment")
  {
    StringConfig const zig{{{0, 0}, {1, 1}, {2, -1}, {3, 1}, {4, 0}}, false};
    auto const res = tighten(zig, ObstacleSet{}, tighten_defaults());
    CHECK(res.status == Status::converged);
    CHECK(string_length(res.config) == doctest::Approx(4.0).epsilon(1e-6));
    for (auto const & w : res.config.weights)
      CHECK(std::abs(w.y) < 1e-3);
    CHECK(res.trace.back().max_displacement < res.epsilon);
  }

  TEST_CASE("single obstacle detour reaches the optimum")
  {
    ObstacleSet const os(std::vector<Point>{{0, 0.5}});
    StringConfig const cfg{{{-1, 0}, {-0.5, 0.5}, {0, 1}, {0.5, 0.5}, {1, 0}}, false};
    double const optimum = 2.0 * std::sqrt(1.25);

    // Selected processors stop within about epsilon / alpha of their obstacle.
    auto const loose = tighten(cfg, os, tighten_defaults());
    CHECK(loose.status == Status::converged);
    CHECK(string_length(loose.config) >= optimum - 1e-12);
    CHECK(string_length(loose.config) <= optimum * 1.005);

    StonParams p = tighten_defaults();
    p.epsilon_pct = 1e-7;
    auto const tight = tighten(cfg, os, p);
    CHECK(tight.status == Status::converged);
    CHECK(string_length(tight.config) == doctest::Approx(optimum).epsilon(1e-6));
    double nearest = INFINITY;
    for (auto const & w : tight.config.weights)
      nearest = std::min(nearest, distance(w, os[0]));
    CHECK(nearest < 1e-6);
    CHECK(signature(tight.config.weights, os) == signature(cfg.weights, os));
  }

  TEST_CASE("convergence threshold follows the obstacle extent")
  {
    ObstacleSet const os(std::vector<Point>{{0, 0}, {10, 2}});
    StringConfig const cfg{{{-1, 0}, {0, 5}, {11, 0}}, false};
    CHECK(convergence_epsilon(cfg, os, tighten_defaults()) == doctest::Approx(1e-4));
    CHECK(convergence_epsilon(cfg, ObstacleSet{}, tighten_defaults()) == doctest::Approx(1.2e-4));
  }

  TEST_CASE("sweep limit is reported with one record per sweep")
  {
    StringConfig const zig{{{0, 0}, {1, 1}, {2, -1}, {3, 1}, {4, 0}}, false};
    StonParams p = tighten_defaults();
    p.max_sweeps = 1;
    auto const res = tighten(zig, ObstacleSet{}, p);
    CHECK(res.status == Status::sweep_limit);
    CHECK(res.trace.size() == 1);
    CHECK(res.trace.front().sweep == 1);
  }

  TEST_CASE("observer sees every sweep")
  {
    StringConfig const zig{{{0, 0}, {1, 1}, {2, -1}, {3, 1}, {4, 0}}, false};
    std::size_t seen = 0;
    SweepObserver obs;
    obs.on_sweep = [&](SweepRecord const &, StringConfig const &) { ++seen; };
    auto const res = tighten(zig, ObstacleSet{}, tighten_defaults(), &obs);
    CHECK(seen == res.trace.size());
  }

  TEST_CASE("core sweeps on dense strings: length, class, terminals and k")
  {
    Rng rng(51);
    for (int s = 0; s < 40; ++s)
    {
      auto const scene = ston::testing::random_dense_scene(rng, 4, 25, 10, 120);
      ObstacleSet const os(scene.obstacles);
      StonParams p = tighten_defaults();
      p.extension = false;
      p.beta = 0.1;
      p.horizon = 50;
      p.max_sweeps = 300;
      StringConfig const cfg0{scene.sampled, false};
      auto const cls = signature(cfg0.weights, os);
      StringConfig cfg = cfg0;
      double prev = string_length(cfg);
      for (std::size_t t = 0; t < 60; ++t)
      {
        sweep(cfg, os, p, t);
        double const len = string_length(cfg);
        REQUIRE(len <= prev + 1e-9);
        prev = len;
        REQUIRE(cfg.size() == cfg0.size());
        REQUIRE(signature(cfg.weights, os) == cls);
      }
      REQUIRE(cfg.weights.front() == cfg0.weights.front());
      REQUIRE(cfg.weights.back() == cfg0.weights.back());
    }
  }

  TEST_CASE("created updates land exactly on the neighbour midpoint")
  {
    StringConfig cfg{{{0, 0}, {0.3, 2}, {1, 0.5}, {2, 0}}, false};
    Point const next = cfg.weights[2];
    sweep(cfg, ObstacleSet{}, tighten_defaults(), 0);
    CHECK(cfg.weights[1] == midpoint(Point{0, 0}, next));
  }

  TEST_CASE("closed loops update every processor")
  {
    StringConfig cfg{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}, true};
    auto const r = sweep(cfg, ObstacleSet{}, hull_defaults(), 0);
    CHECK(r.events.created == 4);
    CHECK(cfg.weights[0] == midpoint(Point{0, 2}, Point{2, 0}));
  }
}
