#include "ston/io.hpp"

#include "ston/errors.hpp"
#include "ston/homotopy.hpp"
#include "ston/sampler.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ston::io
{
namespace
{
using nlohmann::json;

Point parse_point(json const & j, char const * what)
{
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SceneError(std::string(what) + ": expected [x, y]");
  Point const p{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(p))
    throw SceneError(std::string(what) + ": non-finite coordinate");
  return p;
}

std::vector<Point> parse_points(json const & doc, char const * key)
{
  std::vector<Point> out;
  auto const it = doc.find(key);
  if (it == doc.end() || it->is_null())
    return out;
  if (!it->is_array())
    throw SceneError(std::string(key) + ": expected an array of points");
  out.reserve(it->size());
  for (auto const & p : *it)
    out.push_back(parse_point(p, key));
  return out;
}

std::optional<double> parse_real(json const & cfg, char const * key)
{
  auto const it = cfg.find(key);
  if (it == cfg.end() || it->is_null())
    return std::nullopt;
  if (!it->is_number())
    throw SceneError(std::string("config.") + key + ": expected a number");
  return it->get<double>();
}

void validate_for(Scene const & scene, Mode mode)
{
  if (mode == Mode::hull)
  {
    if (scene.obstacles.size() < 3)
      throw SceneError("hull mode needs at least three distinct obstacles");
    return;
  }
  if (scene.path.size() < 2)
    throw SceneError(std::string(to_string(mode)) + " mode needs a path of at least two points");
  if (scene.closed && scene.path.size() < 3)
    throw SceneError("a closed path needs at least three points");
}

json points_json(std::span<Point const> pts)
{
  json arr = json::array();
  for (auto const & p : pts)
    arr.push_back({p.x, p.y});
  return arr;
}

void apply(Overrides const & o, StonParams & p)
{
  if (o.beta)
    p.beta = *o.beta;
  if (o.horizon)
    p.horizon = *o.horizon;
  if (o.epsilon_pct)
    p.epsilon_pct = *o.epsilon_pct;
  if (o.max_sweeps)
    p.max_sweeps = *o.max_sweeps;
}

std::vector<Point> polyline_points(std::span<Point const> pts, bool closed)
{
  std::vector<Point> out(pts.begin(), pts.end());
  if (closed && !out.empty())
    out.push_back(out.front());
  return out;
}
}  // namespace

std::string_view to_string(Mode m)
{
  switch (m)
  {
  case Mode::tighten:
    return "tighten";
  case Mode::smooth:
    return "smooth";
  case Mode::hull:
    return "hull";
  }
  return "tighten";
}

std::optional<Mode> parse_mode(std::string_view s)
{
  if (s == "tighten")
    return Mode::tighten;
  if (s == "smooth")
    return Mode::smooth;
  if (s == "hull")
    return Mode::hull;
  return std::nullopt;
}

std::string format_number(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Scene parse_scene(std::string_view json_text)
{
  json doc;
  try
  {
    doc = json::parse(json_text);
  }
  catch (json::parse_error const & e)
  {
    throw SceneError(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw SceneError("scene must be a JSON object");

  Scene scene;
  auto const raw = parse_points(doc, "obstacles");
  ObstacleSet const unique(raw);
  scene.obstacles.assign(unique.points().begin(), unique.points().end());
  if (unique.duplicates_removed() > 0)
    scene.warnings.push_back(std::to_string(unique.duplicates_removed()) + " duplicate obstacle(s) removed");
  scene.path = parse_points(doc, "path");

  if (auto const it = doc.find("closed"); it != doc.end() && !it->is_null())
  {
    if (!it->is_boolean())
      throw SceneError("closed: expected a boolean");
    scene.closed = it->get<bool>();
  }
  if (auto const it = doc.find("mode"); it != doc.end() && !it->is_null())
  {
    auto const m = it->is_string() ? parse_mode(it->get<std::string>()) : std::nullopt;
    if (!m)
      throw SceneError("mode: expected \"tighten\", \"smooth\" or \"hull\"");
    scene.mode = *m;
  }
  if (auto const it = doc.find("config"); it != doc.end() && !it->is_null())
  {
    if (!it->is_object())
      throw SceneError("config: expected an object");
    scene.config.beta = parse_real(*it, "beta");
    scene.config.horizon = parse_real(*it, "T");
    scene.config.epsilon_pct = parse_real(*it, "epsilon_pct");
    if (auto const ms = it->find("max_sweeps"); ms != it->end() && !ms->is_null())
    {
      if (!ms->is_number_integer() || ms->get<long long>() <= 0)
        throw SceneError("config.max_sweeps: expected a positive integer");
      scene.config.max_sweeps = ms->get<std::size_t>();
    }
  }
  if (scene.mode == Mode::hull && !scene.path.empty())
    scene.warnings.push_back("path ignored in hull mode");
  validate_for(scene, scene.mode);
  return scene;
}

Scene load_scene(std::filesystem::path const & file)
{
  std::ifstream in(file, std::ios::binary);
  if (!in)
    throw SceneError("cannot open scene file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

StonParams resolve_params(Mode mode, Overrides const & scene, RunOptions const & options)
{
  StonParams p = mode == Mode::hull ? hull_defaults() : mode == Mode::smooth ? smooth_defaults() : tighten_defaults();
  apply(scene, p);
  apply(options.overrides, p);
  p.extension = options.extension;
  p.homotopy_guard = options.guard;
  p.validate();
  return p;
}

StringConfig initial_configuration(Scene const & scene, Mode mode, bool extension)
{
  ObstacleSet const os(scene.obstacles);
  StringConfig cfg;
  if (mode != Mode::hull)
  {
    cfg.closed = scene.closed;
    double const h = safe_spacing(os, scene.path);
    cfg.weights = scene.closed ? resample_closed(scene.path, h) : resample(scene.path, h);
    if (cfg.weights.size() < 3)
      cfg.weights = resample_count(scene.path, 3);
    return cfg;
  }

  Box const b = *os.bounds();
  double const pad = 0.05 * b.max_extent();
  std::vector<Point> const box{{b.min_x - pad, b.min_y - pad},
                               {b.max_x + pad, b.min_y - pad},
                               {b.max_x + pad, b.max_y + pad},
                               {b.min_x - pad, b.max_y + pad}};
  cfg.closed = true;
  cfg.weights = extension ? box : resample_closed(box, safe_spacing(os, box));
  return cfg;
}

RunOutput run(Scene const & scene, RunOptions const & options)
{
  RunOutput out;
  out.mode = options.mode.value_or(scene.mode);
  validate_for(scene, out.mode);
  out.params = resolve_params(out.mode, scene.config, options);

  ObstacleSet const os(scene.obstacles);
  StringConfig cfg = initial_configuration(scene, out.mode, options.extension);
  out.initial = cfg.weights;

  if (!cfg.closed)
    (void)signature(cfg.weights, os);
  else
    (void)loop_signature(cfg.weights, os);

  if (options.oracle)
  {
    if (out.mode == Mode::hull || scene.closed)
      throw SceneError("--oracle applies to open paths only");
    if (os.size() > 10)
      throw SceneError("--oracle is limited to scenes of at most 10 obstacles");
    out.oracle = oracle::shortest_homotopic(scene.path, os, options.oracle_max_via);
  }

  out.result = tighten(std::move(cfg), os, out.params);
  out.exit_code = out.result.status == Status::converged ? exit_converged : exit_sweep_limit;
  return out;
}

std::string trace_csv(SweepTrace const & trace)
{
  std::string s = "sweep,length,phi,max_disp,k,created,selected,multi\n";
  for (auto const & r : trace)
  {
    s += std::to_string(r.sweep) + ',' + format_number(r.length) + ',' + format_number(r.phi) + ',' +
         format_number(r.max_displacement) + ',' + std::to_string(r.processors) + ',' +
         std::to_string(r.events.created) + ',' + std::to_string(r.events.selected) + ',' +
         std::to_string(r.events.multi) + '\n';
  }
  return s;
}

std::string svg(std::span<Point const> obstacles, std::span<Point const> initial,
                std::span<Point const> final_path, bool closed)
{
  std::vector<Point> all(obstacles.begin(), obstacles.end());
  all.insert(all.end(), initial.begin(), initial.end());
  all.insert(all.end(), final_path.begin(), final_path.end());
  Box b = all.empty() ? Box{0, 0, 1, 1} : bounding_box(all);
  double const span = std::max(b.max_extent(), 1e-12);
  double const margin = 0.05 * span;
  double const r = 0.006 * span;
  double const stroke = 0.003 * span;

  auto const num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
  };
  // SVG y grows downwards; mirror so the scene keeps its orientation.
  auto const px = [&](Point p) { return num(p.x) + ',' + num(b.max_y + b.min_y - p.y); };

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(b.min_x - margin) + ' ' +
                  num(b.min_y - margin) + ' ' + num(b.width() + 2 * margin) + ' ' +
                  num(b.height() + 2 * margin) + "\">\n";
  auto const polyline = [&](std::span<Point const> pts, char const * colour, double width) {
    if (pts.empty())
      return;
    s += "  <polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"" + num(width) +
         "\" stroke-linejoin=\"round\" points=\"";
    auto const line = polyline_points(pts, closed);
    for (std::size_t i = 0; i < line.size(); ++i)
      s += (i ? " " : "") + px(line[i]);
    s += "\"/>\n";
  };
  polyline(initial, "#b8c4d6", stroke);
  polyline(final_path, "#1a2a4a", 1.5 * stroke);
  for (auto const & p : obstacles)
  {
    auto const xy = px(p);
    auto const comma = xy.find(',');
    s += "  <circle cx=\"" + xy.substr(0, comma) + "\" cy=\"" + xy.substr(comma + 1) + "\" r=\"" + num(r) +
         "\" fill=\"#c0392b\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string result_json(Scene const & scene, RunOutput const & out)
{
  auto const & cfg = out.result.config;
  json doc;
  doc["obstacles"] = points_json(scene.obstacles);
  doc["path"] = points_json(cfg.weights);
  doc["closed"] = cfg.closed;
  doc["mode"] = std::string(to_string(out.mode));
  doc["config"] = {{"beta", out.params.beta},
                   {"T", out.params.horizon},
                   {"epsilon_pct", out.params.epsilon_pct},
                   {"max_sweeps", out.params.max_sweeps}};
  json res;
  res["status"] = out.result.status == Status::converged ? "converged" : "sweep_limit";
  res["sweeps"] = out.result.trace.size();
  res["processors"] = cfg.size();
  res["length"] = string_length(cfg);
  res["epsilon"] = out.result.epsilon;
  if (out.oracle)
  {
    res["oracle"] = out.oracle->status == oracle::SearchStatus::found
                        ? json{{"status", "found"}, {"length", out.oracle->length}, {"path", points_json(out.oracle->path)}}
                        : json{{"status", "depth_exceeded"}};
  }
  doc["result"] = std::move(res);
  return doc.dump(2) + '\n';
}
}  // namespace ston::io
