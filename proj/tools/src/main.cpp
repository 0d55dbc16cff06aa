#include "ston/errors.hpp"
#include "ston/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <thread>

namespace
{
namespace fs = std::filesystem;
using namespace ston;

struct Outputs
{
  std::string result;  // empty: stdout
  std::string trace;
  std::string svg;
};

void write_file(fs::path const & file, std::string const & text)
{
  std::ofstream out(file, std::ios::binary);
  if (!out)
    throw SceneError("cannot write " + file.string());
  out << text;
}

struct Report
{
  int code = io::exit_converged;
  std::string message;
};

Report run_one(fs::path const & scene_file, io::RunOptions const & options, Outputs const & files,
               std::ostream * result_stream)
{
  Report rep;
  try
  {
    auto const scene = io::load_scene(scene_file);
    for (auto const & w : scene.warnings)
      rep.message += "warning: " + w + '\n';
    auto const out = io::run(scene, options);
    auto const json = io::result_json(scene, out);
    if (files.result.empty() && result_stream)
      *result_stream << json;
    else if (!files.result.empty())
      write_file(files.result, json);
    if (!files.trace.empty())
      write_file(files.trace, io::trace_csv(out.result.trace));
    if (!files.svg.empty())
      write_file(files.svg, io::svg(scene.obstacles, out.initial, out.result.config.weights, out.result.config.closed));
    if (out.oracle && out.oracle->status == oracle::SearchStatus::depth_exceeded)
      rep.message += "oracle: no homotopic via sequence within the depth limit\n";
    rep.code = out.exit_code;
    if (rep.code == io::exit_sweep_limit)
      rep.message += "sweep limit reached before convergence\n";
  }
  catch (HomotopyViolation const & e)
  {
    rep.code = io::exit_homotopy_violation;
    rep.message += std::string("homotopy violation: ") + e.what() + '\n';
  }
  catch (std::exception const & e)
  {
    rep.code = io::exit_invalid_input;
    rep.message += std::string("invalid input: ") + e.what() + '\n';
  }
  return rep;
}

int run_batch(fs::path const & dir, fs::path const & out_dir, io::RunOptions const & options, unsigned jobs)
{
  std::vector<fs::path> scenes;
  for (auto const & entry : fs::directory_iterator(dir))
  {
    auto const name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == ".json" && !name.ends_with(".result.json"))
      scenes.push_back(entry.path());
  }
  std::sort(scenes.begin(), scenes.end());
  fs::create_directories(out_dir);

  std::vector<Report> reports(scenes.size());
  std::size_t next = 0;
  std::mutex lock;
  auto const worker = [&] {
    while (true)
    {
      std::size_t i;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (next == scenes.size())
          return;
        i = next++;
      }
      auto const stem = (out_dir / scenes[i].stem()).string();
      reports[i] = run_one(scenes[i], options, {stem + ".result.json", stem + ".trace.csv", stem + ".svg"}, nullptr);
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned j = 0; j < std::max(1u, jobs); ++j)
    pool.push_back(std::async(std::launch::async, worker));
  for (auto & f : pool)
    f.get();

  int worst = io::exit_converged;
  for (std::size_t i = 0; i < scenes.size(); ++i)
  {
    std::cerr << scenes[i].filename().string() << ": exit " << reports[i].code << '\n' << reports[i].message;
    worst = std::max(worst, reports[i].code);
  }
  return worst;
}
}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Tighten paths, smooth them or wrap point sets with a string-tightening network."};
  app.set_version_flag("--version", "ston 1.0.0");

  std::string scene_file;
  std::string mode;
  io::RunOptions options;
  Outputs files;
  std::string batch_dir;
  std::string batch_out;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool no_extension = false;

  app.add_option("scene", scene_file, "Scene JSON file")->check(CLI::ExistingFile);
  app.add_option("--mode", mode, "Override the scene mode")->check(CLI::IsMember({"tighten", "smooth", "hull"}));
  app.add_option("--beta", options.overrides.beta, "Learning constant beta, 0 < beta < 0.5");
  app.add_option("--big-t", options.overrides.horizon, "Expected sweeps to convergence T");
  app.add_option("--epsilon-pct", options.overrides.epsilon_pct, "Convergence threshold, percent of the scene extent");
  app.add_option("--max-sweeps", options.overrides.max_sweeps, "Sweep limit")->check(CLI::PositiveNumber);
  app.add_option("--trace", files.trace, "Write the per-sweep trace CSV here");
  app.add_option("--svg", files.svg, "Write an SVG overlay here");
  app.add_option("-o,--output", files.result, "Write the result scene JSON here instead of stdout");
  app.add_flag("--no-extension", no_extension, "Core network only; multi-obstacle triangles hold their processor");
  app.add_flag("--oracle", options.oracle, "Also compute the brute-force shortest homotopic path (<= 10 obstacles)");
  app.add_flag("--guard,!--no-guard", options.guard, "Check the homotopy class after every sweep (default on)");
  auto * batch = app.add_option("--batch", batch_dir, "Run every *.json scene of a directory")->check(CLI::ExistingDirectory);
  app.add_option("--batch-out", batch_out, "Directory for batch artifacts (default: the batch directory)")->needs(batch);
  app.add_option("--jobs", jobs, "Concurrent batch runs")->needs(batch)->check(CLI::PositiveNumber);

  try
  {
    app.parse(argc, argv);
    if (scene_file.empty() == batch_dir.empty())
      throw CLI::ValidationError("exactly one of a scene file or --batch is required");
  }
  catch (CLI::CallForHelp const & e)
  {
    return app.exit(e);
  }
  catch (CLI::CallForVersion const & e)
  {
    return app.exit(e);
  }
  catch (CLI::Error const & e)
  {
    app.exit(e);
    return io::exit_invalid_input;
  }

  options.extension = !no_extension;
  if (!mode.empty())
    options.mode = io::parse_mode(mode);

  if (!batch_dir.empty())
    return run_batch(batch_dir, batch_out.empty() ? fs::path(batch_dir) : fs::path(batch_out), options, jobs);

  auto const rep = run_one(scene_file, options, files, &std::cout);
  std::cerr << rep.message;
  return rep.code;
}
