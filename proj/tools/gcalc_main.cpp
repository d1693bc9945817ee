// gcalc: run scenario files, sweep directories, and poke the identity suite
// from the shell.  Exit status: 0 all checks passed, 1 a check failed,
// 2 bad usage or unreadable input.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gcalc/derivative.hpp>
#include <gcalc/errors.hpp>
#include <gcalc/mv_format.hpp>
#include <gcalc/registry.hpp>
#include <gcalc/scenario.hpp>

namespace fs = std::filesystem;
using namespace gcalc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

struct QuadOverrides {
  std::optional<int> q;
  std::optional<int> m;
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;
  bool timing = false;

  RunOptions to_options() const {
    RunOptions o;
    o.points = q;
    o.subdivisions = m;
    o.threads = threads;
    o.seed = seed;
    o.timing = timing;
    return o;
  }
};

void add_quad_flags(CLI::App& cmd, QuadOverrides& over) {
  cmd.add_option("--quad-q", over.q, "Gauss points per cell override");
  cmd.add_option("--quad-m", over.m, "subdivisions per axis override");
  cmd.add_option("--threads", over.threads, "integration worker threads");
  cmd.add_option("--seed", over.seed, "RNG seed override");
  cmd.add_flag("--timing", over.timing, "fill the wall_ms CSV column");
}

bool write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << text;
  return true;
}

void print_catalog(const char* heading, const std::vector<CatalogEntry>& cat) {
  std::cout << heading << "\n";
  for (const CatalogEntry& e : cat)
    std::cout << "  " << e.name << "  " << e.parameters << "\n      "
              << e.blurb << "\n";
}

int run_one(const fs::path& file, const QuadOverrides& over,
            const std::string& out_csv, bool quiet) {
  Scenario sc = load_scenario_file(file.string());
  RunResult res = run_scenario(sc, over.to_options());
  if (!quiet) std::cout << res.summary;
  if (!out_csv.empty() && !write_file(out_csv, res.csv)) return kExitConfig;
  return res.pass ? kExitPass : kExitCheckFailed;
}

int run_suite(const fs::path& dir, const QuadOverrides& over,
              const std::string& out_dir) {
  if (!fs::is_directory(dir)) {
    std::cerr << "error: " << dir << " is not a directory\n";
    return kExitConfig;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "error: no .json scenarios under " << dir << "\n";
    return kExitConfig;
  }

  int failed = 0, errored = 0;
  for (const fs::path& f : files) {
    try {
      Scenario sc = load_scenario_file(f.string());
      RunResult res = run_scenario(sc, over.to_options());
      std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << f.filename().string()
                << "\n";
      if (!res.pass) {
        std::cout << res.summary;
        ++failed;
      }
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        if (!write_file(fs::path(out_dir) / (sc.name + ".csv"), res.csv))
          return kExitConfig;
      }
    } catch (const Error& e) {
      std::cout << "[ERROR] " << f.filename().string() << ": " << e.what()
                << "\n";
      ++errored;
    }
  }
  std::cout << files.size() << " scenario(s), " << failed << " failed, "
            << errored << " errored\n";
  if (errored) return kExitConfig;
  return failed ? kExitCheckFailed : kExitPass;
}

int run_identities(int dim, long trials, std::uint64_t seed, bool analytic,
                   const std::string& out_csv) {
  DerivMode mode = analytic ? DerivMode::automatic : DerivMode::force_fd;
  std::vector<IdentityRow> rows = identity_suite(dim, trials, seed, mode);
  const double tol = analytic ? 1e-12 : 1e-6;

  std::string csv = "formula_id,trials,max_rel_err,mean_rel_err\n";
  double worst = 0.0;
  for (const IdentityRow& r : rows) {
    csv += std::to_string(r.formula_id) + "," + std::to_string(r.trials) +
           "," + format_double(r.max_rel_err) + "," +
           format_double(r.mean_rel_err) + "\n";
    worst = std::max(worst, r.max_rel_err);
  }
  std::cout << csv;
  std::cout << (worst <= tol ? "[PASS]" : "[FAIL]") << " worst max_rel_err "
            << format_double(worst) << " (tol " << format_double(tol)
            << ", mode " << (analytic ? "analytic" : "fd") << ")\n";
  if (!out_csv.empty() && !write_file(out_csv, csv)) return kExitConfig;
  return worst <= tol ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric-calculus scenario runner"};
  app.require_subcommand(0, 1);

  bool list_patches = false, list_boundaries = false, list_fields = false;
  app.add_flag("--list-patches", list_patches, "print the patch catalog");
  app.add_flag("--list-boundaries", list_boundaries,
               "print the boundary catalog");
  app.add_flag("--list-fields", list_fields, "print the field catalog");

  // run <scenario.json>
  auto* run = app.add_subcommand("run", "run one scenario file");
  std::string run_file, run_out;
  QuadOverrides run_over;
  run->add_option("scenario", run_file, "scenario JSON file")->required();
  run->add_option("--out", run_out, "write the result CSV here");
  add_quad_flags(*run, run_over);

  // suite <dir>
  auto* suite = app.add_subcommand("suite", "run every scenario in a directory");
  std::string suite_dir, suite_out;
  QuadOverrides suite_over;
  suite->add_option("dir", suite_dir, "directory of scenario files")
      ->required();
  suite->add_option("--out", suite_out, "write one CSV per scenario here");
  add_quad_flags(*suite, suite_over);

  // identities
  auto* ident = app.add_subcommand(
      "identities", "exercise the vector-derivative identity suite");
  int ident_dim = 3;
  long ident_trials = 200;
  std::uint64_t ident_seed = kDefaultSeed;
  bool ident_analytic = false;
  std::string ident_out;
  ident->add_option("--dim", ident_dim, "ambient dimension")
      ->check(CLI::Range(1, 12));
  ident->add_option("--trials", ident_trials, "sample points per identity");
  ident->add_option("--seed", ident_seed, "RNG seed");
  ident->add_flag("--analytic", ident_analytic,
                  "use analytic derivatives instead of finite differences");
  ident->add_option("--out", ident_out, "write the table here");

  // canon <scenario.json>
  auto* canon = app.add_subcommand(
      "canon", "print the canonical form of a scenario file");
  std::string canon_file;
  canon->add_option("scenario", canon_file, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (list_patches) print_catalog("patches:", patch_catalog());
    if (list_boundaries) print_catalog("boundaries:", boundary_catalog());
    if (list_fields) print_catalog("fields:", field_catalog());
    if (list_patches || list_boundaries || list_fields) return kExitPass;

    if (run->parsed()) return run_one(run_file, run_over, run_out, false);
    if (suite->parsed()) return run_suite(suite_dir, suite_over, suite_out);
    if (ident->parsed())
      return run_identities(ident_dim, ident_trials, ident_seed,
                            ident_analytic, ident_out);
    if (canon->parsed()) {
      std::cout << print_scenario(load_scenario_file(canon_file));
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line << ", col "
              << e.col << ")\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::cout << app.help();
  return kExitConfig;
}
