/// \file vortexpair_main.cpp
/// Command-line driver: solve / continue / spectrum / validate / export.
///
/// Exit codes: 0 success, 1 bad arguments or unreadable input, 2 solver
/// failure (no convergence, guard trips, degenerate systems), 3 computed
/// solution failed the independent geometry checks (output is still written).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vortexpair/vortexpair.hpp"

namespace vp = vortexpair;
namespace fs = std::filesystem;

namespace {

void print_report(const vp::ValidationReport& rep) {
  std::printf("tangency_inf     = %.6e\n", rep.tangency_inf);
  std::printf("min_curvature    = %.6e\n", rep.min_curvature);
  std::printf("symmetry_defect  = %.6e\n", rep.symmetry_defect);
  std::printf("holder_seminorm  = %.6e\n", rep.holder_seminorm);
  std::printf("pass             = %s\n", rep.pass ? "true" : "false");
  for (const auto& n : rep.notes) std::printf("note: %s\n", n.c_str());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw vp::IoError("cannot open '" + out_path + "' for writing");
  os << text;
  if (!os) throw vp::IoError("write to '" + out_path + "' failed");
}

struct SolveArgs {
  std::string model = "euler";
  double alpha = 0.5;
  bool alpha_given = false;
  std::string pair = "corotating";
  double d = 3.0;
  double eps = 0.0;
  double eps_max = 0.0;
  int steps = 1;
  int modes = 32;
  int grid = 256;
  double tol = 1e-10;
  std::string out;
};

vp::ProblemSpec make_spec(const SolveArgs& a) {
  vp::ProblemSpec spec;
  spec.model = vp::model_from_string(a.model);
  if (spec.model == vp::Model::gsqg && !a.alpha_given)
    throw vp::InvalidArgument("--alpha is required for the gsqg model");
  spec.alpha = a.alpha;
  spec.pair = vp::pair_from_string(a.pair);
  spec.d = a.d;
  spec.eps = a.eps;
  spec.modes = a.modes;
  spec.grid = a.grid;
  return spec;
}

void add_model_options(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--model", a.model, "flow model")
      ->check(CLI::IsMember({"euler", "gsqg"}));
  cmd->add_option("--alpha", a.alpha,
                  "kernel exponent in (0,1); required for gsqg")
      ->each([&a](const std::string&) { a.alpha_given = true; });
  cmd->add_option("--pair", a.pair, "pair kind")
      ->check(CLI::IsMember({"corotating", "counter"}));
  cmd->add_option("--d", a.d, "half separation of the patch centers (> 2)");
  cmd->add_option("--modes", a.modes, "number of shape coefficients");
  cmd->add_option("--grid", a.grid, "boundary quadrature nodes (even)");
  cmd->add_option("--tol", a.tol, "Newton residual tolerance");
}

int cmd_solve(const SolveArgs& a) {
  const vp::ProblemSpec spec = make_spec(a);
  vp::NewtonOptions opts;
  opts.tol = a.tol;
  const vp::PairSolution sol = vp::solve_single(spec, opts);
  vp::write_solution_file(a.out, sol);
  std::printf("eps = %g  %s velocity = %.12e  residual = %.3e  %s\n",
              sol.spec.eps, vp::to_string(sol.velocity.kind).c_str(),
              sol.velocity.value, sol.residual_inf,
              sol.validation.pass ? "validated" : "VALIDATION FAILED");
  return sol.validation.pass ? 0 : 3;
}

int cmd_continue(const SolveArgs& a, const std::string& out_dir) {
  const vp::ProblemSpec spec = make_spec(a);
  vp::NewtonOptions opts;
  opts.tol = a.tol;
  const vp::Branch br = vp::continue_branch(spec, a.eps_max, a.steps, opts);

  fs::create_directories(out_dir);
  nlohmann::json idx;
  idx["schema_version"] = vp::schema_version;
  idx["complete"] = br.complete;
  idx["failure_reason"] = br.failure_reason;
  idx["velocity_extrapolated"] = br.velocity_extrapolated;
  std::vector<double> eps_list, vel_list;
  std::vector<std::string> files;
  for (std::size_t i = 0; i < br.members.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "step_%03zu.json", i);
    vp::write_solution_file((fs::path(out_dir) / name).string(),
                            br.members[i]);
    files.push_back(name);
    eps_list.push_back(br.members[i].spec.eps);
    vel_list.push_back(br.members[i].velocity.value);
  }
  idx["eps"] = eps_list;
  idx["velocities"] = vel_list;
  idx["files"] = files;
  {
    std::ofstream os(fs::path(out_dir) / "index.json");
    if (!os) throw vp::IoError("cannot write index.json in '" + out_dir + "'");
    os << idx.dump(2) << '\n';
  }
  std::printf("wrote %zu members to %s (%s)\n", br.members.size(),
              out_dir.c_str(),
              br.complete ? "complete" : br.failure_reason.c_str());
  if (br.complete) return 0;
  return br.validation_failed ? 3 : 2;
}

int cmd_spectrum(const std::string& model, double alpha, bool alpha_given,
                 int nmax) {
  const vp::Model m = vp::model_from_string(model);
  if (m == vp::Model::gsqg && !alpha_given)
    throw vp::InvalidArgument("--alpha is required for the gsqg model");
  if (m == vp::Model::gsqg && !(alpha > 0.0 && alpha < 1.0))
    throw vp::InvalidArgument("alpha must lie in (0,1)");
  if (nmax < 1) throw vp::InvalidArgument("--nmax must be positive");
  const vp::MultiplierTable mult = vp::multiplier_table(m, alpha, nmax);
  std::printf("n,multiplier\n");
  for (std::size_t i = 0; i < mult.n.size(); ++i)
    std::printf("%d,%.17g\n", mult.n[i], mult.value[i]);
  return 0;
}

int cmd_validate(const std::string& path) {
  const vp::LoadedSolution ls = vp::read_solution_file(path);
  const vp::ValidationReport rep =
      vp::validate(ls.solution.spec, ls.solution.velocity,
                   ls.solution.coefficients);
  print_report(rep);
  return rep.pass ? 0 : 3;
}

int cmd_export(const std::string& path, const std::string& format,
               const std::string& out) {
  const vp::LoadedSolution ls = vp::read_solution_file(path);
  if (format == "csv")
    emit(vp::solution_to_csv(ls.solution), out);
  else
    emit(vp::solution_to_svg(ls.solution), out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"steady corotating and counter-rotating vortex patch pairs"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "solve at one patch size");
  add_model_options(solve, sa);
  solve->add_option("--eps", sa.eps, "patch size parameter, |eps| < 1/2")
      ->required();
  solve->add_option("--out", sa.out, "output JSON path")->required();

  SolveArgs ca;
  std::string cont_dir;
  CLI::App* cont =
      app.add_subcommand("continue", "continue a branch from eps = 0");
  add_model_options(cont, ca);
  cont->add_option("--eps-max", ca.eps_max, "terminal patch size")->required();
  cont->add_option("--steps", ca.steps, "number of uniform eps increments")
      ->required();
  cont->add_option("--out", cont_dir, "output directory")->required();

  std::string sp_model = "euler";
  double sp_alpha = 0.5;
  bool sp_alpha_given = false;
  int sp_nmax = 16;
  CLI::App* spec_cmd = app.add_subcommand(
      "spectrum", "linearization multipliers at the point limit");
  spec_cmd->add_option("--model", sp_model, "flow model")
      ->check(CLI::IsMember({"euler", "gsqg"}));
  spec_cmd->add_option("--alpha", sp_alpha, "kernel exponent in (0,1)")
      ->each([&sp_alpha_given](const std::string&) { sp_alpha_given = true; });
  spec_cmd->add_option("--nmax", sp_nmax, "largest mode index");

  std::string val_path;
  CLI::App* val = app.add_subcommand(
      "validate", "re-run the geometry checks on a stored solution");
  val->add_option("path", val_path, "solution JSON file")->required();

  std::string exp_path, exp_format = "csv", exp_out;
  CLI::App* exp_cmd =
      app.add_subcommand("export", "export boundary curves as CSV or SVG");
  exp_cmd->add_option("path", exp_path, "solution JSON file")->required();
  exp_cmd->add_option("--format", exp_format, "output format")
      ->check(CLI::IsMember({"csv", "svg"}));
  exp_cmd->add_option("--out", exp_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(solve)) return cmd_solve(sa);
    if (app.got_subcommand(cont)) return cmd_continue(ca, cont_dir);
    if (app.got_subcommand(spec_cmd))
      return cmd_spectrum(sp_model, sp_alpha, sp_alpha_given, sp_nmax);
    if (app.got_subcommand(val)) return cmd_validate(val_path);
    if (app.got_subcommand(exp_cmd))
      return cmd_export(exp_path, exp_format, exp_out);
  } catch (const vp::InvalidArgument& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  } catch (const vp::IoError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  } catch (const std::runtime_error& ex) {
    std::fprintf(stderr, "solver error: %s\n", ex.what());
    return 2;
  }
  return 1;
}
