#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "condgrad/condgrad.hpp"
#include "condgrad/geometry_io.hpp"
#include "condgrad/lp_io.hpp"

namespace {

using namespace condgrad;

Vec parse_vector(const std::string& s) {
  Vec out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse '" + tok + "' as a number");
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size()) throw std::invalid_argument("cannot parse '" + tok + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty vector argument");
  return out;
}

std::string join(const Vec& v) {
  std::string s;
  char buf[40];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", v[i]);
    if (i) s += ',';
    s += buf;
  }
  return s;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

MultiObjectiveProblem make_problem(const std::string& name, const std::string& region_path) {
  MultiObjectiveProblem prob = builtin_problem(name);
  if (!region_path.empty()) {
    Polyhedron region = load_region_file(region_path);
    if (region.dim() != prob.n)
      throw std::invalid_argument("region dimension does not match problem dimension");
    prob.region = std::move(region);
  }
  return prob;
}

int cmd_solve(const std::string& problem, const std::string& x0_str, double eps,
              std::size_t max_iter, const std::string& trajectory_path,
              const std::string& region_path) {
  const MultiObjectiveProblem prob = make_problem(problem, region_path);
  const Vec x0 = parse_vector(x0_str);
  SolverConfig cfg;
  cfg.eps = eps;
  cfg.max_iter = max_iter;
  cfg.record_trajectory = !trajectory_path.empty();
  const SolveResult res = condg_solve(prob, x0, cfg);

  std::cout << "status=" << to_string(res.status) << " iterations=" << res.iterations
            << " gradient_evals=" << res.gradient_evaluations << '\n';
  if (res.status != SolveStatus::SubproblemUnbounded) {
    std::cout << "final_theta=" << num(res.final_theta) << '\n';
    std::cout << "final_x=" << join(res.final_x) << '\n';
    std::cout << "F=" << join(eval_objectives(prob, res.final_x)) << '\n';
  }
  std::cout << "time_s=" << num(res.elapsed_s) << '\n';
  if (!trajectory_path.empty() && !res.trajectory.empty()) {
    std::ofstream out(trajectory_path);
    if (!out) throw std::invalid_argument("cannot open trajectory path '" + trajectory_path + "'");
    write_trajectory_csv(out, res.trajectory);
    std::cout << "trajectory=" << trajectory_path << '\n';
  }
  if (res.status == SolveStatus::SubproblemUnbounded) {
    std::cerr << "solver failure: subproblem unbounded below; some recession direction of the "
                 "region decreases every objective (compatibility condition fails)\n";
    return 2;
  }
  return 0;
}

int cmd_bench(const std::string& problem, std::size_t runs, std::uint64_t seed, double eps,
              std::size_t max_iter, const std::string& report_path) {
  SolverConfig cfg;
  cfg.eps = eps;
  cfg.max_iter = max_iter;
  const BenchmarkReport rep = run_benchmark(problem, runs, seed, cfg);
  std::cout << "problem=" << rep.problem << " runs=" << rep.runs
            << " converged_percent=" << num(rep.converged_percent)
            << " mean_iterations=" << num(rep.mean_iterations)
            << " mean_gradient_evals=" << num(rep.mean_gradient_evals)
            << " mean_time_s=" << num(rep.mean_time_s) << " seed=" << rep.seed << '\n';
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::invalid_argument("cannot open report path '" + report_path + "'");
    write_report_csv(out, rep);
    std::cout << "report=" << report_path << '\n';
  }
  for (const RunRecord& run : rep.per_run)
    if (run.status == SolveStatus::SubproblemUnbounded) {
      std::cerr << "solver failure: a benchmark run hit an unbounded subproblem\n";
      return 2;
    }
  return 0;
}

int cmd_check_a1(const std::string& problem, std::size_t samples, std::uint64_t seed,
                 const std::string& region_path) {
  const MultiObjectiveProblem prob = make_problem(problem, region_path);
  const A1Report rep = check_assumption_a1(prob, samples, seed);
  std::cout << "holds=" << (rep.holds ? "true" : "false")
            << " samples_checked=" << rep.samples_checked << '\n';
  if (!rep.holds) {
    std::cout << "witness_point=" << join(*rep.witness_point) << '\n';
    std::cout << "witness_gradient_index=" << *rep.witness_gradient_index << '\n';
    std::cout << "witness_direction=" << join(*rep.witness_direction) << '\n';
  }
  return 0;
}

int cmd_subproblem(const std::string& problem, const std::string& x_str,
                   const std::string& region_path) {
  const MultiObjectiveProblem prob = make_problem(problem, region_path);
  const Vec x = parse_vector(x_str);
  const SubproblemSolution sol = solve_subproblem(prob, x);
  if (sol.status == SubproblemStatus::UnboundedBelow) {
    std::cout << "status=UnboundedBelow\n";
    std::cerr << "solver failure: subproblem unbounded below at the given point\n";
    return 2;
  }
  std::cout << "status=Solved\n";
  std::cout << "theta=" << num(sol.theta) << '\n';
  std::cout << "p=" << join(sol.p) << '\n';
  std::cout << "direction=" << join(sol.direction) << '\n';
  return 0;
}

int cmd_lp_solve(const std::string& path) {
  const LinearProgram lp = load_lp_file(path);
  const LpSolution sol = solve_lp(lp);
  std::cout << "status=" << to_string(sol.status);
  if (sol.status == LpStatus::Optimal)
    std::cout << " objective=" << num(sol.objective) << '\n' << "x=" << join(sol.x) << '\n';
  else if (sol.status == LpStatus::Unbounded)
    std::cout << '\n' << "ray=" << join(sol.ray) << '\n';
  else
    std::cout << '\n';
  std::cout << "pivots=" << sol.pivots << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conditional gradient solver for multiobjective optimization over polyhedra"};
  app.require_subcommand(1);

  std::string problem = "ex1", x_str, region_path, trajectory_path, report_path, lp_path;
  double eps = 1e-6;
  std::size_t max_iter = 1000;
  std::size_t runs = 100, samples = 100;
  std::uint64_t seed = 0;

  CLI::App* solve = app.add_subcommand("solve", "run the solver from a given start point");
  solve->add_option("--problem", problem, "problem name (ex1, ex2)")->required();
  solve->add_option("--x0", x_str, "start point, comma separated")->required();
  solve->add_option("--eps", eps, "termination tolerance on |theta|");
  solve->add_option("--max-iter", max_iter, "iteration cap");
  solve->add_option("--trajectory", trajectory_path, "write the iterate trajectory CSV here");
  solve->add_option("--region", region_path, "replace the feasible region from a region file");

  CLI::App* bench = app.add_subcommand("bench", "seeded multi-start benchmark");
  bench->add_option("--problem", problem, "problem name (ex1, ex2)")->required();
  bench->add_option("--runs", runs, "number of runs");
  bench->add_option("--seed", seed, "master seed");
  bench->add_option("--eps", eps, "termination tolerance on |theta|");
  bench->add_option("--max-iter", max_iter, "iteration cap");
  bench->add_option("--report", report_path, "write the benchmark report CSV here");

  CLI::App* a1 = app.add_subcommand("check-a1", "verify the gradient/recession-cone condition");
  a1->add_option("--problem", problem, "problem name (ex1, ex2)")->required();
  a1->add_option("--samples", samples, "feasible points to sample");
  a1->add_option("--seed", seed, "sampling seed");
  a1->add_option("--region", region_path, "replace the feasible region from a region file");

  CLI::App* sub = app.add_subcommand("subproblem", "solve the linearised subproblem at a point");
  sub->add_option("--problem", problem, "problem name (ex1, ex2)")->required();
  sub->add_option("--x", x_str, "evaluation point, comma separated")->required();
  sub->add_option("--region", region_path, "replace the feasible region from a region file");

  CLI::App* lps = app.add_subcommand("lp-solve", "solve a linear program from a JSON file");
  lps->add_option("--file", lp_path, "LinearProgram JSON file")->required();

  try {
    app.parse(argc, argv);
    if (solve->parsed())
      return cmd_solve(problem, x_str, eps, max_iter, trajectory_path, region_path);
    if (bench->parsed()) return cmd_bench(problem, runs, seed, eps, max_iter, report_path);
    if (a1->parsed()) return cmd_check_a1(problem, samples, seed, region_path);
    if (sub->parsed()) return cmd_subproblem(problem, x_str, region_path);
    if (lps->parsed()) return cmd_lp_solve(lp_path);
    std::cerr << "no subcommand\n";
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
