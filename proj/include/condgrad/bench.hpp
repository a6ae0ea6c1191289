#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "condgrad/solver.hpp"

namespace condgrad {

struct RunRecord {
  std::uint64_t seed = 0;
  SolveStatus status = SolveStatus::Critical;
  std::size_t iterations = 0;
  std::size_t gradient_evaluations = 0;
  double elapsed_s = 0.0;
};

struct BenchmarkReport {
  std::string problem;
  std::size_t runs = 0;
  double converged_percent = 0.0;
  double mean_iterations = 0.0;
  double mean_gradient_evals = 0.0;
  double mean_time_s = 0.0;
  std::uint64_t seed = 0;
  std::vector<RunRecord> per_run;
};

// Deterministic benchmark: a splitmix64 stream over the master seed yields
// one sub-seed per run; each run rejection-samples a feasible start in the
// problem's sampling window and solves from it. Everything except the
// timing fields reproduces bit-for-bit for equal inputs.
inline BenchmarkReport run_benchmark(const MultiObjectiveProblem& prob, std::size_t runs,
                                     std::uint64_t seed, const SolverConfig& config = {}) {
  if (runs == 0) throw std::invalid_argument("run_benchmark: runs must be positive");
  BenchmarkReport rep;
  rep.problem = prob.name;
  rep.runs = runs;
  rep.seed = seed;
  rep.per_run.reserve(runs);

  SplitMix64 seq(seed);
  std::size_t converged = 0;
  double sum_it = 0.0, sum_ge = 0.0, sum_t = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    const std::uint64_t sub_seed = seq.next();
    SplitMix64 rng(sub_seed);
    const Vec x0 = sample_feasible(prob, rng);
    const SolveResult res = condg_solve(prob, x0, config);
    if (res.status == SolveStatus::Critical) ++converged;
    sum_it += static_cast<double>(res.iterations);
    sum_ge += static_cast<double>(res.gradient_evaluations);
    sum_t += res.elapsed_s;
    rep.per_run.push_back(
        {sub_seed, res.status, res.iterations, res.gradient_evaluations, res.elapsed_s});
  }
  rep.converged_percent = 100.0 * static_cast<double>(converged) / static_cast<double>(runs);
  rep.mean_iterations = sum_it / static_cast<double>(runs);
  rep.mean_gradient_evals = sum_ge / static_cast<double>(runs);
  rep.mean_time_s = sum_t / static_cast<double>(runs);
  return rep;
}

inline BenchmarkReport run_benchmark(const std::string& problem_name, std::size_t runs,
                                     std::uint64_t seed, const SolverConfig& config = {}) {
  return run_benchmark(builtin_problem(problem_name), runs, seed, config);
}

// Report file: a summary section followed by a per-run section.
inline void write_report_csv(std::ostream& os, const BenchmarkReport& rep) {
  os << "problem,runs,converged_percent,mean_iterations,mean_gradient_evals,mean_time_s,seed\n";
  os << rep.problem << ',' << rep.runs << ',' << format_g17(rep.converged_percent) << ','
     << format_g17(rep.mean_iterations) << ',' << format_g17(rep.mean_gradient_evals) << ','
     << format_g17(rep.mean_time_s) << ',' << rep.seed << '\n';
  os << "run_seed,status,iterations,gradient_evals,time_s\n";
  for (const RunRecord& run : rep.per_run)
    os << run.seed << ',' << to_string(run.status) << ',' << run.iterations << ','
       << run.gradient_evaluations << ',' << format_g17(run.elapsed_s) << '\n';
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace detail

inline BenchmarkReport parse_report_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) ||
      line != "problem,runs,converged_percent,mean_iterations,mean_gradient_evals,mean_time_s,seed")
    throw std::invalid_argument("report: bad summary header");
  if (!std::getline(is, line)) throw std::invalid_argument("report: missing summary row");
  const auto summary = detail::split_csv_line(line);
  if (summary.size() != 7) throw std::invalid_argument("report: bad summary row");

  BenchmarkReport rep;
  rep.problem = summary[0];
  rep.runs = std::stoull(summary[1]);
  rep.converged_percent = std::stod(summary[2]);
  rep.mean_iterations = std::stod(summary[3]);
  rep.mean_gradient_evals = std::stod(summary[4]);
  rep.mean_time_s = std::stod(summary[5]);
  rep.seed = std::stoull(summary[6]);

  if (!std::getline(is, line) || line != "run_seed,status,iterations,gradient_evals,time_s")
    throw std::invalid_argument("report: bad per-run header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 5) throw std::invalid_argument("report: bad per-run row");
    rep.per_run.push_back({std::stoull(f[0]), solve_status_from_string(f[1]), std::stoull(f[2]),
                           std::stoull(f[3]), std::stod(f[4])});
  }
  if (rep.per_run.size() != rep.runs) throw std::invalid_argument("report: per-run count mismatch");
  return rep;
}

}  // namespace condgrad
