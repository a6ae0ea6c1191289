#include <catch2/catch.hpp>

#include <sstream>

#include "condgrad/condgrad.hpp"

using namespace condgrad;

namespace {

// Drop the timing columns (mean_time_s in the summary, time_s per run) so
// reports can be compared byte for byte.
std::string strip_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  bool summary_section = true;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (line.rfind("run_seed,", 0) == 0) summary_section = false;
    const std::size_t drop = summary_section ? 5 : 4;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i == drop) continue;
      out << fields[i] << (i + 1 == fields.size() ? "" : ",");
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("benchmark aggregates and per-run records") {
  const BenchmarkReport rep = run_benchmark("ex1", 10, 7);
  CHECK(rep.problem == "ex1");
  CHECK(rep.runs == 10);
  CHECK(rep.converged_percent == 100.0);
  REQUIRE(rep.per_run.size() == 10);

  // sub-seeds derive from the master seed as a splitmix stream, and every
  // start sampled from them is feasible
  const MultiObjectiveProblem prob = builtin_problem("ex1");
  SplitMix64 seq(7);
  double sum_it = 0.0, sum_ge = 0.0;
  for (const RunRecord& run : rep.per_run) {
    const std::uint64_t expected_seed = seq.next();
    CHECK(run.seed == expected_seed);
    SplitMix64 rng(run.seed);
    CHECK(membership(prob.region, sample_feasible(prob, rng)));
    CHECK(run.status == SolveStatus::Critical);
    CHECK(run.gradient_evaluations == run.iterations + 1);
    sum_it += static_cast<double>(run.iterations);
    sum_ge += static_cast<double>(run.gradient_evaluations);
  }
  CHECK(rep.mean_iterations == sum_it / 10.0);
  CHECK(rep.mean_gradient_evals == sum_ge / 10.0);
  CHECK(rep.mean_gradient_evals - rep.mean_iterations == Approx(1.0).margin(1e-12));
}

TEST_CASE("benchmarks are deterministic apart from timing") {
  const BenchmarkReport a = run_benchmark("ex2", 25, 7);
  const BenchmarkReport b = run_benchmark("ex2", 25, 7);
  CHECK(a.converged_percent == b.converged_percent);
  CHECK(a.mean_iterations == b.mean_iterations);
  CHECK(a.mean_gradient_evals == b.mean_gradient_evals);
  REQUIRE(a.per_run.size() == b.per_run.size());
  for (std::size_t i = 0; i < a.per_run.size(); ++i) {
    CHECK(a.per_run[i].seed == b.per_run[i].seed);
    CHECK(a.per_run[i].status == b.per_run[i].status);
    CHECK(a.per_run[i].iterations == b.per_run[i].iterations);
  }

  std::ostringstream csv_a, csv_b;
  write_report_csv(csv_a, a);
  write_report_csv(csv_b, b);
  CHECK(strip_timing(csv_a.str()) == strip_timing(csv_b.str()));
}

TEST_CASE("report CSV round-trips") {
  const BenchmarkReport rep = run_benchmark("ex2", 12, 99);
  std::ostringstream out;
  write_report_csv(out, rep);
  std::istringstream in(out.str());
  const BenchmarkReport parsed = parse_report_csv(in);
  CHECK(parsed.problem == rep.problem);
  CHECK(parsed.runs == rep.runs);
  CHECK(parsed.converged_percent == rep.converged_percent);
  CHECK(parsed.mean_iterations == rep.mean_iterations);
  CHECK(parsed.mean_gradient_evals == rep.mean_gradient_evals);
  CHECK(parsed.seed == rep.seed);
  REQUIRE(parsed.per_run.size() == rep.per_run.size());
  for (std::size_t i = 0; i < rep.per_run.size(); ++i) {
    CHECK(parsed.per_run[i].seed == rep.per_run[i].seed);
    CHECK(parsed.per_run[i].status == rep.per_run[i].status);
    CHECK(parsed.per_run[i].iterations == rep.per_run[i].iterations);
    CHECK(parsed.per_run[i].gradient_evaluations == rep.per_run[i].gradient_evaluations);
  }
}

TEST_CASE("report parser rejects malformed input") {
  std::istringstream bad_header("not,a,report\n");
  CHECK_THROWS_AS(parse_report_csv(bad_header), std::invalid_argument);
  std::istringstream truncated(
      "problem,runs,converged_percent,mean_iterations,mean_gradient_evals,mean_time_s,seed\n"
      "ex1,2,100,1,2,0.1,7\n"
      "run_seed,status,iterations,gradient_evals,time_s\n"
      "1,Critical,1,2,0.1\n");
  CHECK_THROWS_AS(parse_report_csv(truncated), std::invalid_argument);
}

TEST_CASE("benchmark input validation") {
  CHECK_THROWS_AS(run_benchmark("nope", 10, 7), std::invalid_argument);
  CHECK_THROWS_AS(run_benchmark("ex1", 0, 7), std::invalid_argument);
}
