// ============================================================================
// seqmon — stream monitor for past metric temporal logic
// ============================================================================
//
//   seqmon monitor --formula "p since[2:3] q" --mode discrete --input trace.csv
//   seqmon gen     --property "delay(600)" --length 1000000 > trace.csv
//   seqmon bench   --property "pandq(1,600)" --mode both --report out.csv
//   seqmon check   --trials 500 --seed 7
//
// Exit codes: 0 ok, 1 check found a mismatch, 2 usage or formula parse
// error, 3 malformed trace data.
// ============================================================================

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqmon/bench.hpp"
#include "seqmon/dense_engine.hpp"
#include "seqmon/diffcheck.hpp"
#include "seqmon/discrete_engine.hpp"
#include "seqmon/generators.hpp"
#include "seqmon/parser.hpp"
#include "seqmon/trace_io.hpp"

namespace {

using namespace seqmon;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct MonitorOptions {
  std::string mode = "discrete";
  std::string formula;
  std::string input = "-";
  std::string output;
  std::int64_t chunk_rows = 64;
  std::string t0 = "0";
  bool strong_historically = false;
};

struct GenOptions {
  std::string property;
  std::int64_t length = 0;
  std::uint64_t seed = 0;
  std::string densities;
  std::string output;
  bool with_time = false;
};

struct BenchOptions {
  std::string property;
  std::string mode = "discrete";
  std::int64_t length = 1'000'000;
  std::uint64_t seed = 0;
  std::int64_t chunk_rows = 64;
  int repeat = 1;
  std::string report;
  std::string densities;
};

struct CheckOptions {
  std::string formula;
  std::string mode = "both";
  int trials = 200;
  std::uint64_t seed = 1;
  std::int64_t max_len = 30;
};

QprDensities parse_densities(const std::string& text) {
  QprDensities d;
  if (text.empty()) return d;
  std::istringstream in(text);
  double p = 0, q = 0, r = 0;
  char c1 = 0, c2 = 0;
  if (!(in >> p >> c1 >> q >> c2 >> r) || c1 != ',' || c2 != ',' || p < 0 || p > 1 || q < 0 ||
      q > 1 || r < 0 || r > 1)
    throw CLI::ValidationError("--densities", "expected p,q,r in [0,1]");
  d.p_ppm = static_cast<std::uint32_t>(p * 1'000'000);
  d.q_ppm = static_cast<std::uint32_t>(q * 1'000'000);
  d.r_ppm = static_cast<std::uint32_t>(r * 1'000'000);
  return d;
}

int run_monitor_discrete(const MonitorOptions& opt, std::istream& in, std::ostream& out) {
  DiscreteNetwork net = compile_discrete(parse(opt.formula, TimeModel::Discrete));
  if (opt.strong_historically) net.set_strong_historically(true);
  DiscreteCsvReader reader(in);
  // map network propositions onto CSV columns
  std::vector<int> where;
  for (const std::string& prop : net.propositions()) {
    int idx = -1;
    for (std::size_t c = 0; c < reader.columns().size(); ++c)
      if (reader.columns()[c] == prop) idx = static_cast<int>(c);
    if (idx < 0) {
      std::cerr << "error: trace has no column '" << prop << "'\n";
      return kExitData;
    }
    where.push_back(idx);
  }
  std::vector<char> row, inputs(where.size());
  while (reader.next(row)) {
    for (std::size_t i = 0; i < where.size(); ++i)
      inputs[i] = row[static_cast<std::size_t>(where[i])];
    out << (net.step(std::span<const char>(inputs)) ? "1" : "0") << "\n";
  }
  out.flush();
  return kExitOk;
}

int run_monitor_dense(const MonitorOptions& opt, std::istream& in, std::ostream& out) {
  Rational t0 = Rational::from_decimal(opt.t0);
  DenseNetwork net = compile_dense(parse(opt.formula, TimeModel::Dense), t0);
  DenseCsvReader reader(in, t0);
  std::vector<int> where;
  for (const std::string& prop : net.propositions()) {
    int idx = -1;
    for (std::size_t c = 0; c < reader.columns().size(); ++c)
      if (reader.columns()[c] == prop) idx = static_cast<int>(c);
    if (idx < 0) {
      std::cerr << "error: trace has no column '" << prop << "'\n";
      return kExitData;
    }
    where.push_back(idx);
  }

  const std::size_t props = where.size();
  std::vector<PeriodSet> periods(props);
  Rational chunk_begin = t0, chunk_end = t0;
  std::int64_t rows_in_chunk = 0;
  auto flush_chunk = [&] {
    if (rows_in_chunk == 0) return;
    PeriodSet result = net.feed(chunk_begin, chunk_end, periods);
    for (const Period& p : result.periods())
      out << p.begin.to_string() << "," << (p.unbounded ? "inf" : p.end.to_string()) << "\n";
    out.flush();
    for (auto& set : periods) set.clear();
    chunk_begin = chunk_end;
    rows_in_chunk = 0;
  };

  Rational begin, end;
  std::vector<char> row;
  while (reader.next(begin, end, row)) {
    for (std::size_t i = 0; i < props; ++i)
      if (row[static_cast<std::size_t>(where[i])] != 0) periods[i].add(period(begin, end));
    chunk_end = end;
    if (++rows_in_chunk >= opt.chunk_rows) flush_chunk();
  }
  flush_chunk();
  return kExitOk;
}

int run_monitor(const MonitorOptions& opt) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (opt.input != "-") {
    file.open(opt.input);
    if (!file) {
      std::cerr << "error: cannot open input '" << opt.input << "'\n";
      return kExitData;
    }
    in = &file;
  }
  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!opt.output.empty()) {
    out_file.open(opt.output);
    if (!out_file) {
      std::cerr << "error: cannot open output '" << opt.output << "'\n";
      return kExitData;
    }
    out = &out_file;
  }
  return opt.mode == "dense" ? run_monitor_dense(opt, *in, *out)
                             : run_monitor_discrete(opt, *in, *out);
}

int run_gen(const GenOptions& opt) {
  BenchProperty property = parse_bench_property(opt.property);
  QprDensities densities = parse_densities(opt.densities);
  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!opt.output.empty()) {
    out_file.open(opt.output);
    if (!out_file) {
      std::cerr << "error: cannot open output '" << opt.output << "'\n";
      return kExitData;
    }
    out = &out_file;
  }
  auto columns = bench_columns(property);
  if (opt.with_time) *out << "time,";
  for (std::size_t i = 0; i < columns.size(); ++i)
    *out << columns[i] << (i + 1 == columns.size() ? "\n" : ",");
  std::string line;
  bench_rows(property, opt.length, opt.seed, densities,
             [&](std::int64_t k, const std::vector<char>& row) {
               line.clear();
               if (opt.with_time) {
                 line += std::to_string(k);
                 line += ',';
               }
               for (std::size_t i = 0; i < row.size(); ++i) {
                 line += row[i] ? '1' : '0';
                 line += i + 1 == row.size() ? '\n' : ',';
               }
               *out << line;
             });
  out->flush();
  return kExitOk;
}

int run_bench(const BenchOptions& opt) {
  BenchProperty property = parse_bench_property(opt.property);
  QprDensities densities = parse_densities(opt.densities);
  DiscreteTrace trace = bench_trace(property, opt.length, opt.seed, densities);

  auto median_of = [&](auto&& runner) {
    std::vector<BenchResult> results;
    for (int i = 0; i < opt.repeat; ++i) results.push_back(runner());
    std::sort(results.begin(), results.end(),
              [](const BenchResult& a, const BenchResult& b) { return a.elapsed_ms < b.elapsed_ms; });
    return results[results.size() / 2];
  };

  std::vector<BenchResult> rows;
  if (opt.mode == "discrete" || opt.mode == "both")
    rows.push_back(median_of([&] { return bench_discrete(property, trace); }));
  if (opt.mode == "dense" || opt.mode == "both")
    rows.push_back(median_of([&] { return bench_dense(property, trace, opt.chunk_rows); }));

  std::cout << BenchResult::csv_header() << "\n";
  for (const BenchResult& r : rows) std::cout << r.csv_row() << "\n";
  if (!opt.report.empty()) {
    std::ofstream report(opt.report);
    if (!report) {
      std::cerr << "error: cannot open report '" << opt.report << "'\n";
      return kExitData;
    }
    report << BenchResult::csv_header() << "\n";
    for (const BenchResult& r : rows) report << r.csv_row() << "\n";
  }
  return kExitOk;
}

int run_check(const CheckOptions& opt) {
  if (opt.trials == 0) return kExitOk;
  Rng rng(opt.seed);
  bool failed = false;

  auto report_failure = [&](const std::string& what, const CheckReport& report) {
    std::cerr << "check " << what << ": " << report.mismatches << "/" << report.trials
              << " mismatching instances\n"
              << report.first_counterexample;
    failed = true;
  };

  if (!opt.formula.empty()) {
    if (opt.mode == "discrete" || opt.mode == "both") {
      Formula f = parse(opt.formula, TimeModel::Discrete);
      CheckReport report;
      for (int i = 0; i < opt.trials; ++i) {
        ++report.trials;
        DiscreteTrace w = random_discrete_trace(
            rng, build_dag(f).propositions.empty() ? std::vector<std::string>{"p"}
                                                   : build_dag(f).propositions,
            rng.range(1, opt.max_len));
        if (auto bad = discrete_mismatch_step(f, w)) {
          ++report.mismatches;
          if (report.first_counterexample.empty()) {
            DiscreteTrace shrunk = minimize_discrete_counterexample(f, w);
            std::ostringstream os;
            os << "formula: " << f.to_string() << " mismatch at step " << *bad << "\n";
            report.first_counterexample = os.str();
          }
        }
      }
      if (report.mismatches > 0) report_failure("discrete --formula", report);
      std::cout << "discrete formula check: " << report.trials - report.mismatches << "/"
                << report.trials << " ok\n";
    }
  } else {
    RandomFormulaOptions dopt;
    CheckReport discrete = check_discrete_random(rng, opt.trials, dopt, opt.max_len);
    std::cout << "discrete random check: " << discrete.trials - discrete.mismatches << "/"
              << discrete.trials << " ok\n";
    if (discrete.mismatches > 0) report_failure("discrete", discrete);

    RandomFormulaOptions fopt;
    fopt.model = TimeModel::Dense;
    RandomBehaviorOptions bopt;
    CheckReport dense = check_dense_random(rng, std::max(1, opt.trials / 4), fopt, bopt);
    std::cout << "dense random check: " << dense.trials - dense.mismatches << "/" << dense.trials
              << " ok\n";
    if (dense.mismatches > 0) report_failure("dense", dense);
  }
  return failed ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online monitor for past metric temporal logic over discrete and dense time"};
  app.require_subcommand(1);

  MonitorOptions monitor_opt;
  auto* monitor = app.add_subcommand("monitor", "stream a CSV trace through a monitor");
  monitor->add_option("--mode", monitor_opt.mode, "time model")
      ->check(CLI::IsMember({"discrete", "dense"}));
  monitor->add_option("--formula", monitor_opt.formula, "formula text")->required();
  monitor->add_option("--input", monitor_opt.input, "CSV path or - for stdin");
  monitor->add_option("--output", monitor_opt.output, "output path (default stdout)");
  monitor->add_option("--chunk-rows", monitor_opt.chunk_rows, "dense batching, rows per chunk")
      ->check(CLI::PositiveNumber);
  monitor->add_option("--t0", monitor_opt.t0, "dense time origin");
  monitor->add_flag("--strong-historically", monitor_opt.strong_historically,
                    "assume operands false before the trace begins");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a benchmark trace");
  gen->add_option("--property", gen_opt.property, "qpr(a,b) | pandq(a,b) | delay(b)")->required();
  gen->add_option("--length", gen_opt.length, "number of steps")->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_opt.seed, "rng seed");
  gen->add_option("--densities", gen_opt.densities, "qpr densities p,q,r (defaults 0.5,0.1,0.1)");
  gen->add_option("--output", gen_opt.output, "output path (default stdout)");
  gen->add_flag("--with-time", gen_opt.with_time, "prefix a time column (step index)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "time a monitor on a generated trace");
  bench->add_option("--property", bench_opt.property, "qpr(a,b) | pandq(a,b) | delay(b)")
      ->required();
  bench->add_option("--mode", bench_opt.mode, "engine to time")
      ->check(CLI::IsMember({"discrete", "dense", "both"}));
  bench->add_option("--length", bench_opt.length, "number of steps")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opt.seed, "rng seed");
  bench->add_option("--chunk-rows", bench_opt.chunk_rows, "dense batching, rows per chunk")
      ->check(CLI::PositiveNumber);
  bench->add_option("--repeat", bench_opt.repeat, "runs per engine; the median is reported")
      ->check(CLI::PositiveNumber);
  bench->add_option("--report", bench_opt.report, "write the CSV report here");
  bench->add_option("--densities", bench_opt.densities, "qpr densities p,q,r");

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "differential check of engines against the oracles");
  check->add_option("--formula", check_opt.formula, "check one formula instead of random ones");
  check->add_option("--mode", check_opt.mode, "time model")
      ->check(CLI::IsMember({"discrete", "dense", "both"}));
  check->add_option("--trials", check_opt.trials, "random instances")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--seed", check_opt.seed, "rng seed");
  check->add_option("--max-len", check_opt.max_len, "max discrete trace length")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (monitor->parsed()) return run_monitor(monitor_opt);
    if (gen->parsed()) return run_gen(gen_opt);
    if (bench->parsed()) return run_bench(bench_opt);
    if (check->parsed()) return run_check(check_opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TraceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
