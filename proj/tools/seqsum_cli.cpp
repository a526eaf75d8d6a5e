#include "seqsum_cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "seqsum/accumulator_machine.hpp"
#include "seqsum/amortized.hpp"
#include "seqsum/cost_model.hpp"
#include "seqsum/instance.hpp"
#include "seqsum/oracle.hpp"
#include "seqsum/trace_csv.hpp"

namespace seqsum::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RandomSpec {
  std::size_t k = 0;
  std::size_t max_len = 1;
  std::uint64_t seed = 0;
};

// "k=50,maxlen=20,seed=7"; every key is required.
RandomSpec parse_random_spec(const std::string& text) {
  std::map<std::string, std::uint64_t> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value in '" + item + "'");
    try {
      kv[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad number in '" + item + "'");
    }
  }
  for (const char* key : {"k", "maxlen", "seed"})
    if (!kv.count(key)) throw UsageError(std::string("random spec is missing '") + key + "'");
  if (kv.size() != 3) throw UsageError("random spec accepts only k, maxlen and seed");
  return {kv["k"], kv["maxlen"], kv["seed"]};
}

Instance generate(const std::string& family, std::size_t size, int base, std::size_t max_len,
                  std::uint64_t seed) {
  if (family == "counter") return gen_counter(size);
  if (family == "adversarial") return gen_adversarial(size);
  if (family == "random") return gen_random(size, max_len, base, seed);
  throw UsageError("unknown family '" + family + "'");
}

struct BenchRow {
  std::string family;
  std::size_t size = 0;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t naive = 0;
  std::uint64_t word_ram = 0;
  std::uint64_t log_cost = 0;
  double log_ratio = 0.0;
  std::int64_t wall_ns = 0;
};

BenchRow bench_one(const std::string& family, std::size_t size, int base, std::size_t max_len,
                   std::uint64_t seed, int repetitions) {
  const Instance inst = generate(family, size, base, max_len, seed);
  const SeqSumMachine machine = build_machine(inst.base);
  RunOptions opts;
  opts.trace_threshold = 0;
  std::int64_t best = INT64_MAX;
  RunReport report;
  for (int r = 0; r < repetitions; ++r) {
    const auto start = std::chrono::steady_clock::now();
    report = run_seqsum(machine, inst, opts);
    const auto stop = std::chrono::steady_clock::now();
    best = std::min<std::int64_t>(
        best, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }
  const CostBreakdown lc = log_cost(report);
  return {family,
          size,
          report.size.n,
          report.total_steps,
          naive_bound(report),
          word_ram_cost(report).total,
          lc.total,
          lc.ratio,
          best};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instrumented accumulator Turing machine for sequence summation", "seqsum"};
  app.require_subcommand(1);

  int base = 2;
  std::string expression;
  std::string output_path;
  std::string format;

  auto* sum = app.add_subcommand("sum", "Sum an expression and report the step count");
  sum->add_option("expression", expression, "Terms separated by '+', MSB-first")->required();
  sum->add_option("--base", base, "Digit base (2..36)")->capture_default_str();
  sum->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::uint64_t trace_threshold = RunOptions{}.trace_threshold;
  auto* trace = app.add_subcommand("trace", "Dump the transition trace as CSV");
  trace->add_option("expression", expression)->required();
  trace->add_option("--base", base)->capture_default_str();
  trace->add_option("-o,--output", output_path, "Write CSV here instead of stdout");
  trace->add_option("--max-n", trace_threshold, "Refuse instances with larger parameter n")
      ->capture_default_str();

  std::string file_path;
  std::size_t counter_k = 0;
  std::size_t adversarial_n = 0;
  std::string random_spec;
  auto* verify = app.add_subcommand("verify", "Check the amortized bounds on one instance");
  auto* o_expr = verify->add_option("expression", expression);
  verify->add_option("--base", base)->capture_default_str();
  auto* o_file = verify->add_option("--file", file_path, "Instance file")->check(CLI::ExistingFile);
  auto* o_counter = verify->add_option("--counter", counter_k, "1+1+...+1 with k terms");
  auto* o_adv = verify->add_option("--adversarial", adversarial_n, "Adversarial family target n");
  auto* o_random = verify->add_option("--random", random_spec, "k=<k>,maxlen=<len>,seed=<s>");

  std::string family;
  std::size_t size = 0;
  std::size_t max_len = 20;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Emit an instance file");
  gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"counter", "adversarial", "random"}));
  gen->add_option("--size", size, "k for counter/random, n_target for adversarial")->required();
  gen->add_option("--base", base)->capture_default_str();
  gen->add_option("--max-len", max_len)->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("-o,--output", output_path);

  std::vector<std::size_t> sizes;
  int repetitions = 1;
  bool cost_table = false;
  auto* bench = app.add_subcommand("bench", "Scaling table over instance sizes");
  bench->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"counter", "adversarial", "random"}));
  bench->add_option("--sizes", sizes)->required()->delimiter(',');
  bench->add_option("--repetitions", repetitions)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--base", base)->capture_default_str();
  bench->add_option("--max-len", max_len)->capture_default_str();
  bench->add_option("--seed", seed)->capture_default_str();
  bench->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_flag("--cost-table", cost_table, "Emit the cost-model table instead");

  std::string engine = "tm";
  auto* signed_cmd = app.add_subcommand("signed", "Sum signed terms, e.g. 101-1-1");
  signed_cmd->add_option("expression", expression)->required();
  signed_cmd->add_option("--base", base)->capture_default_str();
  signed_cmd->add_option("--engine", engine)->check(CLI::IsMember({"tm", "oracle"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (sum->parsed()) {
      const RunReport report = run_seqsum(parse_expression(expression, base));
      const AmortizedVerdict v = check_theorem1(report);
      if (format == "json") {
        nlohmann::json j = to_json(v);
        j["sum"] = report.final_digits;
        out << j.dump() << '\n';
      } else {
        out << "sum=" << report.final_digits << " t=" << v.t << " n=" << v.n
            << " bound=" << v.bound << (v.bound_holds ? " ok" : " FAIL") << '\n';
      }
      return v.bound_holds ? kExitOk : kExitFailed;
    }

    if (trace->parsed()) {
      const Instance inst = parse_expression(expression, base);
      const SizeParams p = size_params(inst);
      if (p.n > trace_threshold) {
        err << "error: n=" << p.n << " exceeds the trace limit of " << trace_threshold << '\n';
        return kExitUsage;
      }
      const SeqSumMachine machine = build_machine(base);
      RunOptions opts;
      opts.trace_threshold = trace_threshold;
      const RunReport report = run_seqsum(machine, inst, opts);
      if (output_path.empty()) {
        write_trace_csv(out, machine.table(), *report.trace);
      } else {
        std::ofstream f(output_path);
        if (!f) throw UsageError("cannot open " + output_path);
        write_trace_csv(f, machine.table(), *report.trace);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const std::size_t sources = o_expr->count() + o_file->count() + o_counter->count() +
                                  o_adv->count() + o_random->count();
      if (sources != 1) throw UsageError("verify needs exactly one instance source");
      Instance inst;
      if (o_file->count()) {
        std::ifstream f(file_path);
        inst = read_instance_file(f);
      } else if (o_counter->count()) {
        inst = gen_counter(counter_k);
      } else if (o_adv->count()) {
        inst = gen_adversarial(adversarial_n);
      } else if (o_random->count()) {
        const RandomSpec spec = parse_random_spec(random_spec);
        inst = gen_random(spec.k, spec.max_len, base, spec.seed);
      } else {
        inst = parse_expression(expression, base);
      }
      const AmortizedVerdict v = check_theorem1(run_seqsum(inst));
      out << to_json(v).dump() << '\n';
      return v.pass() ? kExitOk : kExitFailed;
    }

    if (gen->parsed()) {
      const Instance inst = generate(family, size, base, max_len, seed);
      if (output_path.empty()) {
        write_instance_file(out, inst);
      } else {
        std::ofstream f(output_path);
        if (!f) throw UsageError("cannot open " + output_path);
        write_instance_file(f, inst);
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      // Validate every size before starting any run.
      require_base(base);
      if (family == "adversarial")
        for (std::size_t s : sizes) gen_adversarial(s);
      if (family == "random" && max_len < 1) throw UsageError("--max-len must be at least 1");
      std::vector<std::future<BenchRow>> jobs;
      for (std::size_t s : sizes)
        jobs.push_back(std::async(std::launch::async, bench_one, family, s, base, max_len, seed,
                                  repetitions));
      std::vector<BenchRow> rows;
      for (auto& j : jobs) rows.push_back(j.get());

      if (cost_table) {
        std::vector<CostRow> cost_rows;
        for (const BenchRow& r : rows)
          cost_rows.push_back({r.family + "-" + std::to_string(r.size), r.n, r.t, r.word_ram,
                               r.log_cost, r.log_ratio});
        write_cost_table(out, cost_rows);
      } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const BenchRow& r : rows)
          arr.push_back({{"family", r.family}, {"size", r.size}, {"n", r.n}, {"t", r.t},
                         {"naive_bound", r.naive}, {"word_ram", r.word_ram},
                         {"log_cost", r.log_cost}, {"wall_ns", r.wall_ns}});
        out << arr.dump() << '\n';
      } else {
        // wall_ns is advisory; every other column is deterministic.
        out << "family,size,n,t,naive_bound,word_ram,log_cost,wall_ns\n";
        for (const BenchRow& r : rows)
          out << r.family << ',' << r.size << ',' << r.n << ',' << r.t << ',' << r.naive << ','
              << r.word_ram << ',' << r.log_cost << ',' << r.wall_ns << '\n';
      }
      return kExitOk;
    }

    if (signed_cmd->parsed()) {
      const SignedInstance inst = parse_signed_expression(expression, base);
      const SignedValue v = signed_sum(inst, engine == "tm" ? Engine::tm : Engine::oracle);
      out << "sum=" << v.to_string() << '\n';
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    // ParseError, DigitOutOfRange, InvalidTarget, UnsupportedBase, UsageError
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace seqsum::cli
