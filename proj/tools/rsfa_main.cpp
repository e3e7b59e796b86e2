// Copyright 2026 The rsfa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rsfa/automata.hpp"
#include "rsfa/error.hpp"
#include "rsfa/event_log.hpp"
#include "rsfa/gen.hpp"
#include "rsfa/harness.hpp"
#include "rsfa/sfa_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGuard = 3;

struct GenFlags {
  std::size_t nq = 8;
  std::size_t ndelta = 2;
  double pi = 0.5;
  double pf = 0.5;
  std::int64_t domain_min = INT32_MIN;
  std::int64_t domain_max = INT32_MAX;
  std::uint64_t seed = 0;

  rsfa::GenParams params() const {
    rsfa::GenParams p;
    p.n_q = nq;
    p.n_delta = ndelta;
    p.p_i = pi;
    p.p_f = pf;
    p.domain = rsfa::Domain{domain_min, domain_max};
    p.seed = seed;
    return p;
  }
};

void add_gen_flags(CLI::App* cmd, GenFlags& g) {
  cmd->add_option("--nq", g.nq, "States per target")->capture_default_str();
  cmd->add_option("--ndelta", g.ndelta, "Interval draws per state")->capture_default_str();
  cmd->add_option("--pi", g.pi, "Probability a state is initial")->capture_default_str();
  cmd->add_option("--pf", g.pf, "Probability a state is final")->capture_default_str();
  cmd->add_option("--domain-min", g.domain_min, "Smallest character")->capture_default_str();
  cmd->add_option("--domain-max", g.domain_max, "Largest character")->capture_default_str();
  cmd->add_option("--seed", g.seed, "Generator seed")->capture_default_str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

int cmd_learn(const std::string& target_path, const std::string& learner, std::uint64_t seed,
              std::size_t cap, bool wall_time, const std::string& log_path) {
  const rsfa::Sfa target = rsfa::load_sfa(target_path);
  const auto kind = rsfa::parse_learner(learner);
  const auto info = rsfa::analyze_target(target, cap);
  if (info.skipped) throw rsfa::CapExceeded("target exceeds the determinization cap");

  rsfa::EventLog log;
  rsfa::LearnerOptions opts;
  opts.determinization_cap = cap;
  if (!log_path.empty()) opts.log = &log;

  const auto start = std::chrono::steady_clock::now();
  rsfa::Teacher teacher(target, cap);
  if (opts.log) teacher.set_event_log(opts.log);
  const auto out = rsfa::run_learner(teacher, kind, opts);
  const auto stop = std::chrono::steady_clock::now();

  rsfa::TrialRecord r;
  r.seed = seed;
  r.residual_count = info.residual_count;
  r.prime_residual_count = info.prime_residual_count;
  r.learner = kind;
  r.eqs = out.stats.eqs;
  r.mqs_raw = out.stats.mqs_raw;
  r.mqs_distinct = out.stats.mqs_distinct;
  r.final_states = out.result.num_states();
  r.table_u = out.table_u;
  r.table_v = out.table_v;
  if (wall_time) r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  nlohmann::json j;
  j["record"] = nlohmann::json::parse(r.to_json());
  j["stats"] = nlohmann::json::parse(out.stats.to_json());
  j["automaton"] = nlohmann::json::parse(rsfa::sfa_to_json(out.result));
  std::vector<std::string> words;
  for (const auto& w : out.state_words) words.push_back(rsfa::to_string(w));
  j["state_words"] = words;
  std::cout << j.dump(2) << '\n';

  if (!log_path.empty()) {
    std::ostringstream os;
    log.write(os);
    write_text(log_path, os.str());
  }
  return kExitOk;
}

int cmd_bench(std::size_t trials, const GenFlags& g, const std::string& learners,
              const std::string& count_mode, std::size_t jobs, std::size_t cap, bool wall_time,
              const std::string& out_path) {
  rsfa::BenchConfig cfg;
  cfg.trials = trials;
  cfg.params = g.params();
  cfg.learners = rsfa::parse_learners(learners);
  cfg.jobs = jobs;
  cfg.cap = cap;
  cfg.record_time = wall_time;
  const auto mode = rsfa::parse_count_mode(count_mode);
  // Validates the parameters before any worker starts.
  (void)rsfa::random_sfa(cfg.params);

  const auto rows = rsfa::run_bench(cfg);
  std::ostringstream csv;
  rsfa::write_csv(csv, rows);
  write_text(out_path, csv.str());
  if (!out_path.empty() && out_path != "-") {
    rsfa::write_summary_text(std::cout, rsfa::summarize(rows, mode));
  }
  return kExitOk;
}

int cmd_report(const std::string& csv_path, const std::string& count_mode, const std::string& csv_out) {
  std::ifstream is(csv_path, std::ios::binary);
  if (!is) throw rsfa::ParseError("cannot open '" + csv_path + "'");
  const auto rows = rsfa::summarize(rsfa::read_csv(is), rsfa::parse_count_mode(count_mode));
  rsfa::write_summary_text(std::cout, rows);
  if (!csv_out.empty()) {
    std::ostringstream os;
    rsfa::write_summary_csv(os, rows);
    write_text(csv_out, os.str());
  }
  return kExitOk;
}

int cmd_verify(const std::string& a_path, const std::string& b_path, std::size_t cap) {
  const auto a = rsfa::load_sfa(a_path);
  const auto b = rsfa::load_sfa(b_path);
  if (!(a.domain() == b.domain())) throw rsfa::DomainError("automata over different domains");
  const auto w = rsfa::diff_witness(a, b, cap);
  if (!w) {
    std::cout << "equivalent\n";
    return kExitOk;
  }
  std::cout << "differ " << rsfa::to_string(*w) << " first=" << (a.accepts(*w) ? '+' : '-')
            << " second=" << (b.accepts(*w) ? '+' : '-') << '\n';
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query learning of residual symbolic automata"};
  app.require_subcommand(1);

  std::size_t cap = rsfa::kDefaultDeterminizationCap;
  app.add_option("--cap", cap, "Subset-construction state cap")->capture_default_str();

  std::string target_path, learner = "rsfa", log_path;
  std::uint64_t learn_seed = 0;
  bool no_wall_time = false;
  auto* learn = app.add_subcommand("learn", "Learn one target and print the result as JSON");
  learn->add_option("target", target_path, "Target SFA (JSON)")->required();
  learn->add_option("--learner", learner, "rsfa or matstar")->capture_default_str();
  learn->add_option("--seed", learn_seed, "Recorded in the output record")->capture_default_str();
  learn->add_option("--log", log_path, "Write the event log here");
  learn->add_flag("--no-wall-time", no_wall_time, "Report wall_ms as 0");

  GenFlags bench_gen;
  std::size_t trials = 500, jobs = 1;
  std::string learners = "rsfa,matstar", count_mode = "distinct", out_path;
  auto* bench = app.add_subcommand("bench", "Run the random-target sweep and write CSV");
  bench->add_option("--trials", trials, "Number of targets")->capture_default_str();
  add_gen_flags(bench, bench_gen);
  bench->add_option("--learner", learners, "Comma-separated learners")->capture_default_str();
  bench->add_option("--count-mode", count_mode, "distinct or raw, for the summary")->capture_default_str();
  bench->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  bench->add_option("--out", out_path, "CSV path; stdout when omitted");
  bench->add_flag("--no-wall-time", no_wall_time, "Report wall_ms as 0");

  std::string csv_path, report_csv_out, report_mode = "distinct";
  auto* report = app.add_subcommand("report", "Summarize a benchmark CSV");
  report->add_option("csv", csv_path, "Benchmark CSV")->required();
  report->add_option("--count-mode", report_mode, "distinct or raw")->capture_default_str();
  report->add_option("--csv-out", report_csv_out, "Also write the summary as CSV");

  std::string a_path, b_path;
  auto* verify = app.add_subcommand("verify", "Check two SFAs for language equivalence");
  verify->add_option("first", a_path, "SFA (JSON)")->required();
  verify->add_option("second", b_path, "SFA (JSON)")->required();

  GenFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random SFA");
  add_gen_flags(gen, gen_flags);
  gen->add_option("--out", gen_out, "Output path; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*learn) return cmd_learn(target_path, learner, learn_seed, cap, !no_wall_time, log_path);
    if (*bench) {
      return cmd_bench(trials, bench_gen, learners, count_mode, jobs, cap, !no_wall_time, out_path);
    }
    if (*report) return cmd_report(csv_path, report_mode, report_csv_out);
    if (*verify) return cmd_verify(a_path, b_path, cap);
    if (*gen) {
      write_text(gen_out, rsfa::sfa_to_json(rsfa::random_sfa(gen_flags.params()), 2) + "\n");
      return kExitOk;
    }
  } catch (const rsfa::GuardTripped& e) {
    std::cerr << "guard tripped: " << e.what() << '\n';
    return kExitGuard;
  } catch (const rsfa::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const rsfa::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const rsfa::PreconditionError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const rsfa::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
