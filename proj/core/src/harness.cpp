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

#include "rsfa/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rsfa/error.hpp"
#include "rsfa/matstar.hpp"
#include "rsfa/residual.hpp"

namespace rsfa {

std::string_view learner_name(LearnerKind k) { return k == LearnerKind::Rsfa ? "rsfa" : "matstar"; }

LearnerKind parse_learner(std::string_view name) {
  if (name == "rsfa") return LearnerKind::Rsfa;
  if (name == "matstar") return LearnerKind::MatStar;
  throw ParseError("unknown learner '" + std::string(name) + "'");
}

std::vector<LearnerKind> parse_learners(std::string_view list) {
  std::vector<LearnerKind> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    out.push_back(parse_learner(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CountMode parse_count_mode(std::string_view name) {
  if (name == "distinct") return CountMode::Distinct;
  if (name == "raw") return CountMode::Raw;
  throw ParseError("unknown count mode '" + std::string(name) + "'");
}

RunOutcome run_learner(Teacher& teacher, LearnerKind kind, const LearnerOptions& options) {
  if (kind == LearnerKind::Rsfa) return learn_rsfa(teacher, interval_session_factory(), options);
  return learn_dsfa(teacher, interval_session_factory(), options);
}

std::string TrialRecord::to_json() const {
  nlohmann::json j{{"trial", trial},
                   {"seed", seed},
                   {"residual_count", residual_count},
                   {"prime_residual_count", prime_residual_count},
                   {"learner", learner_name(learner)},
                   {"eqs", eqs},
                   {"mqs_raw", mqs_raw},
                   {"mqs_distinct", mqs_distinct},
                   {"final_states", final_states},
                   {"table_u", table_u},
                   {"table_v", table_v},
                   {"wall_ms", wall_ms},
                   {"skipped", skipped}};
  return j.dump();
}

TargetInfo analyze_target(const Sfa& target, std::size_t cap) {
  try {
    const auto prof = residual_profile(target, cap);
    return TargetInfo{prof.size(), prof.prime_count(), false};
  } catch (const CapExceeded&) {
    return TargetInfo{0, 0, true};
  }
}

TrialRecord run_trial(const Sfa& target, const TargetInfo& info, LearnerKind kind,
                      std::uint64_t trial, std::uint64_t seed, const LearnerOptions& options,
                      bool record_time) {
  TrialRecord r;
  r.trial = trial;
  r.seed = seed;
  r.learner = kind;
  r.residual_count = info.residual_count;
  r.prime_residual_count = info.prime_residual_count;
  r.skipped = info.skipped;
  if (info.skipped) return r;

  const auto start = std::chrono::steady_clock::now();
  Teacher teacher(target, options.determinization_cap);
  const RunOutcome out = run_learner(teacher, kind, options);
  const auto stop = std::chrono::steady_clock::now();
  r.eqs = out.stats.eqs;
  r.mqs_raw = out.stats.mqs_raw;
  r.mqs_distinct = out.stats.mqs_distinct;
  r.final_states = out.result.num_states();
  r.table_u = out.table_u;
  r.table_v = out.table_v;
  if (record_time) r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::vector<TrialRecord> run_bench(const BenchConfig& config) {
  const std::size_t per_trial = config.learners.size();
  std::vector<TrialRecord> rows(config.trials * per_trial);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= config.trials) return;
      try {
        GenParams p = config.params;
        p.seed = derive_seed(config.params.seed, t);
        const Sfa target = random_sfa(p);
        const TargetInfo info = analyze_target(target, config.cap);
        LearnerOptions opts;
        opts.determinization_cap = config.cap;
        for (std::size_t k = 0; k < per_trial; ++k) {
          rows[t * per_trial + k] =
              run_trial(target, info, config.learners[k], t, p.seed, opts, config.record_time);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(config.trials);
        return;
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string csv_header() {
  return "trial,seed,residual_count,prime_residual_count,learner,eqs,mqs_raw,mqs_distinct,"
         "final_states,table_u,table_v,wall_ms,skipped";
}

std::string to_csv_row(const TrialRecord& r) {
  std::ostringstream os;
  os << r.trial << ',' << r.seed << ',' << r.residual_count << ',' << r.prime_residual_count << ','
     << learner_name(r.learner) << ',' << r.eqs << ',' << r.mqs_raw << ',' << r.mqs_distinct << ','
     << r.final_states << ',' << r.table_u << ',' << r.table_v << ',' << std::fixed
     << std::setprecision(3) << r.wall_ms << ',' << (r.skipped ? 1 : 0);
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  os << csv_header() << '\n';
  for (const auto& r : records) os << to_csv_row(r) << '\n';
}

namespace {

template <class T>
T parse_number(const std::string& field, std::size_t line) {
  std::istringstream is(field);
  T value{};
  if (!(is >> value) || !is.eof()) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return value;
}

}  // namespace

std::vector<TrialRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != csv_header()) throw ParseError("missing or unexpected CSV header");
  std::vector<TrialRecord> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 13) throw ParseError("line " + std::to_string(lineno) + ": expected 13 fields");
    TrialRecord r;
    r.trial = parse_number<std::uint64_t>(f[0], lineno);
    r.seed = parse_number<std::uint64_t>(f[1], lineno);
    r.residual_count = parse_number<std::size_t>(f[2], lineno);
    r.prime_residual_count = parse_number<std::size_t>(f[3], lineno);
    r.learner = parse_learner(f[4]);
    r.eqs = parse_number<std::uint64_t>(f[5], lineno);
    r.mqs_raw = parse_number<std::uint64_t>(f[6], lineno);
    r.mqs_distinct = parse_number<std::uint64_t>(f[7], lineno);
    r.final_states = parse_number<std::size_t>(f[8], lineno);
    r.table_u = parse_number<std::size_t>(f[9], lineno);
    r.table_v = parse_number<std::size_t>(f[10], lineno);
    r.wall_ms = parse_number<double>(f[11], lineno);
    const int skipped = parse_number<int>(f[12], lineno);
    if (skipped != 0 && skipped != 1) throw ParseError("line " + std::to_string(lineno) + ": bad skipped flag");
    r.skipped = skipped == 1;
    out.push_back(r);
  }
  return out;
}

MeanCi mean_ci(const std::vector<double>& xs) {
  MeanCi m;
  if (xs.empty()) return m;
  double sum = 0;
  for (double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return m;
  double ss = 0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  m.half_width = 1.96 * sd / std::sqrt(static_cast<double>(xs.size()));
  return m;
}

std::vector<SummaryRow> summarize(const std::vector<TrialRecord>& records, CountMode mode) {
  struct Acc {
    std::vector<double> eqs, mqs, u, v;
  };
  std::map<std::pair<std::size_t, int>, Acc> groups;
  for (const auto& r : records) {
    if (r.skipped) continue;
    auto& g = groups[{r.residual_count, static_cast<int>(r.learner)}];
    g.eqs.push_back(static_cast<double>(r.eqs));
    g.mqs.push_back(static_cast<double>(mode == CountMode::Distinct ? r.mqs_distinct : r.mqs_raw));
    g.u.push_back(static_cast<double>(r.table_u));
    g.v.push_back(static_cast<double>(r.table_v));
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, g] : groups) {
    out.push_back(SummaryRow{key.first, static_cast<LearnerKind>(key.second), g.eqs.size(),
                             mean_ci(g.eqs), mean_ci(g.mqs), mean_ci(g.u), mean_ci(g.v)});
  }
  return out;
}

namespace {

void put(std::ostream& os, const MeanCi& m) {
  os << ',' << m.mean << ',';
  if (m.half_width) os << *m.half_width;
}

}  // namespace

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "residual_count,learner,samples,eq_mean,eq_ci95,mq_mean,mq_ci95,u_mean,u_ci95,v_mean,v_ci95\n";
  const auto flags = os.flags();
  os << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    os << r.residual_count << ',' << learner_name(r.learner) << ',' << r.samples;
    put(os, r.eqs);
    put(os, r.mqs);
    put(os, r.table_u);
    put(os, r.table_v);
    os << '\n';
  }
  os.flags(flags);
}

void write_summary_text(std::ostream& os, const std::vector<SummaryRow>& rows) {
  auto cell = [](const MeanCi& m) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << m.mean;
    if (m.half_width) s << " ±" << std::setprecision(1) << *m.half_width;
    return s.str();
  };
  os << std::left << std::setw(6) << "n" << std::setw(9) << "learner" << std::setw(8) << "trials"
     << std::setw(18) << "EQ" << std::setw(22) << "MQ" << std::setw(16) << "|U|" << "|V|\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(6) << r.residual_count << std::setw(9) << learner_name(r.learner)
       << std::setw(8) << r.samples << std::setw(18) << cell(r.eqs) << std::setw(22) << cell(r.mqs)
       << std::setw(16) << cell(r.table_u) << cell(r.table_v) << '\n';
  }
}

}  // namespace rsfa
