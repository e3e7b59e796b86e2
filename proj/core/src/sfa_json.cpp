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

#include "rsfa/sfa_json.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rsfa/error.hpp"

namespace rsfa {

using nlohmann::json;

namespace {

json domain_json(const Domain& d) { return json{{"min", d.min}, {"max", d.max}}; }

json predicate_json(const Predicate& p) {
  json arr = json::array();
  for (const auto& iv : p.intervals()) arr.push_back(json::array({iv.lo, iv.hi}));
  return arr;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Domain domain_of(const json& j) {
  if (!j.is_object() || !j.contains("min") || !j.contains("max") ||
      !j["min"].is_number_integer() || !j["max"].is_number_integer()) {
    throw ParseError("domain must be {\"min\": int, \"max\": int}");
  }
  Domain d{j["min"].get<Char>(), j["max"].get<Char>()};
  if (d.min > d.max) throw DomainError("domain has min > max");
  return d;
}

Predicate predicate_of(const json& j, Domain domain) {
  if (!j.is_array()) throw ParseError("predicate must be an array of [lo, hi] pairs");
  std::vector<Interval> raw;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("predicate entries must be [lo, hi] integer pairs");
    }
    raw.push_back({pair[0].get<Char>(), pair[1].get<Char>()});
  }
  return Predicate::normalize(raw, domain);
}

std::size_t state_index(const json& j, std::size_t n, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  const auto v = j.get<std::size_t>();
  if (v >= n) throw ParseError(std::string(what) + " out of range");
  return v;
}

}  // namespace

std::string domain_to_json(const Domain& d) { return domain_json(d).dump(); }
Domain domain_from_json(std::string_view text) { return domain_of(parse(text)); }

std::string predicate_to_json(const Predicate& p) { return predicate_json(p).dump(); }
Predicate predicate_from_json(std::string_view text, Domain domain) {
  return predicate_of(parse(text), domain);
}

std::string sfa_to_json(const Sfa& m, int indent) {
  json j;
  j["domain"] = domain_json(m.domain());
  j["states"] = m.num_states();
  json init = json::array(), fin = json::array(), edges = json::array();
  for (State q = 0; q < m.num_states(); ++q) {
    if (m.is_initial(q)) init.push_back(q);
    if (m.is_final(q)) fin.push_back(q);
    for (const auto& [to, p] : m.out_edges(q)) {
      edges.push_back(json{{"from", q}, {"to", to}, {"intervals", predicate_json(p)}});
    }
  }
  j["initial"] = std::move(init);
  j["final"] = std::move(fin);
  j["edges"] = std::move(edges);
  return j.dump(indent);
}

Sfa sfa_from_json(std::string_view text) {
  const json j = parse(text);
  if (!j.is_object()) throw ParseError("SFA must be a JSON object");
  for (const char* key : {"domain", "states", "initial", "final", "edges"}) {
    if (!j.contains(key)) throw ParseError(std::string("SFA is missing \"") + key + "\"");
  }
  const Domain domain = domain_of(j["domain"]);
  if (!j["states"].is_number_integer() || j["states"].get<long long>() < 0) {
    throw ParseError("\"states\" must be a nonnegative integer");
  }
  const auto n = j["states"].get<std::size_t>();
  Sfa m(domain, n);
  if (!j["initial"].is_array() || !j["final"].is_array() || !j["edges"].is_array()) {
    throw ParseError("\"initial\", \"final\" and \"edges\" must be arrays");
  }
  for (const auto& q : j["initial"]) m.set_initial(state_index(q, n, "initial state"));
  for (const auto& q : j["final"]) m.set_final(state_index(q, n, "final state"));
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("intervals")) {
      throw ParseError("edge must have \"from\", \"to\" and \"intervals\"");
    }
    const State from = state_index(e["from"], n, "edge source");
    const State to = state_index(e["to"], n, "edge target");
    m.add_to_edge(from, to, predicate_of(e["intervals"], domain));
  }
  return m;
}

Sfa load_sfa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return sfa_from_json(ss.str());
}

void save_sfa(const Sfa& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << sfa_to_json(m, 2) << '\n';
}

}  // namespace rsfa
