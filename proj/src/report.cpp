// Copyright 2026 The cyclepack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclepack/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclepack {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

json arc_json(const std::optional<Arc>& a) {
  if (!a) return nullptr;
  return json::array({a->from, a->to});
}

json cycle_json(const std::optional<Cycle>& c) {
  if (!c) return nullptr;
  return c->vertices();
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "consistent";
    case Verdict::kRefuted:
      return "refuted";
    case Verdict::kInconclusive:
      return "inconclusive";
    case Verdict::kRefutationCandidate:
      return "refutation_candidate";
    case Verdict::kNotApplicable:
      return "not_applicable";
  }
  throw std::logic_error("unknown verdict");
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::kConsistent, Verdict::kRefuted,
                    Verdict::kInconclusive, Verdict::kRefutationCandidate,
                    Verdict::kNotApplicable}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

const Claim* VerificationReport::find_claim(const std::string& id) const {
  const auto it = std::find_if(claims.begin(), claims.end(),
                               [&](const Claim& c) { return c.id == id; });
  return it == claims.end() ? nullptr : &*it;
}

bool VerificationReport::has_verdict(Verdict v) const {
  return std::any_of(claims.begin(), claims.end(),
                     [v](const Claim& c) { return c.verdict == v; });
}

void to_json(json& j, const Claim& c) {
  j = json{{"id", c.id},
           {"statement", c.statement},
           {"predicted", c.predicted},
           {"measured", optional_json(c.measured)},
           {"basis", c.basis},
           {"verdict", to_string(c.verdict)},
           {"note", c.note}};
}

void from_json(const json& j, Claim& c) {
  j.at("id").get_to(c.id);
  j.at("statement").get_to(c.statement);
  j.at("predicted").get_to(c.predicted);
  c.measured = optional_from<std::int64_t>(j, "measured");
  j.at("basis").get_to(c.basis);
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  j.at("note").get_to(c.note);
}

void to_json(json& j, const Measurements& m) {
  j = json{{"vertex_count", m.vertex_count},
           {"arc_count", m.arc_count},
           {"girth", optional_json(m.girth)},
           {"min_outdegree", m.min_outdegree},
           {"packing_lower", optional_json(m.packing_lower)},
           {"packing_upper", optional_json(m.packing_upper)},
           {"packing_optimal", optional_json(m.packing_optimal)},
           {"longest_path", optional_json(m.longest_path)},
           {"longest_path_upper", optional_json(m.longest_path_upper)},
           {"longest_path_exact", optional_json(m.longest_path_exact)},
           {"extra", m.extra}};
}

void from_json(const json& j, Measurements& m) {
  j.at("vertex_count").get_to(m.vertex_count);
  j.at("arc_count").get_to(m.arc_count);
  m.girth = optional_from<std::size_t>(j, "girth");
  j.at("min_outdegree").get_to(m.min_outdegree);
  m.packing_lower = optional_from<std::size_t>(j, "packing_lower");
  m.packing_upper = optional_from<std::size_t>(j, "packing_upper");
  m.packing_optimal = optional_from<bool>(j, "packing_optimal");
  m.longest_path = optional_from<std::size_t>(j, "longest_path");
  m.longest_path_upper = optional_from<std::size_t>(j, "longest_path_upper");
  m.longest_path_exact = optional_from<bool>(j, "longest_path_exact");
  j.at("extra").get_to(m.extra);
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"schema", r.schema},
           {"kind", r.kind},
           {"instance", r.instance_id},
           {"parameters", r.parameters},
           {"measured", r.measured},
           {"claims", r.claims},
           {"witnesses", r.witnesses},
           {"notes", r.notes}};
}

void from_json(const json& j, VerificationReport& r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != kReportSchema) {
    throw std::invalid_argument("unsupported report schema " +
                                std::to_string(r.schema));
  }
  j.at("kind").get_to(r.kind);
  j.at("instance").get_to(r.instance_id);
  j.at("parameters").get_to(r.parameters);
  j.at("measured").get_to(r.measured);
  j.at("claims").get_to(r.claims);
  j.at("witnesses").get_to(r.witnesses);
  j.at("notes").get_to(r.notes);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json packing_json(const Packing& p) {
  json cycles = json::array();
  for (const Cycle& c : p.cycles) cycles.push_back(c.vertices());
  return json{{"lower", p.lower_bound},
              {"upper", p.upper_bound},
              {"optimal", p.optimal},
              {"expansions", p.expansions},
              {"cycles", cycles}};
}

json path_json(const PathCertificate& p) {
  return json{{"length", p.length},
              {"exact", p.exact},
              {"upper_bound", p.upper_bound},
              {"expansions", p.expansions},
              {"witness", p.witness}};
}

json probe_json(const ProbeReport& r) {
  json out_cycle = nullptr;
  if (r.outneighborhood_cycle_vertex) {
    out_cycle = json{{"vertex", r.outneighborhood_cycle_vertex->first},
                     {"cycle", r.outneighborhood_cycle_vertex->second.vertices()}};
  }
  const auto& p = r.dprime_profile;
  return json{
      {"schema", kReportSchema},
      {"advisory", r.advisory},
      {"min_outdegree", r.min_outdegree},
      {"has_digon", arc_json(r.digon)},
      {"has_triangle", cycle_json(r.triangle)},
      {"undominated_arc", arc_json(r.undominated_arc)},
      {"inneighborhood_acyclic_vertex",
       optional_json(r.inneighborhood_acyclic_vertex)},
      {"outneighborhood_cycle_vertex", out_cycle},
      {"strong_connectivity_value", optional_json(r.strong_connectivity)},
      {"dprime_regularity_profile",
       {{"min_in", p.min_in},
        {"max_in", p.max_in},
        {"min_out", p.min_out},
        {"max_out", p.max_out},
        {"four_regular", p.regular(4)},
        {"complete", r.dprime_complete}}},
      {"dprime_has_4cycle", cycle_json(r.dprime_4cycle)},
      {"dprime_successor_property", r.dprime_successor_property},
      {"dprime_successor_violation", arc_json(r.dprime_successor_violation)},
      {"failed_conditions", r.failed_conditions},
      {"possible_minimal_counterexample", r.possible_minimal_counterexample}};
}

}  // namespace cyclepack
