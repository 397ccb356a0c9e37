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

#ifndef CYCLEPACK_REPORT_HPP_
#define CYCLEPACK_REPORT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclepack/packing.hpp"
#include "cyclepack/paths.hpp"
#include "cyclepack/probes.hpp"

namespace cyclepack {

inline constexpr int kReportSchema = 1;

enum class Verdict {
  kConsistent,
  kRefuted,
  kInconclusive,
  kRefutationCandidate,
  kNotApplicable,
};

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// How a measured value was obtained; "refuted" is only ever issued on
// exact, certified or structural evidence.
inline constexpr const char* kBasisExact = "exact";
inline constexpr const char* kBasisCertified = "certified_bound";
inline constexpr const char* kBasisStructural = "structural_bound";
inline constexpr const char* kBasisWitness = "witness";
inline constexpr const char* kBasisBudget = "budget_exhausted";
inline constexpr const char* kBasisNone = "not_measured";

struct Claim {
  std::string id;
  std::string statement;
  std::int64_t predicted = 0;
  std::optional<std::int64_t> measured;
  std::string basis = kBasisNone;
  Verdict verdict = Verdict::kInconclusive;
  std::string note;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Measurements {
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  std::optional<std::size_t> girth;
  std::size_t min_outdegree = 0;
  std::optional<std::size_t> packing_lower;
  std::optional<std::size_t> packing_upper;
  std::optional<bool> packing_optimal;
  std::optional<std::size_t> longest_path;
  std::optional<std::size_t> longest_path_upper;
  std::optional<bool> longest_path_exact;
  // Instance-specific extras, e.g. counting bounds or the girth of a variant.
  std::map<std::string, std::int64_t> extra;

  friend bool operator==(const Measurements&, const Measurements&) = default;
};

struct VerificationReport {
  int schema = kReportSchema;
  std::string kind;
  std::string instance_id;
  std::map<std::string, std::int64_t> parameters;
  Measurements measured;
  std::vector<Claim> claims;
  std::map<std::string, std::vector<std::vector<Vertex>>> witnesses;
  std::vector<std::string> notes;

  const Claim* find_claim(const std::string& id) const;
  bool has_verdict(Verdict v) const;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const Claim& c);
void from_json(const nlohmann::json& j, Claim& c);
void to_json(nlohmann::json& j, const Measurements& m);
void from_json(const nlohmann::json& j, Measurements& m);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

// Canonical text form used by the CLI: two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

nlohmann::json packing_json(const Packing& p);
nlohmann::json path_json(const PathCertificate& p);
nlohmann::json probe_json(const ProbeReport& r);

}  // namespace cyclepack

#endif  // CYCLEPACK_REPORT_HPP_
