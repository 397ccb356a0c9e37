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

#ifndef CYCLEPACK_HARNESS_HPP_
#define CYCLEPACK_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/digraph.hpp"
#include "cyclepack/report.hpp"

namespace cyclepack {

struct HarnessOptions {
  std::uint64_t packing_budget = 20'000'000;
  std::uint64_t path_budget = 200'000'000;
  // Exact packing is attempted when either limit is met.
  std::size_t exact_vertex_limit = 40;
  std::size_t exact_cycle_limit = 5000;
};

bool exact_packing_feasible(const Digraph& d, const HarnessOptions& options);

// Layered family instance: girth, minimum out-degree and the packing bound
// k - t, judged against f(k, g) = ceil(gk/(g-1)). Even g uses the c-shifted
// construction; odd g builds both the chorded digraph and its chordless
// variant and chains their packings.
VerificationReport verify_theorem2_instance(std::int64_t g, std::int64_t k,
                                            std::int64_t t, std::int64_t c,
                                            const HarnessOptions& options = {});

// Girth-4 bipartite tournament with out-degree 2k - 2 and fewer than k
// disjoint cycles. Requires k >= 2.
VerificationReport verify_corollary2_instance(
    std::int64_t k, const HarnessOptions& options = {});

// Longest path in the even layered digraph against h(g-1) and 2n-1, reported
// as separate claims.
VerificationReport verify_conjecture3_instance(
    std::int64_t g, std::int64_t k, const HarnessOptions& options = {});

// Minimum out-degree 2k-1 against k disjoint cycles.
VerificationReport verify_bt(const Digraph& d, std::int64_t k,
                             const std::string& instance_id,
                             const HarnessOptions& options = {});

struct SearchSummary {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t consistent = 0;
  std::int64_t inconclusive = 0;
  std::int64_t candidates = 0;
  std::int64_t passed_filter = 0;  // trials passing every probe condition
  std::vector<std::string> candidate_files;
};

// Seeded sweep over gen_random_min_outdegree(m, 2k-1, derive_seed(seed, i)):
// counterexample_filter, then verify_bt. Refutation candidates are written to
// `out_dir` (edge list plus report) when given.
SearchSummary random_search(std::int64_t k, std::int64_t m,
                            std::int64_t trials, std::uint64_t seed,
                            const std::optional<std::filesystem::path>& out_dir,
                            const HarnessOptions& options = {});

nlohmann::json search_json(const SearchSummary& s);

}  // namespace cyclepack

#endif  // CYCLEPACK_HARNESS_HPP_
