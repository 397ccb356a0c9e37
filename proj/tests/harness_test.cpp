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

#include <gtest/gtest.h>

#include "cyclepack/generators.hpp"
#include "cyclepack/harness.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/report.hpp"

namespace cyclepack {
namespace {

using nlohmann::json;

const Claim& claim(const VerificationReport& r, const std::string& id) {
  const Claim* c = r.find_claim(id);
  if (c == nullptr) throw std::runtime_error("missing claim " + id);
  return *c;
}

// A refuted verdict must rest on exact, certified or structural evidence.
void expect_refutations_grounded(const VerificationReport& r) {
  for (const Claim& c : r.claims) {
    if (c.verdict != Verdict::kRefuted) continue;
    EXPECT_TRUE(c.basis == kBasisExact || c.basis == kBasisCertified ||
                c.basis == kBasisStructural || c.basis == kBasisWitness)
        << c.id << " " << c.basis;
    EXPECT_TRUE(c.measured.has_value()) << c.id;
  }
}

void expect_round_trip(const VerificationReport& r) {
  const std::string text = dump(json(r));
  const auto back = json::parse(text).get<VerificationReport>();
  EXPECT_EQ(back, r);
  EXPECT_EQ(dump(json(back)), text);
}

TEST(LayeredFamilyReport, EvenGirthFourKThree) {
  const auto r = verify_theorem2_instance(4, 3, 0, 0);
  EXPECT_EQ(r.measured.girth, 4u);
  EXPECT_EQ(r.measured.min_outdegree, 4u);
  EXPECT_EQ(r.measured.packing_lower, 2u);
  EXPECT_EQ(r.measured.packing_upper, 2u);
  EXPECT_EQ(claim(r, "girth_equals_g").verdict, Verdict::kConsistent);
  EXPECT_EQ(claim(r, "theorem2_at_most_k_minus_t").verdict, Verdict::kConsistent);
  const Claim& c2 = claim(r, "conjecture2_f_k_g");
  EXPECT_EQ(c2.verdict, Verdict::kRefuted);
  EXPECT_EQ(c2.basis, kBasisExact);
  EXPECT_EQ(c2.measured, 2);
  ASSERT_EQ(r.witnesses.at("packing").size(), 2u);
  expect_refutations_grounded(r);
  expect_round_trip(r);
}

TEST(LayeredFamilyReport, ShiftedInstanceUsesCertifiedBound) {
  const auto r = verify_theorem2_instance(4, 5, 0, 1);
  EXPECT_EQ(r.measured.min_outdegree, 8u);
  const Claim& c1 = claim(r, "corollary1_at_most_k_minus_1");
  EXPECT_EQ(c1.verdict, Verdict::kConsistent);
  EXPECT_EQ(c1.measured, 4);
  EXPECT_EQ(c1.basis, kBasisCertified);
  EXPECT_EQ(claim(r, "conjecture2_f_k_g").verdict, Verdict::kRefuted);
  expect_refutations_grounded(r);
}

TEST(LayeredFamilyReport, GirthMatchesTargetAcrossSweep) {
  for (std::int64_t g : {3, 4, 5, 6}) {
    for (std::int64_t k : {1, 2, 3}) {
      const auto r = verify_theorem2_instance(g, k, 0, 0);
      EXPECT_EQ(r.measured.girth, static_cast<std::size_t>(g)) << g << "," << k;
      EXPECT_EQ(claim(r, "girth_equals_g").verdict, Verdict::kConsistent);
      expect_refutations_grounded(r);
      expect_round_trip(r);
    }
  }
}

TEST(LayeredFamilyReport, OddGirthThreeKTwo) {
  const auto r = verify_theorem2_instance(3, 2, 0, 0);
  EXPECT_EQ(r.measured.girth, 3u);
  EXPECT_EQ(claim(r, "girth_without_chord_equals_g_plus_1").measured, 4);
  const Claim& delta = claim(r, "arc_removal_delta_at_most_1");
  EXPECT_EQ(delta.verdict, Verdict::kConsistent);
  ASSERT_TRUE(delta.measured.has_value());
  EXPECT_TRUE(*delta.measured == 0 || *delta.measured == 1);
}

TEST(LayeredFamilyReport, OddGirthThreeKEightChainsTheBound) {
  const auto r = verify_theorem2_instance(3, 8, 0, 0);
  EXPECT_EQ(r.measured.vertex_count, 13u * 13u);
  const Claim& plain = claim(r, "theorem2_without_chord_at_most_k_minus_t_minus_1");
  EXPECT_EQ(plain.verdict, Verdict::kConsistent);
  EXPECT_EQ(plain.measured, 6);
  EXPECT_EQ(claim(r, "theorem2_at_most_k_minus_t").measured, 7);
  EXPECT_EQ(claim(r, "conjecture2_f_k_g").verdict, Verdict::kRefuted);
  expect_refutations_grounded(r);
}

TEST(LayeredFamilyReport, RejectsShiftForOddGirth) {
  EXPECT_THROW(verify_theorem2_instance(3, 2, 0, 1), std::invalid_argument);
}

TEST(BipartiteTournamentReport, KTwoAndThree) {
  const auto two = verify_corollary2_instance(2);
  EXPECT_EQ(two.measured.vertex_count, 9u);
  EXPECT_EQ(two.measured.girth, 4u);
  EXPECT_EQ(two.measured.min_outdegree, 2u);
  EXPECT_EQ(two.measured.packing_lower, 1u);
  EXPECT_EQ(two.measured.packing_optimal, true);
  EXPECT_EQ(claim(two, "corollary2_no_k_disjoint_cycles").verdict,
            Verdict::kConsistent);

  const auto three = verify_corollary2_instance(3);
  EXPECT_EQ(three.measured.min_outdegree, 4u);
  ASSERT_TRUE(three.measured.packing_upper.has_value());
  EXPECT_LE(*three.measured.packing_upper, 2u);
  EXPECT_EQ(claim(three, "bermond_thomassen_threshold_sharp").verdict,
            Verdict::kConsistent);
  expect_round_trip(three);
  EXPECT_THROW(verify_corollary2_instance(1), std::invalid_argument);
}

TEST(LongPathReport, GirthFourKTwo) {
  const auto r = verify_conjecture3_instance(4, 2);
  EXPECT_EQ(r.measured.longest_path, 8u);
  EXPECT_EQ(r.measured.longest_path_exact, true);
  const Claim& c3 = claim(r, "conjecture3_path_length");
  EXPECT_EQ(c3.predicted, 9);
  EXPECT_EQ(c3.verdict, Verdict::kRefuted);
  const Claim& bound = claim(r, "longest_path_at_most_2n_minus_1");
  EXPECT_EQ(bound.predicted, 7);
  EXPECT_EQ(bound.verdict, Verdict::kRefuted);
  expect_refutations_grounded(r);
  expect_round_trip(r);
}

TEST(LongPathReport, GirthFourKOneIsConsistent) {
  const auto r = verify_conjecture3_instance(4, 1);
  EXPECT_EQ(r.measured.vertex_count, 9u);
  EXPECT_EQ(r.measured.longest_path, 6u);
  EXPECT_EQ(claim(r, "conjecture3_path_length").verdict, Verdict::kConsistent);
}

TEST(LongPathReport, GirthSixRefutedStructurally) {
  HarnessOptions opt;
  opt.path_budget = 1000;
  const auto r = verify_conjecture3_instance(6, 2, opt);
  const Claim& c3 = claim(r, "conjecture3_path_length");
  EXPECT_EQ(c3.predicted, 15);
  EXPECT_EQ(c3.verdict, Verdict::kRefuted);
  ASSERT_TRUE(c3.measured.has_value());
  EXPECT_LE(*c3.measured, 14);
  expect_refutations_grounded(r);
}

TEST(BermondThomassen, CompleteSymmetric) {
  const auto six = verify_bt(gen_complete_symmetric(6), 3, "K6");
  EXPECT_EQ(claim(six, "conjecture1_f_k").verdict, Verdict::kConsistent);
  ASSERT_EQ(six.witnesses.at("packing").size(), 3u);
  for (const auto& c : six.witnesses.at("packing")) EXPECT_EQ(c.size(), 2u);

  const auto five = verify_bt(gen_complete_symmetric(5), 3, "K5");
  const Claim& c = claim(five, "conjecture1_f_k");
  EXPECT_EQ(c.verdict, Verdict::kNotApplicable);
  EXPECT_EQ(c.measured, 2);
  EXPECT_NE(c.note.find("f(k) >= 2k-1"), std::string::npos);
}

TEST(BermondThomassen, RandomFourteenVertices) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = verify_bt(gen_random_min_outdegree(14, 5, seed), 3, "r");
    EXPECT_EQ(claim(r, "conjecture1_f_k").verdict, Verdict::kConsistent);
  }
}

TEST(Search, Sweeps) {
  const auto a = random_search(3, 12, 50, 7, std::nullopt);
  EXPECT_EQ(a.consistent, 50);
  EXPECT_EQ(a.candidates, 0);
  const auto b = random_search(1, 5, 10, 1, std::nullopt);
  EXPECT_EQ(b.consistent, 10);
  const auto c = random_search(2, 8, 50, 3, std::nullopt);
  EXPECT_EQ(c.consistent, 50);
  EXPECT_EQ(search_json(a), search_json(random_search(3, 12, 50, 7, std::nullopt)));
}

TEST(Report, VerdictStrings) {
  for (Verdict v : {Verdict::kConsistent, Verdict::kRefuted, Verdict::kInconclusive,
                    Verdict::kRefutationCandidate, Verdict::kNotApplicable}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
  EXPECT_THROW(verdict_from_string("maybe"), std::invalid_argument);
}

TEST(Report, RejectsUnknownSchema) {
  json j = verify_corollary2_instance(2);
  j["schema"] = 99;
  EXPECT_THROW(j.get<VerificationReport>(), std::invalid_argument);
}

TEST(Report, ExactPackingGate) {
  HarnessOptions opt;
  EXPECT_TRUE(exact_packing_feasible(gen_even_girth(4, 3), opt));
  EXPECT_FALSE(exact_packing_feasible(gen_even_girth(4, 5, 1), opt));
}

}  // namespace
}  // namespace cyclepack
