#include "trizero/construct.hpp"

#include "doctest.h"
#include "trizero/counts.hpp"

using namespace trizero;

TEST_CASE("family parameter validity") {
  CHECK(FamilyParams::valid(5, 1));
  CHECK(FamilyParams::valid(5, 2));
  CHECK(FamilyParams::valid(5, 3));   // gcd = 1, m odd
  CHECK(!FamilyParams::valid(6, 2));  // e = m/3
  CHECK(!FamilyParams::valid(6, 4));  // e = 2m/3
  CHECK(!FamilyParams::valid(6, 3));  // m/gcd = 2 even
  CHECK(!FamilyParams::valid(5, 0));
  CHECK(!FamilyParams::valid(5, 5));
  CHECK(FamilyParams::valid(10, 2));
  CHECK(FamilyParams(10, 2).d == 2);
  CHECK_THROWS_AS(FamilyParams(6, 2), std::invalid_argument);
}

TEST_CASE("C^(e) construction basics") {
  Field f = Field::with_default_modulus(5);
  BinaryCode c = build_ce(f, 1);
  CHECK(c.n == 31);
  CHECK(c.dim() == 15);
  CHECK(c.labels.size() == 31);
  CHECK(c.labels[0] == 1);
  CHECK(c.labels[1] == f.generator());
  CHECK_THROWS(build_ce(Field::with_default_modulus(6), 2));
}

TEST_CASE("Table 1 matches enumeration for m=5") {
  Field f = Field::with_default_modulus(5);
  for (unsigned e : {1u, 2u}) {
    WeightDistribution pred = predicted_wd_base(5, e);
    WeightDistribution got = enumerate_weight_distribution(build_ce(f, e));
    CHECK(pred.counts == got.counts);
  }
}

TEST_CASE("Table 2 matches enumeration for m=5 and known values") {
  Field f = Field::with_default_modulus(5);
  WeightDistribution pred = predicted_wd_extended(5, 1);
  WeightDistribution got =
      enumerate_weight_distribution(build_extended_augmented(f, 1));
  CHECK(pred.counts == got.counts);
  CHECK(pred.counts.at(8) == 620);
  CHECK(pred.counts.at(12) == 13888);
  CHECK(pred.counts.at(16) == 36518);
}

TEST_CASE("Table 2 for d=2: the m=10 published values") {
  WeightDistribution pred = predicted_wd_extended(10, 2);
  CHECK(pred.counts.at(384) == 278256);
  CHECK(pred.counts.at(480) == 263983104);
  CHECK(pred.counts.at(512) == BigInt(1618960926));
  CHECK(pred.counts.at(544) == 263983104);
  CHECK(pred.counts.at(640) == 278256);
  CHECK(pred.total() == BigInt(1) << 31);
  // symmetry A_w = A_(2^m - w)
  for (const auto& [w, c] : pred.counts) CHECK(pred.counts.at(1024 - w) == c);
}

TEST_CASE("dual low-weight closed forms") {
  DualLowWeights r5 = dual_low_weight_report(5, 1);
  CHECK(r5.values.at(4) == 0);
  CHECK(r5.values.at(6) == 0);
  CHECK(r5.values.at(8) == 620);
  CHECK(r5.discrepancies.empty());
  DualLowWeights r7 = dual_low_weight_report(7, 1);
  CHECK(r7.values.at(8) == 774192);
  CHECK(r7.discrepancies.empty());
  // d = 2: A_4 and A_8 closed forms agree with the dual transform; the
  // published A_6 closed form does not (it is short by a factor 2^m - 1)
  // and the mismatch must be reported, not silently patched.
  DualLowWeights r10 = dual_low_weight_report(10, 2);
  CHECK(r10.values.at(4) == 87296);
  CHECK(r10.values.at(6) == 59361280);
  CHECK(r10.values.at(8) == BigInt("103700446080"));
  CHECK(r10.closed_form.at(4) == "87296");
  CHECK(r10.closed_form.at(6) == "174080/3");  // 2611200/45 reduced
  REQUIRE(r10.discrepancies.size() == 1);
  CHECK(r10.discrepancies[0].find("A_6") != std::string::npos);
  // the convenience accessor returns the arbiter values
  CHECK(predicted_dual_low_weights(10, 2).at(6) == 59361280);
}

TEST_CASE("extended augmented equals extend(augment(C^(e))), m=5") {
  Field f = Field::with_default_modulus(5);
  for (unsigned e : {1u, 2u}) {
    BinaryCode direct = build_extended_augmented(f, e);
    BinaryCode composed = extend(augment(build_ce(f, e)).code);
    // composed has the parity coordinate last; direct has x=0 first
    std::vector<int> perm(direct.n);
    perm[0] = composed.n - 1;
    for (int i = 1; i < direct.n; ++i) perm[i] = i - 1;
    BinaryCode aligned;
    aligned.n = direct.n;
    for (const BitWord& row : composed.rows) {
      BitWord r(limbs_for(direct.n), 0);
      for (int i = 0; i < direct.n; ++i) set_bit(r, i, get_bit(row, perm[i]));
      aligned.rows.push_back(std::move(r));
    }
    CHECK(same_row_space(direct, aligned));
  }
}

TEST_CASE("shortened tables: published m=5 and m=7 enumerators") {
  // t=1
  WeightDistribution t1 = predicted_wd_shortened(5, 1);
  CHECK(t1.counts ==
        std::map<int, BigInt>{{0, 1}, {8, 345}, {12, 5320}, {16, 8835},
                              {20, 1848}, {24, 35}});
  // t=2
  WeightDistribution t2 = predicted_wd_shortened(5, 2);
  CHECK(t2.counts ==
        std::map<int, BigInt>{{0, 1}, {8, 253}, {12, 3192}, {16, 4123},
                              {20, 616}, {24, 7}});
  // t=3 with N=1 and N=7
  CHECK(predicted_wd_shortened(5, 3, 1).counts ==
        std::map<int, BigInt>{{0, 1}, {8, 183}, {12, 1872}, {16, 1847},
                              {20, 192}, {24, 1}});
  CHECK(predicted_wd_shortened(5, 3, 7).counts ==
        std::map<int, BigInt>{{0, 1}, {8, 189}, {12, 1848}, {16, 1883},
                              {20, 168}, {24, 7}});
  // t=3, m=7, N=31
  CHECK(predicted_wd_shortened(7, 3, 31).counts ==
        std::map<int, BigInt>{{0, 1}, {48, 6430}, {56, 84240}, {64, 140783},
                              {72, 29808}, {80, 882}});
  // t=4 variants
  CHECK(predicted_wd_shortened(5, 4, 5, 0).counts ==
        std::map<int, BigInt>{{0, 1}, {8, 130}, {12, 1072}, {16, 789},
                              {20, 56}});
  CHECK(predicted_wd_shortened(5, 4, 6, 1).counts ==
        std::map<int, BigInt>{{0, 1}, {8, 135}, {12, 1056}, {16, 807},
                              {20, 48}, {24, 1}});
  CHECK(predicted_wd_shortened(7, 4, 27, 0).counts ==
        std::map<int, BigInt>{{0, 1}, {48, 3878}, {56, 46416}, {64, 67839},
                              {72, 12656}, {80, 282}});
}

TEST_CASE("the tr=1 corollary table coincides with the nbar=0 table") {
  // realizable (m, N) pairs only: unrealizable N values produce negative or
  // fractional multiplicities, which the evaluator rejects by design
  std::vector<std::pair<unsigned, long long>> cases = {
      {5, 5}, {5, 7}, {5, 9}, {7, 27}, {7, 31}};
  for (auto [m, n] : cases)
    CHECK(predicted_wd_shortened(m, 4, n, 0).counts ==
          predicted_wd_shortened(m, 4, n, -1, true).counts);
}

TEST_CASE("shortened enumeration for t=1,2 is independent of T, m=5") {
  Field f = Field::with_default_modulus(5);
  BinaryCode c = build_ce(f, 1);
  WeightDistribution t1 = predicted_wd_shortened(5, 1);
  for (int p : {0, 7, 30})
    CHECK(enumerate_weight_distribution(shorten(c, {p})).counts == t1.counts);
  WeightDistribution t2 = predicted_wd_shortened(5, 2);
  for (auto pp : std::vector<std::vector<int>>{{0, 1}, {3, 17}, {11, 29}})
    CHECK(enumerate_weight_distribution(shorten(c, pp)).counts == t2.counts);
}

TEST_CASE("m even with t >= 2 shortening is rejected") {
  CHECK_THROWS_AS(predicted_wd_shortened(10, 2), std::invalid_argument);
  CHECK_THROWS_AS(predicted_wd_shortened(6, 3, 1), std::invalid_argument);
}

TEST_CASE("invalid shortened-table arguments") {
  CHECK_THROWS(predicted_wd_shortened(5, 0));
  CHECK_THROWS(predicted_wd_shortened(5, 5));
  CHECK_THROWS(predicted_wd_shortened(5, 3));        // N missing
  CHECK_THROWS(predicted_wd_shortened(5, 4, 5));     // nbar missing
}
