#include "trizero/lincode.hpp"

#include <random>

#include "doctest.h"
#include "trizero/construct.hpp"
#include "trizero/gf2m.hpp"

using namespace trizero;

namespace {

BinaryCode full_space(int n) {
  std::vector<BitWord> rows;
  for (int i = 0; i < n; ++i) {
    BitWord r(limbs_for(n), 0);
    set_bit(r, i, true);
    rows.push_back(r);
  }
  return code_from_spanning_rows(n, rows);
}

BinaryCode random_code(int n, int k, std::mt19937& rng) {
  std::vector<BitWord> rows;
  while (true) {
    rows.clear();
    for (int i = 0; i < k; ++i) {
      BitWord r(limbs_for(n), 0);
      for (int j = 0; j < n; ++j) set_bit(r, j, rng() & 1);
      rows.push_back(r);
    }
    if (rank_of(rows, n) == k) break;
  }
  BinaryCode c;
  c.n = n;
  c.rows = rows;
  return c;
}

}  // namespace

TEST_CASE("weight distribution of trivial codes") {
  BinaryCode zero;
  zero.n = 6;
  WeightDistribution wd = enumerate_weight_distribution(zero);
  CHECK(wd.counts == std::map<int, BigInt>{{0, 1}});

  WeightDistribution full = enumerate_weight_distribution(full_space(10));
  for (int i = 0; i <= 10; ++i) CHECK(full.counts[i] == binomial(10, i));
  CHECK(full.total() == 1024);
}

TEST_CASE("enumeration guard") {
  std::mt19937 rng(7);
  BinaryCode c = random_code(40, 30, rng);
  CHECK_THROWS(enumerate_weight_distribution(c));
  CHECK_NOTHROW(enumerate_weight_distribution(c, 30));
}

TEST_CASE("dual: involution and orthogonality") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    BinaryCode c = random_code(20, 8, rng);
    BinaryCode d = dual(c);
    CHECK(d.dim() == 12);
    for (const BitWord& a : c.rows)
      for (const BitWord& b : d.rows) {
        int parity = 0;
        for (size_t l = 0; l < a.size(); ++l)
          parity ^= popcount({a[l] & b[l]}) & 1;
        CHECK(parity == 0);
      }
    CHECK(same_row_space(dual(d), c));
  }
  BinaryCode f = full_space(5);
  CHECK(dual(f).dim() == 0);
}

TEST_CASE("augment and extend basics") {
  BinaryCode zero;
  zero.n = 4;
  AugmentResult rep = augment(zero);
  CHECK(!rep.already_contained);
  WeightDistribution wd = enumerate_weight_distribution(rep.code);
  CHECK(wd.counts == std::map<int, BigInt>{{0, 1}, {4, 1}});
  // augmenting again is a no-op with the flag set
  AugmentResult again = augment(rep.code);
  CHECK(again.already_contained);
  CHECK(again.code.dim() == rep.code.dim());

  BinaryCode ext = extend(rep.code);
  CHECK(ext.n == 5);
  for (const auto& [w, c] : enumerate_weight_distribution(ext).counts)
    CHECK(w % 2 == 0);
}

TEST_CASE("shorten and puncture: identities on random codes") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    BinaryCode c = random_code(16, 7, rng);
    CHECK(same_row_space(shorten(c, {}), c));
    CHECK(same_row_space(puncture(c, {}), c));
    std::vector<int> t = {1, 5, 11};
    // dual-shorten duality: (C_T)^perp = (C^perp)^T
    BinaryCode lhs = dual(shorten(c, t));
    BinaryCode rhs = puncture(dual(c), t);
    CHECK(same_row_space(lhs, rhs));
    BinaryCode lhs2 = dual(puncture(c, t));
    BinaryCode rhs2 = shorten(dual(c), t);
    CHECK(same_row_space(lhs2, rhs2));
  }
}

TEST_CASE("m=5 extended augmented enumerator and its relatives") {
  Field f = Field::with_default_modulus(5);
  BinaryCode code = build_extended_augmented(f, 1);
  WeightDistribution wd = enumerate_weight_distribution(code);
  std::map<int, BigInt> expect = {{0, 1},     {8, 620},   {12, 13888},
                                  {16, 36518}, {20, 13888}, {24, 620},
                                  {32, 1}};
  CHECK(wd.counts == expect);

  BinaryCode d = dual(code);
  CHECK(d.n == 32);
  CHECK(d.dim() == 16);
  CHECK(enumerate_weight_distribution(d).counts == expect);

  // weight-w codeword extraction agrees with the distribution
  CHECK(codewords_of_weight(code, 8).size() == 620);

  // shorten on one position: [30, 14] with the published enumerator
  // (positions label [0, w^0, ...]; drop the coordinate of w^0)
  BinaryCode st = shorten(build_ce(f, 1), {0});
  CHECK(st.n == 30);
  CHECK(st.dim() == 14);
  WeightDistribution swd = enumerate_weight_distribution(st);
  std::map<int, BigInt> sexpect = {{0, 1},      {8, 345},  {12, 5320},
                                   {16, 8835},  {20, 1848}, {24, 35}};
  CHECK(swd.counts == sexpect);
}

TEST_CASE("MacWilliams matches direct dual enumeration (m=5)") {
  Field f = Field::with_default_modulus(5);
  BinaryCode code = build_extended_augmented(f, 2);
  WeightDistribution primal = enumerate_weight_distribution(code);
  WeightDistribution viaMW = macwilliams_dual_distribution(primal, code.dim());
  WeightDistribution direct = enumerate_weight_distribution(dual(code));
  CHECK(viaMW.counts == direct.counts);
  // the m=5 code is formally self-dual in distribution
  CHECK(viaMW.counts == primal.counts);

  WeightDistribution full = enumerate_weight_distribution(full_space(8));
  WeightDistribution z = macwilliams_dual_distribution(full, 8);
  CHECK(z.counts == std::map<int, BigInt>{{0, 1}});
}

TEST_CASE("MacWilliams on random codes") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 5; ++trial) {
    BinaryCode c = random_code(18, 9, rng);
    WeightDistribution wd = enumerate_weight_distribution(c);
    CHECK(macwilliams_dual_distribution(wd, 9).counts ==
          enumerate_weight_distribution(dual(c)).counts);
  }
}

TEST_CASE("Pless power moments") {
  // t = 0 reduces to sum A_i = 2^k
  Field f = Field::with_default_modulus(5);
  BinaryCode code = build_extended_augmented(f, 1);
  WeightDistribution wd = enumerate_weight_distribution(code);
  WeightDistribution dwd = enumerate_weight_distribution(dual(code));
  std::vector<BigInt> prefix(9, 0);
  for (int i = 0; i <= 8; ++i)
    if (auto it = dwd.counts.find(i); it != dwd.counts.end())
      prefix[i] = it->second;
  for (int t = 0; t <= 8; ++t)
    CHECK(pless_moment_check(wd, prefix, code.dim(), code.n, t));
  // and the reverse direction
  std::vector<BigInt> pprefix(9, 0);
  for (int i = 0; i <= 8; ++i)
    if (auto it = wd.counts.find(i); it != wd.counts.end())
      pprefix[i] = it->second;
  for (int t = 0; t <= 8; ++t)
    CHECK(pless_moment_check(dwd, pprefix, 32 - code.dim(), code.n, t));
  // a corrupted prefix must fail some moment
  prefix[4] += 1;
  bool all = true;
  for (int t = 0; t <= 8; ++t)
    all = all && pless_moment_check(wd, prefix, code.dim(), code.n, t);
  CHECK(!all);
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(8, 3) == 966);
  CHECK(stirling2(5, 0) == 0);
}

TEST_CASE("weight distribution JSON uses decimal-string counts") {
  WeightDistribution wd;
  wd.n = 4;
  wd.k = 1;
  wd.counts[0] = 1;
  wd.counts[4] = 1;
  CHECK(wd.to_json() ==
        "{\"n\": 4, \"k\": 1, \"counts\": {\"0\": \"1\", \"4\": \"1\"}}");
}
