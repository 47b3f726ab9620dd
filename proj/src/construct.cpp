#include "trizero/construct.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

namespace trizero {

namespace {

using Rat = boost::multiprecision::cpp_rational;

// 2^e for possibly negative e.
Rat pow2(int e) {
  if (e >= 0) return Rat(BigInt(1) << e);
  return Rat(1, BigInt(1) << (-e));
}

BigInt to_count(const Rat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::runtime_error(std::string("construct: non-integral ") + what);
  BigInt v = boost::multiprecision::numerator(r);
  if (v < 0)
    throw std::runtime_error(std::string("construct: negative ") + what);
  return v;
}

void check_total(const WeightDistribution& wd, const BigInt& expected,
                 const char* what) {
  if (wd.total() != expected)
    throw std::runtime_error(std::string("construct: wrong total for ") +
                             what);
}

}  // namespace

bool FamilyParams::valid(unsigned m, unsigned e) {
  if (e < 1 || e > m - 1) return false;
  if (3 * e == m || 3 * e == 2 * m) return false;
  unsigned d = std::gcd(m, e);
  return (m / d) % 2 == 1;
}

FamilyParams::FamilyParams(unsigned m, unsigned e)
    : m(m), e(e), d(std::gcd(m, e)) {
  if (!valid(m, e))
    throw std::invalid_argument("construct: invalid family parameters (m=" +
                                std::to_string(m) + ", e=" +
                                std::to_string(e) + ")");
}

BinaryCode build_ce(const Field& field, unsigned e) {
  const unsigned m = field.degree();
  FamilyParams params(m, e);
  const uint32_t q = field.size();
  const int n = static_cast<int>(q - 1);
  const long long e1 = (1ll << e) + 1;
  const long long e2 = (1ll << (2 * e)) + 1;
  // Trace-basis rows: codeword bit at position x is tr(beta * x^j) for
  // basis elements beta = 2^i and j in {2^(2e)+1, 2^e+1, 1}.
  std::vector<BitWord> rows;
  std::vector<uint32_t> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = field.gen_pow(i);
  for (long long expo : {e2, e1, 1ll}) {
    std::vector<uint32_t> powers(n);
    for (int i = 0; i < n; ++i) powers[i] = field.pow(labels[i], expo);
    for (unsigned b = 0; b < m; ++b) {
      BitWord row(limbs_for(n), 0);
      const uint32_t beta = 1u << b;
      for (int i = 0; i < n; ++i)
        set_bit(row, i, field.trace(field.mul(beta, powers[i])));
      rows.push_back(std::move(row));
    }
  }
  if (rank_of(rows, n) != static_cast<int>(3 * m))
    throw std::runtime_error("construct: C^(e) generator rank is not 3m");
  BinaryCode c;
  c.n = n;
  c.rows = std::move(rows);
  c.labels = std::move(labels);
  return c;
}

BinaryCode build_extended_augmented(const Field& field, unsigned e) {
  const unsigned m = field.degree();
  FamilyParams params(m, e);
  const uint32_t q = field.size();
  const int n = static_cast<int>(q);
  const long long e1 = (1ll << e) + 1;
  const long long e2 = (1ll << (2 * e)) + 1;
  std::vector<uint32_t> labels(n);
  labels[0] = 0;
  for (int i = 1; i < n; ++i) labels[i] = field.gen_pow(i - 1);
  std::vector<BitWord> rows;
  for (long long expo : {e2, e1, 1ll}) {
    for (unsigned b = 0; b < m; ++b) {
      BitWord row(limbs_for(n), 0);
      const uint32_t beta = 1u << b;
      for (int i = 0; i < n; ++i)
        set_bit(row, i, field.trace(field.mul(beta, field.pow(labels[i], expo))));
      rows.push_back(std::move(row));
    }
  }
  BitWord ones(limbs_for(n), 0);
  for (int i = 0; i < n; ++i) set_bit(ones, i, true);
  rows.push_back(std::move(ones));
  if (rank_of(rows, n) != static_cast<int>(3 * m + 1))
    throw std::runtime_error(
        "construct: extended augmented generator rank is not 3m+1");
  BinaryCode c;
  c.n = n;
  c.rows = std::move(rows);
  c.labels = std::move(labels);
  return c;
}

WeightDistribution predicted_wd_base(unsigned m, unsigned e) {
  FamilyParams p(m, e);
  const int d = static_cast<int>(p.d);
  const int mi = static_cast<int>(m);
  WeightDistribution wd;
  wd.n = (1 << mi) - 1;
  wd.k = 3 * mi;
  Rat q2d1 = pow2(2 * d) - 1;
  auto put = [&wd](int w, const Rat& mult) {
    wd.counts[w] = to_count(mult, "Table 1 multiplicity");
  };
  wd.counts[0] = 1;
  int w_lo3 = (1 << (mi - 1)) - (1 << ((mi + 3 * d - 2) / 2));
  int w_lo1 = (1 << (mi - 1)) - (1 << ((mi + d - 2) / 2));
  int w_mid = 1 << (mi - 1);
  int w_hi1 = (1 << (mi - 1)) + (1 << ((mi + d - 2) / 2));
  int w_hi3 = (1 << (mi - 1)) + (1 << ((mi + 3 * d - 2) / 2));
  Rat qm1 = pow2(mi) - 1;
  Rat f3p = pow2(mi - 3 * d - 1) + pow2((mi - 3 * d - 2) / 2);
  Rat f3m = pow2(mi - 3 * d - 1) - pow2((mi - 3 * d - 2) / 2);
  Rat g3 = (pow2(mi - d) - 1) * qm1 / q2d1;
  put(w_lo3, f3p * g3);
  put(w_hi3, f3m * g3);
  Rat f1p = pow2(mi - d - 1) + pow2((mi - d - 2) / 2);
  Rat f1m = pow2(mi - d - 1) - pow2((mi - d - 2) / 2);
  Rat g1 = qm1 *
           (pow2(mi + 2 * d) - pow2(mi) - pow2(mi - d) + pow2(2 * d)) / q2d1;
  put(w_lo1, f1p * g1);
  put(w_hi1, f1m * g1);
  put(w_mid, qm1 * (pow2(2 * mi) - pow2(2 * mi - d) + pow2(2 * mi - 4 * d) +
                    pow2(mi) - pow2(mi - d) - pow2(mi - 3 * d) + 1));
  check_total(wd, BigInt(1) << (3 * mi), "Table 1");
  return wd;
}

WeightDistribution predicted_wd_extended(unsigned m, unsigned e) {
  FamilyParams p(m, e);
  const int d = static_cast<int>(p.d);
  const int mi = static_cast<int>(m);
  WeightDistribution wd;
  wd.n = 1 << mi;
  wd.k = 3 * mi + 1;
  auto put = [&wd](int w, const Rat& mult) {
    wd.counts[w] = to_count(mult, "Table 2 multiplicity");
  };
  wd.counts[0] = 1;
  wd.counts[1 << mi] = 1;
  Rat q2d1 = pow2(2 * d) - 1;
  Rat qm1 = pow2(mi) - 1;
  int w_lo3 = (1 << (mi - 1)) - (1 << ((mi + 3 * d - 2) / 2));
  int w_lo1 = (1 << (mi - 1)) - (1 << ((mi + d - 2) / 2));
  int w_mid = 1 << (mi - 1);
  int w_hi1 = (1 << (mi - 1)) + (1 << ((mi + d - 2) / 2));
  int w_hi3 = (1 << (mi - 1)) + (1 << ((mi + 3 * d - 2) / 2));
  Rat m3 = pow2(mi - 3 * d) * (pow2(mi - d) - 1) * qm1 / q2d1;
  Rat m1 = pow2(mi - d) * qm1 *
           (pow2(mi + 2 * d) - pow2(mi) - pow2(mi - d) + pow2(2 * d)) / q2d1;
  put(w_lo3, m3);
  put(w_hi3, m3);
  put(w_lo1, m1);
  put(w_hi1, m1);
  put(w_mid, 2 * qm1 * (pow2(2 * mi) - pow2(2 * mi - d) +
                        pow2(2 * mi - 4 * d) + pow2(mi) - pow2(mi - d) -
                        pow2(mi - 3 * d) + 1));
  check_total(wd, BigInt(1) << (3 * mi + 1), "Table 2");
  return wd;
}

DualLowWeights dual_low_weight_report(unsigned m, unsigned d) {
  const int mi = static_cast<int>(m);
  const int di = static_cast<int>(d);
  // Arbiter: A_j of the dual from the predicted primal distribution via the
  // exact dual transform. e = d is always a valid representative exponent
  // (any achievable d divides m with m/d odd, and d itself is never m/3 or
  // 2m/3 for such d).
  WeightDistribution primal = predicted_wd_extended(m, d);
  DualLowWeights out;
  for (int j : {4, 6, 8})
    out.values[j] = macwilliams_dual_coefficient(primal, 3 * mi + 1, j);

  // The published closed forms, evaluated verbatim as exact rationals.
  std::map<int, Rat> cf;
  cf[4] = Rat(1, 24) * (pow2(mi) - 1) * (pow2(di + mi) - pow2(1 + mi));
  cf[6] = Rat(-1, 45) * pow2(mi - 4) * (pow2(di) - 2) *
          (-32 + pow2(2 + di) + pow2(1 + 2 * di) + pow2(3 * di) -
           pow2(mi) * (3 * pow2(di) + pow2(2 * di) - 8));
  cf[8] = Rat(1, 315) * pow2(mi - 7) * (pow2(mi) - 1) *
          (pow2(3 * mi) - 16 * (213 - 77 * pow2(1 + di) + 7 * pow2(4 * di)) +
           pow2(2 * mi) * (-132 + 91 * pow2(1 + di) - 27 * pow2(2 * di) -
                           27 * pow2(3 * di) + pow2(4 * di) + pow2(6 * di)) -
           pow2(mi) * (-1380 + 357 * pow2(2 + di) - 7 * pow2(4 + 3 * di) -
                       7 * pow2(4 + 2 * di) - 7 * pow2(2 + 4 * di) +
                       pow2(5 * di) + pow2(7 * di)));
  for (int j : {4, 6, 8}) {
    out.closed_form[j] = cf[j].str();
    if (cf[j] != Rat(out.values[j]))
      out.discrepancies.push_back(
          "A_" + std::to_string(j) + " closed form evaluates to " +
          cf[j].str() + " but the dual transform gives " +
          out.values[j].str() + " (m=" + std::to_string(m) +
          ", d=" + std::to_string(d) + ")");
  }

  if (d == 1) {
    if (out.values[4] != 0 || out.values[6] != 0 || out.values[8] <= 0)
      throw std::runtime_error("construct: d=1 low-weight dichotomy violated");
    // Cross-check the compact d=1 form of A_8.
    Rat a8c = Rat(1, 315) * pow2(mi - 7) * (pow2(mi) - 1) *
              (-272 + 39 * pow2(2 + mi) - 3 * pow2(2 * mi + 2) + pow2(3 * mi));
    if (to_count(a8c, "A_8 (d=1 form)") != out.values[8])
      throw std::runtime_error("construct: A_8 closed forms disagree");
  } else if (out.values[4] <= 0) {
    throw std::runtime_error("construct: d!=1 requires A_4 > 0");
  }
  return out;
}

std::map<int, BigInt> predicted_dual_low_weights(unsigned m, unsigned d) {
  return dual_low_weight_report(m, d).values;
}

WeightDistribution predicted_wd_shortened(unsigned m, int t, long long N,
                                          long long nbar, bool tr_one) {
  const int mi = static_cast<int>(m);
  if (m % 2 == 0)
    throw std::invalid_argument(
        "construct: shortened-code tables are not available for m even");
  if (t < 1 || t > 4)
    throw std::invalid_argument("construct: t must be in {1,2,3,4}");
  if (t >= 3 && N < 0)
    throw std::invalid_argument("construct: N required for t >= 3");
  if (t == 4 && nbar < 0 && !tr_one)
    throw std::invalid_argument("construct: nbar required for t = 4");
  WeightDistribution wd;
  wd.n = (1 << mi) - 1 - t;
  wd.k = 3 * mi - t;
  const int w1 = (1 << (mi - 1)) - (1 << ((mi + 1) / 2));
  const int w2 = (1 << (mi - 1)) - (1 << ((mi - 1) / 2));
  const int w3 = 1 << (mi - 1);
  const int w4 = (1 << (mi - 1)) + (1 << ((mi - 1) / 2));
  const int w5 = (1 << (mi - 1)) + (1 << ((mi + 1) / 2));
  auto put = [&wd](int w, const Rat& mult) {
    wd.counts[w] = to_count(mult, "shortened-table multiplicity");
  };
  wd.counts[0] = 1;
  const Rat third(1, 3);
  if (t == 1) {
    put(w1, third * pow2((mi - 13) / 2) * (pow2(mi) - 2) *
                (-8 + 3 * pow2((mi + 3) / 2) + pow2(mi + 3) +
                 pow2((3 * mi + 1) / 2)));
    put(w2, third * pow2((mi - 9) / 2) * (8 + 5 * pow2(mi)) *
                (-4 + pow2(mi + 2) + pow2((3 * mi + 1) / 2)));
    put(w3, (pow2(mi) - 2) * (16 + 3 * pow2(mi + 1) + 9 * pow2(2 * mi)) / 32);
    put(w4, third * pow2((mi - 9) / 2) * (8 + 5 * pow2(mi)) *
                (4 - pow2(mi + 2) + pow2((3 * mi + 1) / 2)));
    put(w5, third * pow2((mi - 13) / 2) * (pow2(mi) - 2) *
                (8 + 3 * pow2((mi + 3) / 2) - pow2(mi + 3) +
                 pow2((3 * mi + 1) / 2)));
  } else if (t == 2) {
    put(w1, third * pow2((mi - 15) / 2) *
                (32 + 9 * pow2(3 * (mi + 1) / 2) - pow2(mi + 4) -
                 5 * pow2((mi + 7) / 2) + pow2((1 + 5 * mi) / 2) +
                 3 * pow2(2 * mi + 2)));
    put(w2, third * pow2((mi - 11) / 2) * (8 + 5 * pow2(mi)) *
                (-8 + 3 * pow2(mi + 1) + pow2((mi + 3) / 2) +
                 pow2((1 + 3 * mi) / 2)));
    put(w3, (pow2(mi) - 4) * (16 + 3 * pow2(mi + 1) + 9 * pow2(2 * mi)) / 64);
    put(w4, third * pow2((mi - 11) / 2) * (8 + 5 * pow2(mi)) *
                (8 - 3 * pow2(mi + 1) + pow2((mi + 3) / 2) +
                 pow2((1 + 3 * mi) / 2)));
    put(w5, third * pow2((mi - 15) / 2) *
                (-32 + 9 * pow2(3 * (mi + 1) / 2) + pow2(mi + 4) -
                 5 * pow2((mi + 7) / 2) + pow2((1 + 5 * mi) / 2) -
                 3 * pow2(2 * mi + 2)));
  } else if (t == 3) {
    const Rat n3(N);
    put(w1, third * pow2((mi - 17) / 2) *
                (64 + 19 * pow2(3 * (1 + mi) / 2) + pow2(5 + mi) +
                 pow2((1 + 5 * mi) / 2) + pow2(2 * mi + 4) +
                 pow2((7 + mi) / 2) * (-7 + 3 * n3)));
    put(w2, third * pow2((mi - 13) / 2) *
                (-128 + 17 * pow2(3 * (1 + mi) / 2) - pow2(4 + mi) +
                 5 * pow2(3 + 2 * mi) + 5 * pow2((1 + 5 * mi) / 2) +
                 pow2((7 + mi) / 2) * (1 - 3 * n3)));
    put(w3, -1 + 9 * pow2(3 * mi - 7) - 29 * pow2(2 * mi - 6) +
                pow2(mi - 4) * (1 + 3 * n3));
    put(w4, third * pow2((mi - 13) / 2) *
                (128 + 17 * pow2(3 * (1 + mi) / 2) + pow2(4 + mi) -
                 5 * pow2(3 + 2 * mi) + 5 * pow2((1 + 5 * mi) / 2) +
                 pow2((7 + mi) / 2) * (1 - 3 * n3)));
    put(w5, third * pow2((mi - 17) / 2) *
                (-64 + 19 * pow2(3 * (1 + mi) / 2) - pow2(5 + mi) +
                 pow2((1 + 5 * mi) / 2) - pow2(2 * mi + 4) +
                 pow2((7 + mi) / 2) * (-7 + 3 * n3)));
  } else if (!tr_one) {
    const Rat n4(N), nb(nbar);
    put(w1, third * pow2((mi - 19) / 2) *
                (128 + 31 * pow2(3 * (mi + 1) / 2) + pow2((5 * mi + 1) / 2) +
                 5 * pow2(2 * mi + 2) + pow2(mi + 3) * (17 + 3 * nb) +
                 pow2((mi + 7) / 2) * (15 * nb + 3 * n4 - 1)));
    put(w2, third * pow2((mi - 15) / 2) *
                (-256 + 29 * pow2(3 * (mi + 1) / 2) + 25 * pow2(1 + 2 * mi) +
                 5 * pow2((5 * mi + 1) / 2) - pow2(mi + 2) * (17 + 3 * nb) -
                 pow2((mi + 7) / 2) * (11 + 15 * nb + 3 * n4)));
    put(w3, -1 + 9 * pow2(3 * mi - 8) - 49 * pow2(2 * mi - 7) +
                3 * pow2(mi - 5) * (5 + 5 * nb + n4));
    put(w4, third * pow2((mi - 15) / 2) *
                (256 + 29 * pow2(3 * (mi + 1) / 2) - 25 * pow2(1 + 2 * mi) +
                 5 * pow2((5 * mi + 1) / 2) + pow2(mi + 2) * (17 + 3 * nb) -
                 pow2((mi + 7) / 2) * (11 + 15 * nb + 3 * n4)));
    put(w5, third * pow2((mi - 19) / 2) *
                (-128 + 31 * pow2(3 * (mi + 1) / 2) + pow2((5 * mi + 1) / 2) -
                 5 * pow2(2 * mi + 2) - pow2(mi + 3) * (17 + 3 * nb) +
                 pow2((mi + 7) / 2) * (15 * nb + 3 * n4 - 1)));
  } else {
    // Unique-root branch (trace criterion equals 1, so nbar = 0).
    const Rat n4(N);
    put(w1, third * pow2((mi - 19) / 2) *
                (128 - pow2((mi + 7) / 2) + 17 * pow2(mi + 3) +
                 31 * pow2((3 * mi + 3) / 2) + 5 * pow2(2 + 2 * mi) +
                 pow2((5 * mi + 1) / 2) + 3 * pow2((mi + 7) / 2) * n4));
    put(w2, third * pow2((mi - 15) / 2) *
                (-256 - 11 * pow2((mi + 7) / 2) - 17 * pow2(mi + 2) +
                 29 * pow2((3 * mi + 3) / 2) + 25 * pow2(1 + 2 * mi) +
                 5 * pow2((5 * mi + 1) / 2) - 3 * pow2((mi + 7) / 2) * n4));
    put(w3, -1 + 9 * pow2(3 * mi - 8) + 15 * pow2(mi - 5) -
                49 * pow2(2 * mi - 7) + 3 * pow2(mi - 5) * n4);
    put(w4, third * pow2((mi - 15) / 2) *
                (256 - 11 * pow2((mi + 7) / 2) + 17 * pow2(mi + 2) +
                 29 * pow2((3 * mi + 3) / 2) - 25 * pow2(1 + 2 * mi) +
                 5 * pow2((5 * mi + 1) / 2) - 3 * pow2((mi + 7) / 2) * n4));
    put(w5, third * pow2((mi - 19) / 2) *
                (-128 - pow2((mi + 7) / 2) - 17 * pow2(mi + 3) +
                 31 * pow2((3 * mi + 3) / 2) - 5 * pow2(2 + 2 * mi) +
                 pow2((5 * mi + 1) / 2) + 3 * pow2((mi + 7) / 2) * n4));
  }
  // Drop zero entries (e.g. the m=5 t=4 tables have no weight-24 word).
  for (auto it = wd.counts.begin(); it != wd.counts.end();)
    it = (it->second == 0) ? wd.counts.erase(it) : std::next(it);
  check_total(wd, BigInt(1) << (3 * mi - t), "shortened table");
  return wd;
}

}  // namespace trizero
