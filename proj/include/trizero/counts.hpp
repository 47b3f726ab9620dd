#ifndef TRIZERO_COUNTS_HPP
#define TRIZERO_COUNTS_HPP

#include <array>
#include <string>
#include <vector>

#include "trizero/gf2m.hpp"
#include "trizero/lincode.hpp"

namespace trizero {

/// K_m(a) = sum_{x != 0} (-1)^tr(ax + 1/x), by direct summation.
long long kloosterman(const Field& f, uint32_t a);

/// C_m(a, b) = sum_x (-1)^tr(ax^3 + bx).
long long cubic_sum_c(const Field& f, uint32_t a, uint32_t b);

/// G_m(a, b) = sum_{x != 0} (-1)^tr(ax^3 + b/x).
long long cubic_sum_g(const Field& f, uint32_t a, uint32_t b);

enum class CountMethod { kFormula, kBruteForce };

struct CountReport {
  long long value = 0;
  CountMethod method = CountMethod::kFormula;
  std::string detail;  // inputs echoed for reporting
};

/// A triple T = {x1,x2,x3} of distinct nonzero elements with its odd power
/// sums a, b, c (exponents 1, 3, 5).
struct TripleSpec {
  std::array<uint32_t, 3> elements;
  uint32_t a, b, c;
  TripleSpec(const Field& f, uint32_t x1, uint32_t x2, uint32_t x3);
};

/// A quad T = {x1..x4} of distinct nonzero elements with power sums
/// S1, S3, S5 and the four leave-one-out first sums a_i.
struct QuadSpec {
  std::array<uint32_t, 4> elements;
  uint32_t s1, s3, s5;
  std::array<uint32_t, 4> leave_one_out;
  QuadSpec(const Field& f, uint32_t x1, uint32_t x2, uint32_t x3, uint32_t x4);
};

/// Brute-force count of 4-subsets of GF(q) \ excl with power sums (a,b,c)
/// at exponents (1,3,5), by folding over unordered pairs (O(q^2)).
long long count_quadruples_folded(const Field& f, uint32_t a, uint32_t b,
                                  uint32_t c,
                                  const std::vector<uint32_t>& excl = {});

/// Naive C(q,4) scan; the independent oracle for small m.
long long count_quadruples_naive(const Field& f, uint32_t a, uint32_t b,
                                 uint32_t c,
                                 const std::vector<uint32_t>& excl = {});

/// N_(a,b,c) with a != 0, m odd: formula path unless brute_force.
CountReport quadruple_count(const Field& f, uint32_t a, uint32_t b, uint32_t c,
                            bool brute_force = false);

/// N_(b,c): a = 0 case, b, c != 0. Returns 2^(m-2) when the depressed cubic
/// has three distinct roots, otherwise falls back to brute force.
CountReport zero_a_quadruple_count(const Field& f, uint32_t b, uint32_t c,
                                   bool brute_force = false);

/// N(a) of a triple: 4-subsets disjoint from the triple with its power sums.
CountReport n_of_triple(const Field& f, const TripleSpec& spec,
                        bool brute_force = false);

/// N-bar of a quad: 3-subsets of GF(q)^* disjoint from the quad with power
/// sums (S1, S3, S5); always 0 or 1.
CountReport nbar_of_quad(const Field& f, const QuadSpec& spec,
                         bool brute_force = false);

/// Trace criterion tr((S5+S1^5)^3/(S3+S1^3)^5 + 1) of the quad.
int nbar_trace_criterion(const Field& f, const QuadSpec& spec);

/// N = sum_i N(a_i) - 4*nbar + N(S1) of the t=4 shortening theorem.
long long combined_n_t4(const Field& f, const QuadSpec& spec,
                        bool brute_force = false);

/// Number of weight-w codewords whose support contains all of T.
long long lambda_t_w(const BinaryCode& code, const std::vector<int>& positions,
                     int w, int guard = kDefaultEnumGuard);

/// N(a) evaluated at the power sums of a 4-element constraint set (the
/// N(S1) term of the t=4 theorem): 4-subsets disjoint from excl with sums
/// (a, b, c).
CountReport n_with_exclusions(const Field& f, uint32_t a, uint32_t b,
                              uint32_t c, const std::vector<uint32_t>& excl,
                              bool brute_force = false);

}  // namespace trizero

#endif
