#ifndef TRIZERO_LINCODE_HPP
#define TRIZERO_LINCODE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trizero {

using BigInt = boost::multiprecision::cpp_int;

/// An n-bit word packed into 64-bit limbs (limb 0 holds positions 0..63).
using BitWord = std::vector<uint64_t>;

inline size_t limbs_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }
inline bool get_bit(const BitWord& w, int i) {
  return (w[i / 64] >> (i % 64)) & 1;
}
inline void set_bit(BitWord& w, int i, bool v) {
  if (v)
    w[i / 64] |= 1ull << (i % 64);
  else
    w[i / 64] &= ~(1ull << (i % 64));
}
int popcount(const BitWord& w);

/// Binary linear code given by a generator matrix of independent rows.
/// Coordinate labels, when present, tie positions to field elements.
struct BinaryCode {
  int n = 0;
  std::vector<BitWord> rows;            // k independent n-bit rows
  std::vector<uint32_t> labels;         // optional, size n when present
  int dim() const { return static_cast<int>(rows.size()); }
};

/// Exact weight -> count map for a code of dimension k.
struct WeightDistribution {
  int n = 0;
  int k = 0;
  std::map<int, BigInt> counts;
  BigInt total() const;
  std::string to_json() const;
};

constexpr int kDefaultEnumGuard = 28;

/// Builds a code from (possibly dependent) spanning rows; rows are reduced
/// to an independent basis.
BinaryCode code_from_spanning_rows(int n, const std::vector<BitWord>& rows,
                                   std::vector<uint32_t> labels = {});

int rank_of(const std::vector<BitWord>& rows, int n);
bool same_row_space(const BinaryCode& a, const BinaryCode& b);

/// Exact weight distribution over all 2^k codewords, Gray-code walk.
WeightDistribution enumerate_weight_distribution(
    const BinaryCode& code, int guard = kDefaultEnumGuard);

BinaryCode dual(const BinaryCode& code);

struct AugmentResult {
  BinaryCode code;
  bool already_contained;  // all-ones was already in the row space
};
AugmentResult augment(const BinaryCode& code);

BinaryCode extend(const BinaryCode& code);

BinaryCode shorten(const BinaryCode& code, const std::vector<int>& positions);
BinaryCode puncture(const BinaryCode& code, const std::vector<int>& positions);

std::vector<BitWord> codewords_of_weight(const BinaryCode& code, int w,
                                         int guard = kDefaultEnumGuard);

/// Binary MacWilliams transform; throws if any output count is negative or
/// fractional (inconsistent input).
WeightDistribution macwilliams_dual_distribution(const WeightDistribution& wd,
                                                 int k);

/// A single dual count A_j^perp from the Krawtchouk expansion; exact, and
/// cheap even when n is too large for the full transform to be worthwhile.
BigInt macwilliams_dual_coefficient(const WeightDistribution& wd, int k,
                                    int j);

/// Stirling numbers of the second kind S(t, j).
BigInt stirling2(int t, int j);

/// Pless power-moment identity at order t with the dual counts
/// A_0..A_t supplied in dual_prefix (q = 2).
bool pless_moment_check(const WeightDistribution& wd,
                        const std::vector<BigInt>& dual_prefix, int k, int n,
                        int t);

BigInt binomial(int n, int k);

}  // namespace trizero

#endif
