#ifndef TRIZERO_DESIGNS_HPP
#define TRIZERO_DESIGNS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "trizero/lincode.hpp"

namespace trizero {

/// Support design: v points and a multiset of k-subsets (blocks).
struct SupportDesign {
  int v = 0;
  int k = 0;
  std::vector<std::vector<uint16_t>> blocks;  // each sorted ascending
};

struct DesignCheck {
  bool is_design = false;
  uint64_t lambda = 0;  // valid when is_design
  uint64_t min_count = 0;
  uint64_t max_count = 0;
  std::vector<uint16_t> witness;  // a t-subset with non-uniform incidence
};

/// Supports of all weight-w codewords, as blocks over the code positions.
SupportDesign blocks_from_code(const BinaryCode& code, int w,
                               int guard = kDefaultEnumGuard);

/// Exhaustive incidence count of every t-subset of points against the
/// blocks (dense counter over colex-ranked t-subsets).
DesignCheck verify_t_design(const SupportDesign& design, int t);

/// Lambda of the 3-design supported by the minimum-weight codewords of the
/// extended augmented code, gcd(m,e) = 1, m odd.
BigInt predicted_lambda_min_weight(unsigned m);

/// Lambda of the 3-design supported by the weight-8 codewords of the dual.
BigInt predicted_lambda_dual8(unsigned m);

}  // namespace trizero

#endif
