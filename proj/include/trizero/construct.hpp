#ifndef TRIZERO_CONSTRUCT_HPP
#define TRIZERO_CONSTRUCT_HPP

#include <map>

#include "trizero/gf2m.hpp"
#include "trizero/lincode.hpp"

namespace trizero {

/// Parameters of the three-zero family: 1 <= e <= m-1, e not in
/// {m/3, 2m/3}, and m/gcd(m,e) odd. Invalid pairs are a hard error.
struct FamilyParams {
  unsigned m;
  unsigned e;
  unsigned d;  // gcd(m, e)
  FamilyParams(unsigned m, unsigned e);
  static bool valid(unsigned m, unsigned e);
};

/// The [q-1, 3m] cyclic code with zeros {1, 2^e+1, 2^(2e)+1}; coordinates
/// are labeled w^0, w^1, ..., w^(q-2).
BinaryCode build_ce(const Field& field, unsigned e);

/// The [q, 3m+1] extended augmented code in trace form; coordinates are
/// labeled [0, w^0, ..., w^(q-2)] with the element 0 first.
BinaryCode build_extended_augmented(const Field& field, unsigned e);

/// Closed-form weight distribution of the base [q-1, 3m] code.
WeightDistribution predicted_wd_base(unsigned m, unsigned e);

/// Closed-form weight distribution of the extended augmented [q, 3m+1] code.
WeightDistribution predicted_wd_extended(unsigned m, unsigned e);

/// Low-weight dual counts A_4, A_6, A_8 of the extended augmented code.
/// `values` is derived from the predicted primal distribution by the exact
/// dual transform (the arbiter). `closed_form` evaluates the published
/// closed forms verbatim, as exact rationals rendered to strings; whenever
/// an entry disagrees with the arbiter, the mismatch is described in
/// `discrepancies` — reported, never silently substituted.
struct DualLowWeights {
  std::map<int, BigInt> values;
  std::map<int, std::string> closed_form;
  std::vector<std::string> discrepancies;
};
DualLowWeights dual_low_weight_report(unsigned m, unsigned d);

/// Convenience accessor for DualLowWeights::values.
std::map<int, BigInt> predicted_dual_low_weights(unsigned m, unsigned d);

/// Closed-form distribution of the shortened code for t in {1,2,3,4}.
/// N is required for t >= 3, nbar for t = 4. Requires gcd(m,e)=1 and m odd.
/// When tr_one is true (t = 4 only), the unique-root branch table is used
/// (it must coincide with the general table at nbar = 0).
WeightDistribution predicted_wd_shortened(unsigned m, int t, long long N = -1,
                                          long long nbar = -1,
                                          bool tr_one = false);

}  // namespace trizero

#endif
