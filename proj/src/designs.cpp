#include "trizero/designs.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "trizero/construct.hpp"

namespace trizero {

namespace {

using Rat = boost::multiprecision::cpp_rational;

uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Incidence counting specialized for t = 3 (the hot path): colex rank of
// {i < j < k} is C(k,3) + C(j,2) + i.
void count_triples(const SupportDesign& d, std::vector<uint32_t>& counter) {
  std::vector<uint32_t> c3(d.v), c2(d.v);
  for (int i = 0; i < d.v; ++i) {
    c3[i] = static_cast<uint32_t>(binom_u64(i, 3));
    c2[i] = static_cast<uint32_t>(binom_u64(i, 2));
  }
  for (const auto& block : d.blocks) {
    const int k = static_cast<int>(block.size());
    for (int ck = 2; ck < k; ++ck) {
      const uint32_t base_k = c3[block[ck]];
      for (int cj = 1; cj < ck; ++cj) {
        const uint32_t base = base_k + c2[block[cj]];
        uint32_t* row = counter.data() + base;
        for (int ci = 0; ci < cj; ++ci) ++row[block[ci]];
      }
    }
  }
}

void count_generic(const SupportDesign& d, int t,
                   std::vector<uint32_t>& counter) {
  std::vector<uint64_t> binom((d.v + 1) * (t + 1));
  auto b = [&](int n, int k) -> uint64_t& { return binom[n * (t + 1) + k]; };
  for (int n = 0; n <= d.v; ++n)
    for (int k = 0; k <= t; ++k) b(n, k) = binom_u64(n, k);
  std::vector<int> idx(t);
  for (const auto& block : d.blocks) {
    const int k = static_cast<int>(block.size());
    // iterate all t-subsets of the block
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      uint64_t rank = 0;
      for (int i = 0; i < t; ++i) rank += b(block[idx[i]], i + 1);
      ++counter[rank];
      int i = t - 1;
      while (i >= 0 && idx[i] == k - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

SupportDesign blocks_from_code(const BinaryCode& code, int w, int guard) {
  SupportDesign d;
  d.v = code.n;
  d.k = w;
  for (const BitWord& word : codewords_of_weight(code, w, guard)) {
    std::vector<uint16_t> block;
    block.reserve(w);
    for (int i = 0; i < code.n; ++i)
      if (get_bit(word, i)) block.push_back(static_cast<uint16_t>(i));
    d.blocks.push_back(std::move(block));
  }
  return d;
}

DesignCheck verify_t_design(const SupportDesign& d, int t) {
  if (t < 1 || t > d.k || d.k > d.v)
    throw std::invalid_argument("designs: need 1 <= t <= k <= v");
  const uint64_t ranks = binom_u64(d.v, t);
  std::vector<uint32_t> counter(ranks, 0);
  if (t == 3)
    count_triples(d, counter);
  else
    count_generic(d, t, counter);
  DesignCheck out;
  uint32_t mn = counter.empty() ? 0 : counter[0];
  uint32_t mx = mn;
  uint64_t bad_rank = 0;
  for (uint64_t r = 0; r < ranks; ++r) {
    if (counter[r] < mn) mn = counter[r];
    if (counter[r] > mx) {
      mx = counter[r];
      bad_rank = r;
    }
  }
  out.min_count = mn;
  out.max_count = mx;
  out.is_design = (mn == mx);
  if (out.is_design) {
    out.lambda = mn;
  } else {
    // Unrank the most-incident subset as a witness (colex).
    uint64_t rank = bad_rank;
    out.witness.resize(t);
    for (int i = t; i >= 1; --i) {
      int c = i - 1;
      while (binom_u64(c + 1, i) <= rank) ++c;
      out.witness[i - 1] = static_cast<uint16_t>(c);
      rank -= binom_u64(c, i);
    }
  }
  return out;
}

BigInt predicted_lambda_min_weight(unsigned m) {
  const int mi = static_cast<int>(m);
  if (m % 2 == 0) throw std::invalid_argument("designs: m must be odd");
  BigInt h = BigInt(1) << (mi - 1);            // 2^(m-1)
  BigInt s = BigInt(1) << ((mi + 1) / 2);      // 2^((m+1)/2)
  BigInt num = (h - 1) * (h - s) * (h - s - 1) * (h - s - 2);
  BigInt den = 24 * ((BigInt(1) << mi) - 2);
  if (num % den != 0)
    throw std::runtime_error("designs: lambda (min weight) not integral");
  return num / den;
}

BigInt predicted_lambda_dual8(unsigned m) {
  const int mi = static_cast<int>(m);
  BigInt a8 = predicted_dual_low_weights(m, 1).at(8);
  BigInt q = BigInt(1) << mi;
  BigInt num = 336 * a8;
  BigInt den = q * (q - 1) * (q - 2);
  if (num % den != 0)
    throw std::runtime_error("designs: lambda (dual weight 8) not integral");
  return num / den;
}

}  // namespace trizero
