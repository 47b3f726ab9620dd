#include "trizero/lincode.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace trizero {

int popcount(const BitWord& w) {
  int c = 0;
  for (uint64_t limb : w) c += std::popcount(limb);
  return c;
}

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const auto& [w, c] : counts) s += c;
  return s;
}

std::string WeightDistribution::to_json() const {
  std::ostringstream os;
  os << "{\"n\": " << n << ", \"k\": " << k << ", \"counts\": {";
  bool first = true;
  for (const auto& [w, c] : counts) {
    if (!first) os << ", ";
    first = false;
    os << "\"" << w << "\": \"" << c << "\"";
  }
  os << "}}";
  return os.str();
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> reduce_rows(std::vector<BitWord>& rows, int n) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && !get_bit(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r && get_bit(rows[i], c))
        for (size_t l = 0; l < rows[i].size(); ++l) rows[i][l] ^= rows[r][l];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

bool is_zero(const BitWord& w) {
  for (uint64_t limb : w)
    if (limb) return false;
  return true;
}

void check_guard(int k, int guard) {
  if (k > guard)
    throw std::invalid_argument(
        "lincode: dimension " + std::to_string(k) +
        " exceeds enumeration guard " + std::to_string(guard));
}

}  // namespace

BinaryCode code_from_spanning_rows(int n, const std::vector<BitWord>& rows,
                                   std::vector<uint32_t> labels) {
  std::vector<BitWord> basis = rows;
  reduce_rows(basis, n);
  BinaryCode c;
  c.n = n;
  c.rows = std::move(basis);
  c.labels = std::move(labels);
  return c;
}

int rank_of(const std::vector<BitWord>& rows, int n) {
  std::vector<BitWord> copy = rows;
  reduce_rows(copy, n);
  return static_cast<int>(copy.size());
}

bool same_row_space(const BinaryCode& a, const BinaryCode& b) {
  if (a.n != b.n || a.dim() != b.dim()) return false;
  std::vector<BitWord> ra = a.rows, rb = b.rows;
  reduce_rows(ra, a.n);
  reduce_rows(rb, b.n);
  return ra == rb;
}

WeightDistribution enumerate_weight_distribution(const BinaryCode& code,
                                                 int guard) {
  check_guard(code.dim(), guard);
  WeightDistribution wd;
  wd.n = code.n;
  wd.k = code.dim();
  std::vector<uint64_t> hist(code.n + 1, 0);
  BitWord cur(limbs_for(code.n), 0);
  hist[0] = 1;
  const uint64_t count = 1ull << code.dim();
  const size_t nl = cur.size();
  for (uint64_t i = 1; i < count; ++i) {
    const BitWord& row = code.rows[std::countr_zero(i)];
    for (size_t l = 0; l < nl; ++l) cur[l] ^= row[l];
    ++hist[popcount(cur)];
  }
  for (int w = 0; w <= code.n; ++w)
    if (hist[w]) wd.counts[w] = hist[w];
  return wd;
}

BinaryCode dual(const BinaryCode& code) {
  const int n = code.n;
  const int k = code.dim();
  // RREF of the generator, then standard nullspace construction.
  std::vector<BitWord> rows = code.rows;
  std::vector<int> pivots = reduce_rows(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  BinaryCode d;
  d.n = n;
  d.labels = code.labels;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    BitWord v(limbs_for(n), 0);
    set_bit(v, c, true);
    for (int r = 0; r < k; ++r)
      if (get_bit(rows[r], c)) set_bit(v, pivots[r], true);
    d.rows.push_back(std::move(v));
  }
  return d;
}

AugmentResult augment(const BinaryCode& code) {
  BitWord ones(limbs_for(code.n), 0);
  for (int i = 0; i < code.n; ++i) set_bit(ones, i, true);
  std::vector<BitWord> rows = code.rows;
  rows.push_back(ones);
  int r = rank_of(rows, code.n);
  if (r == code.dim()) return {code, true};
  BinaryCode out;
  out.n = code.n;
  out.rows = code.rows;
  out.rows.push_back(std::move(ones));
  out.labels = code.labels;
  return {std::move(out), false};
}

BinaryCode extend(const BinaryCode& code) {
  BinaryCode out;
  out.n = code.n + 1;
  for (const BitWord& row : code.rows) {
    BitWord r(limbs_for(out.n), 0);
    for (int i = 0; i < code.n; ++i) set_bit(r, i, get_bit(row, i));
    set_bit(r, code.n, popcount(row) % 2 != 0);
    out.rows.push_back(std::move(r));
  }
  return out;
}

namespace {

BinaryCode delete_positions(const BinaryCode& code,
                            const std::vector<int>& positions,
                            const std::vector<BitWord>& rows) {
  std::vector<bool> drop(code.n, false);
  for (int p : positions) {
    if (p < 0 || p >= code.n)
      throw std::invalid_argument("lincode: position out of range");
    drop[p] = true;
  }
  std::vector<int> keep;
  for (int i = 0; i < code.n; ++i)
    if (!drop[i]) keep.push_back(i);
  const int nn = static_cast<int>(keep.size());
  std::vector<BitWord> out_rows;
  for (const BitWord& row : rows) {
    BitWord r(limbs_for(nn), 0);
    for (int j = 0; j < nn; ++j) set_bit(r, j, get_bit(row, keep[j]));
    out_rows.push_back(std::move(r));
  }
  std::vector<uint32_t> labels;
  if (!code.labels.empty())
    for (int i : keep) labels.push_back(code.labels[i]);
  return code_from_spanning_rows(nn, out_rows, std::move(labels));
}

}  // namespace

BinaryCode shorten(const BinaryCode& code, const std::vector<int>& positions) {
  const int k = code.dim();
  // Nullspace of the generator restricted to the shortened columns gives
  // the message combinations vanishing on T.
  const int t = static_cast<int>(positions.size());
  // Nullspace of the restriction, with an identity tail tracking which
  // combination of generator rows each reduced row represents.
  std::vector<BitWord> m(k, BitWord(limbs_for(t + k), 0));
  for (int r = 0; r < k; ++r) {
    for (int j = 0; j < t; ++j)
      set_bit(m[r], j, get_bit(code.rows[r], positions[j]));
    set_bit(m[r], t + r, true);  // identity tail records the combination
  }
  std::vector<BitWord> combos;
  {
    size_t rr = 0;
    for (int c = 0; c < t && rr < m.size(); ++c) {
      size_t p = rr;
      while (p < m.size() && !get_bit(m[p], c)) ++p;
      if (p == m.size()) continue;
      std::swap(m[rr], m[p]);
      for (size_t i = 0; i < m.size(); ++i)
        if (i != rr && get_bit(m[i], c))
          for (size_t l = 0; l < m[i].size(); ++l) m[i][l] ^= m[rr][l];
      ++rr;
    }
    for (size_t i = rr; i < m.size(); ++i) combos.push_back(m[i]);
  }
  std::vector<BitWord> sub_rows;
  for (const BitWord& combo : combos) {
    BitWord row(limbs_for(code.n), 0);
    for (int r = 0; r < k; ++r)
      if (get_bit(combo, t + r))
        for (size_t l = 0; l < row.size(); ++l) row[l] ^= code.rows[r][l];
    sub_rows.push_back(std::move(row));
  }
  BinaryCode zero_on_t;
  zero_on_t.n = code.n;
  zero_on_t.rows = std::move(sub_rows);
  zero_on_t.labels = code.labels;
  return delete_positions(zero_on_t, positions, zero_on_t.rows);
}

BinaryCode puncture(const BinaryCode& code, const std::vector<int>& positions) {
  return delete_positions(code, positions, code.rows);
}

std::vector<BitWord> codewords_of_weight(const BinaryCode& code, int w,
                                         int guard) {
  check_guard(code.dim(), guard);
  std::vector<BitWord> out;
  BitWord cur(limbs_for(code.n), 0);
  if (w == 0) out.push_back(cur);
  const uint64_t count = 1ull << code.dim();
  const size_t nl = cur.size();
  for (uint64_t i = 1; i < count; ++i) {
    const BitWord& row = code.rows[std::countr_zero(i)];
    for (size_t l = 0; l < nl; ++l) cur[l] ^= row[l];
    if (popcount(cur) == w) out.push_back(cur);
  }
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt macwilliams_dual_coefficient(const WeightDistribution& wd, int k,
                                    int j) {
  const int n = wd.n;
  BigInt size = BigInt(1) << k;
  // Binary Krawtchouk: K_j(i) = sum_l (-1)^l C(i,l) C(n-i, j-l).
  BigInt acc = 0;
  for (const auto& [i, a] : wd.counts) {
    BigInt kr = 0;
    for (int l = 0; l <= j; ++l) {
      BigInt term = binomial(i, l) * binomial(n - i, j - l);
      kr += (l % 2 == 0) ? term : -term;
    }
    acc += a * kr;
  }
  if (acc % size != 0)
    throw std::runtime_error("lincode: MacWilliams transform not integral");
  BigInt c = acc / size;
  if (c < 0)
    throw std::runtime_error("lincode: MacWilliams transform negative");
  return c;
}

WeightDistribution macwilliams_dual_distribution(const WeightDistribution& wd,
                                                 int k) {
  WeightDistribution out;
  out.n = wd.n;
  out.k = wd.n - k;
  for (int j = 0; j <= wd.n; ++j) {
    BigInt c = macwilliams_dual_coefficient(wd, k, j);
    if (c != 0) out.counts[j] = c;
  }
  return out;
}

BigInt stirling2(int t, int j) {
  if (j < 0 || j > t) return 0;
  // S(t,j) = (1/j!) sum_i (-1)^(j-i) C(j,i) i^t
  BigInt acc = 0;
  for (int i = 0; i <= j; ++i) {
    BigInt term = binomial(j, i);
    BigInt p = 1;
    for (int e = 0; e < t; ++e) p *= i;
    term *= p;
    acc += ((j - i) % 2 == 0) ? term : -term;
  }
  BigInt fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  if (acc % fact != 0) throw std::logic_error("lincode: Stirling not integral");
  return acc / fact;
}

bool pless_moment_check(const WeightDistribution& wd,
                        const std::vector<BigInt>& dual_prefix, int k, int n,
                        int t) {
  if (t < 0 || t > n || static_cast<int>(dual_prefix.size()) < t + 1)
    throw std::invalid_argument("lincode: bad Pless moment arguments");
  BigInt lhs = 0;
  for (const auto& [i, a] : wd.counts) {
    BigInt p = 1;
    for (int e = 0; e < t; ++e) p *= i;
    lhs += p * a;
  }
  BigInt rhs = 0;
  for (int i = 0; i <= t; ++i) {
    BigInt inner = 0;
    for (int j = i; j <= t; ++j) {
      BigInt fact = 1;
      for (int f = 2; f <= j; ++f) fact *= f;  // j!
      BigInt term = fact * stirling2(t, j);
      term *= BigInt(1) << (k - j >= 0 ? (k - j) : 0);
      if (k - j < 0) throw std::invalid_argument("lincode: t exceeds k");
      // (q-1)^(j-i) = 1 for q = 2
      term *= binomial(n - i, n - j);
      inner += term;
    }
    BigInt contrib = dual_prefix[i] * inner;
    rhs += (i % 2 == 0) ? contrib : -contrib;
  }
  return lhs == rhs;
}

}  // namespace trizero
