#include "trizero/counts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trizero {

namespace {

int sign_bit(int b) { return b ? -1 : 1; }  // (-1)^b

std::vector<uint32_t> powers_table(const Field& f, long long e) {
  std::vector<uint32_t> t(f.size());
  for (uint32_t x = 0; x < f.size(); ++x) t[x] = f.pow(x, e);
  return t;
}

std::vector<uint8_t> exclusion_mask(const Field& f,
                                    const std::vector<uint32_t>& excl) {
  std::vector<uint8_t> m(f.size(), 0);
  for (uint32_t x : excl) m[x] = 1;
  return m;
}

std::string describe(const Field& f, std::initializer_list<uint32_t> xs) {
  std::ostringstream os;
  bool first = true;
  for (uint32_t x : xs) {
    if (!first) os << ",";
    first = false;
    os << f.format_element(x);
  }
  return os.str();
}

}  // namespace

long long kloosterman(const Field& f, uint32_t a) {
  long long s = 0;
  for (uint32_t x = 1; x < f.size(); ++x)
    s += sign_bit(f.trace(f.mul(a, x) ^ f.inv(x)));
  return s;
}

long long cubic_sum_c(const Field& f, uint32_t a, uint32_t b) {
  long long s = 0;
  for (uint32_t x = 0; x < f.size(); ++x)
    s += sign_bit(f.trace(f.mul(a, f.pow(x, 3)) ^ f.mul(b, x)));
  return s;
}

long long cubic_sum_g(const Field& f, uint32_t a, uint32_t b) {
  long long s = 0;
  for (uint32_t x = 1; x < f.size(); ++x)
    s += sign_bit(f.trace(f.mul(a, f.pow(x, 3)) ^ f.mul(b, f.inv(x))));
  return s;
}

TripleSpec::TripleSpec(const Field& f, uint32_t x1, uint32_t x2, uint32_t x3)
    : elements{x1, x2, x3} {
  if (x1 == 0 || x2 == 0 || x3 == 0 || x1 == x2 || x1 == x3 || x2 == x3)
    throw std::invalid_argument("counts: triple must be distinct and nonzero");
  a = x1 ^ x2 ^ x3;
  b = f.pow(x1, 3) ^ f.pow(x2, 3) ^ f.pow(x3, 3);
  c = f.pow(x1, 5) ^ f.pow(x2, 5) ^ f.pow(x3, 5);
}

QuadSpec::QuadSpec(const Field& f, uint32_t x1, uint32_t x2, uint32_t x3,
                   uint32_t x4)
    : elements{x1, x2, x3, x4} {
  for (int i = 0; i < 4; ++i) {
    if (elements[i] == 0)
      throw std::invalid_argument("counts: quad elements must be nonzero");
    for (int j = i + 1; j < 4; ++j)
      if (elements[i] == elements[j])
        throw std::invalid_argument("counts: quad elements must be distinct");
  }
  s1 = x1 ^ x2 ^ x3 ^ x4;
  s3 = f.pow(x1, 3) ^ f.pow(x2, 3) ^ f.pow(x3, 3) ^ f.pow(x4, 3);
  s5 = f.pow(x1, 5) ^ f.pow(x2, 5) ^ f.pow(x3, 5) ^ f.pow(x4, 5);
  for (int i = 0; i < 4; ++i) leave_one_out[i] = s1 ^ elements[i];
}

long long count_quadruples_folded(const Field& f, uint32_t a, uint32_t b,
                                  uint32_t c,
                                  const std::vector<uint32_t>& excl) {
  if (f.degree() % 2 == 0)
    throw std::domain_error("counts: folded scan requires m odd");
  const uint32_t q = f.size();
  const auto cube = powers_table(f, 3);
  const auto fifth = powers_table(f, 5);
  const auto ex = exclusion_mask(f, excl);
  long long pairs = 0;
  for (uint32_t x = 0; x < q; ++x) {
    if (ex[x]) continue;
    for (uint32_t y = x + 1; y < q; ++y) {
      if (ex[y]) continue;
      const uint32_t s = a ^ x ^ y;
      if (s == 0) continue;  // z = u is never a subset
      const uint32_t t3 = b ^ cube[x] ^ cube[y];
      const uint32_t t5 = c ^ fifth[x] ^ fifth[y];
      const uint32_t s3 = cube[s];
      const uint32_t p = f.div(t3 ^ s3, s);
      // Fifth-power consistency: z^5 + u^5 = s^5 + p s^3 + p^2 s.
      if (t5 != (fifth[s] ^ f.mul(p, s3) ^ f.mul(f.mul(p, p), s))) continue;
      const uint32_t disc = f.div(p, f.mul(s, s));
      if (f.trace(disc) != 0) continue;
      const uint32_t z = f.mul(s, f.half_trace(disc));
      const uint32_t u = z ^ s;
      if (ex[z] || ex[u]) continue;
      if (z == x || z == y || u == x || u == y) continue;
      ++pairs;
    }
  }
  if (pairs % 6 != 0)
    throw std::logic_error("counts: folded pair count not divisible by 6");
  return pairs / 6;
}

long long count_quadruples_naive(const Field& f, uint32_t a, uint32_t b,
                                 uint32_t c,
                                 const std::vector<uint32_t>& excl) {
  const uint32_t q = f.size();
  const auto cube = powers_table(f, 3);
  const auto fifth = powers_table(f, 5);
  const auto ex = exclusion_mask(f, excl);
  long long count = 0;
  for (uint32_t x = 0; x < q; ++x) {
    if (ex[x]) continue;
    for (uint32_t y = x + 1; y < q; ++y) {
      if (ex[y]) continue;
      for (uint32_t z = y + 1; z < q; ++z) {
        if (ex[z]) continue;
        const uint32_t u = a ^ x ^ y ^ z;
        if (u <= z || ex[u]) continue;
        if ((b ^ cube[x] ^ cube[y] ^ cube[z] ^ cube[u]) != 0) continue;
        if ((c ^ fifth[x] ^ fifth[y] ^ fifth[z] ^ fifth[u]) != 0) continue;
        ++count;
      }
    }
  }
  return count;
}

namespace {

// The two-case closed form for N_(a,b,c), a != 0, m odd. Returns the count
// before any subset-exclusion adjustment.
long long quadruple_formula(const Field& f, uint32_t a, uint32_t b,
                            uint32_t c) {
  const uint32_t a3 = f.pow(a, 3);
  const uint32_t b_over_a3 = f.div(b, a3);
  const int eps = f.trace(b_over_a3);
  const uint32_t mu = f.div(c, f.pow(a, 5)) ^
                      f.div(f.mul(b, b), f.pow(a, 6)) ^ b_over_a3;
  if (mu == 1) return 0;
  const uint32_t mu1 = mu ^ 1;
  const long long g = cubic_sum_g(f, mu1, mu1);
  const long long k = kloosterman(f, mu1);
  const long long cs = cubic_sum_c(f, 1, f.cube_root(mu1));
  // N = (2^m - 5 + 3G)/24 + (-1)^(eps+1) (K + C - 3)/12, over a common
  // denominator of 24.
  const long long sign = (eps == 1) ? 1 : -1;
  const long long num =
      (static_cast<long long>(f.size()) - 5 + 3 * g) + 2 * sign * (k + cs - 3);
  if (num % 24 != 0)
    throw std::logic_error("counts: quadruple formula not divisible by 24");
  return num / 24;
}

// Number of 3-subsets of GF(q)^* disjoint from excl with power sums
// (a, b, c) at exponents (1, 3, 5), by direct pair scan.
long long three_subset_count_brute(const Field& f, uint32_t a, uint32_t b,
                                   uint32_t c,
                                   const std::vector<uint32_t>& excl) {
  const uint32_t q = f.size();
  const auto ex = exclusion_mask(f, excl);
  long long count = 0;
  for (uint32_t x = 1; x < q; ++x) {
    if (ex[x]) continue;
    for (uint32_t y = x + 1; y < q; ++y) {
      if (ex[y]) continue;
      const uint32_t z = a ^ x ^ y;
      if (z <= y || ex[z]) continue;
      if ((f.pow(x, 3) ^ f.pow(y, 3) ^ f.pow(z, 3)) != b) continue;
      if ((f.pow(x, 5) ^ f.pow(y, 5) ^ f.pow(z, 5)) != c) continue;
      ++count;
    }
  }
  return count;
}

// Same count through the depressed-cubic reduction: substituting
// x -> x + a turns the system into x + y + z = 0 with shifted sums, whose
// solutions come from the roots of x^3 + ((c+a^5)/(b+a^3)) x + (b+a^3).
// Three distinct roots give at most one qualifying subset.
long long three_subset_count_formula(const Field& f, uint32_t a, uint32_t b,
                                     uint32_t c,
                                     const std::vector<uint32_t>& excl) {
  const uint32_t t3 = b ^ f.pow(a, 3);
  const uint32_t t5 = c ^ f.pow(a, 5);
  if (t3 == 0 || t5 == 0)
    return three_subset_count_brute(f, a, b, c, excl);
  CubicRoots roots = solve_cubic_depressed(f, f.div(t5, t3), t3);
  if (roots.roots.size() != 3 || roots.repeated) return 0;
  for (uint32_t xi : roots.roots) {
    const uint32_t elem = xi ^ a;
    if (elem == 0 ||
        std::find(excl.begin(), excl.end(), elem) != excl.end())
      return 0;
  }
  return 1;
}

}  // namespace

CountReport quadruple_count(const Field& f, uint32_t a, uint32_t b, uint32_t c,
                            bool brute_force) {
  if (a == 0)
    throw std::invalid_argument(
        "counts: a = 0 is handled by zero_a_quadruple_count");
  if (f.degree() % 2 == 0)
    throw std::domain_error("counts: quadruple count requires m odd");
  CountReport r;
  r.detail = "N_(a,b,c) at a=" + describe(f, {a, b, c});
  if (brute_force) {
    r.method = CountMethod::kBruteForce;
    r.value = count_quadruples_folded(f, a, b, c);
  } else {
    r.method = CountMethod::kFormula;
    r.value = quadruple_formula(f, a, b, c);
  }
  return r;
}

CountReport zero_a_quadruple_count(const Field& f, uint32_t b, uint32_t c,
                                   bool brute_force) {
  if (b == 0 || c == 0)
    throw std::invalid_argument("counts: N_(b,c) requires b, c nonzero");
  CountReport r;
  r.detail = "N_(b,c) at b,c=" + describe(f, {b, c});
  if (brute_force) {
    r.method = CountMethod::kBruteForce;
    r.value = count_quadruples_folded(f, 0, b, c);
    return r;
  }
  CubicRoots roots = solve_cubic_depressed(f, f.div(c, b), b);
  if (roots.roots.size() == 3 && !roots.repeated) {
    r.method = CountMethod::kFormula;
    r.value = 1ll << (f.degree() - 2);
  } else {
    // The closed form is conditional on three distinct roots.
    r.method = CountMethod::kBruteForce;
    r.value = count_quadruples_folded(f, 0, b, c);
  }
  return r;
}

CountReport n_with_exclusions(const Field& f, uint32_t a, uint32_t b,
                              uint32_t c, const std::vector<uint32_t>& excl,
                              bool brute_force) {
  CountReport r;
  r.detail = "N at a,b,c=" + describe(f, {a, b, c});
  if (brute_force) {
    r.method = CountMethod::kBruteForce;
    r.value = count_quadruples_folded(f, a, b, c, excl);
    return r;
  }
  r.method = CountMethod::kFormula;
  if (a == 0) {
    if (b == 0 || c == 0)
      throw std::logic_error("counts: a = 0 forces b, c nonzero (finding)");
    r.value = (1ll << (f.degree() - 2)) - 1;
  } else {
    long long base = quadruple_formula(f, a, b, c);
    r.value = (base == 0) ? 0 : base - 1;
  }
  // The closed form ranges over 4-subsets of GF(q). When 0 is excluded
  // (support semantics: coordinates are nonzero elements), the 0-containing
  // subsets correspond one-to-one to qualifying 3-subsets and are removed.
  if (r.value > 0 &&
      std::find(excl.begin(), excl.end(), 0u) != excl.end()) {
    std::vector<uint32_t> nonzero;
    for (uint32_t x : excl)
      if (x != 0) nonzero.push_back(x);
    r.value -= three_subset_count_formula(f, a, b, c, nonzero);
  }
  return r;
}

CountReport n_of_triple(const Field& f, const TripleSpec& spec,
                        bool brute_force) {
  std::vector<uint32_t> excl(spec.elements.begin(), spec.elements.end());
  CountReport r =
      n_with_exclusions(f, spec.a, spec.b, spec.c, excl, brute_force);
  r.detail = "N(a) for T={" +
             describe(f, {spec.elements[0], spec.elements[1],
                          spec.elements[2]}) +
             "}";
  return r;
}

int nbar_trace_criterion(const Field& f, const QuadSpec& spec) {
  const uint32_t t3 = spec.s3 ^ f.pow(spec.s1, 3);
  const uint32_t t5 = spec.s5 ^ f.pow(spec.s1, 5);
  if (t3 == 0 || t5 == 0)
    throw std::logic_error(
        "counts: S3+S1^3 or S5+S1^5 vanished on a quad (finding)");
  return f.trace(f.div(f.pow(t5, 3), f.pow(t3, 5)) ^ 1);
}

CountReport nbar_of_quad(const Field& f, const QuadSpec& spec,
                         bool brute_force) {
  CountReport r;
  r.detail = "Nbar for T={" +
             describe(f, {spec.elements[0], spec.elements[1],
                          spec.elements[2], spec.elements[3]}) +
             "}";
  std::vector<uint32_t> excl(spec.elements.begin(), spec.elements.end());
  if (brute_force) {
    // The oracle path has no precondition: it simply counts.
    r.method = CountMethod::kBruteForce;
    r.value = three_subset_count_brute(f, spec.s1, spec.s3, spec.s5, excl);
    return r;
  }
  const uint32_t t3 = spec.s3 ^ f.pow(spec.s1, 3);
  const uint32_t t5 = spec.s5 ^ f.pow(spec.s1, 5);
  if (t3 == 0 || t5 == 0)
    throw std::logic_error(
        "counts: S3+S1^3 or S5+S1^5 vanished on a quad (finding)");
  r.method = CountMethod::kFormula;
  r.value = three_subset_count_formula(f, spec.s1, spec.s3, spec.s5, excl);
  return r;
}

long long combined_n_t4(const Field& f, const QuadSpec& spec,
                        bool brute_force) {
  long long total = 0;
  for (int i = 0; i < 4; ++i) {
    std::array<uint32_t, 3> t;
    int j = 0;
    for (int l = 0; l < 4; ++l)
      if (l != i) t[j++] = spec.elements[l];
    TripleSpec triple(f, t[0], t[1], t[2]);
    total += n_of_triple(f, triple, brute_force).value;
  }
  total -= 4 * nbar_of_quad(f, spec, brute_force).value;
  // The N(S1) term is lambda_{T,8} of the dual, whose coordinates are the
  // nonzero field elements, so 0 is excluded along with the quad.
  std::vector<uint32_t> excl(spec.elements.begin(), spec.elements.end());
  excl.push_back(0);
  total += n_with_exclusions(f, spec.s1, spec.s3, spec.s5, excl, brute_force)
               .value;
  return total;
}

long long lambda_t_w(const BinaryCode& code, const std::vector<int>& positions,
                     int w, int guard) {
  if (code.dim() > guard)
    throw std::invalid_argument("counts: enumeration guard exceeded");
  BitWord mask(limbs_for(code.n), 0);
  for (int p : positions) {
    if (p < 0 || p >= code.n)
      throw std::invalid_argument("counts: position out of range");
    set_bit(mask, p, true);
  }
  const size_t nl = mask.size();
  BitWord cur(nl, 0);
  long long count = 0;
  auto contains_t = [&]() {
    for (size_t l = 0; l < nl; ++l)
      if ((cur[l] & mask[l]) != mask[l]) return false;
    return true;
  };
  if (w == 0 && positions.empty()) ++count;
  const uint64_t total = 1ull << code.dim();
  for (uint64_t i = 1; i < total; ++i) {
    const BitWord& row = code.rows[std::countr_zero(i)];
    for (size_t l = 0; l < nl; ++l) cur[l] ^= row[l];
    if (popcount(cur) == w && contains_t()) ++count;
  }
  return count;
}

}  // namespace trizero
