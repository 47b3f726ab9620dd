#ifndef TRIZERO_GF2M_HPP
#define TRIZERO_GF2M_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trizero {

/// Degree-m binary polynomial helpers (bit i = coefficient of x^i).
bool is_irreducible(uint64_t poly, unsigned m);

/// Smallest (as a bitmask) irreducible polynomial of degree m.
uint64_t smallest_irreducible(unsigned m);

/// GF(2^m) in polynomial basis with an explicit irreducible modulus and a
/// primitive element. Elements are m-bit values. Immutable after
/// construction; all operations are pure.
class Field {
 public:
  Field(unsigned m, uint64_t modulus, uint32_t generator);

  /// Field with the smallest irreducible modulus and x as generator
  /// (falls back to scanning for a primitive element if x is not one).
  static Field with_default_modulus(unsigned m);

  unsigned degree() const { return m_; }
  uint64_t modulus() const { return modulus_; }
  uint32_t generator() const { return generator_; }
  uint32_t size() const { return size_; }         // 2^m
  uint32_t order() const { return size_ - 1; }    // 2^m - 1

  uint32_t add(uint32_t x, uint32_t y) const { return x ^ y; }
  uint32_t mul(uint32_t x, uint32_t y) const {
    if (x == 0 || y == 0) return 0;
    uint32_t s = log_[x] + log_[y];
    if (s >= order()) s -= order();
    return exp_[s];
  }
  uint32_t inv(uint32_t x) const {
    if (x == 0) throw std::domain_error("gf2m: inversion of zero");
    uint32_t l = log_[x];
    return exp_[l == 0 ? 0 : order() - l];
  }
  uint32_t div(uint32_t x, uint32_t y) const { return mul(x, inv(y)); }
  uint32_t pow(uint32_t x, long long k) const;
  uint32_t sqr(uint32_t x) const { return mul(x, x); }

  int trace(uint32_t x) const { return trace_[x]; }
  /// Solution y of y^2 + y = x when trace(x) = 0 (m odd).
  uint32_t half_trace(uint32_t x) const;

  /// Unique cube root, valid only for m odd (gcd(3, 2^m-1) = 1).
  uint32_t cube_root(uint32_t x) const;

  /// w^k for the field's generator w.
  uint32_t gen_pow(long long k) const { return pow(generator_, k); }
  /// Discrete log base w of a nonzero element.
  uint32_t log(uint32_t x) const {
    if (x == 0) throw std::domain_error("gf2m: log of zero");
    return log_[x];
  }

  /// Accepts "0", "1", "w", "w^k", decimal, or 0x-prefixed hex bitmask.
  uint32_t parse_element(const std::string& tok) const;
  std::string format_element(uint32_t x) const;  // "0", "1" or "w^k"

 private:
  unsigned m_;
  uint64_t modulus_;
  uint32_t generator_;
  uint32_t size_;
  std::vector<uint32_t> exp_, log_;
  std::vector<uint8_t> trace_;
};

struct CubicRoots {
  std::vector<uint32_t> roots;  // distinct roots, sorted
  bool repeated = false;        // some root has multiplicity > 1
};

/// All roots in GF(2^m) of lambda^3 + p*lambda + r = 0, by exhaustive scan.
CubicRoots solve_cubic_depressed(const Field& f, uint32_t p, uint32_t r);

/// All roots of x^3 + d1*x^2 + d2*x + d3 = 0. When d1^2 != d2 and
/// d3 != d1*d2 the root count is cross-checked against the
/// tr(delta + 1) criterion with delta = (d2+d1^2)^3 / (d3+d1*d2)^2.
CubicRoots solve_cubic_general(const Field& f, uint32_t d1, uint32_t d2,
                               uint32_t d3);

}  // namespace trizero

#endif
