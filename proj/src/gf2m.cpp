#include "trizero/gf2m.hpp"

#include <algorithm>
#include <numeric>

namespace trizero {

namespace {

unsigned poly_degree(uint64_t p) {
  unsigned d = 0;
  while (p >> (d + 1)) ++d;
  return d;
}

// Multiplication of binary polynomials modulo f (degree m <= 31).
uint64_t poly_mulmod(uint64_t a, uint64_t b, uint64_t f, unsigned m) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m) a ^= f;
  }
  return r;
}

uint64_t poly_powmod_x2(uint64_t a, uint64_t f, unsigned m) {
  return poly_mulmod(a, a, f, m);  // Frobenius square
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
  while (b) {
    unsigned da = a ? poly_degree(a) : 0, db = poly_degree(b);
    if (a == 0) return b;
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    a ^= b << (da - db);
  }
  return a;
}

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

bool is_irreducible(uint64_t poly, unsigned m) {
  if (m == 0 || poly_degree(poly) != m) return false;
  if ((poly & 1) == 0) return false;  // divisible by x
  // f irreducible over GF(2) iff x^(2^m) == x (mod f) and
  // gcd(x^(2^(m/p)) - x, f) = 1 for every prime p | m.
  uint64_t t = 2;  // x
  std::vector<uint64_t> frob(m + 1);
  frob[0] = 2;
  for (unsigned i = 1; i <= m; ++i) {
    t = poly_powmod_x2(t, poly, m);
    frob[i] = t;
  }
  if (frob[m] != 2) return false;
  for (unsigned p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    if (poly_gcd(frob[m / p] ^ 2u, poly) != 1) return false;
  }
  return true;
}

uint64_t smallest_irreducible(unsigned m) {
  for (uint64_t p = (1ull << m) | 1; p < (1ull << (m + 1)); p += 2)
    if (is_irreducible(p, m)) return p;
  throw std::logic_error("gf2m: no irreducible polynomial found");
}

Field::Field(unsigned m, uint64_t modulus, uint32_t generator)
    : m_(m), modulus_(modulus), generator_(generator), size_(1u << m) {
  if (m < 1 || m > 20) throw std::invalid_argument("gf2m: degree out of range");
  if (!is_irreducible(modulus, m))
    throw std::invalid_argument("gf2m: modulus is not irreducible of degree m");
  if (generator == 0 || generator >= size_)
    throw std::invalid_argument("gf2m: generator out of range");
  exp_.assign(order(), 0);
  log_.assign(size_, 0);
  uint32_t v = 1;
  for (uint32_t i = 0; i < order(); ++i) {
    exp_[i] = v;
    if (i > 0 && v == 1)
      throw std::invalid_argument("gf2m: generator is not primitive");
    log_[v] = i;
    v = static_cast<uint32_t>(poly_mulmod(v, generator, modulus, m));
  }
  if (v != 1) throw std::invalid_argument("gf2m: generator is not primitive");
  trace_.assign(size_, 0);
  for (uint32_t x = 0; x < size_; ++x) {
    uint32_t t = 0, y = x;
    for (unsigned i = 0; i < m; ++i) {
      t ^= y;
      y = static_cast<uint32_t>(poly_mulmod(y, y, modulus, m));
    }
    if (t != 0 && t != 1) throw std::logic_error("gf2m: trace not in GF(2)");
    trace_[x] = static_cast<uint8_t>(t);
  }
}

Field Field::with_default_modulus(unsigned m) {
  uint64_t f = smallest_irreducible(m);
  for (uint32_t g = 2; g < (1u << m); ++g) {
    try {
      return Field(m, f, g);
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::logic_error("gf2m: no primitive element found");
}

uint32_t Field::pow(uint32_t x, long long k) const {
  if (x == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("gf2m: negative power of zero");
    return 0;
  }
  long long e = (static_cast<long long>(log_[x]) * (k % order())) % order();
  if (e < 0) e += order();
  return exp_[e];
}

uint32_t Field::half_trace(uint32_t x) const {
  if (m_ % 2 == 0) throw std::domain_error("gf2m: half-trace needs m odd");
  uint32_t h = 0, y = x;
  for (unsigned i = 0; i <= (m_ - 1) / 2; ++i) {
    h ^= y;
    y = sqr(sqr(y));
  }
  return h;
}

uint32_t Field::cube_root(uint32_t x) const {
  if (m_ % 2 == 0)
    throw std::domain_error("gf2m: cube root not unique for m even");
  if (x == 0) return 0;
  long long u, v;
  egcd(3, order(), u, v);
  long long e = ((u % order()) + order()) % order();
  return pow(x, e);
}

uint32_t Field::parse_element(const std::string& tok) const {
  if (tok.empty()) throw std::invalid_argument("gf2m: empty element token");
  if (tok == "0") return 0;
  if (tok == "1") return 1;
  if (tok == "w") return generator_;
  if (tok.rfind("w^", 0) == 0) {
    long long k = std::stoll(tok.substr(2));
    return gen_pow(k);
  }
  unsigned long v;
  if (tok.rfind("0x", 0) == 0 || tok.rfind("0X", 0) == 0)
    v = std::stoul(tok.substr(2), nullptr, 16);
  else
    v = std::stoul(tok, nullptr, 10);
  if (v >= size_) throw std::invalid_argument("gf2m: element out of range");
  return static_cast<uint32_t>(v);
}

std::string Field::format_element(uint32_t x) const {
  if (x == 0) return "0";
  if (x == 1) return "1";
  return "w^" + std::to_string(log_[x]);
}

CubicRoots solve_cubic_depressed(const Field& f, uint32_t p, uint32_t r) {
  CubicRoots out;
  for (uint32_t x = 0; x < f.size(); ++x)
    if ((f.mul(f.mul(x, x), x) ^ f.mul(p, x) ^ r) == 0) out.roots.push_back(x);
  // x^3 + p x + r has a repeated root iff r = 0 and p != 0
  // (then it factors as x (x + sqrt(p))^2), or p = r = 0 (triple root 0).
  out.repeated = (r == 0);
  return out;
}

CubicRoots solve_cubic_general(const Field& f, uint32_t d1, uint32_t d2,
                               uint32_t d3) {
  CubicRoots out;
  for (uint32_t x = 0; x < f.size(); ++x) {
    uint32_t v = f.mul(f.mul(x, x), x) ^ f.mul(d1, f.mul(x, x)) ^
                 f.mul(d2, x) ^ d3;
    if (v == 0) out.roots.push_back(x);
  }
  // Derivative in characteristic 2 is x^2 + d2; a root is repeated iff it
  // also annihilates the derivative.
  for (uint32_t x : out.roots)
    if ((f.mul(x, x) ^ d2) == 0) out.repeated = true;
  if (f.mul(d1, d1) != d2 && d3 != f.mul(d1, d2)) {
    uint32_t num = f.add(d2, f.mul(d1, d1));
    uint32_t den = f.add(d3, f.mul(d1, d2));
    uint32_t delta = f.div(f.pow(num, 3), f.mul(den, den));
    int crit = f.trace(delta ^ 1);
    size_t nroots = out.roots.size();
    bool consistent = (crit == 1) ? (nroots == 1 && !out.repeated)
                                  : (nroots == 0 || nroots == 3);
    if (!consistent)
      throw std::logic_error(
          "gf2m: cubic root count disagrees with trace criterion");
  }
  return out;
}

}  // namespace trizero
