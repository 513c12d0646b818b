#include "convlab/gf.hpp"

#include <algorithm>

namespace convlab {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  // rejection sampling over the smallest power-of-two range covering n
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t v = gen_() & mask;
    if (v < n) return v;
  }
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// dense GF(p) polynomials, little-endian, not necessarily trimmed
using PolyP = std::vector<std::uint64_t>;

int pdeg(const PolyP& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// a mod b, b nonzero
PolyP pmod(std::uint64_t p, PolyP a, const PolyP& b) {
  int db = pdeg(b);
  std::uint64_t lead_inv = 1;
  {  // inverse of b's leading coefficient mod p
    std::uint64_t l = b[db];
    std::uint64_t r = 1;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
      if (e & 1) r = r * l % p;
      l = l * l % p;
    }
    lead_inv = r;
  }
  for (int da = pdeg(a); da >= db; da = pdeg(a)) {
    std::uint64_t f = a[da] * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      std::uint64_t s = f * b[i] % p;
      a[da - db + i] = (a[da - db + i] + p - s) % p;
    }
  }
  return a;
}

bool is_irreducible(std::uint64_t p, const PolyP& f) {
  int m = pdeg(f);
  if (m < 1) return false;
  if (f[0] == 0) return m == 1;  // divisible by x
  // trial division by every monic polynomial of degree 1..m/2
  for (int d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      PolyP g(d + 1, 0);
      std::uint64_t t = v;
      for (int i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[d] = 1;
      if (pdeg(pmod(p, f, g)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint64_t p, std::uint64_t m, std::vector<std::uint64_t> mod)
    : p_(p), m_(m), mod_(std::move(mod)), binary_(p == 2) {
  q_ = 1;
  for (std::uint64_t i = 0; i < m_; ++i) q_ *= p_;
  if (binary_) {
    modbits_ = 0;
    for (std::uint64_t i = 0; i < mod_.size(); ++i)
      if (mod_[i]) modbits_ |= std::uint64_t{1} << i;
  }
}

Field Field::make(std::uint64_t p, std::uint64_t m) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (m > 1 && m > 16) throw std::invalid_argument("extension degree too large");
  if (m == 1) return Field(p, 1, {0, 1});
  // lexicographically smallest monic irreducible of degree m, comparing
  // coefficients low-degree first
  std::vector<std::uint64_t> radix(m, 0);
  for (;;) {
    PolyP f(m + 1, 0);
    for (std::uint64_t i = 0; i < m; ++i) f[i] = radix[i];
    f[m] = 1;
    if (is_irreducible(p, f)) return Field(p, m, f);
    // next tuple in lex order: low-degree coefficient is most significant
    std::uint64_t i = m;
    while (i > 0) {
      --i;
      if (++radix[i] < p) break;
      radix[i] = 0;
      if (i == 0) throw std::logic_error("no irreducible polynomial found");
    }
  }
}

std::vector<std::uint64_t> Field::coeffs(fe a) const {
  check(a);
  std::vector<std::uint64_t> c(m_);
  for (std::uint64_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

fe Field::from_coeffs(const std::vector<std::uint64_t>& c) const {
  if (c.size() != m_) throw std::invalid_argument("coefficient count != m");
  fe a = 0;
  for (std::uint64_t i = m_; i > 0; --i) {
    if (c[i - 1] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
    a = a * p_ + c[i - 1];
  }
  return a;
}

fe Field::add(fe a, fe b) const {
  check(a);
  check(b);
  if (binary_) return a ^ b;
  fe r = 0, mult = 1;
  for (std::uint64_t i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

fe Field::neg(fe a) const {
  check(a);
  if (binary_) return a;
  fe r = 0, mult = 1;
  for (std::uint64_t i = 0; i < m_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

fe Field::sub(fe a, fe b) const { return add(a, neg(b)); }

fe Field::mul(fe a, fe b) const {
  check(a);
  check(b);
  if (binary_) {
    std::uint64_t r = 0;
    for (std::uint64_t i = 0; i < m_; ++i)
      if ((b >> i) & 1) r ^= a << i;
    for (std::uint64_t i = 2 * m_ - 2 + 1; i-- > m_;)
      if ((r >> i) & 1) r ^= modbits_ << (i - m_);
    return r;
  }
  if (m_ == 1) return a * b % p_;
  std::vector<std::uint64_t> da = coeffs(a), db = coeffs(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint64_t i = 0; i < m_; ++i)
    for (std::uint64_t j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  // reduce by the monic modulus
  for (std::uint64_t i = 2 * m_ - 2 + 1; i-- > m_;) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint64_t j = 0; j < m_; ++j) {
      std::uint64_t s = c * mod_[j] % p_;
      prod[i - m_ + j] = (prod[i - m_ + j] + p_ - s) % p_;
    }
  }
  prod.resize(m_);
  return from_coeffs(prod);
}

fe Field::pow(fe a, std::uint64_t e) const {
  check(a);
  fe r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

fe Field::inv(fe a) const {
  check(a);
  if (a == 0) throw std::invalid_argument("division by zero in field inverse");
  if (m_ == 1) {
    // extended Euclid on integers
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t qq = r0 / r1;
      std::int64_t r2 = r0 - qq * r1;
      std::int64_t t2 = t0 - qq * t1;
      r0 = r1;
      r1 = r2;
      t0 = t1;
      t1 = t2;
    }
    std::int64_t t = t0 % static_cast<std::int64_t>(p_);
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<fe>(t);
  }
  // extended Euclid over GF(p)[x] against the modulus
  PolyP r0 = mod_, r1(m_, 0);
  {
    std::vector<std::uint64_t> c = coeffs(a);
    for (std::uint64_t i = 0; i < m_; ++i) r1[i] = c[i];
  }
  PolyP t0(m_ + 1, 0), t1(m_ + 1, 0);
  t1[0] = 1;
  auto scalar_inv = [&](std::uint64_t v) {
    std::uint64_t r = 1, l = v;
    for (std::uint64_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) r = r * l % p_;
      l = l * l % p_;
    }
    return r;
  };
  while (pdeg(r1) > 0) {
    // r0 = q*r1 + r2
    PolyP r2 = r0, qpoly(m_ + 1, 0);
    int db = pdeg(r1);
    std::uint64_t li = scalar_inv(r1[db]);
    for (int da = pdeg(r2); da >= db; da = pdeg(r2)) {
      std::uint64_t f = r2[da] * li % p_;
      qpoly[da - db] = f;
      for (int i = 0; i <= db; ++i) {
        std::uint64_t s = f * r1[i] % p_;
        r2[da - db + i] = (r2[da - db + i] + p_ - s) % p_;
      }
    }
    PolyP t2(m_ + 1, 0);
    for (std::uint64_t i = 0; i <= m_; ++i) t2[i] = t0[i];
    for (std::uint64_t i = 0; i <= m_; ++i) {
      for (std::uint64_t j = 0; i + j <= m_; ++j) {
        std::uint64_t s = qpoly[i] * t1[j] % p_;
        t2[i + j] = (t2[i + j] + p_ - s) % p_;
      }
    }
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (pdeg(r1) != 0) throw std::logic_error("modulus not irreducible");
  std::uint64_t c = scalar_inv(r1[0]);
  std::vector<std::uint64_t> out(m_, 0);
  for (std::uint64_t i = 0; i < m_; ++i) out[i] = t1[i] * c % p_;
  return from_coeffs(out);
}

std::vector<fe> Field::enumerate_elements() const {
  std::vector<fe> v(q_);
  for (std::uint64_t i = 0; i < q_; ++i) v[i] = i;
  return v;
}

}  // namespace convlab
