#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace convlab {

/// Deterministic random source. mt19937_64 output is fixed by the standard,
/// and the bounded draw uses rejection sampling, so sequences are identical
/// across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 gen_;
};

/// Packed field element: the digits of the coefficient vector in base p,
/// little-endian, so elements of GF(p^m) are exactly the integers [0, p^m).
using fe = std::uint64_t;

/// A finite field GF(p^m), p prime, m >= 1.
///
/// Extension fields are GF(p)[x]/(modulus) with the lexicographically
/// smallest monic irreducible modulus (coefficients compared low-degree
/// first), so the same (p, m) always produces the same field.
class Field {
 public:
  static Field make(std::uint64_t p, std::uint64_t m);

  std::uint64_t p() const { return p_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t q() const { return q_; }

  /// Modulus coefficients, low-degree first, length m+1. For m = 1 this is
  /// {0, 1}, i.e. the polynomial x.
  const std::vector<std::uint64_t>& modulus() const { return mod_; }

  fe zero() const { return 0; }
  fe one() const { return 1; }

  fe add(fe a, fe b) const;
  fe sub(fe a, fe b) const;
  fe neg(fe a) const;
  fe mul(fe a, fe b) const;
  /// Multiplicative inverse via extended Euclid. Throws on a = 0.
  fe inv(fe a) const;
  fe pow(fe a, std::uint64_t e) const;

  std::vector<std::uint64_t> coeffs(fe a) const;
  fe from_coeffs(const std::vector<std::uint64_t>& c) const;

  /// Uniform element; reproducible given the Rng state.
  fe random_element(Rng& rng) const { return rng.below(q_); }

  /// All q elements in a fixed order starting at 0.
  std::vector<fe> enumerate_elements() const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  Field(std::uint64_t p, std::uint64_t m, std::vector<std::uint64_t> mod);

  void check(fe a) const {
    if (a >= q_) throw std::invalid_argument("field element out of range");
  }

  std::uint64_t p_ = 2, m_ = 1, q_ = 2;
  std::vector<std::uint64_t> mod_;
  bool binary_ = true;       // p == 2 fast path
  std::uint64_t modbits_ = 0;  // modulus as a bit mask when p == 2
};

bool is_prime_u64(std::uint64_t n);

}  // namespace convlab
