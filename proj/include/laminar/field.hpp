#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace laminar {

/// Element of GF(p^k), encoded as the base-p integer of its coefficient
/// vector (coefficient of x^i is digit i). Zero is code 0, one is code 1.
struct FieldElem {
  std::uint32_t code = 0;
  friend bool operator==(FieldElem, FieldElem) = default;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

bool is_prime(std::uint64_t n);
/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// GF(p^k) with polynomial-basis elements modulo a fixed irreducible.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree k, comparing coefficients from the constant term upward.
/// Multiplication goes through log/antilog tables built from the smallest
/// primitive element, so the field order is limited to what fits in memory
/// (a few million).
class FiniteField {
 public:
  FiniteField(std::uint32_t p, std::uint32_t k);
  /// Throws std::invalid_argument when q is not a prime power.
  static FiniteField of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients low-to-high, including the leading 1 (length k+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem element(std::uint32_t code) const;
  FieldElem from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Throws std::domain_error for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  FieldElem frobenius(FieldElem a) const { return pow(a, p_); }

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[code], undefined at 0
};

}  // namespace laminar
