#include "laminar/field.hpp"

#include <stdexcept>
#include <string>

namespace laminar {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low-to-high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime; Fermat.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo monic-or-not b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  trim(out);
  return out;
}

Poly digits(std::uint64_t code, std::uint32_t p, std::uint32_t k) {
  Poly out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& coeffs, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p + coeffs[i];
  return static_cast<std::uint32_t>(code);
}

bool has_factor_of_degree(const Poly& f, std::uint32_t d, std::uint32_t p) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly g = digits(c, p, d);
    g.push_back(1);
    if (poly_mod(f, g, p).empty()) return true;
  }
  return false;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const auto k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= k; ++d)
    if (has_factor_of_degree(f, d, p)) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t k = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++k;
  return std::pair{static_cast<std::uint32_t>(factors[0]), k};
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1ULL << 24)) throw std::invalid_argument("field order too large");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Lexicographic order on (c_0, c_1, ..., c_{k-1}): c_0 is the most
  // significant digit of the enumeration index.
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly f(k + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t j = k; j-- > 0;) {
      f[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }

  auto slow_pow = [&](const Poly& g, std::uint64_t e) {
    Poly result{1}, base = g;
    for (; e > 0; e >>= 1) {
      if (e & 1U) result = poly_mod(poly_mul(result, base, p_), modulus_, p_);
      base = poly_mod(poly_mul(base, base, p_), modulus_, p_);
    }
    return result;
  };
  const auto group_factors = prime_factors(q_ - 1);
  Poly generator;
  for (std::uint32_t code = 1; code < q_; ++code) {
    Poly g = digits(code, p_, k_);
    trim(g);
    bool primitive = true;
    for (auto r : group_factors) {
      if (slow_pow(g, (q_ - 1) / r) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = std::move(g);
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Poly cur{1};
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    const std::uint32_t code = encode(cur, p_);
    exp_[i] = code;
    log_[code] = i;
    cur = poly_mod(poly_mul(cur, generator, p_), modulus_, p_);
  }
}

FiniteField FiniteField::of_order(std::uint64_t q) {
  auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return FiniteField(pk->first, pk->second);
}

FieldElem FiniteField::element(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("field element code out of range");
  return {code};
}

FieldElem FiniteField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != k_) throw std::invalid_argument("coefficient vector must have length k");
  for (auto c : coeffs)
    if (c >= p_) throw std::invalid_argument("coefficient out of range");
  return {encode(coeffs, p_)};
}

std::vector<std::uint32_t> FiniteField::coefficients(FieldElem a) const {
  return digits(a.code, p_, k_);
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
  if (k_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a.code % p_ + b.code % p_) % p_) * scale;
    a.code /= p_;
    b.code /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElem FiniteField::neg(FieldElem a) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a.code % p_) % p_) * scale;
    a.code /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint32_t e = (log_[a.code] + log_[b.code]) % (q_ - 1);
  return {exp_[e]};
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
}

FieldElem FiniteField::pow(FieldElem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.code]) * (e % (q_ - 1))) % (q_ - 1);
  return {exp_[l]};
}

}  // namespace laminar
