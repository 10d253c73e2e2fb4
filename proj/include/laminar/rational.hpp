#pragma once

#include <string>

#include <gmpxx.h>

namespace laminar {

/// Exact rational. Arithmetic results stay in lowest terms; build p/q with
/// make_rat, since the two-argument constructor does not reduce.
using Rat = mpq_class;
using BigInt = mpz_class;

/// p/q in lowest terms; q must be nonzero.
Rat make_rat(const BigInt& p, const BigInt& q);

/// "p/q" with q >= 1 always present.
std::string fraction_string(const Rat& r);
/// Accepts "p/q" or "p"; throws std::invalid_argument otherwise.
Rat parse_fraction(const std::string& s);

/// Decimal rendering rounded half-away-from-zero to `significant` digits.
std::string decimal_string(const Rat& r, int significant = 20);

}  // namespace laminar
