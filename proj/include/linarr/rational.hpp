#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace linarr {

// Exact arithmetic lives on GMP. mpq_class keeps every value canonical:
// reduced to lowest terms, denominator > 0, zero stored as 0/1.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Parse "p/q" or "p" (optional leading '-', q > 0 after reduction).
/// Decimal notation is rejected so exactness survives round-trips.
Rational rational_from_string(const std::string& s);

/// Canonical form: "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// Scale a rational vector to a primitive integer vector (gcd of entries 1),
/// then flip signs so the first nonzero entry is positive. The zero vector
/// is returned unchanged.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v);

/// Same normalization applied in place to an integer vector.
void normalize_primitive(std::vector<BigInt>& v);

} // namespace linarr
