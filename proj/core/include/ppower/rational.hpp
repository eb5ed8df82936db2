#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppower {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::mpz_int;
/// Arbitrary-precision rational, always kept in lowest terms.
using Rat = boost::multiprecision::mpq_rational;

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Int binomial(std::int64_t n, std::int64_t k);

/// base^exp for non-negative exponents.
Int int_pow(const Int& base, std::uint64_t exp);

/// Largest integer <= r.
Int floor_rat(const Rat& r);

/// Smallest integer >= r.
Int ceil_rat(const Rat& r);

/// Renders a rational as "num/den", or just "num" when the denominator is 1.
std::string rat_to_string(const Rat& r);

/// Parses "num" or "num/den"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

}  // namespace ppower
