#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hkt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact coordinate vector; entries are kept canonical (reduced, positive
/// denominator) by mpq_class.
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "n" or "p/q" (optionally signed). Rejects zero denominators.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1,-1/2,0".
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const RationalVector& v, char sep = ',');
std::string to_string(const IntegerVector& v, char sep = ',');

RationalVector to_rational(std::span<const Integer> v);
RationalVector to_rational(std::span<const std::int64_t> v);
IntegerVector to_integer(std::span<const std::int64_t> v);

/// True when every entry has denominator 1.
bool is_integral(std::span<const Rational> v);

/// Multiplies through by the lcm of denominators and divides by the gcd of
/// numerators. Sign is preserved; the zero vector maps to itself.
IntegerVector primitive_integer(std::span<const Rational> v);
IntegerVector primitive_integer(std::span<const Integer> v);

Integer content(std::span<const Integer> v);

}  // namespace hkt
