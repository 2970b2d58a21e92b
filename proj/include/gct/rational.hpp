#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gct {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign). Throws std::invalid_argument on junk
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer lcm_of_denominators(const RationalVector& values);

}  // namespace gct
