#ifndef ORBITCALC_RATIONAL_HPP
#define ORBITCALC_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbitcalc
{

// Arbitrary precision scalars. mpq_class keeps values canonical
// (lowest terms, positive denominator, zero as 0/1) as long as every
// value enters through arithmetic or parse_rational.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n", "-n", "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

inline bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

} // namespace orbitcalc

#endif
