#ifndef SVLAB_RATIONAL_HPP
#define SVLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace svlab {

/* Canonical exact rational. mpq_class uses expression templates, so
 * intermediate results must be bound to Rational, never to auto. */
using Rational = mpq_class;
using Integer = mpz_class;

/* Strict "num" or "num/den" with optional leading '-', den > 0.
 * Decimal literals and whitespace are rejected. */
Rational parse_rational(std::string_view text);

std::string to_string(Rational const & q);

inline bool is_integral(Rational const & q)
{
    return q.get_den() == 1;
}

Integer floor(Rational const & q);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace svlab

#endif
