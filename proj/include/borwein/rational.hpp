#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace borwein {

using Integer = mpz_class;
using Rational = mpq_class;

/* Sign of a rational as -1, 0 or +1. */
inline int sign_of(const Rational& r) { return sgn(r); }

/* mpq_class(num, den) does not canonicalize; this does. */
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}
inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/* Reduce r modulo 2 into [-1, 1). Used for angles measured in units of pi. */
inline Rational reduce_mod2_symmetric(const Rational& r) {
    Rational shifted = (r + 1) / 2;
    Rational frac = shifted - Rational(floor_of(shifted));
    return frac * 2 - 1;
}

/* Reduce r modulo m into [0, m). */
inline Rational reduce_mod(const Rational& r, const Rational& m) {
    Rational q = r / m;
    return r - Rational(floor_of(q)) * m;
}

/* Canonical "num/den" form, denominator always spelled out. */
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/* Parses an exact rational literal: "a/b", an integer, or a decimal such as
 * "0.227" (converted exactly to 227/1000). Never goes through binary floats. */
Rational parse_rational(std::string_view text);

}  // namespace borwein
