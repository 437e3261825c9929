#ifndef OTSGE_RATIONAL_HPP
#define OTSGE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace otsge {

// Exact arbitrary-precision rational. All geometric decisions in this
// project are made on these; floating point is never consulted.
using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical text form "num/den": reduced, denominator positive.
/// Integers are written with an explicit "/1".
std::string rational_to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws Errc::format_error on
/// anything else (including a zero denominator).
Rational rational_from_string(const std::string& text);

} // namespace otsge

#endif
