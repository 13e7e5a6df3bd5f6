#ifndef BIBRACKET_RATIONAL_HPP
#define BIBRACKET_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bibracket {

// Exact arbitrary-precision rational scalar. mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a" or "a/b", with optional sign.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace bibracket

#endif
