#pragma once

#include <gmpxx.h>

#include <string>

namespace sidecon {

// Exact rational coefficients. GMP keeps values canonical (lowest terms,
// positive denominator), which is what every symbolic path here relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sidecon
