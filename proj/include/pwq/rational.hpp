#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace pwq {

// Exact rational scalar. Always kept canonical: lowest terms, positive
// denominator (mpq_class maintains this after canonicalize()).
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational out(1);
    Rational b = base;
    while (e) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

}  // namespace pwq
