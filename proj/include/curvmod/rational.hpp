#pragma once

#include <gmpxx.h>

#include <string>

#include "curvmod/errors.hpp"

namespace curvmod {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(); every constructor path below canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Bit-exact text form "num/den", denominator always written.
inline std::string rational_to_text(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_text(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw ParseError("rational literal missing '/': " + s);
    try {
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw ParseError("nonpositive denominator: " + s);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

} // namespace curvmod
