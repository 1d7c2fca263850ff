#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace qd {

/* GMP rationals are kept canonical by every arithmetic operator of mpq_class. */
using Rational = mpq_class;
using Integer  = mpz_class;

inline Rational rat(long n, long d = 1) {
        if (d == 0)
                throw division_by_zero("zero denominator");
        Rational r(n, d);
        r.canonicalize();
        return r;
}

inline Rational rdiv(const Rational &a, const Rational &b) {
        if (sgn(b) == 0)
                throw division_by_zero("rational division by zero");
        return a / b;
}

inline std::string to_string(const Rational &r) {
        return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/* Compact form used in series printing: integers without "/1". */
inline std::string to_short_string(const Rational &r) {
        if (r.get_den() == 1)
                return r.get_num().get_str();
        return to_string(r);
}

/* Accepts "n", "n/d", with optional sign. */
inline Rational parse_rational(const std::string &s) {
        Rational r;
        if (s.empty() || r.set_str(s, 10) != 0)
                throw parse_error("not a rational: '" + s + "'");
        if (r.get_den() == 0)
                throw division_by_zero("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
}

inline Rational rpow(const Rational &a, long k) {
        if (k < 0)
                return rpow(rdiv(1, a), -k);
        Rational r = 1, b = a;
        while (k) {
                if (k & 1)
                        r *= b;
                b *= b;
                k >>= 1;
        }
        return r;
}

inline Integer factorial(long n) {
        Integer r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
        return r;
}

/* Gamma(1/2)/Gamma(1/2 + j) = 4^j j!/(2j)! */
inline Rational gamma_half_ratio(long j) {
        Integer p4;
        mpz_ui_pow_ui(p4.get_mpz_t(), 4, static_cast<unsigned long>(j));
        Rational r(p4 * factorial(j), factorial(2 * j));
        r.canonicalize();
        return r;
}

inline long floor_div(long a, long b) {
        long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0)))
                --q;
        return q;
}

inline long mod_pos(long a, long b) {
        long r = a % b;
        return r < 0 ? r + b : r;
}

inline long lcm_l(long a, long b) {
        return std::lcm(a, b);
}

} // namespace qd
