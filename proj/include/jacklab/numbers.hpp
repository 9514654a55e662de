#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jacklab {

// Exact arithmetic base types. mpq_class is kept canonical by GMP:
// gcd(|num|, den) = 1 and den > 0.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_integer(const BigRat& q) { return q.get_den() == 1; }

// "num/den" with the denominator always written, e.g. "0/1", "-3/2".
inline std::string rat_to_string(const BigRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "num/den" or a bare integer string.
inline BigRat rat_from_string(const std::string& s) {
    BigRat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// (2n-1)!! = number of matchings on 2n points.
inline BigInt double_factorial_odd(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2 * n; i > 1; i -= 2) r *= (i - 1);
    return r;
}

}  // namespace jacklab
