#ifndef ALTMAP_RATIONAL_HPP
#define ALTMAP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace altmap {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// mpq_class keeps values canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rational = mpq_class;

inline Int factorial(unsigned long n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(const Int& n, unsigned long k)
{
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, unsigned long k)
{
    return binomial(Int(n), k);
}

inline Int int_pow(const Int& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// mpq_class(a, b) does not reduce to lowest terms; route fractions through here.
inline Rational frac(const Int& num, const Int& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational frac(long num, long den) { return frac(Int(num), Int(den)); }

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

} // namespace altmap

#endif
