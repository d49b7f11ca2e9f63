#pragma once

// Arbitrary-precision integers and rationals.  Backed by GMP's C++ classes:
// mpz_class is a canonical big integer and mpq_class keeps rationals reduced
// with positive denominator, which is exactly the invariant this module
// promises.

#include <gmpxx.h>

namespace exactalg {

using ZZ = mpz_class;
using QQ = mpq_class;

inline bool divides(const ZZ& k, const ZZ& f) {
    return mpz_divisible_p(f.get_mpz_t(), k.get_mpz_t()) != 0;
}

// Exact quotient f / k; caller must know k | f (checked by callers that
// need the NotDivisible error path, see mpoly.hpp).
inline ZZ divexact(const ZZ& f, const ZZ& k) {
    ZZ q;
    mpz_divexact(q.get_mpz_t(), f.get_mpz_t(), k.get_mpz_t());
    return q;
}

inline ZZ zz_pow(const ZZ& a, unsigned long e) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace exactalg
