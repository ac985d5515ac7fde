#pragma once

#include <gmpxx.h>

#include <string>

namespace apnkit {

// All exponent and index arithmetic is exact and unbounded.
using Int = mpz_class;

// base^exp
inline Int ipow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// canonical residue in [0, m), m > 0, any sign of a
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_ulong(const Int& a) { return mpz_fits_ulong_p(a.get_mpz_t()) != 0; }

inline unsigned long to_ulong(const Int& a) { return mpz_get_ui(a.get_mpz_t()); }

inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }

inline std::string to_string(const Int& a) { return a.get_str(); }

} // namespace apnkit
