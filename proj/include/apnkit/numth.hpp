#pragma once

#include <cstdint>
#include <vector>

#include "apnkit/int.hpp"

namespace apnkit::numth {

bool is_prime(unsigned long p);

/// Base-p expansion of a nonnegative integer, constant digit first.
/// Canonical form has no trailing zero digit; zero is the empty vector.
struct DigitVector {
    unsigned long base = 0;
    std::vector<unsigned long> digits;

    /// sum of digits[i] * base^i
    Int value() const;

    bool operator==(const DigitVector&) const = default;
};

DigitVector p_adic_digits(const Int& m, unsigned long p);

/// binomial(m, r) mod p computed digit by digit in base p. Returns 0 as soon
/// as some digit of r exceeds the matching digit of m (so 0 whenever r > m).
unsigned long lucas_binomial(const Int& m, const Int& r, unsigned long p);

/// Exact binomial coefficient, guarded at m <= 10^6. Independent of the
/// digitwise path; used as its oracle.
Int exact_binomial(const Int& m, const Int& r);

/// x in [1, m) with a*x = 1 (mod m). Throws NotInvertibleError when
/// gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

/// Coefficient of x^(q-1) in ((x+1)^d - x^d)^t mod (x^q - x) over Z_p,
/// q = p^n. A nonzero value certifies that (x+1)^d - x^d is not a
/// permutation polynomial of GF(q).
struct HermiteReport {
    unsigned long p = 0;
    unsigned n = 0;
    Int d;
    Int t;
    unsigned long c_mod_p = 0;
    std::uint64_t term_count = 0; // summands with a nonzero product

    bool certifies_not_permutation() const { return c_mod_p != 0; }
};

/// Requires 1 <= t <= q-2, t not divisible by p, d >= 1.
HermiteReport hermite_coefficient(unsigned long p, unsigned n, const Int& d, const Int& t);

} // namespace apnkit::numth
