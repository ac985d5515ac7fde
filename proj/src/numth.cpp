#include "apnkit/numth.hpp"

#include <algorithm>

#include "apnkit/errors.hpp"

namespace apnkit::numth {

namespace {

constexpr unsigned long kMaxPrime = 1ul << 32; // keeps p*p inside 64 bits
constexpr unsigned long kExactBinomialGuard = 1000000ul;

void require_prime(unsigned long p) {
    if (p >= kMaxPrime) throw ParameterError("p too large (must fit in 32 bits)");
    if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
}

unsigned long pow_mod(unsigned long b, unsigned long e, unsigned long p) {
    unsigned long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// binomial(mi, ri) mod p for digits mi, ri < p, p prime
unsigned long digit_binomial_mod_p(unsigned long mi, unsigned long ri, unsigned long p) {
    if (ri > mi) return 0;
    ri = std::min(ri, mi - ri);
    unsigned long num = 1, den = 1;
    for (unsigned long s = 1; s <= ri; ++s) {
        num = num * ((mi - ri + s) % p) % p;
        den = den * (s % p) % p;
    }
    return num * pow_mod(den, p - 2, p) % p;
}

} // namespace

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (unsigned long f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

Int DigitVector::value() const {
    Int acc = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc *= base;
        acc += *it;
    }
    return acc;
}

DigitVector p_adic_digits(const Int& m, unsigned long p) {
    require_prime(p);
    if (m < 0) throw ParameterError("m must be nonnegative");
    DigitVector out;
    out.base = p;
    if (fits_ulong(m)) {
        unsigned long v = to_ulong(m);
        while (v) {
            out.digits.push_back(v % p);
            v /= p;
        }
    } else {
        Int v = m;
        while (v != 0) {
            out.digits.push_back(mpz_fdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), p));
        }
    }
    return out;
}

unsigned long lucas_binomial(const Int& m, const Int& r, unsigned long p) {
    require_prime(p);
    if (m < 0 || r < 0) throw ParameterError("m and r must be nonnegative");
    Int mv = m, rv = r;
    unsigned long acc = 1;
    while (mv != 0 || rv != 0) {
        unsigned long mi = mpz_fdiv_q_ui(mv.get_mpz_t(), mv.get_mpz_t(), p);
        unsigned long ri = mpz_fdiv_q_ui(rv.get_mpz_t(), rv.get_mpz_t(), p);
        if (ri > mi) return 0;
        acc = acc * digit_binomial_mod_p(mi, ri, p) % p;
    }
    return acc;
}

Int exact_binomial(const Int& m, const Int& r) {
    if (m < 0 || r < 0) throw ParameterError("m and r must be nonnegative");
    if (m > kExactBinomialGuard)
        throw ResourceError("exact_binomial guard exceeded (m <= 10^6)");
    if (r > m) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), to_ulong(m), to_ulong(r));
    return out;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 2) throw ParameterError("modulus must be at least 2");
    Int out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertibleError("gcd(" + to_string(a) + ", " + to_string(m) + ") = " +
                                 to_string(gcd(a, m)) + ", not invertible");
    return out;
}

HermiteReport hermite_coefficient(unsigned long p, unsigned n, const Int& d, const Int& t) {
    require_prime(p);
    if (n < 1) throw ParameterError("n must be positive");
    if (d < 1) throw ParameterError("d must be positive");
    const Int q = ipow(p, n);
    const Int group = q - 1;
    if (t < 1 || t > q - 2) throw ParameterError("t must lie in [1, q-2]");
    if (mod_floor(t, p) == 0) throw ParameterError("t must not be divisible by p");

    // C = sum_{i=1}^{floor(dt/(q-1))} sum_{k=ceil((dt-i(q-1))/d)}^{t}
    //       (-1)^(t-k) binom(t, k) binom(dk, dt - i(q-1))   (mod p)
    const Int dt = d * t;
    const Int imax = dt / group;
    unsigned long c = 0;
    std::uint64_t terms = 0;
    for (Int i = 1; i <= imax; ++i) {
        const Int j = dt - i * group;
        Int k = (j + d - 1) / d; // ceil(j/d); j >= 0 within the i range
        if (k < 0) k = 0;
        for (; k <= t; ++k) {
            const unsigned long b1 = lucas_binomial(t, k, p);
            if (b1 == 0) continue;
            const unsigned long b2 = lucas_binomial(d * k, j, p);
            if (b2 == 0) continue;
            const unsigned long sign = is_even(t - k) ? 1 : p - 1;
            c = (c + sign * b1 % p * b2) % p;
            ++terms;
        }
    }

    HermiteReport rep;
    rep.p = p;
    rep.n = n;
    rep.d = d;
    rep.t = t;
    rep.c_mod_p = c;
    rep.term_count = terms;
    return rep;
}

} // namespace apnkit::numth
