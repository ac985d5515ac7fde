#include "apnkit/families.hpp"

#include <numeric>

#include "apnkit/errors.hpp"
#include "apnkit/numth.hpp"

namespace apnkit::families {

namespace {

// exact division or hard failure; generators never round
Int exact_div(const Int& num, const Int& den, const char* where) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error(std::string("inexact division in ") + where);
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

FamilyDescriptor make_descriptor(FamilyId id, unsigned long p, unsigned n, Int d) {
    FamilyDescriptor out;
    out.family_id = id;
    out.p = p;
    out.n = n;
    out.d = std::move(d);
    out.gcd_with_group = gcd(out.d, ipow(p, n) - 1);
    return out;
}

void require_odd_n(unsigned n, unsigned minimum) {
    if (n < minimum || n % 2 == 0)
        throw ParameterError("n must be odd and at least " + std::to_string(minimum));
}

} // namespace

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::CONJ_1_3: return "conj13";
        case FamilyId::CONJ_1_4: return "conj14";
        case FamilyId::CONJ_1_5: return "conj15";
        case FamilyId::THM_1_6_ZW3: return "zw3";
        case FamilyId::THM_1_7_ZW5: return "zw5";
        case FamilyId::THM_1_10: return "thm110";
        case FamilyId::PROP_3_2_HRS: return "hrs";
        case FamilyId::COR_3_3: return "cor33";
    }
    return "?";
}

FamilyDescriptor conj13_exponent(unsigned n) {
    require_odd_n(n, 5);
    const unsigned m = (n + 1) / 2;
    Int d = exact_div(ipow(3, m) - 1, 2, "conj13");
    std::string note = "n = 3 (mod 4) branch: d = (3^m - 1)/2";
    if (n % 4 == 1) {
        d += exact_div(ipow(3, n) - 1, 2, "conj13");
        note = "n = 1 (mod 4) branch: d = (3^m - 1)/2 + (3^n - 1)/2";
    }
    FamilyDescriptor out = make_descriptor(FamilyId::CONJ_1_3, 3, n, std::move(d));
    out.params["m"] = m;
    out.note = note;
    return out;
}

FamilyDescriptor conj14_exponent(unsigned n) {
    require_odd_n(n, 5);
    Int d = exact_div(ipow(3, n + 1) - 1, 8, "conj14");
    if (n % 4 == 1) d += exact_div(ipow(3, n) - 1, 2, "conj14");
    FamilyDescriptor out = make_descriptor(FamilyId::CONJ_1_4, 3, n, std::move(d));
    out.params["m"] = (n + 1) / 2;
    return out;
}

FamilyDescriptor conj15_exponent(unsigned n) {
    require_odd_n(n, 3);
    const unsigned m = (n + 1) / 2;
    Int d = exact_div(ipow(5, n) - 1, 4, "conj15") + exact_div(ipow(5, m) - 1, 2, "conj15");
    FamilyDescriptor out = make_descriptor(FamilyId::CONJ_1_5, 5, n, std::move(d));
    out.params["m"] = m;
    return out;
}

FamilyDescriptor zw_exponent(unsigned long p, unsigned n, unsigned k, const Int& u) {
    if (p != 3 && p != 5) throw ParameterError("zw families exist for p = 3 and p = 5 only");
    if (n < 1 || k < 1) throw ParameterError("n and k must be positive");
    if (std::gcd(n, k) != 1) throw ParameterError("gcd(n, k) must be 1");
    if (u < 1 || is_even(u)) throw ParameterError("u must be odd and positive");
    if (p == 5 && k % 2 != 0) throw ParameterError("k must be even for p = 5");

    const Int num = 2 + u * (ipow(p, n) - 1);
    const Int den = ipow(p, k) + 1;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw NoSolutionError("(2 + u(p^n - 1)) is not divisible by p^k + 1 for u = " +
                              to_string(u));
    Int d;
    mpz_divexact(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    FamilyDescriptor out = make_descriptor(p == 3 ? FamilyId::THM_1_6_ZW3 : FamilyId::THM_1_7_ZW5,
                                           p, n, std::move(d));
    out.params["k"] = k;
    out.params["u"] = u;
    out.apn_guaranteed = (p == 5) || (2 * k < n); // p = 3 with 2k >= n: only delta <= 2
    return out;
}

FamilyDescriptor thm110_exponent(unsigned n, unsigned l) {
    if (l < 2) throw ParameterError("l must be at least 2");
    const unsigned long block = 1ul << l;
    if ((n + 1ul) % block != 0) throw ParameterError("n must be -1 mod 2^l");
    const unsigned long k = (n + 1ul) / block;

    Int half = exact_div(ipow(5, n + 1) - 1, ipow(5, k) + 1, "thm110");
    half = exact_div(half, 2, "thm110");
    Int d = half + exact_div(ipow(5, n) - 1, 4, "thm110");
    FamilyDescriptor out = make_descriptor(FamilyId::THM_1_10, 5, n, std::move(d));
    out.params["l"] = l;
    out.params["k"] = Int(k);
    return out;
}

FamilyDescriptor hrs_exponent(unsigned k, unsigned n) {
    if (k < 1 || n < 1) throw ParameterError("k and n must be positive");
    if (std::gcd(2ul * n, static_cast<unsigned long>(k)) != 1)
        throw ParameterError("gcd(2n, k) must be 1");
    Int d = exact_div(ipow(5, k) + 1, 2, "hrs");
    FamilyDescriptor out = make_descriptor(FamilyId::PROP_3_2_HRS, 5, n, std::move(d));
    out.params["k"] = k;
    return out;
}

FamilyDescriptor cor33_exponent(unsigned n, unsigned l) {
    if (l < 1) throw ParameterError("l must be at least 1");
    const unsigned long block = 1ul << l;
    if ((n % (2 * block)) != block - 1)
        throw ParameterError("n must be 2^l - 1 mod 2^(l+1)");
    const unsigned long k = (n + 1ul) / block; // odd by the congruence
    if (std::gcd(2ul * n, k) != 1) throw std::logic_error("cor33: gcd(2n, k) != 1");

    FamilyDescriptor out = hrs_exponent(static_cast<unsigned>(k), n);
    out.family_id = FamilyId::COR_3_3;
    out.params["l"] = l;
    out.note = "exponent uses k = (n + 1)/2^l";
    return out;
}

Int inverse_exponent(unsigned long p, unsigned n, const Int& d) {
    if (!numth::is_prime(p)) throw ParameterError("p must be prime");
    if (n < 1) throw ParameterError("n must be positive");
    return numth::mod_inverse(d, ipow(p, n) - 1);
}

bool lift_reduce_check(unsigned n, unsigned l) {
    const FamilyDescriptor base = thm110_exponent(n, l); // validates l and the congruence
    const unsigned long block = 1ul << l;
    const unsigned long big_n = (block + 1) * static_cast<unsigned long>(n);
    const unsigned long big_k = (big_n + 1) / block;
    if ((big_n + 1) % block != 0) throw std::logic_error("lift_reduce_check: 2^l does not divide N+1");

    Int e = exact_div(ipow(5, big_n + 1) - 1, ipow(5, big_k) + 1, "lift_reduce_check");
    e = exact_div(e, 2, "lift_reduce_check");
    e += exact_div(ipow(5, big_n) - 1, 4, "lift_reduce_check");

    const Int group = ipow(5, n) - 1;
    return mod_floor(e, group) == mod_floor(base.d, group);
}

bool conj15_lift_check(unsigned n) {
    if (n < 3 || n % 4 != 3) throw ParameterError("n must be 3 mod 4");
    const unsigned m = (n + 1) / 2;

    const Int lifted = exact_div(ipow(5, 3ul * n) - 1, 4, "conj15_lift_check") +
                       exact_div(ipow(5, (3ul * n + 1) / 2) - 1, 2, "conj15_lift_check");
    const Int original = exact_div(ipow(5, n) - 1, 4, "conj15_lift_check") +
                         exact_div(ipow(5, m) - 1, 2, "conj15_lift_check");
    const Int lhs = lifted - original;

    const Int group = ipow(5, n) - 1;
    const Int rhs = group * exact_div(2 * ipow(5, m) + ipow(5, n) * (ipow(5, n) + 1), 4,
                                      "conj15_lift_check");
    return lhs == rhs && mod_floor(lhs, group) == 0;
}

std::vector<FamilyDescriptor> zw_candidates(unsigned long p, unsigned n, unsigned max_k) {
    if (p != 3 && p != 5) throw ParameterError("zw families exist for p = 3 and p = 5 only");
    if (n < 1) throw ParameterError("n must be positive");
    if (max_k == 0) max_k = n;
    std::vector<FamilyDescriptor> out;
    for (unsigned k = 1; k <= max_k; ++k) {
        if (std::gcd(n, k) != 1) continue;
        if (p == 5 && k % 2 != 0) continue;
        const Int u_bound = ipow(p, k) + 1;
        for (Int u = 1; u <= u_bound; u += 2) {
            try {
                out.push_back(zw_exponent(p, n, k, u));
            } catch (const NoSolutionError&) {
                // this (k, u) pair yields no integral exponent
            }
        }
    }
    return out;
}

} // namespace apnkit::families
