#pragma once

#include <map>
#include <string>
#include <vector>

#include "apnkit/int.hpp"

namespace apnkit::families {

enum class FamilyId {
    CONJ_1_3,
    CONJ_1_4,
    CONJ_1_5,
    THM_1_6_ZW3,
    THM_1_7_ZW5,
    THM_1_10,
    PROP_3_2_HRS,
    COR_3_3,
};

const char* family_name(FamilyId id);

/// One generated exponent together with the parameters that produced it.
/// Every internal division of a generator is exact; an inexact division in
/// a valid parameter range is a hard failure, not a rounding.
struct FamilyDescriptor {
    FamilyId family_id;
    unsigned long p = 0;
    unsigned n = 0;
    std::map<std::string, Int> params;
    Int d;
    Int gcd_with_group;         // gcd(d, p^n - 1)
    bool apn_guaranteed = true; // false when only delta <= 2 is guaranteed
    std::string note;
};

/// p = 3, n odd >= 5, m = (n+1)/2:
///   d = (3^m - 1)/2                 for n = 3 (mod 4)
///   d = (3^m - 1)/2 + (3^n - 1)/2   for n = 1 (mod 4)
FamilyDescriptor conj13_exponent(unsigned n);

/// p = 3, n odd >= 5:
///   d = (3^(n+1) - 1)/8                 for n = 3 (mod 4)
///   d = (3^(n+1) - 1)/8 + (3^n - 1)/2   for n = 1 (mod 4)
FamilyDescriptor conj14_exponent(unsigned n);

/// p = 5, n odd >= 3, m = (n+1)/2: d = (5^n - 1)/4 + (5^m - 1)/2
FamilyDescriptor conj15_exponent(unsigned n);

/// d solving (p^k + 1) d - 2 = u (p^n - 1), i.e. d = (2 + u(p^n - 1))/(p^k + 1).
/// Requires p in {3, 5}, gcd(n, k) = 1, u odd; for p = 5 additionally k even.
/// Throws NoSolutionError when the division is not exact. For p = 3 the APN
/// guarantee needs 2k < n; otherwise only delta <= 2 holds (flag, not error).
FamilyDescriptor zw_exponent(unsigned long p, unsigned n, unsigned k, const Int& u);

/// p = 5, l >= 2, n = -1 (mod 2^l):
///   d = (1/2) (5^(n+1) - 1)/(5^((n+1)/2^l) + 1) + (5^n - 1)/4
FamilyDescriptor thm110_exponent(unsigned n, unsigned l);

/// p = 5, gcd(2n, k) = 1: d = (5^k + 1)/2
FamilyDescriptor hrs_exponent(unsigned k, unsigned n);

/// p = 5, n = 2^l - 1 (mod 2^(l+1)): d = (5^((n+1)/2^l) + 1)/2
FamilyDescriptor cor33_exponent(unsigned n, unsigned l);

/// d^(-1) mod p^n - 1; exponent inversion preserves differential uniformity.
Int inverse_exponent(unsigned long p, unsigned n, const Int& d);

/// Checks that the degree-(2^l+1)n lift e of the thm110 exponent satisfies
/// e = d (mod 5^n - 1). Requires l >= 2 and n = -1 (mod 2^l).
bool lift_reduce_check(unsigned n, unsigned l);

/// For n = 3 (mod 4), verifies the exact integer identity
///   (5^(3n)-1)/4 + (5^((3n+1)/2)-1)/2 - (5^n-1)/4 - (5^m-1)/2
///     = (5^n - 1)(2*5^m + 5^n(5^n + 1))/4
/// and that the left side is divisible by 5^n - 1.
bool conj15_lift_check(unsigned n);

/// All zw exponents for (p, n): k in [1, max_k] with the family's side
/// conditions, u odd up to p^k + 1 (d cycles mod p^n - 1 beyond that).
/// max_k = 0 means k up to n.
std::vector<FamilyDescriptor> zw_candidates(unsigned long p, unsigned n, unsigned max_k = 0);

} // namespace apnkit::families
