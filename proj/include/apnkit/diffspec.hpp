#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "apnkit/ffield.hpp"
#include "apnkit/int.hpp"

namespace apnkit::diffspec {

/// Exact solution counts N(a, b) of (x+a)^d - x^d = b over all b in F_q,
/// for one fixed nonzero difference a. counts is dense, indexed by the
/// field's enumeration order of b; histogram is derived from it.
struct DifferentialSpectrum {
    Int d;
    ffield::FieldElement a;
    std::vector<std::uint64_t> counts;
    std::map<std::uint64_t, std::uint64_t> histogram; // multiplicity -> #b attaining it
    std::uint64_t max_count = 0;
};

DifferentialSpectrum spectrum(const ffield::Field& field, const Int& d,
                              const ffield::FieldElement& a);

/// Differential uniformity of x -> x^d. Fast path: only the a = 1 spectrum
/// is needed for power maps.
std::uint64_t delta(const ffield::Field& field, const Int& d);

/// Slow path sweeping every a != 0; must agree with delta().
std::uint64_t delta_all_differences(const ffield::Field& field, const Int& d);

bool is_apn(const ffield::Field& field, const Int& d);

/// Orbit of d under multiplication by p mod q-1. All exponents in one coset
/// share the same differential uniformity.
struct ExponentClass {
    unsigned long p = 0;
    unsigned n = 0;
    Int representative;     // minimum of the coset
    std::vector<Int> coset; // sorted ascending
    Int gcd_with_group;     // gcd(d, q-1)

    bool contains(const Int& e) const;
};

ExponentClass cyclotomic_coset(unsigned long p, unsigned n, const Int& d);

/// Direct bijection test of x -> (x+1)^d - x^d by image-size check.
bool is_permutation_derivative(const ffield::Field& field, const Int& d);

/// Coefficient of x^(q-1) in ((x+1)^d - x^d)^t, computed by dense polynomial
/// multiplication with reduction mod x^q - x (x^s -> x^((s-1) mod (q-1) + 1)
/// for s >= 1). Guarded at q <= 10^5.
unsigned long symbolic_power_reduce(const ffield::Field& field, const Int& d, const Int& t);

/// Full permutation-polynomial criterion applied to g = (x+1)^d - x^d:
/// g has exactly one root, and every reduction g^t for 1 <= t <= q-2 with
/// t not divisible by p has degree < q-1. Guarded at q <= 3000.
bool hermite_dickson_is_permutation(const ffield::Field& field, const Int& d);

/// All canonical coset representatives d in [1, q-2] whose differential
/// uniformity is at most delta_max, sorted ascending. Guarded at q <= 10^5.
std::vector<ExponentClass> apn_search(const ffield::Field& field, std::uint64_t delta_max);

} // namespace apnkit::diffspec
