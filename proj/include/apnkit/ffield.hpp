#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apnkit/int.hpp"

namespace apnkit::ffield {

/// Element of GF(p^n): coefficient vector of length n over Z_p, constant
/// term first. Always reduced mod p.
struct FieldElement {
    std::vector<unsigned long> coeffs;

    bool operator==(const FieldElement&) const = default;
};

/// Trial-division irreducibility test for a monic polynomial over Z_p
/// (coefficients constant-first, leading coefficient last).
bool is_monic_irreducible(const std::vector<unsigned long>& poly, unsigned long p);

/// Lexicographically smallest monic irreducible of degree n over Z_p,
/// coefficients compared from the constant term upward.
std::vector<unsigned long> smallest_irreducible(unsigned long p, unsigned n);

/// GF(p^n) in the polynomial basis. Immutable after construction; all
/// arithmetic is pure and safe to share across threads.
class Field {
public:
    /// Picks the smallest irreducible modulus.
    Field(unsigned long p, unsigned n);
    /// Uses the supplied monic irreducible modulus (degree n, length n+1).
    Field(unsigned long p, unsigned n, std::vector<unsigned long> modulus);

    unsigned long p() const { return p_; }
    unsigned n() const { return n_; }
    const Int& q() const { return q_; }
    /// q as a machine word; throws ResourceError when it does not fit.
    unsigned long q_ulong() const;
    const std::vector<unsigned long>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Reduces the entries mod p; pads or rejects on wrong length.
    FieldElement from_coeffs(std::vector<unsigned long> coeffs) const;

    /// Enumeration order: element(i) has the base-p digits of i as
    /// coefficients, constant term = least significant digit.
    FieldElement element(std::size_t index) const;
    std::size_t index_of(const FieldElement& x) const;
    /// All q elements in enumeration order, each exactly once.
    std::vector<FieldElement> enumerate() const;

    bool is_zero(const FieldElement& x) const;
    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;

    /// x^d by square and multiply. For x != 0 the exponent is reduced mod
    /// q-1 (a positive multiple of q-1 yields 1). 0^0 = 1, 0^d = 0 for d > 0.
    FieldElement pow(const FieldElement& x, const Int& d) const;

private:
    void check_element(const FieldElement& x) const;

    unsigned long p_;
    unsigned n_;
    std::vector<unsigned long> modulus_;
    Int q_;
};

} // namespace apnkit::ffield
