#include "apnkit/ffield.hpp"

#include <algorithm>

#include "apnkit/errors.hpp"
#include "apnkit/numth.hpp"

namespace apnkit::ffield {

namespace {

constexpr unsigned long kMaxP = 1ul << 32; // products must fit in 64 bits
constexpr unsigned long kEnumerateGuard = 100000000ul;

std::size_t poly_degree(const std::vector<unsigned long>& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1; // degree of the zero polynomial treated as 0
}

bool poly_is_zero(const std::vector<unsigned long>& a) {
    return std::all_of(a.begin(), a.end(), [](unsigned long c) { return c == 0; });
}

// remainder of a modulo monic g, in place
void poly_rem_inplace(std::vector<unsigned long>& a, const std::vector<unsigned long>& g,
                      unsigned long p) {
    const std::size_t dg = g.size() - 1;
    while (!poly_is_zero(a)) {
        const std::size_t da = poly_degree(a);
        if (da < dg) break;
        const unsigned long c = a[da];
        if (c == 0) continue; // unreachable; poly_degree skips zeros
        const std::size_t shift = da - dg;
        for (std::size_t j = 0; j <= dg; ++j) {
            const unsigned long s = c * (g[j] % p) % p;
            a[shift + j] = (a[shift + j] + p - s) % p;
        }
    }
}

void require_field_params(unsigned long p, unsigned n) {
    if (p >= kMaxP) throw ParameterError("p too large (must fit in 32 bits)");
    if (!numth::is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw ParameterError("degree n must be at least 1");
}

} // namespace

bool is_monic_irreducible(const std::vector<unsigned long>& poly, unsigned long p) {
    if (p >= kMaxP || !numth::is_prime(p)) throw ParameterError("p must be a 32-bit prime");
    if (poly.size() < 2) return false;
    std::vector<unsigned long> f = poly;
    for (auto& c : f) c %= p;
    const std::size_t n = f.size() - 1;
    if (f[n] != 1) return false; // not monic at the stated degree

    // trial division by every monic polynomial of degree 1 .. n/2
    for (std::size_t dg = 1; dg <= n / 2; ++dg) {
        std::vector<unsigned long> g(dg + 1, 0);
        g[dg] = 1;
        while (true) {
            std::vector<unsigned long> rem = f;
            poly_rem_inplace(rem, g, p);
            if (poly_is_zero(rem)) return false;
            // next candidate divisor
            std::size_t i = 0;
            while (i < dg && ++g[i] == p) g[i++] = 0;
            if (i == dg) break;
        }
    }
    return true;
}

std::vector<unsigned long> smallest_irreducible(unsigned long p, unsigned n) {
    require_field_params(p, n);
    std::vector<unsigned long> f(n + 1, 0);
    f[n] = 1;
    while (true) {
        if (is_monic_irreducible(f, p)) return f;
        // advance in lexicographic order, constant term most significant
        std::size_t i = n; // scan low-order end of the comparison, i.e. f[n-1] first
        while (i > 0 && ++f[i - 1] == p) f[--i] = 0;
        if (i == 0) throw std::logic_error("no irreducible polynomial found"); // cannot happen
    }
}

Field::Field(unsigned long p, unsigned n) : Field(p, n, smallest_irreducible(p, n)) {}

Field::Field(unsigned long p, unsigned n, std::vector<unsigned long> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    require_field_params(p, n);
    if (modulus_.size() != static_cast<std::size_t>(n) + 1)
        throw ParameterError("modulus must have degree exactly n");
    for (auto& c : modulus_) c %= p_;
    if (modulus_[n_] != 1) throw ParameterError("modulus must be monic");
    if (!is_monic_irreducible(modulus_, p_))
        throw ParameterError("modulus is reducible over Z_" + std::to_string(p_));
    q_ = ipow(p_, n_);
}

unsigned long Field::q_ulong() const {
    if (!fits_ulong(q_)) throw ResourceError("q = p^n does not fit in a machine word");
    return to_ulong(q_);
}

std::string Field::modulus_string() const {
    std::string out;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        const unsigned long c = modulus_[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

FieldElement Field::zero() const { return FieldElement{std::vector<unsigned long>(n_, 0)}; }

FieldElement Field::one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement Field::from_coeffs(std::vector<unsigned long> coeffs) const {
    if (coeffs.size() != n_)
        throw ParameterError("coefficient vector must have length n");
    for (auto& c : coeffs) c %= p_;
    return FieldElement{std::move(coeffs)};
}

FieldElement Field::element(std::size_t index) const {
    FieldElement e = zero();
    for (unsigned i = 0; i < n_; ++i) {
        e.coeffs[i] = index % p_;
        index /= p_;
    }
    if (index != 0) throw ParameterError("element index out of range");
    return e;
}

std::size_t Field::index_of(const FieldElement& x) const {
    check_element(x);
    std::size_t v = 0;
    for (std::size_t i = n_; i-- > 0;) v = v * p_ + x.coeffs[i];
    return v;
}

std::vector<FieldElement> Field::enumerate() const {
    const unsigned long q = q_ulong();
    if (q > kEnumerateGuard) throw ResourceError("field too large to enumerate");
    std::vector<FieldElement> out;
    out.reserve(q);
    FieldElement cur = zero();
    for (unsigned long i = 0; i < q; ++i) {
        out.push_back(cur);
        for (unsigned j = 0; j < n_; ++j) {
            if (++cur.coeffs[j] < p_) break;
            cur.coeffs[j] = 0;
        }
    }
    return out;
}

bool Field::is_zero(const FieldElement& x) const {
    check_element(x);
    return poly_is_zero(x.coeffs);
}

void Field::check_element(const FieldElement& x) const {
    if (x.coeffs.size() != n_)
        throw ParameterError("element does not belong to this field (dimension mismatch)");
    for (unsigned long c : x.coeffs)
        if (c >= p_) throw ParameterError("element coefficient not reduced mod p");
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
    check_element(x);
    check_element(y);
    FieldElement r = zero();
    for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % p_;
    return r;
}

FieldElement Field::neg(const FieldElement& x) const {
    check_element(x);
    FieldElement r = zero();
    for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = (p_ - x.coeffs[i]) % p_;
    return r;
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
    check_element(x);
    check_element(y);
    FieldElement r = zero();
    for (unsigned i = 0; i < n_; ++i) r.coeffs[i] = (x.coeffs[i] + p_ - y.coeffs[i]) % p_;
    return r;
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
    check_element(x);
    check_element(y);
    std::vector<unsigned long> prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        const unsigned long xi = x.coeffs[i];
        if (xi == 0) continue;
        for (unsigned j = 0; j < n_; ++j) {
            prod[i + j] = (prod[i + j] + xi * y.coeffs[j]) % p_;
        }
    }
    // fold x^k for k >= n using x^n = -(modulus minus leading term)
    for (std::size_t k = prod.size(); k-- > n_;) {
        const unsigned long c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned j = 0; j < n_; ++j) {
            const unsigned long s = c * modulus_[j] % p_;
            prod[k - n_ + j] = (prod[k - n_ + j] + p_ - s) % p_;
        }
    }
    prod.resize(n_);
    return FieldElement{std::move(prod)};
}

FieldElement Field::pow(const FieldElement& x, const Int& d) const {
    check_element(x);
    if (d < 0) throw ParameterError("exponent must be nonnegative");
    if (is_zero(x)) return d == 0 ? one() : zero();
    const Int e = mod_floor(d, q_ - 1);
    if (e == 0) return one(); // covers d = 0 and positive multiples of q-1
    FieldElement r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t b = bits; b-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), b)) r = mul(r, x);
    }
    return r;
}

} // namespace apnkit::ffield
