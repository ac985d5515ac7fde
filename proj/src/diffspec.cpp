#include "apnkit/diffspec.hpp"

#include <algorithm>

#include "apnkit/errors.hpp"
#include "apnkit/numth.hpp"

namespace apnkit::diffspec {

using ffield::Field;
using ffield::FieldElement;

namespace {

constexpr unsigned long kSpectrumGuard = 10000000ul; // dense counts per field element
constexpr unsigned long kSymbolicGuard = 100000ul;   // dense degree-q polynomials
constexpr unsigned long kHermiteDicksonGuard = 3000ul;
constexpr unsigned long kSearchGuard = 100000ul;

unsigned long guarded_q(const Field& field, unsigned long guard, const char* what) {
    const unsigned long q = field.q_ulong();
    if (q > guard) throw ResourceError(std::string(what) + ": q exceeds the guard");
    return q;
}

// index of elems[i]^d for every i
std::vector<std::size_t> power_table(const Field& field, const std::vector<FieldElement>& elems,
                                     const Int& d) {
    std::vector<std::size_t> idx(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        idx[i] = field.index_of(field.pow(elems[i], d));
    return idx;
}

// dense product in Z_p[x]/(x^q - x); inputs and output have length q
std::vector<unsigned long> ring_mul(const std::vector<unsigned long>& u,
                                    const std::vector<unsigned long>& v, unsigned long p) {
    const std::size_t q = u.size();
    std::vector<unsigned long> w(q, 0);
    for (std::size_t i = 0; i < q; ++i) {
        const unsigned long ui = u[i];
        if (ui == 0) continue;
        for (std::size_t j = 0; j < q; ++j) {
            if (v[j] == 0) continue;
            std::size_t s = i + j;
            if (s >= q) s -= q - 1;
            w[s] = (w[s] + ui * v[j]) % p;
        }
    }
    return w;
}

std::vector<unsigned long> ring_pow(std::vector<unsigned long> base, const Int& e,
                                    unsigned long p) {
    std::vector<unsigned long> r(base.size(), 0);
    r[0] = 1;
    if (e == 0) return r;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t b = bits; b-- > 0;) {
        r = ring_mul(r, r, p);
        if (mpz_tstbit(e.get_mpz_t(), b)) r = ring_mul(r, base, p);
    }
    return r;
}

// coefficient vector of (x+1)^d - x^d reduced mod (x^q - x), length q
std::vector<unsigned long> derivative_poly(unsigned long q, unsigned long p, const Int& d) {
    std::vector<unsigned long> xp1(q, 0);
    xp1[0] = 1;
    xp1[1 % q] = (xp1[1 % q] + 1) % p;
    std::vector<unsigned long> g = ring_pow(std::move(xp1), d, p);
    const unsigned long md = d == 0 ? 0 : to_ulong(mod_floor(d - 1, Int(q) - 1)) + 1;
    g[md] = (g[md] + p - 1) % p;
    return g;
}

void count_spectrum(const Field& field, const std::vector<FieldElement>& elems,
                    const std::vector<std::size_t>& pow_idx, const FieldElement& a,
                    std::vector<std::uint64_t>& counts) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t x = 0; x < elems.size(); ++x) {
        const std::size_t xa = field.index_of(field.add(elems[x], a));
        const FieldElement b = field.sub(elems[pow_idx[xa]], elems[pow_idx[x]]);
        ++counts[field.index_of(b)];
    }
}

} // namespace

bool ExponentClass::contains(const Int& e) const {
    return std::binary_search(coset.begin(), coset.end(), e);
}

DifferentialSpectrum spectrum(const Field& field, const Int& d, const FieldElement& a) {
    if (d < 0) throw ParameterError("exponent must be nonnegative");
    if (field.is_zero(a)) throw ParameterError("difference a must be nonzero");
    guarded_q(field, kSpectrumGuard, "spectrum");

    const auto elems = field.enumerate();
    const auto pow_idx = power_table(field, elems, d);

    DifferentialSpectrum out;
    out.d = d;
    out.a = a;
    out.counts.assign(elems.size(), 0);
    count_spectrum(field, elems, pow_idx, a, out.counts);
    for (const std::uint64_t c : out.counts) {
        ++out.histogram[c];
        out.max_count = std::max(out.max_count, c);
    }
    return out;
}

std::uint64_t delta(const Field& field, const Int& d) {
    return spectrum(field, d, field.one()).max_count;
}

std::uint64_t delta_all_differences(const Field& field, const Int& d) {
    if (d < 0) throw ParameterError("exponent must be nonnegative");
    guarded_q(field, kSpectrumGuard, "delta_all_differences");

    const auto elems = field.enumerate();
    const auto pow_idx = power_table(field, elems, d);
    std::vector<std::uint64_t> counts(elems.size());
    std::uint64_t best = 0;
    for (std::size_t ai = 1; ai < elems.size(); ++ai) {
        count_spectrum(field, elems, pow_idx, elems[ai], counts);
        best = std::max(best, *std::max_element(counts.begin(), counts.end()));
    }
    return best;
}

bool is_apn(const Field& field, const Int& d) { return delta(field, d) == 2; }

ExponentClass cyclotomic_coset(unsigned long p, unsigned n, const Int& d) {
    if (!numth::is_prime(p)) throw ParameterError("p must be prime");
    if (n < 1) throw ParameterError("n must be positive");
    const Int group = ipow(p, n) - 1;
    if (d < 0 || d > group - 1) throw ParameterError("d must lie in [0, q-2]");

    ExponentClass cls;
    cls.p = p;
    cls.n = n;
    cls.gcd_with_group = gcd(d, group);
    Int cur = d;
    do {
        cls.coset.push_back(cur);
        cur = mod_floor(cur * p, group);
    } while (cur != d);
    std::sort(cls.coset.begin(), cls.coset.end());
    cls.representative = cls.coset.front();
    return cls;
}

bool is_permutation_derivative(const Field& field, const Int& d) {
    if (d < 0) throw ParameterError("exponent must be nonnegative");
    guarded_q(field, kSpectrumGuard, "is_permutation_derivative");

    const auto elems = field.enumerate();
    const auto pow_idx = power_table(field, elems, d);
    const FieldElement one = field.one();
    std::vector<bool> seen(elems.size(), false);
    for (std::size_t x = 0; x < elems.size(); ++x) {
        const std::size_t x1 = field.index_of(field.add(elems[x], one));
        const std::size_t v = field.index_of(field.sub(elems[pow_idx[x1]], elems[pow_idx[x]]));
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

unsigned long symbolic_power_reduce(const Field& field, const Int& d, const Int& t) {
    const unsigned long q = guarded_q(field, kSymbolicGuard, "symbolic_power_reduce");
    if (d < 0) throw ParameterError("exponent must be nonnegative");
    if (t < 1 || t > Int(q) - 2) throw ParameterError("t must lie in [1, q-2]");
    const unsigned long p = field.p();

    const std::vector<unsigned long> g = derivative_poly(q, p, d);
    std::vector<unsigned long> gt;
    if (t <= 8) {
        gt = g;
        for (Int i = 1; i < t; ++i) gt = ring_mul(gt, g, p);
    } else {
        gt = ring_pow(g, t, p);
    }
    return gt[q - 1];
}

bool hermite_dickson_is_permutation(const Field& field, const Int& d) {
    const unsigned long q = guarded_q(field, kHermiteDicksonGuard, "hermite_dickson_is_permutation");
    if (d < 0) throw ParameterError("exponent must be nonnegative");
    const unsigned long p = field.p();

    // (a) exactly one root of g(x) = (x+1)^d - x^d, by direct evaluation
    const auto elems = field.enumerate();
    const auto pow_idx = power_table(field, elems, d);
    const FieldElement one = field.one();
    std::size_t roots = 0;
    for (std::size_t x = 0; x < elems.size(); ++x) {
        const std::size_t x1 = field.index_of(field.add(elems[x], one));
        if (pow_idx[x1] == pow_idx[x]) ++roots;
    }
    if (roots != 1) return false;

    // (b) deg(g^t mod x^q - x) < q-1 for every valid t
    const std::vector<unsigned long> g = derivative_poly(q, p, d);
    std::vector<unsigned long> cur = g;
    for (unsigned long t = 1; t + 1 < q; ++t) {
        if (t % p != 0 && cur[q - 1] != 0) return false;
        if (t + 2 < q) cur = ring_mul(cur, g, p);
    }
    return true;
}

std::vector<ExponentClass> apn_search(const Field& field, std::uint64_t delta_max) {
    const unsigned long q = guarded_q(field, kSearchGuard, "apn_search");
    std::vector<ExponentClass> out;
    if (q < 3) return out;
    const unsigned long group = q - 1;
    const unsigned long p = field.p();

    const auto elems = field.enumerate();
    const FieldElement one = field.one();
    std::vector<std::size_t> shift_idx(q);
    for (std::size_t i = 0; i < q; ++i) shift_idx[i] = field.index_of(field.add(elems[i], one));

    std::vector<std::size_t> pow_idx(q);
    std::vector<std::uint64_t> counts(q);
    for (unsigned long d = 1; d <= q - 2; ++d) {
        // visit each coset once, at its minimum
        bool canonical = true;
        for (unsigned long e = d * p % group; e != d; e = e * p % group) {
            if (e < d) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;

        const Int dd(d);
        for (std::size_t i = 0; i < q; ++i)
            pow_idx[i] = field.index_of(field.pow(elems[i], dd));
        std::fill(counts.begin(), counts.end(), 0);
        std::uint64_t max_count = 0;
        for (std::size_t x = 0; x < q; ++x) {
            const std::size_t v =
                field.index_of(field.sub(elems[pow_idx[shift_idx[x]]], elems[pow_idx[x]]));
            max_count = std::max(max_count, ++counts[v]);
        }
        if (max_count <= delta_max) out.push_back(cyclotomic_coset(p, field.n(), dd));
    }
    return out;
}

} // namespace apnkit::diffspec
