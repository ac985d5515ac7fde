#include <doctest.h>

#include <random>

#include "apnkit/errors.hpp"
#include "apnkit/ffield.hpp"

using namespace apnkit;
using namespace apnkit::ffield;

namespace {

FieldElement random_element(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, f.q_ulong() - 1);
    return f.element(dist(rng));
}

} // namespace

TEST_SUITE_BEGIN("ffield");

TEST_CASE("irreducibility by trial division") {
    CHECK(is_monic_irreducible({1, 0, 1}, 3));        // x^2 + 1
    CHECK_FALSE(is_monic_irreducible({2, 0, 1}, 3));  // x^2 - 1 = (x-1)(x+1)
    CHECK(is_monic_irreducible({1, 2, 0, 0, 0, 1}, 3)); // x^5 - x + 1
    CHECK_FALSE(is_monic_irreducible({1, 1, 0, 0, 0, 1}, 3)); // root at 1
    CHECK(is_monic_irreducible({0, 1}, 3)); // x itself, degree 1
}

TEST_CASE("default modulus is the smallest irreducible, constant term first") {
    CHECK(smallest_irreducible(3, 1) == std::vector<unsigned long>{0, 1});
    CHECK(smallest_irreducible(3, 5) == std::vector<unsigned long>{1, 0, 0, 0, 2, 1});
    CHECK(smallest_irreducible(5, 3) == std::vector<unsigned long>{1, 0, 1, 1});
    CHECK(smallest_irreducible(3, 7) == std::vector<unsigned long>{1, 0, 0, 0, 0, 1, 2, 1});
    CHECK(smallest_irreducible(5, 5) == std::vector<unsigned long>{1, 0, 0, 0, 4, 1});
    // deterministic: two constructions agree
    CHECK(Field(3, 5).modulus() == Field(3, 5).modulus());
}

TEST_CASE("field construction validation") {
    CHECK(Field(3, 1).q() == 3);
    CHECK(Field(3, 5).q() == 243);
    CHECK_NOTHROW(Field(3, 5, {1, 2, 0, 0, 0, 1})); // x^5 - x + 1, irreducible
    CHECK_THROWS_AS(Field(3, 5, {0, 0, 0, 0, 0, 1}), ParameterError); // x^5 reducible
    CHECK_THROWS_AS(Field(3, 5, {1, 2, 0, 0, 1}), ParameterError);    // wrong degree
    CHECK_THROWS_AS(Field(3, 5, {1, 2, 0, 0, 0, 2}), ParameterError); // not monic
    CHECK_THROWS_AS(Field(4, 2), ParameterError);                     // 4 not prime
    CHECK_THROWS_AS(Field(3, 0), ParameterError);
    CHECK_NOTHROW(Field(2, 3)); // characteristic 2 accepted
}

TEST_CASE("enumeration order") {
    const Field f31(3, 1);
    const auto elems = f31.enumerate();
    REQUIRE(elems.size() == 3);
    CHECK(elems[0].coeffs == std::vector<unsigned long>{0});
    CHECK(elems[1].coeffs == std::vector<unsigned long>{1});
    CHECK(elems[2].coeffs == std::vector<unsigned long>{2});

    const Field f53(5, 3);
    const auto all = f53.enumerate();
    REQUIRE(all.size() == 125);
    CHECK(f53.is_zero(all.front()));
    CHECK(all.back().coeffs == std::vector<unsigned long>{4, 4, 4});
    for (std::size_t i = 0; i < all.size(); ++i) REQUIRE(f53.index_of(all[i]) == i);

    CHECK(Field(3, 5).enumerate().size() == 243);
}

TEST_CASE("additive and multiplicative identities") {
    const Field f(3, 5);
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        const FieldElement x = random_element(f, rng);
        CHECK(f.mul(x, f.zero()) == f.zero());
        CHECK(f.mul(x, f.one()) == x);
        CHECK(f.add(x, f.neg(x)) == f.zero());
        CHECK(f.sub(x, x) == f.zero());
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const Field f35(3, 5);
    const Field f53(5, 3);
    CHECK_THROWS_AS(f35.add(f35.one(), f53.one()), ParameterError);
    CHECK_THROWS_AS(f35.mul(f53.one(), f35.one()), ParameterError);
    CHECK_THROWS_AS(f35.from_coeffs({1, 2}), ParameterError);
    CHECK_THROWS_AS(f35.element(243), ParameterError);
    CHECK(f35.from_coeffs({4, 3, 0, 0, 7}).coeffs ==
          std::vector<unsigned long>{1, 0, 0, 0, 1}); // entries reduced mod p
}

TEST_CASE("field axioms on random samples") {
    for (const Field& f : {Field(3, 5), Field(5, 3)}) {
        std::mt19937 rng(202408);
        for (int i = 0; i < 200; ++i) {
            const FieldElement x = random_element(f, rng);
            const FieldElement y = random_element(f, rng);
            const FieldElement z = random_element(f, rng);
            REQUIRE(f.mul(x, y) == f.mul(y, x));
            REQUIRE(f.add(x, y) == f.add(y, x));
            REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
            REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
            REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
        // every nonzero element has an inverse, found via x^(q-2)
        for (std::size_t i = 1; i < f.q_ulong(); ++i) {
            const FieldElement x = f.element(i);
            REQUIRE(f.mul(x, f.pow(x, f.q() - 2)) == f.one());
        }
    }
}

TEST_CASE("pow: zero conventions and Lagrange") {
    const Field f(3, 5);
    CHECK(f.pow(f.zero(), 5) == f.zero());
    CHECK(f.pow(f.zero(), 0) == f.one());
    for (std::size_t i = 1; i < f.q_ulong(); ++i) {
        REQUIRE(f.pow(f.element(i), f.q() - 1) == f.one());
        REQUIRE(f.pow(f.element(i), 0) == f.one());
    }
    CHECK_THROWS_AS(f.pow(f.one(), -1), ParameterError);
}

TEST_CASE("pow: Frobenius fixes GF(3^5) pointwise at q") {
    const Field f(3, 5);
    for (const FieldElement& x : f.enumerate()) REQUIRE(f.pow(x, 243) == x);
}

TEST_CASE("pow: exponent additivity and small-exponent oracle") {
    const Field f(3, 5);
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        const FieldElement x = random_element(f, rng);
        REQUIRE(f.mul(f.pow(x, 2), f.pow(x, 3)) == f.pow(x, 5));
    }
    std::uniform_int_distribution<unsigned long> dexp(0, 1000);
    for (int i = 0; i < 100; ++i) {
        const FieldElement x = random_element(f, rng);
        const unsigned long d = dexp(rng);
        FieldElement byMul = f.one();
        for (unsigned long s = 0; s < d; ++s) byMul = f.mul(byMul, x);
        REQUIRE(f.pow(x, d) == byMul);
    }
    // exponents far beyond q^2 reduce mod q-1
    for (int i = 0; i < 20; ++i) {
        const FieldElement x = random_element(f, rng);
        if (f.is_zero(x)) continue;
        const Int big = Int("987654321987654321") * 242 + 17;
        REQUIRE(f.pow(x, big) == f.pow(x, mod_floor(big, 242)));
    }
}

TEST_CASE("resource guards") {
    CHECK(Field(3, 5).q_ulong() == 243);
    // GF(3^17) is constructible but too large to enumerate densely
    const Field big(3, 17);
    CHECK(big.q() == ipow(3, 17));
    CHECK(big.q_ulong() == 129140163ul);
    CHECK_THROWS_AS(big.enumerate(), ResourceError);
}

TEST_SUITE_END();
