#include <random>

#include "doctest.h"
#include "stablerep/cyclotomic.hpp"
#include "stablerep/errors.hpp"

using namespace stablerep;

namespace {

CycInt random_cyc(std::mt19937& rng, int p) {
    std::uniform_int_distribution<int> coeff_dist(-1000, 1000);
    CycInt x(p);
    for (int j = 0; j < p; ++j) x.add_zeta_multiple(j, BigInt(coeff_dist(rng)));
    return x;
}

} // namespace

TEST_CASE("odd prime recognition") {
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(97));
    CHECK(!is_odd_prime(2));
    CHECK(!is_odd_prime(9));
    CHECK(!is_odd_prime(1));
    CHECK_THROWS_AS(CycInt(4), domain_error);
}

TEST_CASE("canonical form") {
    // zeta^{p-1} rewrites to -(1 + zeta + ... + zeta^{p-2})
    CycInt top = CycInt::zeta_power(5, 4);
    for (int j = 0; j <= 3; ++j) CHECK(top.coeff(j) == BigInt(-1));
    CHECK(top.coeff(4).is_zero());

    // adding the full relation leaves any element unchanged
    std::mt19937 rng(1);
    for (int iter = 0; iter < 50; ++iter) {
        CycInt x = random_cyc(rng, 7);
        CycInt y = x;
        for (int j = 0; j < 7; ++j) y.add_zeta_multiple(j, BigInt(3));
        CHECK(x == y);
    }
}

TEST_CASE("g units") {
    CHECK(g_unit(7, 1) == CycInt::from_integer(7, BigInt(1)));
    CHECK(g_unit(7, 7).is_zero());
    CHECK(g_unit(7, 0).is_zero());

    // g_3 at p = 5 is zeta^-2 + 1 + zeta^2 and equals -g_2
    CycInt g3 = g_unit(5, 3);
    CycInt expect = CycInt::zeta_power(5, -2) + CycInt::from_integer(5, BigInt(1)) +
                    CycInt::zeta_power(5, 2);
    CHECK(g3 == expect);
    CHECK(g3 == -g_unit(5, 2));

    for (int p : {3, 5, 7, 11, 13}) {
        const CycInt delta = CycInt::zeta_power(p, 1) - CycInt::zeta_power(p, -1);
        for (int j = 1; j <= p - 1; ++j) {
            CHECK(g_unit(p, j) == -g_unit(p, p - j));
            CHECK(g_unit(p, j) * delta ==
                  CycInt::zeta_power(p, j) - CycInt::zeta_power(p, -j));
            CHECK(g_unit(p, j + p) == g_unit(p, j)); // p-periodic
            CHECK(g_unit(p, j).is_real());
        }
    }
}

TEST_CASE("cyclotomic ring axioms, randomized") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 10000; ++iter) {
        const int p = iter % 2 == 0 ? 7 : 13;
        CycInt a = random_cyc(rng, p), b = random_cyc(rng, p), c = random_cyc(rng, p);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("conjugation") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 500; ++iter) {
        const int p = iter % 2 == 0 ? 5 : 11;
        CycInt x = random_cyc(rng, p);
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x + x.conjugate()).is_real());
        CHECK((x * x.conjugate()).is_real());
    }
    CHECK(CycInt::zeta_power(7, 3).conjugate() == CycInt::zeta_power(7, 4));
}

TEST_CASE("real coordinates") {
    // basis element itself
    RealCycCoords rc = real_coords(real_basis_element(7, 1));
    CHECK(rc.coords == std::vector<BigInt>{BigInt(0), BigInt(1), BigInt(0)});

    CHECK(real_coords(CycInt(7)).coords == std::vector<BigInt>(3, BigInt(0)));

    // -1 = -g_1
    RealCycCoords neg = real_coords(CycInt::from_integer(7, BigInt(-1)));
    CHECK(neg.coords == std::vector<BigInt>{BigInt(-1), BigInt(0), BigInt(0)});

    // hand-solved: zeta^3 + zeta^4 = g_5 - g_3 at p = 7
    CycInt eta3 = CycInt::zeta_power(7, 3) + CycInt::zeta_power(7, 4);
    CHECK(real_coords(eta3).coords == std::vector<BigInt>{BigInt(0), BigInt(-1), BigInt(1)});

    CHECK_THROWS_AS(real_coords(CycInt::zeta_power(7, 1)), domain_error);

    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coeff_dist(-50, 50);
    for (int p : {3, 5, 7, 11, 13}) {
        for (int iter = 0; iter < 200; ++iter) {
            // round trip from random coordinates
            RealCycCoords v;
            v.p = p;
            for (int i = 0; i < (p - 1) / 2; ++i) v.coords.push_back(BigInt(coeff_dist(rng)));
            CycInt x = from_real_coords(v);
            CHECK(x.is_real());
            RealCycCoords back = real_coords(x);
            CHECK(back.coords == v.coords);

            // and from random real elements
            CycInt y = random_cyc(rng, p);
            CycInt real_part = y + y.conjugate();
            CHECK(from_real_coords(real_coords(real_part)) == real_part);
        }
    }
}

TEST_CASE("specialization at zeta") {
    LaurentPoly f;
    f.add_term(9, BigInt(2));  // zeta^9 = zeta^2 at p = 7
    f.add_term(-5, BigInt(1)); // zeta^{-5} = zeta^2 at p = 7
    CycInt x = specialize_at_zeta(f, 7);
    CHECK(x == CycInt::zeta_power(7, 2).scaled(BigInt(3)));
}
