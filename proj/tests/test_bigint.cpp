#include <random>

#include "doctest.h"
#include "stablerep/bigint.hpp"
#include "stablerep/errors.hpp"

using stablerep::BigInt;

TEST_CASE("bigint small arithmetic matches native") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int iter = 0; iter < 20000; ++iter) {
        const long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)) == BigInt(a + b));
        CHECK((BigInt(a) - BigInt(b)) == BigInt(a - b));
        CHECK((BigInt(a) * BigInt(b)) == BigInt(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK(BigInt(a).to_string() == std::to_string(a));
        CHECK(BigInt(a).to_i64() == a);
    }
}

TEST_CASE("bigint large values") {
    BigInt two_pow_128(1);
    for (int i = 0; i < 128; ++i) two_pow_128 *= BigInt(2);
    CHECK(two_pow_128.to_string() == "340282366920938463463374607431768211456");
    CHECK(!two_pow_128.to_i64().has_value());

    BigInt fact(1);
    for (int i = 2; i <= 25; ++i) fact *= BigInt(i);
    CHECK(fact.to_string() == "15511210043330985984000000");

    CHECK((two_pow_128 - two_pow_128).is_zero());
    CHECK((two_pow_128 + (-two_pow_128)).is_zero());
    CHECK((two_pow_128 * BigInt(0)).is_zero());

    uint32_t rem = 7;
    BigInt q = two_pow_128.divmod_u32(1000000007u, rem);
    CHECK((q * BigInt(1000000007LL) + BigInt(rem)) == two_pow_128);
}

TEST_CASE("bigint exact small division") {
    BigInt v = BigInt(123456789LL) * BigInt(1000003);
    CHECK(v.div_exact_u32(1000003u) == BigInt(123456789LL));
    CHECK_THROWS_AS(BigInt(10).div_exact_u32(3), stablerep::internal_error);
    uint32_t rem = 0;
    CHECK_THROWS_AS(BigInt(10).divmod_u32(0, rem), stablerep::domain_error);
}

TEST_CASE("binomial coefficients") {
    CHECK(stablerep::binomial(12, 6) == BigInt(924));
    CHECK(stablerep::binomial(52, 5) == BigInt(2598960));
    CHECK(stablerep::binomial(5, 0).is_one());
    CHECK(stablerep::binomial(5, 7).is_zero());
    CHECK(stablerep::binomial(96, 48).to_string() == "6435067013866298908421603100");
}
