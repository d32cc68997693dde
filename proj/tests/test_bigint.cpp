#include <doctest.h>

#include <random>

#include "hodge/bigint.hpp"

using hodge::BigInt;

TEST_CASE("small arithmetic agrees with int64") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("string round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK(BigInt::from_string("-42").to_int64() == -42);
    CHECK_THROWS(BigInt::from_string(""));
    CHECK_THROWS(BigInt::from_string("12a"));
}

TEST_CASE("large multiplication: factorial") {
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f *= BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
    CHECK(!f.fits_int64());
}

TEST_CASE("divmod invariants") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a(1), b(1);
        int la = 1 + static_cast<int>(rng() % 4), lb = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < la; ++i) a *= BigInt(static_cast<long long>(rng() % 1000000007));
        for (int i = 0; i < lb; ++i) b *= BigInt(static_cast<long long>(rng() % 1000000007) + 1);
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(cmp_abs(r, b) < 0);
        if (!r.is_zero()) CHECK(r.signum() == a.signum());
    }
}

TEST_CASE("div_exact") {
    BigInt a = BigInt::from_string("123456789123456789123456789");
    BigInt b = BigInt::from_string("987654321987654321");
    CHECK((a * b).div_exact(b) == a);
    CHECK((a * b).div_exact(-a) == -b);
    CHECK_THROWS(BigInt(7).div_exact(BigInt(2)));
}

TEST_CASE("add_mul accumulates") {
    BigInt acc(5);
    acc.add_mul(BigInt(-3), BigInt(4));
    CHECK(acc.to_int64() == -7);
    acc.add_mul(BigInt::from_string("100000000000000000000"), BigInt(2));
    CHECK(acc.to_string() == "199999999999999999993");
}
