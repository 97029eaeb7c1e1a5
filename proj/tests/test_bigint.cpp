#include <doctest.h>

#include <random>
#include <stdexcept>

#include "graphcomp/bigint.hpp"

using graphcomp::BigInt;

TEST_CASE("small arithmetic matches int64") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
    for (int iter = 0; iter < 2000; ++iter) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    }
}

TEST_CASE("carry chains across limb boundaries") {
    BigInt limb_max = BigInt::from_string("4294967295"); // 2^32 - 1
    CHECK((limb_max + BigInt(1)).to_string() == "4294967296");
    CHECK((limb_max * limb_max).to_string() == "18446744065119617025");
    BigInt two64 = BigInt::from_string("18446744073709551616");
    CHECK((two64 - BigInt(1)).to_string() == "18446744073709551615");
    CHECK((two64 + (-two64)).is_zero());
}

TEST_CASE("decimal round trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> digit(0, 9), len(1, 120), coin(0, 1);
    for (int iter = 0; iter < 200; ++iter) {
        std::string text;
        if (coin(rng)) text += '-';
        int n = len(rng);
        text += static_cast<char>('1' + digit(rng) % 9);
        for (int i = 1; i < n; ++i) text += static_cast<char>('0' + digit(rng));
        CHECK(BigInt::from_string(text).to_string() == text);
    }
    CHECK(BigInt::from_string("0").to_string() == "0");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK(BigInt::from_string("007").to_string() == "7");
    CHECK(BigInt::from_string("+34") == BigInt(34));
}

TEST_CASE("from_string rejects junk") {
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("-"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("+"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x3"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string(" 12"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("1e5"), std::invalid_argument);
}

TEST_CASE("pow") {
    CHECK(pow(BigInt(2), 10) == BigInt(1024));
    CHECK(pow(BigInt(3), 5) == BigInt(243));
    CHECK(pow(BigInt(0), 0) == BigInt(1));
    CHECK(pow(BigInt(0), 9) == BigInt(0));
    CHECK(pow(BigInt(1), 1'000'000) == BigInt(1));
    CHECK(pow(BigInt(-2), 3) == BigInt(-8));
    CHECK(pow(BigInt(-2), 4) == BigInt(16));
    CHECK(pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("ordering") {
    CHECK(BigInt(-5) < BigInt(-4));
    CHECK(BigInt(-1) < BigInt(0));
    CHECK(BigInt(0) < BigInt(1));
    CHECK(BigInt::from_string("99999999999999999999") > BigInt::from_string("9999999999999999999"));
    CHECK(BigInt::from_string("-99999999999999999999") <
          BigInt::from_string("-9999999999999999999"));
    CHECK(BigInt(7) == BigInt(7));
}

TEST_CASE("uint64 conversion bounds") {
    BigInt max64 = BigInt::from_string("18446744073709551615");
    CHECK(max64.fits_uint64());
    CHECK(max64.to_uint64() == 18446744073709551615ull);
    CHECK_FALSE((max64 + BigInt(1)).fits_uint64());
    CHECK_FALSE(BigInt(-1).fits_uint64());
    CHECK_THROWS_AS((max64 + BigInt(1)).to_uint64(), std::overflow_error);
    CHECK(BigInt(0).to_uint64() == 0);
}

TEST_CASE("remainder_u64") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-4'000'000'000'000'000'000,
                                                     4'000'000'000'000'000'000);
    for (int iter = 0; iter < 500; ++iter) {
        std::int64_t a = dist(rng);
        std::uint64_t m = 1'000'000'007;
        std::int64_t r = a % static_cast<std::int64_t>(m);
        if (r < 0) r += static_cast<std::int64_t>(m);
        CHECK(BigInt(a).remainder_u64(m) == static_cast<std::uint64_t>(r));
    }
    CHECK(pow(BigInt(10), 30).remainder_u64(7) == 1); // 10 = 3 mod 7, 3^6 = 1 mod 7
    CHECK(BigInt(-10).remainder_u64(7) == 4);
    CHECK_THROWS_AS(BigInt(1).remainder_u64(0), std::invalid_argument);
}

TEST_CASE("multi-limb arithmetic is consistent with modular arithmetic") {
    // Residues mod large primes are computed limb by limb and independently
    // of the add/sub/mul code paths, so agreement across random multi-limb
    // operands is a strong exactness check.
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> digit(0, 9), len(1, 90), coin(0, 1);
    auto random_value = [&]() {
        std::string text;
        if (coin(rng)) text += '-';
        int n = len(rng);
        text += static_cast<char>('1' + digit(rng) % 9);
        for (int i = 1; i < n; ++i) text += static_cast<char>('0' + digit(rng));
        return BigInt::from_string(text);
    };

    const std::uint64_t p = 1'000'000'007;
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = random_value();
        BigInt b = random_value();
        std::uint64_t ra = a.remainder_u64(p), rb = b.remainder_u64(p);
        CHECK((a + b).remainder_u64(p) == (ra + rb) % p);
        CHECK((a - b).remainder_u64(p) == (ra + p - rb) % p);
        CHECK((a * b).remainder_u64(p) == mulmod(ra, rb));
    }
}

TEST_CASE("pow is consistent with modular exponentiation") {
    const std::uint64_t p = 998'244'353;
    auto powmod = [p](std::uint64_t base, std::uint64_t e) {
        std::uint64_t acc = 1;
        base %= p;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    };
    std::mt19937 rng(29);
    std::uniform_int_distribution<std::int64_t> base_dist(2, 1'000'000);
    std::uniform_int_distribution<std::uint64_t> exp_dist(0, 3000);
    for (int iter = 0; iter < 40; ++iter) {
        std::int64_t base = base_dist(rng);
        std::uint64_t e = exp_dist(rng);
        CHECK(pow(BigInt(base), e).remainder_u64(p) ==
              powmod(static_cast<std::uint64_t>(base), e));
    }
}

TEST_CASE("self-referential compound assignment") {
    BigInt a(123456789);
    a += a;
    CHECK(a == BigInt(246913578));
    a -= a;
    CHECK(a.is_zero());
    BigInt b(100000);
    b *= b;
    CHECK(b == BigInt(10'000'000'000));
}
