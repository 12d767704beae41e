#include <gpforge/rational.hpp>

#include <catch2/catch.hpp>

#include <cstdint>

using gpforge::Rational;

namespace {

// deterministic generator for property-style sampling
struct Rng {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rational rational() {
        long num = static_cast<long>(next() % 2001) - 1000;
        long den = static_cast<long>(next() % 999) + 1;
        return Rational(num, den);
    }
    Rational nonzero() {
        Rational r = rational();
        return r.is_zero() ? Rational(1, 3) : r;
    }
};

// independent square test: scan k = 0, 1, ... without any root extraction
bool square_by_scan(long n) {
    if (n < 0) return false;
    for (long k = 0; k * k <= n; ++k)
        if (k * k == n) return true;
    return false;
}

}  // namespace

TEST_CASE("rat_normalize canonicalizes") {
    CHECK(gpforge::rat_normalize(2, 4).str() == "1/2");
    CHECK(gpforge::rat_normalize(-3, -6).str() == "1/2");
    CHECK(gpforge::rat_normalize(0, 7).str() == "0/1");
    CHECK(gpforge::rat_normalize(5, -10).str() == "-1/2");
    CHECK_THROWS_AS(gpforge::rat_normalize(1, 0), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rational::from_string("22/7").str() == "22/7");
    CHECK(Rational::from_string("-4/6").str() == "-2/3");
    CHECK(Rational::from_string("17").str() == "17/1");
    CHECK_THROWS(Rational::from_string("a/b"));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("field axioms hold exactly on sampled values") {
    Rng rng{12345};
    for (int iter = 0; iter < 200; ++iter) {
        Rational x = rng.rational(), y = rng.rational(), z = rng.rational();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Rational(0));
        Rational w = rng.nonzero();
        CHECK(w * (Rational(1) / w) == Rational(1));
    }
}

TEST_CASE("pow handles negative exponents") {
    CHECK(gpforge::pow(Rational(2), 10) == Rational(1024));
    CHECK(gpforge::pow(Rational(2), -3) == Rational(1, 8));
    CHECK(gpforge::pow(Rational(-3, 2), 3) == Rational(-27, 8));
    CHECK(gpforge::pow(Rational(5), 0) == Rational(1));
    CHECK_THROWS_AS(gpforge::pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("is_square on the named cases") {
    auto r = gpforge::is_square(Rational(4, 9));
    REQUIRE(r);
    CHECK(*r == Rational(2, 3));
    CHECK_FALSE(gpforge::is_square(Rational(2)));
    auto z = gpforge::is_square(Rational(0));
    REQUIRE(z);
    CHECK(*z == Rational(0));
    CHECK_FALSE(gpforge::is_square(Rational(-4)));
}

TEST_CASE("is_square(r^2) recovers |r|") {
    Rng rng{777};
    for (int iter = 0; iter < 200; ++iter) {
        Rational r = rng.rational();
        auto s = gpforge::is_square(r * r);
        REQUIRE(s);
        CHECK(*s == gpforge::abs(r));
    }
}

TEST_CASE("is_square agrees with the scan oracle on small integers") {
    for (long n = 0; n <= 1500; ++n) {
        bool expect = square_by_scan(n);
        CHECK(static_cast<bool>(gpforge::is_square(Rational(n))) == expect);
    }
}

TEST_CASE("isqrt_floor exact on large values") {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 60);
    mpz_class r = gpforge::isqrt_floor(big);
    CHECK(r * r <= big);
    CHECK((r + 1) * (r + 1) > big);
    mpz_class square = (big + 12345) * (big + 12345);
    auto s = gpforge::exact_int_sqrt(square);
    REQUIRE(s);
    CHECK(*s == big + 12345);
    CHECK_FALSE(gpforge::exact_int_sqrt(square + 1));
}
