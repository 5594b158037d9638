#include <doctest.h>

#include <random>

#include "polygauss/coeff.hpp"

using namespace polygauss;

TEST_CASE("normalize_rational produces canonical form") {
    CHECK(normalize_rational(2, 4).to_string() == "1/2");
    CHECK(normalize_rational(3, -6).to_string() == "-1/2");
    CHECK(normalize_rational(0, 7).to_string() == "0");
    CHECK(normalize_rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(normalize_rational(1, 0), InvalidArgumentError);

    // equal values share one representation
    Rational a = normalize_rational(6, 8);
    Rational b = normalize_rational(-3, -4);
    CHECK(a == b);
    CHECK(a.numerator() == b.numerator());
    CHECK(a.denominator() == b.denominator());
}

TEST_CASE("field_inverse") {
    Field qq = Field::rationals();
    CHECK(field_inverse(Coeff::from_fraction(qq, 1, 2)).to_string() == "2");
    CHECK_THROWS_AS(field_inverse(Coeff::zero(qq)), DivisionByZeroError);

    Field f7 = Field::prime_field(7);
    CHECK(field_inverse(Coeff::from_integer(f7, 3)).to_string() == "5");
    Field f2 = Field::prime_field(2);
    CHECK(field_inverse(Coeff::from_integer(f2, 1)).to_string() == "1");
    CHECK_THROWS_AS(field_inverse(Coeff::zero(f2)), DivisionByZeroError);
}

TEST_CASE("prime field construction guards") {
    CHECK_THROWS_AS(Field::prime_field(1), InvalidArgumentError);
    CHECK_THROWS_AS(Field::prime_field(4), InvalidArgumentError);
    CHECK_THROWS_AS(Field::prime_field(91), InvalidArgumentError);  // 7 * 13
    CHECK_NOTHROW(Field::prime_field(2147483647));                  // exactly the cap
    CHECK_THROWS_AS(Field::prime_field(std::uint64_t{1} << 32), InvalidArgumentError);
}

namespace {

Coeff random_coeff(std::mt19937_64& rng, const Field& f) {
    if (f.kind() == Field::Kind::Rationals) {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = 1 + static_cast<long>(rng() % 9);
        return Coeff::from_fraction(f, num, den);
    }
    return Coeff::from_integer(f, static_cast<long>(rng() % f.modulus()));
}

}  // namespace

TEST_CASE("field axioms on random inputs") {
    std::mt19937_64 rng(7);
    for (Field f : {Field::rationals(), Field::prime_field(7), Field::prime_field(2)}) {
        for (int i = 0; i < 100; ++i) {
            Coeff a = random_coeff(rng, f);
            Coeff b = random_coeff(rng, f);
            Coeff c = random_coeff(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("GF(p) agrees with integer arithmetic mod p") {
    std::mt19937_64 rng(11);
    Field f = Field::prime_field(101);
    for (int i = 0; i < 200; ++i) {
        std::int64_t x = static_cast<std::int64_t>(rng() % 5000) - 2500;
        std::int64_t y = static_cast<std::int64_t>(rng() % 5000) - 2500;
        Coeff a = Coeff::from_integer(f, static_cast<long>(x));
        Coeff b = Coeff::from_integer(f, static_cast<long>(y));
        auto mod = [](std::int64_t v) { return ((v % 101) + 101) % 101; };
        CHECK(a + b == Coeff::from_integer(f, static_cast<long>(mod(x + y))));
        CHECK(a - b == Coeff::from_integer(f, static_cast<long>(mod(x - y))));
        CHECK(a * b == Coeff::from_integer(f, static_cast<long>(mod(x * y))));
    }
}

TEST_CASE("cross-field arithmetic is rejected") {
    Coeff a = Coeff::from_integer(Field::prime_field(3), 1);
    Coeff b = Coeff::from_integer(Field::prime_field(5), 1);
    CHECK_THROWS_AS(a + b, InvalidArgumentError);
    CHECK_THROWS_AS(a * Coeff::one(Field::rationals()), InvalidArgumentError);
}
