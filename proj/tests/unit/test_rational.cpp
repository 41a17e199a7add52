#include <doctest.h>

#include <random>

#include "borda/errors.hpp"
#include "borda/rational.hpp"

using namespace borda;

TEST_CASE("bigint basics") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-17).to_string() == "-17");
  CHECK((BigInt(1000000000) * BigInt(1000000000)).to_string() ==
        "1000000000000000000");
  CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
        "-123456789012345678901234567890");
  CHECK(BigInt::two_pow(65).to_string() == "36893488147419103232");
  CHECK(BigInt(5) - BigInt(9) == BigInt(-4));
  CHECK(BigInt(-5) * BigInt(-5) == BigInt(25));
  CHECK(BigInt(7) < BigInt(8));
  CHECK(BigInt(-7) > BigInt(-8));
}

TEST_CASE("bigint division matches built-in arithmetic") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> dist(-1'000'000'000'000LL,
                                                1'000'000'000'000LL);
  for (int i = 0; i < 2000; ++i) {
    long long a = dist(rng), b = dist(rng);
    if (b == 0) continue;
    BigInt q, r;
    BigInt::divmod(BigInt(a), BigInt(b), q, r);
    CHECK(q == BigInt(a / b));
    CHECK(r == BigInt(a % b));
    CHECK(q * BigInt(b) + r == BigInt(a));
  }
  CHECK_THROWS_AS(BigInt(1) / BigInt(0), ArgumentError);
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
}

TEST_CASE("rational arithmetic and ordering") {
  Rational half(BigInt(1), BigInt(2));
  Rational third(BigInt(1), BigInt(3));
  CHECK((half + third).to_string() == "5/6");
  CHECK((half - third).to_string() == "1/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK((half / third).to_string() == "3/2");
  CHECK(half > third);
  CHECK(Rational(BigInt(2), BigInt(4)) == half);
  CHECK(Rational(BigInt(3), BigInt(-6)) == -half);
  CHECK(Rational(-7).to_string() == "-7");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ArgumentError);
  CHECK_THROWS_AS(half / Rational(0), ArgumentError);
}

TEST_CASE("rational floor") {
  CHECK(Rational(BigInt(7), BigInt(2)).floor() == BigInt(3));
  CHECK(Rational(BigInt(-7), BigInt(2)).floor() == BigInt(-4));
  CHECK(Rational(6).floor() == BigInt(6));
  CHECK(Rational(BigInt(-6), BigInt(3)).floor() == BigInt(-2));
}

TEST_CASE("rational string round trips") {
  for (const char* s : {"0", "7", "-7", "15/4", "-3/2", "36893488147419103232"}) {
    CHECK(Rational::from_string(s).to_string() == s);
  }
  CHECK(Rational::from_string("4/8").to_string() == "1/2");
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(BigInt(7), BigInt(2)).decimal_string() == "3.5");
  CHECK(Rational(BigInt(-7), BigInt(2)).decimal_string() == "-3.5");
  CHECK(Rational(BigInt(15), BigInt(4)).decimal_string() == "3.75");
  CHECK(Rational(BigInt(1), BigInt(80)).decimal_string() == "0.0125");
  CHECK(Rational(BigInt(1), BigInt(3)).decimal_string() == "1/3");
  CHECK(Rational(908407).decimal_string() == "908407");
}

TEST_CASE("rational random consistency against doubles") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int i = 0; i < 500; ++i) {
    int a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    if (b == 0 || d == 0) continue;
    Rational x{BigInt(a), BigInt(b)};
    Rational y{BigInt(c), BigInt(d)};
    double xd = double(a) / b, yd = double(c) / d;
    CHECK(((x < y) == (xd < yd - 1e-12) || std::abs(xd - yd) < 1e-9));
    Rational sum = x + y;
    double sumd = double(sum.num().to_int64()) / sum.den().to_int64();
    CHECK(sumd == doctest::Approx(xd + yd).epsilon(1e-9));
  }
}
