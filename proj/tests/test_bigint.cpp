#include <doctest.h>

#include <limits>
#include <stdexcept>
#include <random>

#include "zetaglue/bigint.hpp"

using zetaglue::BigInt;

TEST_CASE("int64 round trip and small arithmetic") {
  CHECK(BigInt{0}.to_string() == "0");
  CHECK(BigInt{0}.is_zero());
  CHECK(BigInt{-1}.to_string() == "-1");
  CHECK(BigInt{123456789012345678LL}.to_string() == "123456789012345678");
  CHECK(BigInt{std::numeric_limits<long long>::min()}.to_int64() ==
        std::numeric_limits<long long>::min());
  CHECK((BigInt{7} + BigInt{-9}).to_int64() == -2);
  CHECK((BigInt{-7} * BigInt{-9}).to_int64() == 63);
  CHECK((BigInt{1} - BigInt{1}).is_zero());
}

TEST_CASE("agrees with int64 arithmetic on random values") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    const long long a = static_cast<long long>(rng() % 2000000000ULL) - 1000000000;
    const long long b = static_cast<long long>(rng() % 2000000000ULL) - 1000000000;
    CHECK((BigInt{a} + BigInt{b}).to_int64() == a + b);
    CHECK((BigInt{a} - BigInt{b}).to_int64() == a - b);
    CHECK((BigInt{a} * BigInt{b}).to_int64() == a * b);
    CHECK(BigInt::compare(BigInt{a}, BigInt{b}) == (a < b ? -1 : a > b ? 1 : 0));
  }
}

TEST_CASE("known large values") {
  // 2^128
  BigInt v{1};
  for (int i = 0; i < 128; ++i) v *= BigInt{2};
  CHECK(v.to_string() == "340282366920938463463374607431768211456");
  CHECK(!v.fits_int64());

  // 25! = 15511210043330985984000000
  BigInt fact{1};
  for (int k = 2; k <= 25; ++k) fact *= BigInt{k};
  CHECK(fact.to_string() == "15511210043330985984000000");

  // and back down, exactly
  BigInt down = fact;
  for (int k = 25; k >= 2; --k) down = down.divided_exact(static_cast<std::uint32_t>(k));
  CHECK(down.to_int64() == 1);
}

TEST_CASE("from_string round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigInt v{static_cast<long long>(rng()) };
    CHECK(BigInt::from_string(v.to_string()) == v);
  }
  CHECK(BigInt::from_string("-00042").to_int64() == -42);
  CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
}

TEST_CASE("divided_exact rejects inexact division") {
  CHECK(BigInt{21}.divided_exact(7).to_int64() == 3);
  CHECK(BigInt{-21}.divided_exact(7).to_int64() == -3);
  CHECK_THROWS_AS(BigInt{22}.divided_exact(7), std::domain_error);
  CHECK_THROWS_AS(BigInt{1}.divided_exact(0), std::domain_error);
}

TEST_CASE("to_int64 overflow detection") {
  BigInt v{1};
  for (int i = 0; i < 70; ++i) v *= BigInt{2};
  CHECK_THROWS_AS(v.to_int64(), std::overflow_error);
  BigInt max_ll{std::numeric_limits<long long>::max()};
  CHECK(max_ll.fits_int64());
  CHECK(!(max_ll + BigInt{1}).fits_int64());
  CHECK((-(max_ll + BigInt{1})).fits_int64());  // LLONG_MIN
}
