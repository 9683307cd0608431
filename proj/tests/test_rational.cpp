#include "trv/rational.hpp"

#include <random>

#include "doctest.h"

using namespace trv;

TEST_CASE("construction and normalization") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, 4) == Rat(-3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(5).is_integer());
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK(-Rat(2, 3) == Rat(-2, 3));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("comparisons, floor, ceil") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 3) > Rat(-1, 2));
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(6, 2).floor() == 3);
  CHECK(Rat(6, 2).ceil() == 3);
  CHECK(pos_part(Rat(-3, 2)) == Rat(0));
  CHECK(pos_part(Rat(3, 2)) == Rat(3, 2));
  CHECK(neg_part(Rat(-3, 2)) == Rat(-3, 2));
  CHECK(neg_part(Rat(3, 2)) == Rat(0));
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(12345);
  auto rnd = [&]() {
    int64_t n = (int64_t)(rng() % 2001) - 1000;
    int64_t d = (int64_t)(rng() % 999) + 1;
    return Rat(n, d);
  };
  for (int i = 0; i < 500; ++i) {
    Rat a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (b.sign() != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("overflow detection") {
  i128 big = (i128)1 << 100;
  CHECK_THROWS_AS(checked_mul(big, big), std::overflow_error);
  Rat r(big, 1);
  CHECK_THROWS_AS(r * r, std::overflow_error);
}

TEST_CASE("string rendering") {
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(-7).str() == "-7");
  CHECK(i128_to_string((i128)1 << 64) == "18446744073709551616");
}
