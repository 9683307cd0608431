#include "trvfm_common.hpp"

#include "doctest.h"

using namespace trv;

TEST_CASE("closed-form examples") {
  CHECK(f_value(Rat(2), Rat(2), Rat(4)) == Rat(0));   // single block
  CHECK(f_value(Rat(1), Rat(1), Rat(1)) == Rat(1, 2));
  CHECK(f_value(Rat(3), Rat(1), Rat(2)) == Rat(3, 2));
  CHECK(f_value(Rat(4), Rat(1), Rat(2)) == Rat(5, 2));  // boundary: a_3=1, b_3=0
  CHECK(f_value(Rat(-1), Rat(5), Rat(2)) == Rat(0));
  CHECK(f_value(Rat(5), Rat(0), Rat(2)) == Rat(0));
  CHECK_THROWS_AS(f_value(Rat(1), Rat(1), Rat(0)), std::domain_error);
  CHECK_THROWS_AS(f_value(Rat(1), Rat(1), Rat(-2)), std::domain_error);
}

TEST_CASE("witness boundary case (4,1,2)") {
  MinimizerWitness w = f_minimizer({Rat(4), Rat(1), Rat(2)});
  REQUIRE(w.len == 3);
  CHECK(w.D == Rat(1));
  CHECK(w.D_last == Rat(1));
  CHECK(w.a[2] == Rat(1));
  CHECK(w.b[2] == Rat(0));
}

TEST_CASE("witness feasibility and value match on random queries") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    FQuery q = random_fquery(rng);
    MinimizerWitness w = f_minimizer(q);
    REQUIRE((int64_t)w.a.size() == w.len);
    REQUIRE((int64_t)w.b.size() == w.len);
    Rat sa(0), sb(0);
    for (int64_t i = 0; i < w.len; ++i) {
      CHECK(w.a[i].sign() >= 0);
      CHECK(w.b[i].sign() >= 0);
      CHECK(w.a[i] + w.b[i] <= q.C);
      if (i + 1 < w.len) {
        CHECK(w.a[i] + w.b[i] == q.C);
        CHECK(w.a[i] - w.b[i] == w.D);
      }
      sa += w.a[i];
      sb += w.b[i];
    }
    CHECK(sa == q.A);
    CHECK(sb == q.B);
    CHECK(w.a[w.len - 1] - w.b[w.len - 1] == w.D_last);
    if (w.D_last != w.D) {
      CHECK(rat_min(w.a[w.len - 1], w.b[w.len - 1]) == Rat(0));
      CHECK(rat_min(Rat(0), w.D) <= w.D_last);
      CHECK(w.D_last <= rat_max(Rat(0), w.D));
    }
    CHECK(cross_product_sum(w.a, w.b) == f_value(q));
  }
}

TEST_CASE("symmetry in A and B") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 500; ++trial) {
    FQuery q = random_fquery(rng);
    CHECK(f_value(q.A, q.B, q.C) == f_value(q.B, q.A, q.C));
  }
}

TEST_CASE("monotone: increasing in A and B, decreasing in C") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    FQuery q = random_fquery(rng);
    Rat eps((int64_t)(rng() % 64) + 1, 64);
    CHECK(f_value(q.A + eps, q.B, q.C) >= f_value(q));
    CHECK(f_value(q.A, q.B + eps, q.C) >= f_value(q));
    CHECK(f_value(q.A, q.B, q.C + eps) <= f_value(q));
  }
}

TEST_CASE("scaling law F(lA,lB,lC) = l^2 F(A,B,C)") {
  std::mt19937_64 rng(80);
  for (int trial = 0; trial < 500; ++trial) {
    FQuery q = random_fquery(rng);
    Rat lam((int64_t)(rng() % 160) + 1, (int64_t)(rng() % 40) + 1);
    CHECK(f_value(q.A * lam, q.B * lam, q.C * lam) == lam * lam * f_value(q));
  }
}

TEST_CASE("ratio bound (B'/B)F(A,B,C) >= F(A,B',C)") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 500; ++trial) {
    FQuery q = random_fquery(rng);
    // random 0 < B' <= B
    Rat bp = q.B * Rat((int64_t)(rng() % 64) + 1, 64);
    CHECK((bp / q.B) * f_value(q) >= f_value(q.A, bp, q.C));
  }
}

TEST_CASE("positivity criterion: F > 0 iff A+B > C (for A,B > 0)") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 500; ++trial) {
    FQuery q = random_fquery(rng);
    CHECK((f_value(q).sign() > 0) == (q.A + q.B > q.C));
  }
}

TEST_CASE("grid oracle examples") {
  Rat v = f_grid_oracle({Rat(1), Rat(1), Rat(1)}, 64);
  CHECK(v >= Rat(1, 2));
  CHECK(v <= Rat(1, 2) + Rat(4, 64));
  CHECK(f_grid_oracle({Rat(3), Rat(1), Rat(2)}, 64) >= Rat(3, 2));
  CHECK(f_grid_oracle({Rat(2), Rat(2), Rat(4)}, 8) == Rat(0));
}

TEST_CASE("oracle sandwich on random queries") {
  std::mt19937_64 rng(83);
  const int resolution = 64;
  for (int trial = 0; trial < 200; ++trial) {
    FQuery q = random_fquery(rng);
    Rat lo = f_value(q);
    Rat hi = f_grid_oracle(q, resolution);
    CHECK(lo <= hi);
    CHECK(hi <= lo + q.A * q.B * Rat(8, resolution));
  }
}
