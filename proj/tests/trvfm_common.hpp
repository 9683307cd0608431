#pragma once

// Shared random-query generator for the F-function test suites. Kept in one
// place so the unit tests and the acceptance run sample the same family.

#include <random>

#include "trv/fmin.hpp"

namespace trv {

// A, B in (0, 4], C in [max(A,B) adjacent range, A+B+1): keeps the minimizer
// at 1-3 blocks so the grid oracle enumeration stays small.
inline FQuery random_fquery(std::mt19937_64& rng) {
  auto rnd_pos = [&](int64_t lo_num, int64_t hi_num, int64_t den) {
    return Rat(lo_num + (int64_t)(rng() % (uint64_t)(hi_num - lo_num + 1)), den);
  };
  FQuery q;
  q.A = rnd_pos(1, 32, 8);  // 1/8 .. 4
  q.B = rnd_pos(1, 32, 8);
  Rat span = q.A + q.B;
  // C between span/3 and span + 1, bounded away from zero
  Rat lo = rat_max(span / Rat(3), Rat(1, 4));
  Rat width = span + Rat(1) - lo;
  q.C = lo + width * Rat((int64_t)(rng() % 64), 64);
  if (q.C.sign() <= 0) q.C = Rat(1, 4);
  return q;
}

}  // namespace trv
