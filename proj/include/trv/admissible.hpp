#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trv/numbers.hpp"

namespace trv {

// Ordered pair (s, t) of candidate sizes for the two halves of the largest
// single-color neighborhood, together with the minimal degree sum S from the
// two-degree triangle-count condition.
struct AdmissiblePair {
  int64_t s = 0;
  int64_t t = 0;
  int64_t s_min_sum = 0;
};

// Smallest d1 + d2 over positive d2 <= d1 <= cap with
//   bip(d1) + q*bip(d2) + bip(r) >= g3(n) - g3(n-1) + 1,
// where n-1-d1 = q*d2 + r, 0 <= r < d2. Empty when no pair qualifies.
// Reference implementation (full double loop); the cached variant below is
// what the enumeration uses.
std::optional<int64_t> compute_s_min(const NumberTables& nt, int64_t n, int64_t cap);

// S(cap) for all caps at once: per d1 the best qualifying d2 is found once,
// then S(cap) is a prefix minimum.
class SMinTable {
 public:
  SMinTable(const NumberTables& nt, int64_t n);
  std::optional<int64_t> s_min(int64_t cap) const;

 private:
  int64_t n_;
  std::vector<int64_t> prefix_;  // index d1, INT64_MAX = no qualifying pair yet
};

// All ordered pairs (s, t), 1 <= s,t <= n-2, with
//   (a) s + t >= ceil(n/2)
//   (b) |s - t| <= delta
//   (c) S(s+t) exists and 9*S <= 8*n
//   (d) s*t + bip(n-1-s-t) >= g3(n) - g3(n-1) + 1
std::vector<AdmissiblePair> enumerate_admissible(const NumberTables& nt, int64_t n,
                                                 int64_t delta);
std::vector<AdmissiblePair> enumerate_admissible(const NumberTables& nt, const SMinTable& smin,
                                                 int64_t n, int64_t delta);

}  // namespace trv
