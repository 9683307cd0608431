#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trv/rational.hpp"

namespace trv {

// Max edge count of a bipartite graph on x vertices; 0 for x < 0 so callers
// may pass degenerate vertex counts like n-1-s-t.
inline int64_t bip(int64_t x) {
  if (x < 0) return 0;
  return (x / 2) * (x - x / 2);
}

// Max cyclic-triangle count of an n-vertex tournament.
//   n odd:  n(n^2-1)/24      n even: n(n^2-4)/24
int64_t cyclic_triangle_max(int64_t n);

// True iff n is 3^a, 3^a + 3^b, or 3^a - 3^b, i.e. the balanced-ternary
// expansion of n has at most two nonzero digits.
bool is_nice(int64_t n);

// d(n) computed purely from the six-case recursion
//   d(6x-2)=2d(2x-1)+d(2x)   d(6x-1)=d(2x-1)+2d(2x)+x   d(6x)=3d(2x)
//   d(6x+1)=2d(2x)+d(2x+1)+x d(6x+2)=d(2x)+2d(2x+1)     d(6x+3)=3d(2x+1)
// with d(1)=d(2)=d(3)=0. Returns the filled table for 1..max_n.
std::vector<int64_t> d_recursion_table(int64_t max_n);
int64_t d_by_recursion(int64_t n);

// Exact upper bound on log2(n) as a rational with 40 fractional bits.
// Returned value L satisfies log2(n) <= L <= log2(n) + 2^-38.
Rat log2_upper(int64_t n);

// Memoized values of the blowup edge-count function g_k and (for k = 3) the
// derived sequences T, d, d-tilde, Delta_max. Built eagerly, immutable after
// construction, safe to share across threads.
class NumberTables {
 public:
  NumberTables(int k, int64_t max_n);

  int uniformity() const { return k_; }
  int64_t max_n() const { return max_n_; }

  // balanced recursion: parts of size floor(n/k) / ceil(n/k), recursing
  int64_t g(int64_t n) const;

  // k = 3 only
  int64_t t_tri(int64_t n) const;
  int64_t d(int64_t n) const { return t_tri(n) - g(n); }
  int64_t d_tilde(int64_t n) const;
  // largest D >= 0 with D^2 <= d_tilde(n); empty when d_tilde(n) < 0
  std::optional<int64_t> delta_max(int64_t n) const;

 private:
  int k_;
  int64_t max_n_;
  std::vector<int64_t> g_;
};

// Definition-level oracle for g_k: exact maximum over all compositions of n
// into k positive parts of prod(parts) + sum g(parts). Throws if n exceeds
// the enumeration cutoff.
int64_t g_full_max(int k, int64_t n, int64_t cutoff = 60);

// Single-level product of the balanced split of n into k parts,
// q^(k-r) * (q+1)^r with q = n/k, r = n mod k. Equals g_k(n) for n <= k(k-1).
int64_t balanced_product(int k, int64_t n);

}  // namespace trv
