#include "trv/numbers.hpp"

#include <stdexcept>

namespace trv {

int64_t cyclic_triangle_max(int64_t n) {
  if (n < 1) throw std::domain_error("cyclic_triangle_max: n >= 1 required");
  i128 nn = n;
  i128 v = (n % 2 == 1) ? nn * (nn * nn - 1) / 24 : nn * (nn * nn - 4) / 24;
  return (int64_t)v;
}

bool is_nice(int64_t n) {
  if (n < 1) throw std::domain_error("is_nice: n >= 1 required");
  int nonzero = 0;
  while (n != 0) {
    int64_t r = n % 3;
    if (r == 2) {
      ++nonzero;       // digit -1
      n = (n + 1) / 3;
    } else {
      if (r == 1) ++nonzero;
      n /= 3;
    }
    if (nonzero > 2) return false;
  }
  return true;
}

std::vector<int64_t> d_recursion_table(int64_t max_n) {
  std::vector<int64_t> d(max_n + 1, 0);
  for (int64_t n = 4; n <= max_n; ++n) {
    int64_t x;
    switch (n % 6) {
      case 4:  // n = 6x-2
        x = (n + 2) / 6;
        d[n] = 2 * d[2 * x - 1] + d[2 * x];
        break;
      case 5:  // n = 6x-1
        x = (n + 1) / 6;
        d[n] = d[2 * x - 1] + 2 * d[2 * x] + x;
        break;
      case 0:  // n = 6x
        x = n / 6;
        d[n] = 3 * d[2 * x];
        break;
      case 1:  // n = 6x+1
        x = (n - 1) / 6;
        d[n] = 2 * d[2 * x] + d[2 * x + 1] + x;
        break;
      case 2:  // n = 6x+2
        x = (n - 2) / 6;
        d[n] = d[2 * x] + 2 * d[2 * x + 1];
        break;
      default:  // n = 6x+3
        x = (n - 3) / 6;
        d[n] = 3 * d[2 * x + 1];
        break;
    }
  }
  return d;
}

int64_t d_by_recursion(int64_t n) {
  if (n < 1) throw std::domain_error("d_by_recursion: n >= 1 required");
  return d_recursion_table(n)[n];
}

Rat log2_upper(int64_t n) {
  if (n < 1) throw std::domain_error("log2_upper: n >= 1 required");
  int k = 0;
  while ((n >> (k + 1)) != 0) ++k;  // k = floor(log2 n)
  // x = n / 2^k in [1,2) as a Q56 fixed-point upper bound; squaring an upper
  // bound and rounding up preserves the upper-bound direction.
  const int FB = 56;
  i128 x = ((i128)n << FB) >> k;
  i128 frac = 0;  // 40 fractional bits of log2(x), rounded up at the end
  for (int i = 0; i < 40; ++i) {
    i128 sq = checked_mul(x, x);  // <= 2^114
    frac <<= 1;
    if (sq >= ((i128)1 << (2 * FB + 1))) {
      frac |= 1;
      x = ceil_div(sq, (i128)1 << (FB + 1));
    } else {
      x = ceil_div(sq, (i128)1 << FB);
    }
  }
  // +1 ulp covers the residual log2 of the final x in [1,2)
  return Rat(((i128)k << 40) + frac + 1, (i128)1 << 40);
}

NumberTables::NumberTables(int k, int64_t max_n) : k_(k), max_n_(max_n) {
  if (k < 3) throw std::domain_error("NumberTables: k >= 3 required");
  if (max_n < 0) throw std::domain_error("NumberTables: max_n >= 0 required");
  g_.assign(max_n + 1, 0);
  for (int64_t n = k; n <= max_n; ++n) {
    int64_t q = n / k, r = n % k;
    i128 prod = 1;
    for (int64_t j = 0; j < k - r; ++j) prod = checked_mul(prod, q);
    for (int64_t j = 0; j < r; ++j) prod = checked_mul(prod, q + 1);
    i128 total = prod + (i128)(k - r) * g_[q] + (i128)r * g_[q + 1];
    if (total > INT64_MAX) throw std::overflow_error("NumberTables: g value exceeds 64 bits");
    g_[n] = (int64_t)total;
  }
}

int64_t NumberTables::g(int64_t n) const {
  if (n < 0 || n > max_n_) throw std::out_of_range("NumberTables::g");
  return g_[n];
}

int64_t NumberTables::t_tri(int64_t n) const {
  if (k_ != 3) throw std::logic_error("t_tri defined for k = 3 only");
  return cyclic_triangle_max(n);
}

int64_t NumberTables::d_tilde(int64_t n) const {
  if (k_ != 3) throw std::logic_error("d_tilde defined for k = 3 only");
  if (n < 3) throw std::domain_error("d_tilde: n >= 3 required");
  i128 v = (i128)n * (n + 1) * (n - 1) / 3 - 8 * ((i128)g(n) + 1);
  return (int64_t)v;
}

std::optional<int64_t> NumberTables::delta_max(int64_t n) const {
  int64_t dt = d_tilde(n);
  if (dt < 0) return std::nullopt;
  int64_t r = 0;
  while ((r + 1) * (r + 1) <= dt) ++r;  // d_tilde(n) = O(n log n), loop is short
  return r;
}

namespace {

// max over compositions of n into k positive parts, memoized over (k, n)
int64_t full_max_rec(int k, int64_t n, std::vector<std::vector<int64_t>>& memo) {
  if (n < k) return 0;
  int64_t& slot = memo[k][n];
  if (slot >= 0) return slot;
  // enumerate nondecreasing part lists; order does not affect the value
  std::vector<int64_t> parts(k);
  int64_t best = 0;
  auto rec = [&](auto&& self, int idx, int64_t remaining, int64_t min_part, i128 prod,
                 i128 sub) -> void {
    if (idx == k - 1) {
      if (remaining < min_part) return;
      i128 total = prod * remaining + sub + full_max_rec(k, remaining, memo);
      if (total > best) best = (int64_t)total;
      return;
    }
    int64_t left = k - 1 - idx;  // parts still to place after this one
    for (int64_t s = min_part; s * (left + 1) <= remaining; ++s) {
      self(self, idx + 1, remaining - s, s, prod * s, sub + full_max_rec(k, s, memo));
    }
  };
  rec(rec, 0, n, 1, 1, 0);
  slot = best;
  return best;
}

}  // namespace

int64_t g_full_max(int k, int64_t n, int64_t cutoff) {
  if (k < 2) throw std::domain_error("g_full_max: k >= 2 required");
  if (n > cutoff) throw std::domain_error("g_full_max: n exceeds enumeration cutoff");
  static thread_local std::vector<std::vector<int64_t>> memo;
  if ((int)memo.size() <= k || (int64_t)memo[k].size() <= n) {
    memo.assign(k + 1, std::vector<int64_t>());
    for (int kk = 0; kk <= k; ++kk) memo[kk].assign(std::max<int64_t>(n, cutoff) + 1, -1);
  }
  return full_max_rec(k, n, memo);
}

int64_t balanced_product(int k, int64_t n) {
  if (n < k) return 0;
  int64_t q = n / k, r = n % k;
  i128 prod = 1;
  for (int64_t j = 0; j < k - r; ++j) prod = checked_mul(prod, q);
  for (int64_t j = 0; j < r; ++j) prod = checked_mul(prod, q + 1);
  if (prod > INT64_MAX) throw std::overflow_error("balanced_product exceeds 64 bits");
  return (int64_t)prod;
}

}  // namespace trv
