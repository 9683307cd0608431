#include "trv/admissible.hpp"

#include <limits>
#include <stdexcept>

namespace trv {

std::optional<int64_t> compute_s_min(const NumberTables& nt, int64_t n, int64_t cap) {
  if (n < 3) throw std::domain_error("compute_s_min: n >= 3 required");
  int64_t quota = nt.g(n) - nt.g(n - 1) + 1;
  int64_t best = std::numeric_limits<int64_t>::max();
  int64_t d1_hi = std::min(cap, n - 1);  // d1 > n-1 leaves no nonnegative remainder
  for (int64_t d1 = 1; d1 <= d1_hi; ++d1) {
    int64_t rem = n - 1 - d1;
    for (int64_t d2 = 1; d2 <= d1; ++d2) {
      int64_t q = rem / d2, r = rem % d2;
      if (bip(d1) + q * bip(d2) + bip(r) >= quota && d1 + d2 < best) best = d1 + d2;
    }
  }
  if (best == std::numeric_limits<int64_t>::max()) return std::nullopt;
  return best;
}

SMinTable::SMinTable(const NumberTables& nt, int64_t n) : n_(n) {
  if (n < 3) throw std::domain_error("SMinTable: n >= 3 required");
  int64_t quota = nt.g(n) - nt.g(n - 1) + 1;
  const int64_t INF = std::numeric_limits<int64_t>::max();
  prefix_.assign(n, INF);  // index d1 in [1, n-1]
  for (int64_t d1 = 1; d1 <= n - 1; ++d1) {
    int64_t rem = n - 1 - d1;
    int64_t best = INF;
    for (int64_t d2 = 1; d2 <= d1; ++d2) {
      int64_t q = rem / d2, r = rem % d2;
      if (bip(d1) + q * bip(d2) + bip(r) >= quota) {
        best = d1 + d2;
        break;
      }
    }
    prefix_[d1] = best;
  }
  for (int64_t d1 = 2; d1 <= n - 1; ++d1)
    prefix_[d1] = std::min(prefix_[d1], prefix_[d1 - 1]);
}

std::optional<int64_t> SMinTable::s_min(int64_t cap) const {
  if (cap < 1) return std::nullopt;
  int64_t idx = std::min(cap, n_ - 1);
  int64_t v = prefix_[idx];
  if (v == std::numeric_limits<int64_t>::max()) return std::nullopt;
  return v;
}

std::vector<AdmissiblePair> enumerate_admissible(const NumberTables& nt, const SMinTable& smin,
                                                 int64_t n, int64_t delta) {
  if (n < 3) throw std::domain_error("enumerate_admissible: n >= 3 required");
  if (delta < 0) throw std::domain_error("enumerate_admissible: delta >= 0 required");
  int64_t quota = nt.g(n) - nt.g(n - 1) + 1;
  int64_t half = (n + 1) / 2;
  std::vector<AdmissiblePair> out;
  for (int64_t s = 1; s <= n - 2; ++s) {
    int64_t t_lo = std::max<int64_t>({1, s - delta, half - s});
    int64_t t_hi = std::min<int64_t>(n - 2, s + delta);
    for (int64_t t = t_lo; t <= t_hi; ++t) {
      auto S = smin.s_min(s + t);
      if (!S || 9 * *S > 8 * n) continue;
      if (s * t + bip(n - 1 - s - t) < quota) continue;
      out.push_back({s, t, *S});
    }
  }
  return out;
}

std::vector<AdmissiblePair> enumerate_admissible(const NumberTables& nt, int64_t n,
                                                 int64_t delta) {
  SMinTable smin(nt, n);
  return enumerate_admissible(nt, smin, n, delta);
}

}  // namespace trv
