#include "trv/smallcases.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace trv {

namespace {

void enumerate_sequences(int64_t remaining, int64_t max_entry, int64_t ones_used,
                         std::vector<int64_t>& cur, int64_t quota,
                         std::vector<DegreeSequence>& out) {
  if (remaining == 0) {
    int64_t tri = 0;
    for (int64_t e : cur) tri += bip(e);
    if (tri >= quota) out.push_back(cur);
    return;
  }
  for (int64_t e = std::min(remaining, max_entry); e >= 1; --e) {
    if (e == 1 && ones_used) continue;  // at most one entry equal to 1
    cur.push_back(e);
    enumerate_sequences(remaining - e, e, ones_used + (e == 1), cur, quota, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DegreeSequence> feasible_degree_sequences(const NumberTables& nt, int64_t n) {
  if (n < 4 || n > 30) throw std::domain_error("feasible_degree_sequences: n in [4,30]");
  int64_t quota = nt.g(n) - nt.g(n - 1) + 1;
  std::vector<DegreeSequence> out;
  std::vector<int64_t> cur;
  enumerate_sequences(n - 1, n - 1, 0, cur, quota, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int64_t> counting_contradiction(const NumberTables& nt, int64_t n,
                                              int64_t d1_cap) {
  auto seqs = feasible_degree_sequences(nt, n);
  if (seqs.empty()) throw std::logic_error("counting_contradiction: empty feasible set");
  if (d1_cap < 0) return std::nullopt;
  const int64_t INF = std::numeric_limits<int64_t>::max() / 2;
  // dp[v][s] = min sum of (d1+d2) over v vertices with total primary degree s
  std::vector<std::vector<int64_t>> dp(n + 1, std::vector<int64_t>(d1_cap + 1, INF));
  dp[0][0] = 0;
  for (const auto& seq : seqs) {
    int64_t d1 = seq[0];
    int64_t d2 = seq.size() >= 2 ? seq[1] : 0;
    for (int64_t v = 0; v < n; ++v)
      for (int64_t s = 0; s + d1 <= d1_cap; ++s)
        if (dp[v][s] < INF)
          dp[v + 1][s + d1] = std::min(dp[v + 1][s + d1], dp[v][s] + d1 + d2);
  }
  int64_t best = INF;
  for (int64_t s = 0; s <= d1_cap; ++s) best = std::min(best, dp[n][s]);
  if (best >= INF) return std::nullopt;
  return best;
}

int64_t forced_min_d1_count(const NumberTables& nt, int64_t n, int64_t d1_cap) {
  auto seqs = feasible_degree_sequences(nt, n);
  int64_t dmin = std::numeric_limits<int64_t>::max();
  for (const auto& s : seqs) dmin = std::min(dmin, s[0]);
  int64_t d2nd = std::numeric_limits<int64_t>::max();
  for (const auto& s : seqs)
    if (s[0] > dmin) d2nd = std::min(d2nd, s[0]);
  if (d2nd == std::numeric_limits<int64_t>::max()) return n;  // every sequence has min d1
  // j vertices at dmin, rest at >= d2nd: n*d2nd - j*(d2nd - dmin) <= cap
  i128 num = (i128)n * d2nd - d1_cap;
  if (num <= 0) return 0;
  int64_t j = (int64_t)ceil_div(num, d2nd - dmin);
  return std::clamp<int64_t>(j, 0, n);
}

SamePrimaryBranch same_primary_branch(const NumberTables& nt, int64_t n) {
  if (n != 13 && n != 16) throw std::domain_error("same_primary_branch: n in {13,16}");
  auto seqs = feasible_degree_sequences(nt, n);
  int64_t dmin = std::numeric_limits<int64_t>::max();
  for (const auto& s : seqs) dmin = std::min(dmin, s[0]);
  int64_t pcap = n - dmin;
  i128 d1d2_cap = (i128)8 * n * n / 9;

  // min d1+d2 over feasible sequences whose primary degree is exactly d1;
  // empty when no sequence fits a completeness-forced vertex
  auto min_sum_at = [&](int64_t d1) -> std::optional<int64_t> {
    int64_t best = std::numeric_limits<int64_t>::max();
    for (const auto& s : seqs)
      if (s[0] == d1) best = std::min(best, s[0] + (s.size() >= 2 ? s[1] : 0));
    if (best == std::numeric_limits<int64_t>::max()) return std::nullopt;
    return best;
  };
  auto all_length_two_at = [&](int64_t d1) {
    bool any = false;
    for (const auto& s : seqs)
      if (s[0] == d1) {
        any = true;
        if (s.size() != 2) return false;
      }
    return any;
  };

  SamePrimaryBranch out;
  out.closed = true;
  for (int64_t p1 = pcap; p1 >= (n + 2) / 3; --p1) {
    for (int64_t p2 = std::min(p1, pcap); p2 >= 1; --p2) {
      int64_t p3 = n - p1 - p2;
      if (p3 < 0 || p3 > p2 || p3 > pcap) continue;
      std::string tag = "(" + std::to_string(p1) + "," + std::to_string(p2) + "," +
                        std::to_string(p3) + ")";
      int64_t forced = (p1 == pcap) + (p2 == pcap) + (p3 == pcap);
      bool branch_closed = false;

      if (forced >= 2) {
        // two forced parts see every cross edge in the primary color, so the
        // tripartition is complete and every part of size p forces d1 = n-p
        i128 total = 0;
        bool computable = true;
        for (int64_t p : {p1, p2, p3}) {
          if (p == 0) continue;
          auto ms = min_sum_at(n - p);
          if (!ms) {
            out.assertions.push_back({"tripartition " + tag + ": no feasible sequence with d1=" +
                                          std::to_string(n - p),
                                      0, 0, "none", true});
            computable = false;
            branch_closed = true;
            break;
          }
          total += p * *ms;
        }
        if (computable) {
          bool ok = total > d1d2_cap;
          out.assertions.push_back({"tripartition " + tag + ": forced sum d1+d2",
                                    (int64_t)total, (int64_t)d1d2_cap, ">", ok});
          if (ok) branch_closed = true;
        }
      }
      if (!branch_closed && forced >= 1 && pcap >= 4 && all_length_two_at(dmin)) {
        // a forced part whose vertices all carry the unique two-color shape
        // pins the within-part edges to one shared color: monochromatic K_p,
        // impossible for p >= 4 in a tripartite class
        out.assertions.push_back({"tripartition " + tag + ": monochromatic K_" +
                                      std::to_string(pcap) + " in forced part",
                                  pcap, 3, ">", true});
        branch_closed = true;
      }
      if (!branch_closed) {
        out.assertions.push_back(
            {"tripartition " + tag + ": no closing argument", 0, 0, "none", false});
        out.closed = false;
      }
    }
  }
  return out;
}

CaseReport verify_small_case(const NumberTables& nt, int64_t n) {
  if (n != 13 && n != 14 && n != 16 && n != 17)
    throw std::domain_error("verify_small_case: n in {13,14,16,17}");
  CaseReport rep;
  rep.n = n;
  rep.feasible_sequences = feasible_degree_sequences(nt, n);
  int64_t cap_plain = 2 * n * n / 3;
  int64_t cap_improved = (2 * n * n - (n - 1)) / 3;
  int64_t cap89 = 8 * n * n / 9;

  auto counting_branch = [&](const std::string& name, int64_t cap) {
    auto ms = counting_contradiction(nt, n, cap);
    if (!ms) {
      rep.branches.push_back({name + ": no vertex assignment meets the cap " +
                                  std::to_string(cap),
                              0, 0, "none", true});
      return true;
    }
    bool ok = *ms > cap89;
    rep.branches.push_back({name + ": min sum d1+d2 under cap " + std::to_string(cap), *ms,
                            cap89, ">", ok});
    return ok;
  };

  bool closed;
  if (n == 14 || n == 17) {
    closed = counting_branch("counting", cap_plain);
  } else {
    bool a = counting_branch("mixed-primaries counting", cap_improved);
    SamePrimaryBranch b = same_primary_branch(nt, n);
    for (auto& as : b.assertions) rep.branches.push_back(as);
    closed = a && b.closed;
  }
  rep.contradiction_established = closed;
  return rep;
}

}  // namespace trv
