#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trv/admissible.hpp"
#include "trv/numbers.hpp"
#include "trv/rational.hpp"

namespace trv {

// One coloring class to be certified empty: colorings of K_n with per-vertex
// bipartition imbalance at most delta and twice-precyclic budget at most p.
struct GateParams {
  int64_t n = 0;
  int64_t delta = 0;
  int64_t p = 0;
};

// Hypothesized sizes of the three parts of the dominant color, plus the
// number of off-color edges between the visible halves X and Y.
struct PartConfig {
  int64_t x_star = 0;
  int64_t y_star = 0;
  int64_t u = 0;
  int64_t b_xy = 0;
};

struct DerivedBounds {
  Rat eta;
  int64_t m_bar = 0;
  int64_t x_bar_max = 0, y_bar_max = 0;
  // raw part lower bounds x_star - x_bar_max (may be nonpositive)
  int64_t x_min_raw = 0, y_min_raw = 0;
  // effective lower bounds, additionally clamped to the smallest admissible
  // size, so they are always >= 1 for a non-pruned config
  int64_t x_min = 0, y_min = 0;
  Rat m_cap_half;  // (x_star + y_star + delta)/2, the coarse neighborhood cap
  // filled by compute_tau
  Rat c_bxy, c_rest;
  int64_t tau = 0;
  // filled by max_bu
  int64_t max_bu_x = 0, max_bu_y = 0;
  int64_t b_u_ystar = 0, b_u_xstar = 0;
};

enum class GateVerdict { empty_trivial_p_negative, empty_verified, failed };

struct GateStats {
  int64_t admissible_pairs = 0;
  int64_t third_step_probes = 0;
  int64_t configs_enumerated = 0;
  int64_t combos_examined = 0;
  std::map<std::string, int64_t> pruned;
  std::optional<int64_t> max_tau_slack;  // max over final checks of tau - 2*min
};

struct GateCertificate {
  GateParams gate;
  GateVerdict verdict = GateVerdict::failed;
  std::string failure;  // failing stage / first surviving configuration
  GateStats stats;
  std::vector<std::string> notes;
};

// Per-n state shared by every gate of the escalation for that n.
struct EmptinessContext {
  EmptinessContext(const NumberTables& tables, int64_t n);

  const NumberTables& nt;
  int64_t n;
  int64_t dtilde;
  int64_t quota;  // g3(n) - g3(n-1) + 1
  int64_t half;   // ceil(n/2)
  SMinTable smin;
};

// Per-gate state derived from the admissible set.
struct GateContext {
  const EmptinessContext& ec;
  GateParams gate;
  int64_t q;  // floor(p/2)
  std::vector<AdmissiblePair> pairs;
  int64_t min_product = 0;  // min s*t over admissible pairs
  int64_t min_s = 0;        // min s over admissible pairs (= min t by symmetry)
  Rat eta;                  // floor(p/2) / min_product
};

// ceil(12 g3(n) / (n(n-1))) >= ceil(n/2), the hypothesis both F-steps need.
bool check_xy_assumption(const NumberTables& nt, int64_t n);

// floor(p/2) / min admissible product; requires a nonempty admissible set.
Rat eta_bound(const GateContext& gc);

struct PairFailure {
  int64_t s = 0, t = 0, k = -1, w = -1;
  std::string what;
};

// F(s, t - floor(p/2s), floor((s+t+delta)/2)) > p for every ordered pair.
std::vector<PairFailure> certify_second_step(const GateContext& gc);

// Smallest w in [1, n-s-t] with
//   s(t - k/s - w)_+^2 + t(s - k/t - w)_+^2 + (s-t)^2 <= dtilde(n) - 4k;
// the left side is nonincreasing in w, so binary search applies.
std::optional<int64_t> minimal_w(const GateContext& gc, int64_t s, int64_t t, int64_t k);

// dtilde(n) < n^2/4, and at the minimal w of every (pair, k <= floor(p/2))
// both F-inequalities hold. Returns the first failure, if any.
std::optional<PairFailure> certify_third_step(GateContext& gc, int64_t* probes = nullptr);

struct Pruned {
  std::string reason;
};

// Monotone prunes stay violated as b_xy grows (the b_xy loop may break);
// the others must keep scanning.
struct BoundsOutcome {
  std::optional<DerivedBounds> bounds;  // set iff not pruned
  std::string prune_reason;
  bool prune_monotone = false;
};

BoundsOutcome derive_bounds(const GateContext& gc, const PartConfig& cfg);

// tau = floor(C[b_xy] b_xy + C[rest] (floor(p/2) - b_xy) + XbarMax*YbarMax)
int64_t compute_tau(const GateContext& gc, const PartConfig& cfg, DerivedBounds& b);

// Upper bounds on max b_U over X* and over Y*; empty = prune (no vertex can
// meet its triangle quota). Fills max_bu_x/max_bu_y/b_u_*star.
std::optional<std::pair<int64_t, int64_t>> max_bu(const GateContext& gc, const PartConfig& cfg,
                                                  DerivedBounds& b);

// Both counting constraints on off-color X-Y edges; false = combination
// cannot occur.
bool bxy_feasible(const GateContext& gc, const PartConfig& cfg, const DerivedBounds& b);

struct DecisionRecord {
  PartConfig cfg;
  std::string outcome;  // prune reason, "tau-ok", or "tau-exceeds"
  std::optional<DerivedBounds> bounds;
};

struct EmptinessOptions {
  // invoked for every resolved (config, b_xy) combination when set
  std::function<void(const DecisionRecord&)> observer;
};

GateContext make_gate_context(const EmptinessContext& ec, const GateParams& gate);

GateCertificate certify_gate_empty(const EmptinessContext& ec, const GateParams& gate,
                                   const EmptinessOptions& opts = {});
GateCertificate certify_gate_empty(const NumberTables& nt, const GateParams& gate,
                                   const EmptinessOptions& opts = {});

}  // namespace trv
