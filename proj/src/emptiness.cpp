#include "trv/emptiness.hpp"

#include <algorithm>
#include <cstdlib>

#include "trv/fmin.hpp"

namespace trv {

namespace {

// Strict comparison F(A, Bn/den, C) > Rnum/Rden for integer A, C over a
// fixed denominator, expanded so the whole closed form stays in i128.
// Worst-case magnitudes for n <= 699 peak around 1e23, far below 2^127.
bool f_greater(i128 A, i128 Bn, i128 den, i128 C, i128 Rnum, i128 Rden) {
  if (A <= 0 || Bn <= 0) return Rnum < 0;  // F = 0
  i128 Snum = A * den + Bn;
  i128 ell = ceil_div(Snum, C * den);
  if (ell <= 1) return Rnum < 0;  // one block: F = 0
  i128 Tnum = Snum - C * den * (ell - 1);  // last block total, in (0, C*den]
  i128 Dfnum = A * den - Bn;
  i128 absDf = Dfnum < 0 ? -Dfnum : Dfnum;
  i128 G, scale;
  if (absDf <= Tnum * ell) {
    // even split: D = D_last = (A-B)/ell; F scaled by 4 den^2 ell^2
    i128 e2 = ell * ell;
    scale = 4 * den * den * e2;
    G = 4 * A * Bn * den * e2 - (ell - 1) * C * C * den * den * e2 - Tnum * Tnum * e2 +
        ell * Dfnum * Dfnum;
  } else {
    // boundary: |D_last| = T_last, so the last block contributes nothing
    i128 Dlast = Dfnum >= 0 ? Tnum : -Tnum;
    i128 Dnum = Dfnum - Dlast;  // D = Dnum / (den (ell-1))
    i128 e1 = ell - 1;
    scale = 4 * den * den * e1 * e1;
    G = 4 * A * Bn * den * e1 * e1 - e1 * e1 * e1 * C * C * den * den + e1 * Dnum * Dnum;
  }
  return checked_mul(G, Rden) > checked_mul(Rnum, scale);
}

}  // namespace

EmptinessContext::EmptinessContext(const NumberTables& tables, int64_t n)
    : nt(tables),
      n(n),
      dtilde(tables.d_tilde(n)),
      quota(tables.g(n) - tables.g(n - 1) + 1),
      half((n + 1) / 2),
      smin(tables, n) {}

bool check_xy_assumption(const NumberTables& nt, int64_t n) {
  return ceil_div((i128)12 * nt.g(n), (i128)n * (n - 1)) >= (n + 1) / 2;
}

GateContext make_gate_context(const EmptinessContext& ec, const GateParams& gate) {
  GateContext gc{ec, gate, gate.p >= 0 ? gate.p / 2 : 0, {}, 0, 0, Rat(0)};
  gc.pairs = enumerate_admissible(ec.nt, ec.smin, ec.n, gate.delta);
  if (!gc.pairs.empty()) {
    gc.min_product = gc.pairs.front().s * gc.pairs.front().t;
    gc.min_s = gc.pairs.front().s;
    for (const auto& pr : gc.pairs) {
      gc.min_product = std::min(gc.min_product, pr.s * pr.t);
      gc.min_s = std::min(gc.min_s, pr.s);
    }
    gc.eta = Rat(gc.q, gc.min_product);
  }
  return gc;
}

Rat eta_bound(const GateContext& gc) {
  if (gc.pairs.empty())
    throw std::logic_error("eta_bound: admissible set is empty (class is empty outright)");
  return Rat(gc.q, gc.min_product);
}

std::vector<PairFailure> certify_second_step(const GateContext& gc) {
  std::vector<PairFailure> fails;
  int64_t p = gc.gate.p, delta = gc.gate.delta;
  for (const auto& pr : gc.pairs) {
    int64_t cap = (pr.s + pr.t + delta) / 2;
    int64_t B = pr.t - p / (2 * pr.s);
    if (!f_greater(pr.s, B, 1, cap, p, 1))
      fails.push_back({pr.s, pr.t, -1, -1, "F(s, t - p/2s, cap) <= p"});
  }
  return fails;
}

std::optional<int64_t> minimal_w(const GateContext& gc, int64_t s, int64_t t, int64_t k) {
  int64_t wub = gc.ec.n - s - t;
  if (wub < 1) return std::nullopt;
  i128 st = (i128)s * t;
  i128 rhs = st * ((i128)gc.ec.dtilde - 4 * k);
  i128 base = st * (i128)(s - t) * (s - t);
  auto lhs_ok = [&](int64_t w) {
    i128 a = st - k - (i128)s * w;
    if (a < 0) a = 0;
    i128 b = st - k - (i128)t * w;
    if (b < 0) b = 0;
    return t * a * a + s * b * b + base <= rhs;
  };
  if (!lhs_ok(wub)) return std::nullopt;
  int64_t lo = 1, hi = wub;
  while (lo < hi) {
    int64_t mid = lo + (hi - lo) / 2;
    if (lhs_ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

std::optional<PairFailure> certify_third_step(GateContext& gc, int64_t* probes) {
  const auto& ec = gc.ec;
  int64_t n = ec.n;
  if (!((i128)4 * ec.dtilde < (i128)n * n))
    return PairFailure{0, 0, -1, -1, "dtilde(n) >= n^2/4"};
  int64_t p = gc.gate.p, q = gc.q, delta = gc.gate.delta;
  for (const auto& pr : gc.pairs) {
    int64_t s = pr.s, t = pr.t;
    if (n - s - t < 1) continue;  // no candidate w for any k
    int64_t diff2 = (s - t) * (s - t);
    if (diff2 > ec.dtilde) continue;  // left side always exceeds the budget
    int64_t cap = (s + t + delta) / 2;
    int64_t kmax = std::min(q, (ec.dtilde - diff2) / 4);
    for (int64_t k = 0; k <= kmax; ++k) {
      auto w = minimal_w(gc, s, t, k);
      if (!w) continue;
      if (probes) ++*probes;
      i128 Bn = (i128)*w * s * t - (i128)(q - k) * t - (i128)*w * k;
      i128 Rnum = (i128)(p - 2 * k) * t + (i128)*w * k;
      if (!f_greater(s, Bn, (i128)s * t, cap, Rnum, t))
        return PairFailure{s, t, k, *w, "first F-inequality fails at minimal w"};
      if (!f_greater(*w, Bn, (i128)*w * t, cap, Rnum, t))
        return PairFailure{s, t, k, *w, "second F-inequality fails at minimal w"};
    }
  }
  return std::nullopt;
}

BoundsOutcome derive_bounds(const GateContext& gc, const PartConfig& cfg) {
  const auto& ec = gc.ec;
  int64_t n = ec.n, delta = gc.gate.delta, q = gc.q;
  int64_t m0 = gc.min_product;
  DerivedBounds b;
  b.eta = gc.eta;
  b.m_cap_half = Rat(cfg.x_star + cfg.y_star + delta, 2);

  int64_t second = cfg.x_star + cfg.y_star - ec.half;
  int64_t mbar = second;
  // The first entry of the min is derived with 1 - eta > 0 and n > 2*delta;
  // both hold whenever the second step passed (p < s*t for every admissible
  // pair, and delta^2 <= dtilde < n^2/4). Guard anyway and fall back to the
  // always-valid second entry.
  if (m0 > q && n > 2 * delta) {
    i128 num = (i128)(q - cfg.b_xy) * (cfg.u + 1) * m0 * 4;
    i128 den = (i128)cfg.u * (m0 - q) * (n - 2 * delta);
    mbar = std::min<int64_t>((int64_t)floor_div(num, den), second);
  }
  b.m_bar = mbar;
  if (mbar < 0) return {std::nullopt, "slack-negative", true};
  if (std::abs(cfg.x_star - cfg.y_star) > mbar + delta)
    return {std::nullopt, "part-imbalance", true};

  b.x_bar_max = mbar + std::min<int64_t>(cfg.x_star - cfg.y_star + delta, 0);
  b.y_bar_max = mbar + std::min<int64_t>(cfg.y_star - cfg.x_star + delta, 0);
  b.x_min_raw = cfg.x_star - b.x_bar_max;
  b.y_min_raw = cfg.y_star - b.y_bar_max;
  // |X| is an admissible size, so min admissible s is also a lower bound
  b.x_min = std::max(b.x_min_raw, gc.min_s);
  b.y_min = std::max(b.y_min_raw, gc.min_s);
  if (b.x_min > cfg.x_star || b.y_min > cfg.y_star)
    return {std::nullopt, "no-admissible-fit", true};

  // scaled by m0^2: both sides of the two u-window inequalities
  i128 rhs = ((i128)ec.dtilde - 4 * cfg.b_xy) * m0 * m0;
  {
    i128 py = (i128)(m0 - q) * b.y_min - (i128)m0 * cfg.u;
    if (py < 0) py = 0;
    i128 px = (i128)(m0 - q) * b.x_min - (i128)m0 * cfg.u;
    if (px < 0) px = 0;
    if (b.x_min * py * py + b.y_min * px * px > rhs)
      return {std::nullopt, "u-below-part-floor", true};
  }
  {
    i128 pay = (i128)(m0 - q) * cfg.u - (i128)m0 * cfg.y_star;
    if (pay < 0) pay = 0;
    i128 pax = (i128)(m0 - q) * cfg.u - (i128)m0 * cfg.x_star;
    if (pax < 0) pax = 0;
    if (b.x_min * pay * pay + b.y_min * pax * pax > rhs)
      return {std::nullopt, "u-above-part-cap", true};
  }
  return {b, "", false};
}

int64_t compute_tau(const GateContext& gc, const PartConfig& cfg, DerivedBounds& b) {
  Rat xm(b.x_min), ym(b.y_min);
  Rat base = Rat(1) + Rat(b.x_bar_max) / xm + Rat(b.y_bar_max) / ym;
  b.c_bxy = base + Rat((i128)cfg.u * (cfg.x_star + cfg.y_star)) / (xm * ym);
  b.c_rest = base * (Rat(1) / xm + Rat(1) / ym + Rat(1, cfg.u));
  Rat tau = b.c_bxy * Rat(cfg.b_xy) + b.c_rest * Rat(gc.q - cfg.b_xy) +
            Rat((i128)b.x_bar_max * b.y_bar_max);
  b.tau = (int64_t)tau.floor();
  return b.tau;
}

namespace {

// n >= 70: largest b <= u with (u-b)*ys + bip(xs-1) + bip(b) + tau - b >= quota.
// The left side is convex in b, so the qualifying set is a prefix once the
// right endpoint fails.
std::optional<int64_t> bmax_large_n(const EmptinessContext& ec, const PartConfig& cfg,
                                    int64_t tau, int64_t xs, int64_t ys) {
  auto val = [&](int64_t bb) {
    return (i128)(cfg.u - bb) * ys + bip(xs - 1) + bip(bb) + tau - bb;
  };
  i128 need = ec.quota;
  bool at0 = val(0) >= need, atU = val(cfg.u) >= need;
  if (!at0 && !atU) return std::nullopt;  // convexity: no b qualifies
  if (atU) return cfg.u;
  int64_t lo = 0, hi = cfg.u;  // val(lo) >= need > val(hi)
  while (lo < hi) {
    int64_t mid = lo + (hi - lo + 1) / 2;
    if (val(mid) >= need)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// n < 70: largest b <= u for which some endpoint b' of the imbalance window
// keeps the triangle count achievable.
std::optional<int64_t> bmax_small_n(const EmptinessContext& ec, const PartConfig& cfg,
                                    int64_t delta, int64_t tau, int64_t xs, int64_t ys) {
  for (int64_t bb = cfg.u; bb >= 0; --bb) {
    int64_t e1 = std::max<int64_t>(ys - (cfg.u - bb + delta), 0);
    int64_t e2 = std::min<int64_t>(ys, ys - (cfg.u - bb - delta));
    if (e1 > e2) continue;  // imbalance cap leaves no feasible cross-degree
    for (int64_t bp : {e1, e2}) {
      i128 v = (i128)(cfg.u - bb) * (ys - bp) + bip(xs - 1) + bip(bb) + bip(bp) + tau - bb - bp;
      if (v >= ec.quota) return bb;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int64_t, int64_t>> max_bu(const GateContext& gc, const PartConfig& cfg,
                                                  DerivedBounds& b) {
  const auto& ec = gc.ec;
  if (ec.n >= 70) {
    // with enough link budget the per-vertex count forces a cap; otherwise
    // fall back to the trivial bound u
    bool tight = bip(cfg.x_star) + bip(cfg.y_star) + bip(cfg.u) + b.tau <= ec.quota - 1;
    if (!tight) {
      b.max_bu_x = b.max_bu_y = cfg.u;
      return std::make_pair(cfg.u, cfg.u);
    }
    auto bx = bmax_large_n(ec, cfg, b.tau, cfg.x_star, cfg.y_star);
    if (!bx) return std::nullopt;
    auto by = bmax_large_n(ec, cfg, b.tau, cfg.y_star, cfg.x_star);
    if (!by) return std::nullopt;
    b.max_bu_x = *bx;
    b.max_bu_y = *by;
    return std::make_pair(*bx, *by);
  }

  int64_t delta = gc.gate.delta, q = gc.q, p = gc.gate.p;
  auto bx = bmax_small_n(ec, cfg, delta, b.tau, cfg.x_star, cfg.y_star);
  if (!bx) return std::nullopt;
  auto by = bmax_small_n(ec, cfg, delta, b.tau, cfg.y_star, cfg.x_star);
  if (!by) return std::nullopt;

  // bootstrap: when the unconditional bound already clears u/2, or the
  // F-criterion shows the off-color degree into U stays below u/2, the
  // budget argument tightens the cap
  auto refine = [&](int64_t ys, int64_t bmax_uncond, int64_t& b_u_store) {
    i128 buy =
        ((i128)cfg.u * cfg.b_xy + (q - cfg.b_xy)) * ys / ((i128)b.x_min * b.y_min);
    b_u_store = (int64_t)buy;
    int64_t shield = std::max<int64_t>(cfg.b_xy - ys, 0);
    bool crit = 2 * bmax_uncond <= cfg.u;
    if (!crit) {
      i128 pk = (i128)p - 2 * shield;
      int64_t arg2 = cfg.u - (int64_t)floor_div(pk + 2 * buy, 2 * (i128)ys);
      crit = f_value(Rat(ys), Rat(arg2), b.m_cap_half) > Rat(pk + buy);
    }
    if (!crit) return bmax_uncond;
    int64_t refined = (int64_t)floor_div((i128)q - shield + buy, ys);
    return std::min(bmax_uncond, refined);
  };
  b.max_bu_x = refine(cfg.y_star, *bx, b.b_u_ystar);
  b.max_bu_y = refine(cfg.x_star, *by, b.b_u_xstar);
  return std::make_pair(b.max_bu_x, b.max_bu_y);
}

bool bxy_feasible(const GateContext& gc, const PartConfig& cfg, const DerivedBounds& b) {
  i128 lhs = (i128)(cfg.u - b.max_bu_x - b.max_bu_y) * cfg.b_xy;
  if (lhs > gc.q) return false;
  i128 rhs = (i128)cfg.b_xy * (cfg.b_xy - 1) / 2 +
             (i128)cfg.b_xy * (b.x_bar_max + b.y_bar_max + std::min(b.max_bu_x, b.max_bu_y));
  return lhs <= rhs;
}

GateCertificate certify_gate_empty(const EmptinessContext& ec, const GateParams& gate,
                                   const EmptinessOptions& opts) {
  GateCertificate cert;
  cert.gate = gate;
  if (gate.n != ec.n) throw std::invalid_argument("gate n does not match context");
  if (gate.p < 0) {
    cert.verdict = GateVerdict::empty_trivial_p_negative;
    return cert;
  }
  if (!check_xy_assumption(ec.nt, ec.n)) {
    cert.verdict = GateVerdict::failed;
    cert.failure = "neighborhood-size assumption fails at n = " + std::to_string(ec.n);
    return cert;
  }
  GateContext gc = make_gate_context(ec, gate);
  cert.stats.admissible_pairs = (int64_t)gc.pairs.size();
  if (gc.pairs.empty()) {
    cert.verdict = GateVerdict::empty_verified;
    cert.stats.pruned["no-admissible-pair"] = 1;
    cert.notes.push_back("no admissible pair exists; the class is empty outright");
    return cert;
  }
  cert.notes.push_back("eta = " + gc.eta.str() + " (budget over min admissible product " +
                       std::to_string(gc.min_product) + ")");

  auto fails = certify_second_step(gc);
  if (!fails.empty()) {
    cert.verdict = GateVerdict::failed;
    cert.failure = "second step: " + fails.front().what + " at (s,t)=(" +
                   std::to_string(fails.front().s) + "," + std::to_string(fails.front().t) + ")";
    return cert;
  }
  auto third = certify_third_step(gc, &cert.stats.third_step_probes);
  if (third) {
    cert.verdict = GateVerdict::failed;
    cert.failure = "third step: " + third->what + " at (s,t,k,w)=(" + std::to_string(third->s) +
                   "," + std::to_string(third->t) + "," + std::to_string(third->k) + "," +
                   std::to_string(third->w) + ")";
    return cert;
  }

  auto observe = [&](const PartConfig& cfg, const char* outcome,
                     const std::optional<DerivedBounds>& b) {
    if (opts.observer) opts.observer(DecisionRecord{cfg, outcome, b});
  };

  int64_t n = ec.n;
  for (int64_t u = 1; u <= n - ec.half; ++u) {
    for (int64_t xs = 1; xs <= n - 1 - u; ++xs) {
      int64_t ys = n - u - xs;
      ++cert.stats.configs_enumerated;
      for (int64_t bxy = 0; bxy <= gc.q; ++bxy) {
        ++cert.stats.combos_examined;
        PartConfig cfg{xs, ys, u, bxy};
        BoundsOutcome out = derive_bounds(gc, cfg);
        if (!out.bounds) {
          ++cert.stats.pruned[out.prune_reason];
          observe(cfg, out.prune_reason.c_str(), std::nullopt);
          if (out.prune_monotone) break;  // violated for all larger b_xy too
          continue;
        }
        DerivedBounds& b = *out.bounds;
        compute_tau(gc, cfg, b);
        if (!max_bu(gc, cfg, b)) {
          ++cert.stats.pruned["vertex-quota-unreachable"];
          observe(cfg, "vertex-quota-unreachable", b);
          continue;
        }
        if (!bxy_feasible(gc, cfg, b)) {
          ++cert.stats.pruned["bxy-count-infeasible"];
          observe(cfg, "bxy-count-infeasible", b);
          continue;
        }
        int64_t m = std::min({cfg.x_star, cfg.y_star, cfg.u});
        int64_t slack = b.tau - 2 * m;
        if (!cert.stats.max_tau_slack || slack > *cert.stats.max_tau_slack)
          cert.stats.max_tau_slack = slack;
        if (slack <= 0) {
          ++cert.stats.pruned["tau-within-budget"];
          observe(cfg, "tau-ok", b);
          continue;
        }
        cert.verdict = GateVerdict::failed;
        cert.failure = "surviving configuration (x*,y*,u,b_xy)=(" + std::to_string(xs) + "," +
                       std::to_string(ys) + "," + std::to_string(u) + "," + std::to_string(bxy) +
                       ") with tau=" + std::to_string(b.tau) + " > 2*min=" + std::to_string(2 * m);
        observe(cfg, "tau-exceeds", b);
        return cert;
      }
    }
  }
  cert.verdict = GateVerdict::empty_verified;
  return cert;
}

GateCertificate certify_gate_empty(const NumberTables& nt, const GateParams& gate,
                                   const EmptinessOptions& opts) {
  EmptinessContext ec(nt, gate.n);
  return certify_gate_empty(ec, gate, opts);
}

}  // namespace trv
