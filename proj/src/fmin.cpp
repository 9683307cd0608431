#include "trv/fmin.hpp"

#include <algorithm>
#include <stdexcept>

namespace trv {

namespace {

// Shared closed-form core: block count, per-block totals and differences.
// Requires A, B > 0.
struct ClosedForm {
  i128 len;
  Rat t_last;  // (A+B) - (len-1)C, in (0, C]
  Rat D, D_last;
};

ClosedForm closed_form(const Rat& A, const Rat& B, const Rat& C) {
  Rat sum = A + B;
  i128 len = (sum / C).ceil();
  ClosedForm cf;
  cf.len = len;
  cf.t_last = sum - C * Rat(len - 1);
  if (len == 1) {
    cf.D = cf.D_last = A - B;
    return cf;
  }
  Rat diff = A - B;
  Rat even = diff / Rat(len);
  if (even.abs() <= cf.t_last) {
    cf.D = cf.D_last = even;
  } else {
    cf.D_last = diff.sign() >= 0 ? cf.t_last : -cf.t_last;
    cf.D = (diff - cf.D_last) / Rat(len - 1);
  }
  return cf;
}

}  // namespace

Rat f_value(const Rat& A, const Rat& B, const Rat& C) {
  if (C.sign() <= 0) throw std::domain_error("f_value: C > 0 required");
  if (A.sign() <= 0 || B.sign() <= 0) return Rat(0);
  ClosedForm cf = closed_form(A, B, C);
  if (cf.len == 1) return Rat(0);
  // sum a_i b_i = sum ((t_i)^2 - (d_i)^2)/4 over blocks
  Rat dot = ((C * C - cf.D * cf.D) * Rat(cf.len - 1) + cf.t_last * cf.t_last -
             cf.D_last * cf.D_last) /
            Rat(4);
  return A * B - dot;
}

MinimizerWitness f_minimizer(const FQuery& q) {
  if (q.C.sign() <= 0) throw std::domain_error("f_minimizer: C > 0 required");
  if (q.A.sign() <= 0 || q.B.sign() <= 0)
    throw std::domain_error("f_minimizer: A, B > 0 required");
  ClosedForm cf = closed_form(q.A, q.B, q.C);
  MinimizerWitness w;
  w.len = (int64_t)cf.len;
  w.D = cf.D;
  w.D_last = cf.D_last;
  for (i128 i = 0; i + 1 < cf.len; ++i) {
    w.a.push_back((q.C + cf.D) / Rat(2));
    w.b.push_back((q.C - cf.D) / Rat(2));
  }
  w.a.push_back((cf.t_last + cf.D_last) / Rat(2));
  w.b.push_back((cf.t_last - cf.D_last) / Rat(2));
  return w;
}

Rat cross_product_sum(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composition lengths differ");
  Rat sa(0), sb(0), dot(0);
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    dot += a[i] * b[i];
  }
  return sa * sb - dot;
}

namespace {

// Enumerate compositions of total into len nonnegative parts; for each one,
// pick the cap-respecting beta composition maximizing sum alpha_i*beta_i
// (greedy by descending alpha is exact for this box-constrained transport).
struct GridSearch {
  int len;
  i128 na, nb;
  std::vector<i128> beta_cap;  // indexed by alpha value 0..na
  i128 best = -1;

  void run(std::vector<i128>& alpha, int idx, i128 left) {
    if (idx == len - 1) {
      alpha[idx] = left;
      score(alpha);
      return;
    }
    for (i128 v = 0; v <= left; ++v) {
      alpha[idx] = v;
      run(alpha, idx + 1, left - v);
    }
  }

  void score(const std::vector<i128>& alpha) {
    for (int i = 0; i < len; ++i)
      if (beta_cap[(int64_t)alpha[i]] < 0) return;  // a_i alone exceeds C
    std::vector<int> order(len);
    for (int i = 0; i < len; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return alpha[x] > alpha[y]; });
    i128 left = nb, total = 0;
    for (int i : order) {
      i128 take = std::min(left, beta_cap[(int64_t)alpha[i]]);
      total += take * alpha[i];
      left -= take;
      if (left == 0) break;
    }
    if (left > 0) return;  // caps cannot absorb B on this alpha composition
    if (total > best) best = total;
  }
};

}  // namespace

Rat f_grid_oracle(const FQuery& q, int resolution) {
  if (q.C.sign() <= 0) throw std::domain_error("f_grid_oracle: C > 0 required");
  if (q.A.sign() <= 0 || q.B.sign() <= 0)
    throw std::domain_error("f_grid_oracle: A, B > 0 required");
  if (resolution < 1) throw std::domain_error("f_grid_oracle: resolution >= 1");

  i128 len0 = ((q.A + q.B) / q.C).ceil();
  // raw grid entries are multiples of C/res; row sums then rescale exactly
  i128 na = (q.A * Rat(resolution) / q.C).ceil();
  i128 nb = (q.B * Rat(resolution) / q.C).ceil();
  if (na > 4000 || nb > 4000 || len0 > 6)
    throw std::domain_error("f_grid_oracle: grid too large to enumerate");

  Rat best;
  bool found = false;
  for (i128 len = len0; len <= len0 + 1; ++len) {
    GridSearch gs;
    gs.len = (int)len;
    gs.na = na;
    gs.nb = nb;
    gs.beta_cap.assign((int64_t)na + 1, 0);
    // cap(alpha): largest beta with A*alpha/na + B*beta/nb <= C
    for (i128 al = 0; al <= na; ++al) {
      Rat room = q.C - q.A * Rat(al) / Rat(na);
      if (room.sign() < 0) {
        gs.beta_cap[(int64_t)al] = -1;  // alpha alone already violates the cap
        continue;
      }
      i128 cap = (room * Rat(nb) / q.B).floor();
      gs.beta_cap[(int64_t)al] = std::min(cap, nb);
    }
    std::vector<i128> alpha((int64_t)len, 0);
    gs.run(alpha, 0, na);
    if (gs.best >= 0) {
      Rat value = q.A * q.B - q.A * q.B * Rat(gs.best) / (Rat(na) * Rat(nb));
      if (!found || value < best) {
        best = value;
        found = true;
      }
    }
  }
  if (!found) throw GridInfeasible("no feasible grid composition");
  return best;
}

}  // namespace trv
