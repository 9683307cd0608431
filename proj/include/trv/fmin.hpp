#pragma once

#include <cstdint>
#include <vector>

#include "trv/rational.hpp"

namespace trv {

// F(A,B,C) is the infimum of sum_{i != j} a_i b_j over pairs of equal-length
// compositions a of A and b of B into nonnegative reals with a_i + b_i <= C.
// It is 0 when A <= 0 or B <= 0.

struct FQuery {
  Rat A, B, C;  // C > 0
};

// The unique minimizer: len blocks, a_i + b_i = C and a_i - b_i = D for all
// i < len; the last block has total (A+B) - (len-1)C and difference D_last,
// where either D_last = D or min(a_len, b_len) = 0 with D_last between 0
// and D.
struct MinimizerWitness {
  int64_t len = 0;
  std::vector<Rat> a, b;
  Rat D, D_last;
};

// Closed-form exact value. Throws std::domain_error if C <= 0.
Rat f_value(const Rat& A, const Rat& B, const Rat& C);
inline Rat f_value(const FQuery& q) { return f_value(q.A, q.B, q.C); }

// Explicit minimizer for A, B > 0 (throws otherwise).
MinimizerWitness f_minimizer(const FQuery& q);

// Value of sum_{i != j} a_i b_j on an explicit composition pair.
Rat cross_product_sum(const std::vector<Rat>& a, const std::vector<Rat>& b);

struct GridInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Independent upper bound on F: minimizes over composition pairs whose
// entries come from the grid {0, C/res, 2C/res, ...}, rescaled so the row
// sums hit A and B exactly, for lengths ceil((A+B)/C) and ceil((A+B)/C)+1.
// Compositions violating a_i + b_i <= C after rescaling are discarded.
// Throws GridInfeasible if nothing on the grid is feasible.
Rat f_grid_oracle(const FQuery& q, int resolution);

}  // namespace trv
