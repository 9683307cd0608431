#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trv/numbers.hpp"

namespace trv {

// Nonincreasing positive degree-by-color sequence of one vertex.
using DegreeSequence = std::vector<int64_t>;

struct BranchAssertion {
  std::string name;
  int64_t lhs = 0;
  int64_t rhs = 0;
  std::string relation;  // e.g. ">" meaning the contradiction lhs > rhs
  bool ok = false;
};

struct CaseReport {
  int64_t n = 0;
  std::vector<DegreeSequence> feasible_sequences;
  std::vector<BranchAssertion> branches;
  bool contradiction_established = false;
};

// All nonincreasing positive sequences summing to n-1 with at most one entry
// equal to 1 and sum of bip(entry) >= g3(n) - g3(n-1) + 1.
std::vector<DegreeSequence> feasible_degree_sequences(const NumberTables& nt, int64_t n);

// Minimum possible sum over n vertices of d1+d2 when each vertex carries one
// feasible sequence and the total primary degree is capped by d1_cap; empty
// when no assignment satisfies the cap.
std::optional<int64_t> counting_contradiction(const NumberTables& nt, int64_t n, int64_t d1_cap);

// Smallest number of vertices forced onto the minimum-d1 sequence by the cap
// (the "at least j vertices have degree sequence ..." step); 0 if nothing is
// forced.
int64_t forced_min_d1_count(const NumberTables& nt, int64_t n, int64_t d1_cap);

struct SamePrimaryBranch {
  bool closed = false;
  std::vector<BranchAssertion> assertions;
  std::vector<std::string> notes;
};

// The all-vertices-share-a-primary-color branch for n in {13, 16}: enumerate
// tripartitions with parts capped by n - min d1, close each by a forced
// monochromatic clique or by the forced degree-sum count.
SamePrimaryBranch same_primary_branch(const NumberTables& nt, int64_t n);

// Full contradiction for n in {13, 14, 16, 17}.
CaseReport verify_small_case(const NumberTables& nt, int64_t n);

}  // namespace trv
