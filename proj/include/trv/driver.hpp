#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trv/emptiness.hpp"
#include "trv/smallcases.hpp"

namespace trv {

enum class StepResult { verified, no_delta_found, p_not_decreasing };

struct EscalationStep {
  int64_t t = 0;
  int64_t delta = -1;   // the delta certified at this step (-1 when none)
  int64_t p_prev = 0;   // the budget the step certified against
  StepResult result = StepResult::verified;
  GateStats stats;      // from the successful gate of this step
};

enum class EscalationOutcome {
  success,
  failure,
  trivial_d_zero,
  trivial_dtilde_negative,
  delegated_small_case
};

struct EscalationTrace {
  int64_t n = 0;
  std::vector<EscalationStep> steps;
  EscalationOutcome outcome = EscalationOutcome::failure;
  std::string failure_detail;
};

// The delta/p ladder: delta^0 = -1, p^0 = 4(d(n)-1); at step t pick the
// largest delta in (delta^(t-1), delta_max] whose class certifies empty
// (descending scan), succeed at delta_max, otherwise lower the budget to
// floor((dtilde - (delta+1)^2)/2), which must strictly decrease.
EscalationTrace run_escalation(const NumberTables& nt, int64_t n);

struct RangeRecord {
  int64_t n = 0;
  std::string method;  // escalation | small-case | trivial-d-zero | trivial-dtilde-negative
  bool ok = false;
  EscalationTrace trace;
  CaseReport smallcase;  // filled when method == "small-case"
  double ms = 0.0;
};

struct RangeSummary {
  int64_t certified = 0;
  int64_t failed = 0;
  std::vector<int64_t> failed_ns;
};

// One record per n in [from, to]; n in {13,14,16,17} routes to the
// small-case analysis. Workers share only the immutable tables; records
// come back sorted by n regardless of scheduling.
std::vector<RangeRecord> run_range(const NumberTables& nt, int64_t from, int64_t to, int jobs,
                                   bool fail_fast = false,
                                   const std::function<void(const RangeRecord&)>& progress = {});

RangeSummary summarize(const std::vector<RangeRecord>& records);

// JSON Lines, one object per n, fixed key order, no volatile fields; the
// timings go to a sibling file `<base>.timing.jsonl`.
void emit_certificates(const std::vector<RangeRecord>& records, const std::string& path);

// The stable (timing-free) serialization of one record, used both for the
// certificate file and for determinism checks.
std::string certificate_line(const RangeRecord& rec);

}  // namespace trv
