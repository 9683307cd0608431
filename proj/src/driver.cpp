#include "trv/driver.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace trv {

EscalationTrace run_escalation(const NumberTables& nt, int64_t n) {
  if (n == 13 || n == 14 || n == 16 || n == 17)
    throw std::domain_error("run_escalation: n is handled by the small-case analysis");
  if (n < 3) throw std::domain_error("run_escalation: n >= 3 required");
  EscalationTrace tr;
  tr.n = n;
  if (nt.d(n) == 0) {
    tr.outcome = EscalationOutcome::trivial_d_zero;
    return tr;
  }
  if (nt.d_tilde(n) < 0) {
    tr.outcome = EscalationOutcome::trivial_dtilde_negative;
    return tr;
  }
  EmptinessContext ec(nt, n);
  int64_t dmax = *nt.delta_max(n);
  int64_t delta_prev = -1;
  int64_t p_prev = 4 * (nt.d(n) - 1);
  for (int64_t t = 1;; ++t) {
    std::optional<int64_t> found;
    GateCertificate ok_cert;
    std::string last_failure;
    for (int64_t delta = dmax; delta > delta_prev; --delta) {
      GateCertificate c = certify_gate_empty(ec, GateParams{n, delta, p_prev});
      if (c.verdict != GateVerdict::failed) {
        found = delta;
        ok_cert = std::move(c);
        break;
      }
      last_failure = c.failure;
    }
    if (!found) {
      tr.steps.push_back({t, -1, p_prev, StepResult::no_delta_found, {}});
      tr.outcome = EscalationOutcome::failure;
      tr.failure_detail = "no certifiable delta at budget " + std::to_string(p_prev) +
                          (last_failure.empty() ? "" : "; last: " + last_failure);
      return tr;
    }
    tr.steps.push_back({t, *found, p_prev, StepResult::verified, ok_cert.stats});
    if (*found == dmax) {
      tr.outcome = EscalationOutcome::success;
      return tr;
    }
    int64_t p_next =
        (int64_t)floor_div((i128)nt.d_tilde(n) - (i128)(*found + 1) * (*found + 1), 2);
    if (p_next >= p_prev) {
      tr.steps.push_back({t + 1, -1, p_next, StepResult::p_not_decreasing, {}});
      tr.outcome = EscalationOutcome::failure;
      tr.failure_detail = "budget failed to decrease: " + std::to_string(p_next) + " >= " +
                          std::to_string(p_prev);
      return tr;
    }
    delta_prev = *found;
    p_prev = p_next;
  }
}

namespace {

RangeRecord run_one(const NumberTables& nt, int64_t n) {
  RangeRecord rec;
  rec.n = n;
  auto start = std::chrono::steady_clock::now();
  if (n == 13 || n == 14 || n == 16 || n == 17) {
    rec.method = "small-case";
    rec.smallcase = verify_small_case(nt, n);
    rec.ok = rec.smallcase.contradiction_established;
    rec.trace.n = n;
    rec.trace.outcome = EscalationOutcome::delegated_small_case;
  } else {
    rec.trace = run_escalation(nt, n);
    switch (rec.trace.outcome) {
      case EscalationOutcome::trivial_d_zero:
        rec.method = "trivial-d-zero";
        rec.ok = true;
        break;
      case EscalationOutcome::trivial_dtilde_negative:
        rec.method = "trivial-dtilde-negative";
        rec.ok = true;
        break;
      default:
        rec.method = "escalation";
        rec.ok = rec.trace.outcome == EscalationOutcome::success;
        break;
    }
  }
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
  return rec;
}

}  // namespace

std::vector<RangeRecord> run_range(const NumberTables& nt, int64_t from, int64_t to, int jobs,
                                   bool fail_fast,
                                   const std::function<void(const RangeRecord&)>& progress) {
  if (from < 3 || to < from) throw std::domain_error("run_range: need 3 <= from <= to");
  if (to > 699)
    throw std::domain_error(
        "run_range: n > 699 is outside the supported range (covered analytically, not by "
        "this program)");
  if (jobs < 1) jobs = 1;
  int64_t count = to - from + 1;
  std::vector<RangeRecord> out((size_t)count);
  std::atomic<int64_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex progress_mu;
  auto worker = [&]() {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      int64_t idx = next.fetch_add(1);
      if (idx >= count) return;
      RangeRecord rec = run_one(nt, from + idx);
      if (fail_fast && !rec.ok) stop.store(true, std::memory_order_relaxed);
      if (progress) {
        std::lock_guard<std::mutex> lk(progress_mu);
        progress(rec);
      }
      out[(size_t)idx] = std::move(rec);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

RangeSummary summarize(const std::vector<RangeRecord>& records) {
  RangeSummary s;
  for (const auto& r : records) {
    if (r.n == 0) continue;  // unprocessed slot after a fail-fast stop
    if (r.ok)
      ++s.certified;
    else {
      ++s.failed;
      s.failed_ns.push_back(r.n);
    }
  }
  return s;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json stats_json(const GateStats& st) {
  ordered_json j;
  j["configs"] = st.configs_enumerated;
  ordered_json pr = ordered_json::object();
  for (const auto& [k, v] : st.pruned) pr[k] = v;
  j["pruned"] = pr;
  if (st.max_tau_slack)
    j["max_tau_slack"] = *st.max_tau_slack;
  else
    j["max_tau_slack"] = nullptr;
  return j;
}

}  // namespace

std::string certificate_line(const RangeRecord& rec) {
  ordered_json j;
  j["n"] = rec.n;
  j["method"] = rec.method;
  j["ok"] = rec.ok;
  ordered_json steps = ordered_json::array();
  if (rec.method == "escalation") {
    for (const auto& st : rec.trace.steps) {
      ordered_json s;
      s["t"] = st.t;
      s["delta"] = st.delta;
      s["p"] = st.p_prev;
      if (st.result == StepResult::verified) {
        ordered_json sj = stats_json(st.stats);
        for (auto& [k, v] : sj.items()) s[k] = v;
      } else {
        s["result"] =
            st.result == StepResult::no_delta_found ? "no-delta-found" : "p-not-decreasing";
      }
      steps.push_back(s);
    }
  }
  j["steps"] = steps;
  ordered_json notes = ordered_json::array();
  if (rec.method == "small-case") {
    for (const auto& br : rec.smallcase.branches) {
      std::string line = br.name;
      if (br.relation != "none")
        line += ": " + std::to_string(br.lhs) + " " + br.relation + " " +
                std::to_string(br.rhs) + (br.ok ? " holds" : " FAILS");
      notes.push_back(line);
    }
  }
  if (!rec.ok && !rec.trace.failure_detail.empty()) notes.push_back(rec.trace.failure_detail);
  j["notes"] = notes;
  return j.dump();
}

void emit_certificates(const std::vector<RangeRecord>& records, const std::string& path) {
  std::string base = path;
  const std::string ext = ".jsonl";
  if (base.size() > ext.size() && base.substr(base.size() - ext.size()) == ext)
    base = base.substr(0, base.size() - ext.size());
  std::ofstream stable(path);
  if (!stable) throw std::runtime_error("cannot open certificate file: " + path);
  std::ofstream timing(base + ".timing.jsonl");
  if (!timing) throw std::runtime_error("cannot open timing file: " + base + ".timing.jsonl");
  for (const auto& rec : records) {
    if (rec.n == 0) continue;
    stable << certificate_line(rec) << "\n";
    ordered_json t;
    t["n"] = rec.n;
    t["ms"] = rec.ms;
    timing << t.dump() << "\n";
  }
  if (!stable.good() || !timing.good())
    throw std::runtime_error("write failure emitting certificates to " + path);
}

}  // namespace trv
