// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "maxrho/verify.hpp"

using namespace maxrho;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<VerificationRun()> run;
  std::function<bool(const VerificationRun&)> extra = nullptr;
};

bool has_passing(const VerificationRun& run, const std::string& name) {
  for (const Check& c : run.checks)
    if (c.name == name) return c.pass;
  return false;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form quotient polynomials, n in [8,200]", 10.0, [] { return verify_formulas(8, 200); }},
      {2, "exhaustive maximizers for max degree n-2, n in [5,8]", 600.0, [] { return verify_theorem_n2(5, 8); }},
      {3, "exact sign table, n in [59,500]", 5.0, [] { return verify_signs(59, 500); }},
      {4, "quotient family ordering for max degree n-3, n in [59,300]", 60.0,
       [] { return verify_theorem_n3(59, 300); }},
      {5, "equitable partitions and loop shift, n in [8,100]", 60.0, [] { return verify_equitable(8, 100); }},
      {6, "switching: 1000 LS instances, H2 vs G2_1, Op1 and Op2", 120.0,
       [] { return verify_switching(1000, 20240601); },
       [](const VerificationRun& r) { return r.checks.front().detail.value("instances", 0) == 1000; }},
      {7, "sandwich bound on path-bearing profiles, n in [59,120]", 60.0, [] { return verify_sandwich_grid(); },
       [](const VerificationRun& r) { return r.checks.size() >= 30; }},
      {8, "component bound on 500 random connected graphs, n <= 10", 10.0, [] { return verify_lemmas(500, 20240601); },
       [](const VerificationRun& r) { return has_passing(r, "component-bound"); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    std::size_t total = 0, failures = 0;
    try {
      const VerificationRun run = c.run();
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      total = run.checks.size();
      failures = run.failures();
      const bool extra_ok = !c.extra || c.extra(run);
      const bool in_budget = secs <= c.budget_seconds;
      pass = run.passed() && extra_ok && in_budget;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%zu/%zu checks, %.2f s of %.0f s budget%s%s", total - failures, total, secs,
                    c.budget_seconds, extra_ok ? "" : ", coverage short", in_budget ? "" : ", over budget");
      note = buf;
      if (!run.passed())
        for (const Check& ch : run.checks)
          if (!ch.pass) {
            note += "; first failure " + ch.name;
            break;
          }
    } catch (const std::exception& e) {
      note = std::string("error: ") + e.what();
    }
    if (!pass) ++failed;
    std::printf("criterion %d: %s  %s (%s)\n", c.id, pass ? "PASS" : "FAIL", c.title, note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
