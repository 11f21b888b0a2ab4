// Acceptance run: every criterion at its stated bounds, tolerance and time
// budget, one PASS/FAIL line each. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ginshift/verify.hpp"

using namespace ginshift;

namespace {

struct Criterion {
  int number;
  const char* name;
  std::vector<const char*> claims;
  double budget_seconds;
};

// Criterion 12 also runs the idempotence check over everything collected.
const std::vector<Criterion> kCriteria{
    {1, "gin(Q) closed form, n,m <= 4", {"prop-computegin2-i"}, 60},
    {2, "gin(Q^2) = gin(Q)^2, n,m <= 3", {"prop-computegin2-ii"}, 180},
    {3, "W-identity, n,m <= 6", {"W-identity"}, 1},
    {4, "fibre product gin identity, 30 pairs + example pair", {"thm-1.3"}, 300},
    {5, "x1*x4 separates the two sums", {"example-1.2"}, 30},
    {6, "lex breaks the fibre identity", {"remark-lex"}, 30},
    {7,
     "span and kernel identities, 20 ideals",
     {"lemma-span", "prop-kern1", "prop-ker2", "lemma-helperker", "lemma-helper1", "lemma-easyhelper"},
     300},
    {8, "gin(I + m_m) and d-value additivity, 20 pairs", {"prop-mainprop", "prop-mainhelper"}, 300},
    {9, "shifting axioms and Stanley-Reisner round trip", {"shift-axioms"}, 300},
    {10, "shifting disjoint unions, 20 pairs + two edges", {"thm-4.2"}, 300},
    {11, "componentwise linearity transfer, 10 pairs", {"thm-5"}, 300},
    {12, "Buchberger vs Macaulay, gin idempotence", {"cross-oracle"}, 300},
};

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);

  std::vector<std::pair<MonomialIdeal, TermOrder>> gins;
  bool all_pass = true;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    auto run = [&](const Report& r) {
      gins.insert(gins.end(), r.gins.begin(), r.gins.end());
      if (!r.pass) {
        pass = false;
        detail += " " + r.claim_id + " witness=" + r.witness.dump();
      }
    };
    for (const char* id : c.claims) {
      const Claim* claim = find_claim(id);
      if (!claim) {
        pass = false;
        detail += std::string(" missing claim ") + id;
        continue;
      }
      run(run_claim(*claim, options));
    }
    if (c.number == 12) run(verify_gin_idempotence(gins, options));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      pass = false;
      detail += " over budget";
    }
    all_pass = all_pass && pass;
    std::printf("%s criterion %2d: %s (%.2f s, budget %.0f s)%s\n", pass ? "PASS" : "FAIL", c.number, c.name, seconds,
                c.budget_seconds, detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
