#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "codeg/config.hpp"
#include "json.hpp"

namespace codeg {

struct CheckRecord {
  std::string claim;      // stable identifier of the claim being checked
  std::string subject;    // the instance (group spec, module, parameter)
  std::string statement;  // self-contained description of what must hold
  std::string observed;
  std::string expected;
  bool pass = false;
};

struct VerificationReport {
  std::string campaign;
  nlohmann::json parameters;
  bool pass = false;
  std::vector<CheckRecord> records;
  i64 wall_ms = 0;
};

/* closed-form codegree and degree sets vs tables computed from scratch */
VerificationReport campaign_formulas(const Config& cfg, bool long_run = false);

/*
 * Falsification attempt over the corpus: only PSL(2,q) constructions (or
 * allowlisted isomorphic copies) may realize a recognized codegree set,
 * cod(SL(2,q)) strictly contains cod(PSL(2,q)), the A5 x A5 codegree set is
 * the elementwise product and contains 144, and every non-perfect entry has
 * a nontrivial prime power codegree.
 */
VerificationReport campaign_uniqueness(const Config& cfg);

/* codegrees divide the group order; geometric series 1 + X + ... + X^{s-1}
 * = q + 1 with X a prime power forces s = 2 and X = q */
VerificationReport campaign_step_arithmetic(const Config& cfg, bool long_run = false);

/* every N_r-positive catalog pair satisfies the counting identity */
VerificationReport campaign_nq_catalog(const Config& cfg);

nlohmann::json report_to_json(const VerificationReport& r);
void print_report_summary(const VerificationReport& r, std::ostream& out);

}  // namespace codeg
