// Acceptance gate: one line per criterion, exit 0 only when all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "codeg/campaigns.hpp"
#include "codeg/codegree.hpp"
#include "codeg/corpus.hpp"
#include "codeg/error.hpp"
#include "codeg/nq.hpp"
#include "codeg/psl2.hpp"
#include "codeg/recognizer.hpp"
#include "codeg/serialize.hpp"

using namespace codeg;

namespace {

using Clock = std::chrono::steady_clock;

i64 ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& desc, i64 ms) {
  std::printf("criterion %d: %s %s (%lld ms)\n", id, pass ? "PASS" : "FAIL", desc.c_str(), ms);
  std::fflush(stdout);
  if (!pass) ++failures;
}

}  // namespace

int main() {
  Config cfg;  // defaults: q in {4,5,7,8,9,11,13}, full corpus

  // 1 + 2: codegree and degree sets recomputed from scratch vs closed forms
  {
    auto start = Clock::now();
    bool cod_ok = true, cd_ok = true;
    std::string detail;
    try {
      for (i64 q : cfg.q_values) {
        Psl2Spec spec = build_psl2(q, cfg.caps.group_order);
        GroupData g = enumerate_group(spec.group, cfg.caps.group_order);
        CharacterTable t = compute_table(g, cfg.seed, cfg.caps.class_count);
        if (codegree_set(g, t).values != closed_form_cod(q).values) {
          cod_ok = false;
          detail = " (mismatch at q = " + std::to_string(q) + ")";
        }
        std::vector<i64> cd = degree_set(t);
        size_t want = (q == 4 || q == 5 || q == 8) ? 4 : 5;
        if (cd != closed_form_cd(q) || cd.size() != want) {
          cd_ok = false;
          detail = " (mismatch at q = " + std::to_string(q) + ")";
        }
      }
    } catch (const std::exception& e) {
      cod_ok = cd_ok = false;
      detail = std::string(" (") + e.what() + ")";
    }
    i64 elapsed = ms_since(start);
    bool in_budget = elapsed < 60000;
    report(1, cod_ok && in_budget,
           "codegree sets from scratch equal closed forms for q in {4,5,7,8,9,11,13}, under 60 s" +
               detail,
           elapsed);
    report(2, cd_ok, "degree sets match closed forms with sizes 4 (q in {4,5,8}) and 5 (odd q > 5)",
           elapsed);
  }

  // 3: counting identity on the two hand-checked modules plus the full catalog
  {
    auto start = Clock::now();
    bool ok = true;
    try {
      CountCheck a = lemma_count_check(gl_module(2, 2), 2);
      CountCheck b = lemma_count_check(gl_module(2, 3), 3);
      ok = satisfies_nr(gl_module(2, 2), 2) && a.equal && a.lhs == 3 &&
           satisfies_nr(gl_module(2, 3), 3) && b.equal && b.lhs == 4 &&
           campaign_nq_catalog(cfg).pass;
    } catch (const std::exception&) {
      ok = false;
    }
    report(3, ok, "counting identity (|M|-1)/(|C_M(Q)|-1) = n_r(G) on GL(2,2), GL(2,3), and catalog",
           ms_since(start));
  }

  // 4: family disjointness certificate
  {
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = verify_lemma_G_over_N(10, 1000).pass;
    } catch (const std::exception&) {
    }
    i64 elapsed = ms_since(start);
    report(4, ok && elapsed < 5000,
           "even/odd closed-form set families are disjoint and internally distinct, under 5 s",
           elapsed);
  }

  // 5: recognizer round trip and perturbation rejection
  {
    auto start = Clock::now();
    bool ok = true;
    for (i64 q = 4; q <= 10000 && ok; ++q) {
      if (!is_prime_power(q)) continue;
      std::vector<i64> m = recognize(closed_form_cod(q).values).matches;
      if (std::find(m.begin(), m.end(), q) == m.end()) ok = false;
    }
    for (i64 q = 4; q <= 100 && ok; ++q) {
      if (!is_prime_power(q)) continue;
      const std::vector<i64> base = closed_form_cod(q).values;
      for (size_t i = 0; i < base.size() && ok; ++i)
        for (i64 delta : {-1, 1}) {
          std::vector<i64> bent = base;
          bent[i] += delta;
          if (bent[i] < 1) continue;
          std::sort(bent.begin(), bent.end());
          bent.erase(std::unique(bent.begin(), bent.end()), bent.end());
          if (bent == base) continue;
          if (!recognize(bent).matches.empty()) ok = false;
        }
    }
    i64 elapsed = ms_since(start);
    report(5, ok && elapsed < 10000,
           "round trip over prime powers to 10^4; all one-step perturbations rejected, under 10 s",
           elapsed);
  }

  // 6: corpus falsification attempt
  {
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = build_corpus(cfg).size() >= 40 && campaign_uniqueness(cfg).pass;
    } catch (const std::exception&) {
    }
    report(6, ok, "over the 136-entry corpus only PSL(2,q) and known isomorphic copies recognize",
           ms_since(start));
  }

  // 7: engine self-checks, determinism, and linear character counts
  {
    auto start = Clock::now();
    bool ok = true;
    try {
      for (const char* spec : {"sym:3", "alt:5", "quaternion8", "sl2:3", "psl2:7"}) {
        GroupData g = enumerate_group(parse_group_spec(spec, cfg.caps));
        CharacterTable t = compute_table(g, cfg.seed);
        check_table(t, g);
        CharacterTable again = compute_table(g, cfg.seed);
        CharacterTable other = compute_table(g, 987654321ULL);
        if (table_to_json(g, t) != table_to_json(g, again)) ok = false;
        if (table_to_json(g, t) != table_to_json(g, other)) ok = false;
        i64 linears = 0;
        for (const auto& c : t.chars)
          if (c.degree == 1) ++linears;
        if (linears != g.order / derived_subgroup_data(g).order()) ok = false;
      }
    } catch (const std::exception&) {
      ok = false;
    }
    report(7, ok, "self-checks, seed-independent tables, and linear counts on five sample groups",
           ms_since(start));
  }

  // 8: geometric series sweep
  {
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = campaign_step_arithmetic(cfg).pass;
    } catch (const std::exception&) {
    }
    report(8, ok, "geometric series 1 + X + ... + X^{s-1} = q + 1 forces s = 2 over the sweep",
           ms_since(start));
  }

  std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
