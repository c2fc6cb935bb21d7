/**
 * @file  verify.hpp
 * @brief Identity and axiom checkers: vacuum, translation covariance,
 *        locality (two-variable and N-independence), skew symmetry, hexagon,
 *        braiding-map axioms, Borcherds identity, associativity, Virasoro,
 *        unit products, the partial-zeta/Jordan-Chevalley consistency checks,
 *        mode-algebra triple agreement, and window-soundness property tests.
 *
 * Every check is exact: pass means coefficientwise Scalar equality, never a
 * tolerance.  Out-of-window cases are reported as skipped and block a full
 * pass.
 */
#pragma once

#include <cstdint>

#include "logva/core.hpp"
#include "logva/models.hpp"

namespace logva {

struct CheckCase {
  std::string id;
  std::string inputs;
  std::string status;  // "pass" | "fail" | "skipped"
  State lhs, rhs, diff;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckCase> cases;  // all failures/skips; passes up to detail_cap
  int pass = 0, fail = 0, skipped = 0;
  size_t detail_cap = 200;

  bool ok() const { return fail == 0 && skipped == 0; }
  int total() const { return pass + fail + skipped; }

  void add(const std::string& id, const std::string& inputs, const State& lhs,
           const State& rhs);
  void add_skip(const std::string& id, const std::string& inputs);
  void merge(const CheckReport& o);
};

struct VerifyOptions {
  Rat depth = Rat(6);      // probe weight cap
  int logdeg = 2;          // cap on weight-zero letters in probes
  Int mode_lo = -2;        // mode window for (n, m, k) style loops
  Int mode_hi = 2;
  uint64_t seed = 1;
  int random_cases = 50;   // window-soundness sample count
  Rat small_depth = Rat(3);  // probe cap for the expensive two-variable checks
};

CheckReport check_vacuum(const Model& M, const VerifyOptions& opt);
CheckReport check_translation(const Model& M, const VerifyOptions& opt);
CheckReport check_locality(const Model& M, const VerifyOptions& opt);
CheckReport check_skew_symmetry(const Model& M, const VerifyOptions& opt);
CheckReport check_hexagon(const Model& M, const VerifyOptions& opt);
CheckReport check_braiding_axioms(const Model& M, const VerifyOptions& opt);
CheckReport check_borcherds(const Model& M, const VerifyOptions& opt);
CheckReport check_associativity(const Model& M, const VerifyOptions& opt);
CheckReport check_virasoro(const Model& M, const VerifyOptions& opt);
CheckReport check_unit_products(const Model& M, const VerifyOptions& opt);
CheckReport check_prop311(const Model& M, const VerifyOptions& opt);
CheckReport check_mode_relations(const Model& M, const VerifyOptions& opt);
CheckReport check_window_soundness(const Model& M, const VerifyOptions& opt);

/// c from 2 * <vac| omega_{(3+S)} omega.
Scalar extract_central_charge(const Model& M);

/// The defect (LHS1 - LHS2 - RHS) of the mode-form Borcherds identity on
/// (a, b, c) at (n, m, k); zero iff the identity holds there.
State borcherds_defect(const Model& M, const State& a, const State& b, const State& c,
                       Int n, Int m, Int k);

/// The two indirect routes to the GL mode bracket [a_m, b_k] v (tags in the
/// generator order L, l, xi, xibar): the closed relation templates, and the
/// bracket recovered from the n = 0 mode-form Borcherds identity.
State gl_template_bracket(const Model& M, int a, Int m, int b, Int k, const State& v);
State gl_borcherds_bracket(const Model& M, const State& a, Int mhat, const State& b,
                           Int khat, const State& v);

/// Named suite dispatch; "all" runs every applicable suite.
CheckReport run_suite(const Model& M, const std::string& suite, const VerifyOptions& opt);
std::vector<std::string> suite_names();

}  // namespace logva
