// Copyright 2026 The cubicpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. INFO lines carry supporting measurements.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cubicpair/error.hpp"
#include "cubicpair/json_io.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace {

using namespace cubicpair;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
  Outcome o{false, ""};
  const auto t0 = Clock::now();
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = ms_since(t0);
  if (!o.pass) ++failures;
  std::printf("%s  %-28s %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), ms);
  std::fflush(stdout);
}

void info(const std::string& name, const std::string& detail) {
  std::printf("INFO  %-28s %s\n", name.c_str(), detail.c_str());
}

Outcome generic_profile() {
  const RingPtr& ring = test::ring5();
  int ok = 0;
  double total = 0, worst = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const PairInput pair = test::seeded_pair(s);
    const auto t0 = Clock::now();
    const CubicFormResult c = cubic_form(pair);
    const Index top = ring->dim(5) - graded_piece_dim(ring, jacobian_gens(c.C), 5);
    const double ms = ms_since(t0);
    total += ms;
    worst = std::max(worst, ms);
    ok += c.colon_f5q_3 == 34 && c.j_c2_dim == 5 && c.colon_f4q_2 == 10 && top == 1 && c.jc6_codim == 0 &&
          c.is_smooth;
  }
  std::ostringstream d;
  d << ok << "/100 pairs match (34, 5, 10, 1, 0); mean " << total / 100 << " ms, max " << worst << " ms";
  return {ok == 100 && total / 100 < 100 && total < 60000, d.str()};
}

Outcome lemma_suite() {
  const RingPtr& ring = test::ring5();
  int colon_ok = 0, perp_ok = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const HomForm F = test::seeded_cubic(100 + s);
    const auto jac = jacobian_gens(F);
    bool all = true;
    for (int k = 3; k <= 5; ++k) {
      all = all && colon_piece(graded_piece(ring, jac, k), variables<Side::primal>(ring), k - 1) ==
                       graded_piece(ring, jac, k - 1);
    }
    colon_ok += all;
    const PairInput p = test::seeded_pair(200 + s);
    const CubicFormResult c = cubic_form(p);
    perp_ok += perp(graded_piece(ring, jacobian_gens(c.C), 2)) ==
               colon_piece(graded_piece(ring, jacobian_gens(p.F), 4), {p.Q}, 2);
  }
  std::ostringstream d;
  d << "colon by m exact for k=3..5 on " << colon_ok << "/20 cubics; perp(J_C2) = (J_F4:Q)_2 on " << perp_ok
    << "/20 pairs";
  return {colon_ok == 20 && perp_ok == 20, d.str()};
}

Outcome hilbert() {
  const std::vector<Index> expected{1, 5, 10, 10, 5, 1, 0};
  int ok = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    ok += hilbert_function(test::ring5(), jacobian_gens(test::seeded_cubic(300 + s)), 6) == expected;
  }
  return {ok == 20, std::to_string(ok) + "/20 cubics give (1, 5, 10, 10, 5, 1, 0)"};
}

Outcome zero_cubic() {
  const RingPtr& ring = test::ring5();
  const bool fermat = cubic_form({fermat_cubic(ring), fermat_quadric(ring)}).C.is_zero();
  int inside = 0, outside = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PairInput p = test::seeded_pair(400 + s);
    inside += cubic_form({p.F, test::random_jacobian_quadric(p.F, s)}).C.is_zero();
    outside += !cubic_form(p).C.is_zero();
  }
  std::ostringstream d;
  d << "Fermat C = 0: " << (fermat ? "yes" : "no") << "; Q in J_F2 gives C = 0: " << inside
    << "/20; generic Q gives C != 0: " << outside << "/20";
  return {fermat && inside == 20 && outside == 20, d.str()};
}

Outcome determinant_form() {
  const HomForm F = test::seeded_pair(500).F;
  const DualForm det_mode = mf_form(F, MfMode::determinant);
  const DualForm null_mode = mf_form(F, MfMode::nullspace);
  const bool modes = !det_mode.is_zero() && proportional(det_mode, null_mode);
  int ok = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const HomForm Q = random_form(test::ring5(), 2, 510 + s);
    ok += proportional(cubic_from_mf(det_mode, Q), cubic_form({F, Q}).C);
  }
  std::ostringstream d;
  d << "modes proportional on all 126 coefficients: " << (modes ? "yes" : "no") << "; C via M_F matches " << ok
    << "/10";
  return {modes && ok == 10, d.str()};
}

Outcome moduli() {
  int ok = 0, oracle_ok = 0;
  const int n = 20;
  for (std::uint64_t s = 0; s < n; ++s) {
    const PairInput p = test::seeded_pair(600 + s);
    const ModuliReport m = moduli_report(p);
    ok += m.dim_tdef_xy == 24 && m.dim_h11_new == 19 && m.dim_ker_alpha == 0 && m.delta_b_nonzero &&
          m.rank_mq_s3 <= 5;
    const oracle::Poly F = oracle::from_form(p.F), Q = oracle::from_form(p.Q);
    oracle_ok += oracle::tdef_dim(F, Q, 5, kDefaultPrime) == m.dim_tdef_xy &&
                 oracle::h11_new_dim(F, Q, 5, kDefaultPrime) == m.dim_h11_new;
  }
  std::ostringstream d;
  d << ok << "/" << n << " pairs give (24, 19, 0, delta_b != 0); reference presentation ranks agree on " << oracle_ok
    << "/" << n;
  return {ok == n && oracle_ok == n, d.str()};
}

Outcome torelli() {
  const int n = 50;
  int strict = 0, f_ok = 0, q_class = 0, reproduced = 0;
  double worst = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    const PairInput p = test::seeded_pair(700 + s);
    const auto t0 = Clock::now();
    const TorelliResult r = torelli_roundtrip(p);
    worst = std::max(worst, ms_since(t0));
    const bool f = r.f_proportional.value_or(false);
    const bool q = r.q_proportional.value_or(false);
    strict += f && q;
    f_ok += f;
    q_class += r.q_class_proportional.value_or(false);
    reproduced += r.data_reproduced;
  }
  info("torelli F_hat ~ F", std::to_string(f_ok) + "/" + std::to_string(n));
  info("torelli Q_hat ~ Q mod J_F2", std::to_string(q_class) + "/" + std::to_string(n));
  info("torelli data reproduced", std::to_string(reproduced) + "/" + std::to_string(n));
  std::ostringstream d;
  d << "F_hat ~ F and Q_hat ~ Q on " << strict << "/" << n << " pairs (at most 1 miss allowed); worst trial " << worst
    << " ms";
  return {n - strict <= 1 && worst < 1000, d.str()};
}

Outcome binary() {
  const RingPtr ring = Ring::make(kDefaultPrime, 2, 8);
  auto form = [&](std::initializer_list<Exponents> monos) {
    HomForm f(ring, 4);
    for (const auto& e : monos) f.set_coeff(e, ring->field().one());
    return f;
  };
  const bool a = binary_syzygy_form(form({{2, 2}})).has_syzygy;
  const bool b = binary_syzygy_form(form({{4, 0}})).has_syzygy;
  const BinarySyzygy c = binary_syzygy_form(form({{4, 0}, {0, 4}}));
  const bool ok = a && b && !c.has_syzygy && !c.form.is_zero() && c.form.degree() == 4;
  std::ostringstream d;
  d << "x^2y^2: " << a << ", x^4: " << b << ", x^4+y^4: " << c.has_syzygy << " with degree-" << c.form.degree()
    << " form";
  return {ok, d.str()};
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CUBICPAIR_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome headless_contract() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cubicpair_acceptance";
  fs::create_directories(dir);
  const std::string pair = (dir / "pair.json").string();
  const std::string fermat = (dir / "fermat.json").string();
  const std::string bad = (dir / "bad.json").string();
  const std::string degenerate = (dir / "t.json").string();
  std::ofstream(fermat) << dump(pair_to_json({fermat_cubic(test::ring5()), fermat_quadric(test::ring5())}));
  std::ofstream(bad) << "{";
  Json t;
  t["p"] = kDefaultPrime;
  t["T"] = Json::array();
  for (int a = 0; a < 15; ++a) t["T"].push_back(std::vector<int>(35, 0));
  std::ofstream(degenerate) << dump(t);

  const int gen = run_cli("gen --seed 1 --out " + pair);
  const int generic = run_cli("analyze " + pair);
  const int degen = run_cli("analyze " + fermat);
  const int input = run_cli("analyze " + bad);
  const int rec = run_cli("reconstruct " + pair);
  const int rec_fail = run_cli("reconstruct " + degenerate);
  fs::remove_all(dir);
  std::ostringstream d;
  d << "gen " << gen << ", analyze generic " << generic << ", Fermat " << degen << ", malformed " << input
    << ", reconstruct " << rec << ", degenerate T " << rec_fail;
  return {gen == 0 && generic == 0 && degen == 3 && input == 2 && rec == 0 && rec_fail == 4, d.str()};
}

}  // namespace

int main() {
  report("generic-profile", generic_profile);
  report("lemma-suite", lemma_suite);
  report("hilbert-function", hilbert);
  report("zero-cubic-criterion", zero_cubic);
  report("determinant-form", determinant_form);
  report("moduli-dimensions", moduli);
  report("torelli-round-trip", torelli);
  report("binary-forms", binary);
  report("headless-exit-contract", headless_contract);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
