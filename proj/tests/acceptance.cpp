// Acceptance suite: runs every top-level claim of the engine at full scale
// and prints one PASS/FAIL line per criterion. Exits nonzero on any failure.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "expansion_tables.hpp"
#include "sigmaforge/bernoulli.hpp"
#include "sigmaforge/heat.hpp"
#include "sigmaforge/inversion.hpp"
#include "sigmaforge/tau.hpp"

using namespace sigmaforge;
using clock_type = std::chrono::steady_clock;

namespace {

struct shared_state {
  long N = 20;
  hw2 sigma_xi{20};
  hw2 sigma_mu{20};
  hw2 sigma_tau{20};
  hw2 sigma_deep{26};  // for the annihilation checks
  hw1 sigma1{vars::u1(), 1};
};

bool criterion1_expansions(shared_state& st, std::ostream& log) {
  bool ok = true;
  xi_hierarchy hx = build_xi_hierarchy(5, 14);
  auto xt = testdata::xi_tables();
  for (std::size_t k = 0; k < xt.size(); ++k)
    for (const auto& [order, expect] : xt[k])
      if (!(hx.xi[k].coeff(order) == expect)) {
        log << "    xi_" << k << " mismatch at order " << order << "\n";
        ok = false;
      }
  mu_hierarchy hm = build_mu_hierarchy(4, 9);
  auto mt = testdata::mu_tables();
  for (std::size_t k = 0; k < mt.size(); ++k)
    for (const auto& [order, expect] : mt[k])
      if (!(hm.mu[k].coeff(order) == expect)) {
        log << "    mu_" << k << " mismatch at order " << order << "\n";
        ok = false;
      }
  if (!(st.sigma_xi.coeff(3, 0) == sparse_poly(2)) ||
      !(st.sigma_xi.coeff(0, 1) == sparse_poly(-1))) {
    log << "    sigma leading layer is not u1^3/3 - u3\n";
    ok = false;
  }
  return ok;
}

bool criterion2_routes(shared_state& st, std::ostream&) {
  return st.sigma_xi == st.sigma_mu && st.sigma_xi == st.sigma_tau;
}

bool criterion3_heat(shared_state& st, std::ostream& log) {
  auto rep =
      verify_annihilation(build_heat_system(2), {"Q0", "Q2", "Q4", "Q6"}, st.sigma_deep, st.N);
  bool ok = rep.all_zero();
  if (!ok)
    for (const auto& op : rep.ops)
      if (!op.residuals.empty()) log << "    " << op.name << " has residuals\n";
  for (const auto& op : build_heat_system(1)) {
    hw1 r = op.apply1(st.sigma1);  // sigma1 carries order N+2, residual exact through N
    if (r.trunc() < st.N || !r.is_zero()) {
      log << "    genus-1 operator residual\n";
      ok = false;
    }
  }
  return ok;
}

bool criterion4_operator_identities(shared_state&, std::ostream& log) {
  auto Q = build_heat_system(2);
  auto L4 = sparse_poly::var(vars::l4());
  auto L6 = sparse_poly::var(vars::l6());
  auto L8 = sparse_poly::var(vars::l8());
  auto L10 = sparse_poly::var(vars::l10());
  bool a = Q[3].scale(rational(10)) ==
           bracket(Q[1], Q[2]).scale(rational(5)) - Q[0].scale(L6.scale(8)) +
               Q[1].scale(L4.scale(8));
  bool b = Q[1].scale(L8.scale(6)) ==
           bracket(Q[2], Q[3]).scale(rational(5)) + Q[0].scale(L10.scale(10)) +
               Q[2].scale(L6.scale(6)) - Q[3].scale(L4.scale(10));
  if (!a) log << "    10 Q6 = 5[Q2,Q4] - 8 l6 Q0 + 8 l4 Q2 failed\n";
  if (!b) log << "    6 l8 Q2 = 5[Q4,Q6] + 10 l10 Q0 + 6 l6 Q4 - 10 l4 Q6 failed\n";
  return a && b;
}

bool criterion5_integrality(shared_state& st, std::ostream& log) {
  bool ok = true;
  subring_spec scaled;
  scaled.scales[vars::l10()] = 2;
  if (!check_integrality(st.sigma_xi, scaled).all_pass()) {
    log << "    sigma not in Z[l4,l6,l8,2l10]\n";
    ok = false;
  }
  subring_spec plain;
  if (!check_integrality(st.sigma_tau, plain).all_pass()) {
    log << "    tau-route sigma not in Z[lambda]\n";
    ok = false;
  }
  if (!check_integrality(st.sigma1, plain).all_pass()) {
    log << "    genus-1 sigma not in Z[l4,l6]\n";
    ok = false;
  }
  return ok;
}

bool criterion6_inversion(shared_state&, std::ostream& log) {
  bool ok = true;
  laurent1 F = f_series(16);
  if (!f_ode1_residual(F).is_zero() || !f_ode2_residual(F).is_zero()) {
    log << "    F residuals nonzero\n";
    ok = false;
  }
  laurent1 G = g_series(16);
  if (!g_ode1_residual(G).is_zero() || !g_ode2_residual(G).is_zero()) {
    log << "    G residuals nonzero\n";
    ok = false;
  }
  laurent1 Gi = g_at_infinity(24);
  auto L4 = sparse_poly::var(vars::l4());
  auto L6 = sparse_poly::var(vars::l6());
  auto L8 = sparse_poly::var(vars::l8());
  auto L10 = sparse_poly::var(vars::l10());
  bool printed = Gi.coeff(2) == L4.scale(frac(-1, 5)) && Gi.coeff(4) == L6.scale(frac(-1, 7)) &&
                 Gi.coeff(6) == (L4 * L4).scale(frac(1, 75)) - L8.scale(frac(1, 9)) &&
                 Gi.coeff(8) == (L4 * L6).scale(frac(3, 385)) - L10.scale(frac(1, 11));
  if (!printed) {
    log << "    pinned terms of G at infinity differ\n";
    ok = false;
  }
  if (!(Gi == g_at_infinity_by_matching(24))) {
    log << "    recurrence disagrees with coefficient matching through u^24\n";
    ok = false;
  }
  degeneration_report rep = weierstrass_degeneration(20);
  if (!rep.series_equal || !rep.ode_zero) {
    log << "    degeneration mismatch\n";
    ok = false;
  }
  return ok;
}

bool criterion7_bernoulli_hurwitz(shared_state&, std::ostream& log) {
  bool ok = true;
  bh_table t = build_bh_table(curve_params::generic(), 40);
  for (const auto& [n, expect] : testdata::cn_over_n_table())
    if (!(t.cn_over_n(n) == expect)) {
      log << "    C_" << n << "/" << n << " mismatch\n";
      ok = false;
    }
  for (const auto& [n, expect] : testdata::dn_over_n_table())
    if (!(t.dn_over_n(n) == expect)) {
      log << "    D_" << n << "/" << n << " mismatch\n";
      ok = false;
    }
  for (long n = 5; n <= 40; n += 2)
    if (!t.Cn[n].is_zero() || !t.Dn[n].is_zero()) {
      log << "    parity violated at n=" << n << "\n";
      ok = false;
    }
  auto rows = valuation_report(t, {2, 3, 5, 7, 11, 13}, 40);
  for (const auto& r : rows)
    if (!r.pass) {
      log << "    valuation bound failed at n=" << r.n << " p=" << r.p << "\n";
      ok = false;
    }
  for (const auto& item : lemma_relation_checks(t, 40))
    if (!item.pass) {
      log << "    " << item.name << " failed\n";
      ok = false;
    }
  return ok;
}

bool criterion8_universal_bernoulli(shared_state&, std::ostream& log) {
  bool ok = true;
  auto b = universal_bernoulli(14);
  for (long n = 1; n <= 14; ++n)
    if (!(b[n].scale(frac(1, n)) == bhat_over_n_by_tau(n))) {
      log << "    two-route mismatch at n=" << n << "\n";
      ok = false;
    }
  sparse_poly f1 = sparse_poly::var(vars::f(1));
  sparse_poly f2 = sparse_poly::var(vars::f(2));
  if (!(b[1] == f1.scale(frac(1, 2))) ||
      !(b[2].scale(frac(1, 2)) == f1.pow(2).scale(frac(-1, 4)) + f2.scale(frac(1, 3)))) {
    log << "    closed forms of Bhat_1, Bhat_2 differ\n";
    ok = false;
  }
  for (long n : {5L, 7L})
    for (const auto& item : clarke_check(n))
      if (!item.pass) {
        log << "    " << item.name << " failed\n";
        ok = false;
      }
  for (const auto& item : tau_u_valuation_checks(34))
    if (!item.pass) {
      log << "    " << item.name << " failed\n";
      ok = false;
    }
  auto classical = classical_bernoulli(4);
  if (!(classical[2] == frac(1, 6)) || !(classical[4] == frac(-1, 30))) {
    log << "    classical generating-function values differ\n";
    ok = false;
  }
  std::map<var_id, sparse_poly> sub;
  for (int n = 1; n <= 4; ++n) sub.emplace(vars::f(n), sparse_poly(n % 2 == 0 ? 1 : -1));
  if (!(b[2].substitute(sub) == sparse_poly(frac(1, 6))) ||
      !(b[4].substitute(sub) == sparse_poly(frac(-1, 30)))) {
    log << "    classical specialization differs\n";
    ok = false;
  }
  return ok;
}

bool criterion9_special_curves(shared_state&, std::ostream& log) {
  bool ok = true;
  for (const auto& item : special_curve_checks(3))
    if (!item.pass) {
      log << "    " << item.name << " failed (" << item.detail << ")\n";
      ok = false;
    }
  return ok;
}

}  // namespace

int main() {
  shared_state st;
  auto t0 = clock_type::now();
  st.sigma_xi = sigma_xi_route(st.N).s;
  double t_sigma = std::chrono::duration<double>(clock_type::now() - t0).count();
  st.sigma_mu = sigma_mu_route(st.N).s;
  t0 = clock_type::now();
  st.sigma_tau = sigma_tau_route(st.N).s;
  double t_tau = std::chrono::duration<double>(clock_type::now() - t0).count();
  st.sigma_deep = sigma_xi_route(st.N + 6).s;
  st.sigma1 = genus1_sigma(st.N + 2);

  struct criterion {
    const char* name;
    std::function<bool(shared_state&, std::ostream&)> run;
  };
  const std::vector<criterion> criteria = {
      {"1. expansion tables xi_0..xi_4, mu_0..mu_3 and the sigma leading layer",
       criterion1_expansions},
      {"2. xi, mu and tau routes agree bit-exactly through weight 20", criterion2_routes},
      {"3. heat system annihilates sigma through weight 20 (both genera)", criterion3_heat},
      {"4. commutator identities hold as canonical operator equalities",
       criterion4_operator_identities},
      {"5. integrality of sigma over the stated rings", criterion5_integrality},
      {"6. inversion series: residuals, pinned terms, matching, degeneration",
       criterion6_inversion},
      {"7. Bernoulli-Hurwitz table: values, parity, valuations, relations",
       criterion7_bernoulli_hurwitz},
      {"8. universal Bernoulli numbers: routes, congruences, bounds",
       criterion8_universal_bernoulli},
      {"9. special curves y^2 = x^5 + l10 and y^2 = x^5 - 1", criterion9_special_curves},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    auto start = clock_type::now();
    bool pass = false;
    try {
      pass = c.run(st, log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    double secs = std::chrono::duration<double>(clock_type::now() - start).count();
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << std::fixed
              << std::setprecision(2) << secs << "s]\n";
    std::cout << log.str();
    if (!pass) ++failures;
  }
  std::cout << "runtime: sigma weight-20 xi route " << std::setprecision(2) << t_sigma
            << "s (budget 10s), tau route " << t_tau << "s (budget 300s)\n";
  if (t_sigma > 10.0 || t_tau > 300.0) {
    std::cout << "FAIL  runtime budget exceeded\n";
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
