#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expansion_tables.hpp"
#include "sigmaforge/bernoulli.hpp"
#include "sigmaforge/inversion.hpp"

using namespace sigmaforge;
using testdata::lt;

namespace {
sparse_poly F(int n, int e = 1) { return sparse_poly::var(vars::f(n), e); }
}

TEST_CASE("universal Bernoulli numbers") {
  auto b = universal_bernoulli(6);
  CHECK(b[0] == sparse_poly(1));
  CHECK(b[1] == F(1).scale(frac(1, 2)));
  // Bhat_2/2 = -f1^2/4 + f2/3
  CHECK(b[2].scale(frac(1, 2)) == F(1, 2).scale(frac(-1, 4)) + F(2).scale(frac(1, 3)));
  // Bhat_n homogeneous of degree n under deg f_i = i
  for (long n = 1; n <= 6; ++n) CHECK(b[n].grade().compatible_with(n));
  // ring-morphism spot check: Bhat_3 = 6 (ahat3 - 3 ahat1 ahat2 + 2 ahat1^3)
  // with ahat_n = f_n/(n+1)
  sparse_poly expect3 = F(3).scale(frac(3, 2)) - F(1) * F(2) * sparse_poly(3) +
                        F(1, 3).scale(frac(3, 2));
  CHECK(b[3] == expect3);
}

TEST_CASE("two routes for Bhat_n/n agree") {
  auto b = universal_bernoulli(14);
  for (long n = 1; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(b[n].scale(frac(1, n)) == bhat_over_n_by_tau(n));
  }
}

TEST_CASE("tau_U values") {
  // U = (1): w=1, d=1, gamma = 2 -> tau = 1/2
  CHECK(tau_u({{1}}) == frac(1, 2));
  // U = (0,1): w=2, d=1, gamma = 3 -> tau = (2+1-2)!/3 = 1/3
  CHECK(tau_u({{0, 1}}) == frac(1, 3));
  // U = (2): w=2, d=2, gamma = 2^2 2! = 8 -> tau = -(2+2-2)!/8 = -1/4
  CHECK(tau_u({{2}}) == frac(-1, 4));
  CHECK_THROWS(tau_u({{0, 0}}));
}

TEST_CASE("classical specialization") {
  auto bhat = universal_bernoulli(8);
  auto classical = classical_bernoulli(8);
  CHECK(classical[2] == frac(1, 6));
  CHECK(classical[4] == frac(-1, 30));
  std::map<var_id, sparse_poly> sub;
  for (int n = 1; n <= 8; ++n)
    sub.emplace(vars::f(n), sparse_poly(n % 2 == 0 ? 1 : -1));
  for (long n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(bhat[n].substitute(sub) == sparse_poly(classical[n]));
  }
}

TEST_CASE("curve local frames") {
  curve_frames fr = curve_local_frames(curve_params::generic(), 12);
  // a_4 = l4/2 from matching the square at order 4
  CHECK(fr.a.coeff(4) == lt(1, 1, 0, 0, 0).scale(frac(1, 2)));
  // f_1 = f_2 = f_3 = 0 and g_1 = ... = g_4 = 0
  for (int i = 1; i <= 3; ++i) CHECK(fr.f[i].is_zero());
  for (int i = 1; i <= 4; ++i) CHECK(fr.g[i].is_zero());
  // a_n in Z[1/2, lambda], alpha_n and g_n in Z[1/5, lambda], homogeneous
  subring_spec z2, z5;
  z2.allowed_primes = {2};
  z5.allowed_primes = {5};
  for (const auto& [n, c] : fr.a.coeffs()) {
    CHECK(c.in_subring(z2));
    CHECK(c.grade().compatible_with(n));
  }
  for (const auto& [n, c] : fr.alpha.coeffs()) {
    CHECK(c.in_subring(z5));
    CHECK(c.grade().compatible_with(n));
  }
  for (std::size_t n = 1; n < fr.f.size(); ++n) CHECK(fr.f[n].in_subring(z2));
  for (std::size_t n = 1; n < fr.g.size(); ++n) CHECK(fr.g[n].in_subring(z5));
}

TEST_CASE("bh table reproduces the printed values") {
  bh_table t = build_bh_table(curve_params::generic(), 12);
  for (const auto& [n, expect] : testdata::cn_over_n_table()) {
    CAPTURE(n);
    CHECK(t.cn_over_n(n) == expect);
  }
  for (const auto& [n, expect] : testdata::dn_over_n_table()) {
    CAPTURE(n);
    CHECK(t.dn_over_n(n) == expect);
  }
  // parity: C_n = D_n = 0 for odd n
  for (long n = 5; n <= 12; n += 2) {
    CHECK(t.Cn[n].is_zero());
    CHECK(t.Dn[n].is_zero());
  }
  // homogeneity of degree n
  for (long n = 4; n <= 12; ++n) {
    CHECK(t.Cn[n].grade().compatible_with(n));
    if (n >= 6) CHECK(t.Dn[n].grade().compatible_with(n));
  }
}

TEST_CASE("C_n cross-checks the inversion series at infinity") {
  bh_table t = build_bh_table(curve_params::generic(), 12);
  laurent1 G = g_at_infinity(12);
  for (long n = 4; n <= 12; ++n) {
    // x(u) coefficient of u^{n-2} equals (C_n/n)/(n-2)!
    sparse_poly expect = G.coeff(n - 2).scale(rational(factorial(n - 2)));
    CAPTURE(n);
    CHECK(t.cn_over_n(n) == expect);
  }
}

TEST_CASE("valuation report at small range") {
  bh_table t = build_bh_table(curve_params::generic(), 12);
  auto rows = valuation_report(t, {2, 3, 5, 7, 11, 13}, 12);
  for (const auto& r : rows) {
    CAPTURE(r.n);
    CAPTURE(r.p);
    CHECK(r.pass);
  }
  // the p = 5, n = 8 case is sharp: ord_5(C_8/8) = -1
  sparse_poly c8 = t.cn_over_n(8);
  CHECK(c8.ord_p(5) == -1);
}

TEST_CASE("lemma relation checks at small range") {
  bh_table t = build_bh_table(curve_params::generic(), 12);
  for (const auto& item : lemma_relation_checks(t, 12)) {
    CAPTURE(item.name);
    CHECK(item.pass);
  }
}

TEST_CASE("clarke congruences for n <= 12") {
  for (long n = 1; n <= 12; ++n) {
    for (const auto& item : clarke_check(n)) {
      CAPTURE(item.name);
      CHECK(item.pass);
    }
  }
}

TEST_CASE("tau_U valuation bounds, small exhaustive range") {
  for (const auto& item : tau_u_valuation_checks(18)) {
    CAPTURE(item.name);
    CHECK(item.pass);
  }
}

TEST_CASE("special curves at m = 1") {
  for (const auto& item : special_curve_checks(1)) {
    CAPTURE(item.name);
    CAPTURE(item.detail);
    CHECK(item.pass);
  }
}
