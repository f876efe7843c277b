#pragma once

#include <array>
#include <string>
#include <vector>

#include "sigmaforge/hurwitz.hpp"

namespace sigmaforge {

// Multi-index U = (U_1, U_2, ...) with w(U) = sum j U_j, d(U) = sum U_j and
// gamma_U = Lambda^U U!, Lambda^U = prod_j (j+1)^{U_j}.
struct multi_index {
  std::vector<long> u;  // u[j-1] = U_j

  long w() const;
  long d() const;
  integer gamma() const;
  monomial monomial_in(const std::vector<var_id>& gens) const;  // prod gens[j-1]^{U_j}
};

// tau_U = (-1)^{d(U)-1} (w(U)+d(U)-2)!/gamma_U; requires d(U) >= 1.
rational tau_u(const multi_index& U);

// All U with w(U) = n, i.e. partitions of n by multiplicity.
std::vector<multi_index> multi_indices_of_weight(long n);

// Bhat_0..Bhat_nmax over f_1..f_nmax from the formal inverse of
// u(z) = z + sum f_n z^{n+1}/(n+1) via u/z(u) = sum Bhat_n u^n/n!.
std::vector<sparse_poly> universal_bernoulli(long nmax);

// Second route: Bhat_n/n = sum_{w(U)=n} tau_U f^U.
sparse_poly bhat_over_n_by_tau(long n);

// Classical Bernoulli numbers B_0..B_nmax from u/(e^u - 1).
std::vector<rational> classical_bernoulli(long nmax);

// Coefficients of y^2 = x^5 + c4 x^3 + c6 x^2 + c8 x + c10; the generic
// curve uses the lambda symbols themselves.
struct curve_params {
  sparse_poly c4, c6, c8, c10;
  static curve_params generic();
  static curve_params special(const rational& v10);  // y^2 = x^5 + v10
  static curve_params special_symbolic();            // y^2 = x^5 + l10
};

// The two local frames at infinity: z with x = 1/z^2 exact, s with y = 1/s^5
// exact, and the expansions of u along each.
struct curve_frames {
  laurent1 a;      // y z^5 = 1 + sum_{n>=4} a_n z^n
  laurent1 alpha;  // x s^2 = 1 + sum alpha_n s^n
  laurent1 uz;     // u(z)
  laurent1 us;     // u(s)
  std::vector<sparse_poly> f;  // f[n], n >= 1; f_n = nth coefficient of 1/(dz-part)
  std::vector<sparse_poly> g;  // g[n]
};

curve_frames curve_local_frames(const curve_params& cp, long N);

// Expansion data of x(u), y(u) at infinity along the first-kind integral:
// C[k][n] = C_n^{(k)} from z(u)^{-k} (k = 1..4), D[k][n] = D_n^{(k)} from
// s(u)^{-k} (k = 1..5), and the Bernoulli-Hurwitz numbers C_n, D_n.
struct bh_table {
  long nmax;
  curve_params curve;
  std::array<std::vector<sparse_poly>, 5> C;  // C[k] for k = 1..4; C[0] unused
  std::array<std::vector<sparse_poly>, 6> D;  // D[k] for k = 1..5; D[0] unused
  std::vector<sparse_poly> Cn, Dn;
  std::vector<sparse_poly> f, g;

  sparse_poly cn_over_n(long n) const;
  sparse_poly dn_over_n(long n) const;
  // C_n^{(k)}/(n)_k and D_n^{(k)}/(n)_k
  sparse_poly c_ratio(int k, long n) const;
  sparse_poly d_ratio(int k, long n) const;
};

// Builds the table; D_n is computed along both stated routes and must agree.
bh_table build_bh_table(const curve_params& cp, long nmax);

struct valuation_row {
  long n;
  unsigned long p;
  long ord_c, bound_c;
  long ord_d, bound_d;  // bound fields use ord_infinity when not applicable
  bool pass;
};

std::vector<valuation_row> valuation_report(const bh_table& t,
                                            const std::vector<unsigned long>& primes, long nmax);

struct check_item {
  std::string name;
  bool pass;
  std::string detail;
};

// The five D-relations, four C-relations and the ord_2 bound on D^{(1)}.
std::vector<check_item> lemma_relation_checks(const bh_table& t, long nmax);

// y^2 = x^5 + l10 valuation bounds for n = 10m, m <= mmax, plus the
// y^2 = x^5 - 1 fractional-part congruences for C_10 and C_20.
std::vector<check_item> special_curve_checks(long mmax);

// Clarke-type congruence structure of Bhat_n/n for one n >= 1.
std::vector<check_item> clarke_check(long n);

// Valuation bounds for tau_U over all U with w(U)+d(U) <= wd_max:
// ord_2 >= floor((w+d-2)/4) for even-index U with U_2 = 0, and
// ord_p >= floor((w+d-2)/(2p)) for p in {3,5,7} under the index conditions.
std::vector<check_item> tau_u_valuation_checks(long wd_max);

}  // namespace sigmaforge
