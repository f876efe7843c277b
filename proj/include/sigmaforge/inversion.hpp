#pragma once

#include "sigmaforge/hurwitz.hpp"

namespace sigmaforge {

// The inversion-series seeds describe a point (x*, y*) on the quintic; the
// square of the odd seed is rewritten through the curve equation:
//   pt5^2 -> 4 (pt2^5 + l4 pt2^3 + l6 pt2^2 + l8 pt2 + l10)
//   qt3^2 -> 4 (qt2^3 + l4 qt2 + l6 + l8 qt2^-1 + l10 qt2^-2)
sparse_poly reduce_f_coeff(const sparse_poly& p);
sparse_poly reduce_g_coeff(const sparse_poly& p);

// Inversion of the second-kind base integral: F(u) = sum_n pt_{3n+2} s^n in
// s = u - u*, coefficients reduced polynomials in pt2, pt5, lambda.
laurent1 f_series(long N);

// Inversion of the first-kind base integral: G(u) = sum_n qt_{n+2} s^n,
// coefficients in the localization at qt2.
laurent1 g_series(long N);

// G at the base point at infinity: 1/u^2 + sum_{n>=0} tau_{n+2} u^n with
// tau_{n+2} in Q[lambda]. Coefficients below u^10 are pinned, the rest come
// from the quintic recurrence.
laurent1 g_at_infinity(long N);

// Independent coefficient matching against (G G'/2)^2 = quintic(G): every
// coefficient, including the pinned ones, is re-derived order by order from
// the differential equation alone.
laurent1 g_at_infinity_by_matching(long N);

// x(u) = G(u) and y(u) = -G G'/2, cross-checked against y = -(x^2)'/4.
struct xy_pair {
  laurent1 x, y;
};
xy_pair xy_from_g(const laurent1& g);

// P = 1/u^2 + ... solving (P')^2 = 4 (P^3 + l4 P + l6), coefficient-matched
// order by order.
laurent1 weierstrass_p(long N);

// Residuals that vanish identically for correct series.
laurent1 f_ode1_residual(const laurent1& F);  // (F'/2)^2 - quintic(F)
laurent1 f_ode2_residual(const laurent1& F);  // F'' - (10F^4 + 6 l4 F^2 + 4 l6 F + 2 l8)
laurent1 g_ode1_residual(const laurent1& G);  // (G G'/2)^2 - quintic(G)
laurent1 g_ode2_residual(const laurent1& G);  // G^4(G''' - 12 G G') - 4 l8 G G' - 12 l10 G'
laurent1 p_ode_residual(const laurent1& P);   // (P')^2 - 4(P^3 + l4 P + l6)

struct degeneration_report {
  laurent1 gd;  // G at infinity with l8 = l10 = 0
  laurent1 wp;  // independent Weierstrass-type series
  bool series_equal;
  bool ode_zero;
};

degeneration_report weierstrass_degeneration(long N);

}  // namespace sigmaforge
