#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expansion_tables.hpp"
#include "sigmaforge/inversion.hpp"

using namespace sigmaforge;
using testdata::lt;

namespace {
sparse_poly L4() { return sparse_poly::var(vars::l4()); }
sparse_poly L6() { return sparse_poly::var(vars::l6()); }
sparse_poly L8() { return sparse_poly::var(vars::l8()); }
sparse_poly L10() { return sparse_poly::var(vars::l10()); }
}  // namespace

TEST_CASE("f series seeds and first recurrence step") {
  laurent1 F = f_series(8);
  sparse_poly pt2 = sparse_poly::var(vars::pt2());
  sparse_poly pt5 = sparse_poly::var(vars::pt5());
  CHECK(F.coeff(0) == pt2);
  CHECK(F.coeff(1) == pt5);
  CHECK(F.coeff(2) == pt2.pow(4).scale(5) + L4().scale(3) * pt2.pow(2) + L6().scale(2) * pt2 + L8());
  // n = 1: 6 pt11 = 40 pt2^3 pt5 + 12 l4 pt2 pt5 + 4 l6 pt5
  sparse_poly expect = pt2.pow(3).scale(frac(20, 3)) * pt5 + L4().scale(2) * pt2 * pt5 +
                       L6().scale(frac(2, 3)) * pt5;
  CHECK(F.coeff(3) == expect);
  // homogeneity: coefficient n has degree 3n + 2
  for (const auto& [n, c] : F.coeffs()) CHECK(c.grade().compatible_with(3 * n + 2));
}

TEST_CASE("f series satisfies both differential equations on the curve") {
  laurent1 F = f_series(10);
  CHECK(f_ode1_residual(F).is_zero());
  CHECK(f_ode2_residual(F).is_zero());
  // without the curve relation, the first equation leaves exactly the
  // defining relation of the point as its constant term
  laurent1 half = F.derive().scale(frac(1, 2));
  laurent1 raw = half * half -
                 (F.pow(5) + F.pow(3).scale(L4()) + F.pow(2).scale(L6()) + F.scale(L8()));
  sparse_poly pt2 = sparse_poly::var(vars::pt2());
  sparse_poly pt5 = sparse_poly::var(vars::pt5());
  sparse_poly curve = pt5 * pt5 -
                      (pt2.pow(5) + L4() * pt2.pow(3) + L6() * pt2.pow(2) + L8() * pt2 + L10())
                          .scale(rational(4));
  CHECK(raw.coeff(0) - L10() == curve.scale(frac(1, 4)));
  for (long k = 1; k <= raw.known_to(); ++k)
    CHECK(reduce_f_coeff(raw.coeff(k)).is_zero());
}

TEST_CASE("g series seeds and equations") {
  laurent1 G = g_series(9);
  sparse_poly qt2 = sparse_poly::var(vars::qt2());
  sparse_poly qt3 = sparse_poly::var(vars::qt3());
  CHECK(G.coeff(0) == qt2);
  CHECK(G.coeff(1) == qt3);
  sparse_poly q4 = sparse_poly::var(vars::qt2(), -3) *
                   (qt2.pow(5).scale(3) + L4() * qt2.pow(3) - L8() * qt2 - L10().scale(2));
  CHECK(G.coeff(2) == q4);
  CHECK(g_ode1_residual(G).is_zero());
  CHECK(g_ode2_residual(G).is_zero());
  for (const auto& [n, c] : G.coeffs()) CHECK(c.grade().compatible_with(n + 2));
}

TEST_CASE("g at infinity matches the pinned low-order terms") {
  laurent1 G = g_at_infinity(14);
  CHECK(G.coeff(-2) == sparse_poly(1));
  CHECK(G.coeff(-1).is_zero());
  CHECK(G.coeff(0).is_zero());
  CHECK(G.coeff(2) == L4().scale(frac(-1, 5)));
  CHECK(G.coeff(4) == L6().scale(frac(-1, 7)));
  CHECK(G.coeff(6) == (L4() * L4()).scale(frac(1, 75)) - L8().scale(frac(1, 9)));
  CHECK(G.coeff(8) == (L4() * L6()).scale(frac(3, 385)) - L10().scale(frac(1, 11)));
  for (long k = -1; k <= 13; k += 2) CHECK(G.coeff(k).is_zero());
  CHECK(g_ode1_residual(G).is_zero());
  CHECK(g_ode2_residual(G).is_zero());
  // homogeneity: coefficient of u^{n} has degree n + 2
  for (const auto& [n, c] : G.coeffs()) CHECK(c.grade().compatible_with(n + 2));
}

TEST_CASE("recurrence agrees with order-by-order matching through u^24") {
  laurent1 a = g_at_infinity(24);
  laurent1 b = g_at_infinity_by_matching(24);
  CHECK(a == b);
}

TEST_CASE("x and y from G") {
  auto [x, y] = xy_from_g(g_at_infinity(16));
  CHECK(y.lead() == -5);
  CHECK(y.coeff(-5) == sparse_poly(1));
  // y^2 = quintic(x)
  laurent1 resid = y * y - (x.pow(5) + x.pow(3).scale(L4()) + x.pow(2).scale(L6()) + x.scale(L8()));
  resid.set_coeff(0, resid.coeff(0) - L10());
  CHECK(resid.is_zero());
  // x'' = 6 x^2 + 2 l4 - 2 l8 x^-2 - 4 l10 x^-3
  laurent1 rhs = x.pow(2).scale(rational(6)) + x.pow(-2).scale(L8().scale(-2)) +
                 x.pow(-3).scale(L10().scale(-4));
  rhs.set_coeff(0, rhs.coeff(0) + L4().scale(2));
  laurent1 r2 = x.derive().derive() - rhs;
  CHECK(r2.is_zero());
}

TEST_CASE("degeneration to the cubic-curve series") {
  degeneration_report rep = weierstrass_degeneration(16);
  CHECK(rep.series_equal);
  CHECK(rep.ode_zero);
  CHECK(rep.gd.coeff(-2) == sparse_poly(1));
  CHECK(rep.gd.coeff(2) == L4().scale(frac(-1, 5)));
  CHECK(rep.gd.coeff(4) == L6().scale(frac(-1, 7)));
  // no l8/l10 left anywhere
  for (const auto& [n, c] : rep.gd.coeffs()) {
    CHECK(c.partial(vars::l8()).is_zero());
    CHECK(c.partial(vars::l10()).is_zero());
  }
  // the independent series satisfies its defining equation
  CHECK(p_ode_residual(rep.wp).is_zero());
}
