#include "sigmaforge/inversion.hpp"

#include <stdexcept>

namespace sigmaforge {

namespace {

var_id svar() { return vars::intern("s", -1); }  // u - u*
var_id uvar() { return vars::intern("u", -1); }

sparse_poly L4() { return sparse_poly::var(vars::l4()); }
sparse_poly L6() { return sparse_poly::var(vars::l6()); }
sparse_poly L8() { return sparse_poly::var(vars::l8()); }
sparse_poly L10() { return sparse_poly::var(vars::l10()); }

sparse_poly quintic_in(const sparse_poly& x) {
  return x.pow(5) + L4() * x.pow(3) + L6() * x.pow(2) + L8() * x + L10();
}

// Rewrites even powers of `odd` using odd^2 = sq.
sparse_poly reduce_square(const sparse_poly& p, var_id odd, const sparse_poly& sq) {
  sparse_poly out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(odd);
    if (e < 2) {
      out += sparse_poly::term(c, m);
      continue;
    }
    int q = e / 2, r = e % 2;
    monomial rest = m.divide(monomial::var(odd, e)).times(monomial::var(odd, r));
    out += sparse_poly::term(c, rest) * sq.pow(q);
  }
  // a second pass is never needed: sq contains no `odd`
  return out;
}

laurent1 add_const(laurent1 a, const sparse_poly& c) {
  if (a.lead() > 0 || a.known_to() < 0)
    throw std::domain_error("add_const: constant slot not representable");
  a.set_coeff(0, a.coeff(0) + c);
  return a;
}

}  // namespace

sparse_poly reduce_f_coeff(const sparse_poly& p) {
  sparse_poly sq =
      (sparse_poly::var(vars::pt2(), 5) + L4() * sparse_poly::var(vars::pt2(), 3) +
       L6() * sparse_poly::var(vars::pt2(), 2) + L8() * sparse_poly::var(vars::pt2()) + L10())
          .scale(rational(4));
  return reduce_square(p, vars::pt5(), sq);
}

sparse_poly reduce_g_coeff(const sparse_poly& p) {
  sparse_poly sq =
      (sparse_poly::var(vars::qt2(), 3) + L4() * sparse_poly::var(vars::qt2()) + L6() +
       L8() * sparse_poly::var(vars::qt2(), -1) + L10() * sparse_poly::var(vars::qt2(), -2))
          .scale(rational(4));
  return reduce_square(p, vars::qt3(), sq);
}

laurent1 f_series(long N) {
  var_id s = svar();
  laurent1 F(s, 0, N);
  F.set_coeff(0, sparse_poly::var(vars::pt2()));
  if (N >= 1) F.set_coeff(1, sparse_poly::var(vars::pt5()));
  if (N >= 2) {
    sparse_poly pt2 = sparse_poly::var(vars::pt2());
    F.set_coeff(2, pt2.pow(4).scale(5) + L4().scale(3) * pt2.pow(2) + L6().scale(2) * pt2 + L8());
  }
  for (long n = 1; n + 2 <= N; ++n) {
    // (n+2)(n+1) pt_{3n+8} = 10 [F^4]_n + 6 l4 [F^2]_n + 4 l6 pt_{3n+2}
    laurent1 lowF = F.truncated(n);
    laurent1 F2 = (lowF * lowF).truncated(n);
    laurent1 F4 = (F2 * F2).truncated(n);
    sparse_poly rhs = F4.coeff(n).scale(rational(10));
    rhs += L4().scale(6) * F2.coeff(n);
    rhs += L6().scale(4) * F.coeff(n);
    F.set_coeff(n + 2, reduce_f_coeff(rhs).scale(frac(1, (n + 2) * (n + 1))));
  }
  return F;
}

laurent1 g_series(long N) {
  var_id s = svar();
  sparse_poly qt2 = sparse_poly::var(vars::qt2());
  sparse_poly qt2inv3 = sparse_poly::var(vars::qt2(), -3);
  laurent1 G(s, 0, N);
  G.set_coeff(0, qt2);
  if (N >= 1) G.set_coeff(1, sparse_poly::var(vars::qt3()));
  if (N >= 2)
    G.set_coeff(2, qt2inv3 * (qt2.pow(5).scale(3) + L4() * qt2.pow(3) - L8() * qt2 - L10().scale(2)));
  for (long n = 1; n + 2 <= N; ++n) {
    // qt2^3 (n+2)(n+1) qt_{n+4} =
    //   - sum_{k=0}^{n-1} (k+2)(k+1) qt_{k+4} [G^3]_{n-k}
    //   + 6 [G^5]_n + 2 l4 [G^3]_n - 2 l8 qt_{n+2}
    laurent1 lowG = G.truncated(n);
    laurent1 G2 = (lowG * lowG).truncated(n);
    laurent1 G3 = (G2 * lowG).truncated(n);
    laurent1 G5 = (G3 * G2).truncated(n);
    sparse_poly rhs;
    for (long k = 0; k <= n - 1; ++k)
      rhs -= G.coeff(k + 2).scale(rational((k + 2) * (k + 1))) * G3.coeff(n - k);
    rhs += G5.coeff(n).scale(rational(6));
    rhs += L4().scale(2) * G3.coeff(n);
    rhs -= L8().scale(2) * G.coeff(n);
    rhs = rhs * qt2inv3;
    G.set_coeff(n + 2, reduce_g_coeff(rhs).scale(frac(1, (n + 2) * (n + 1))));
  }
  return G;
}

laurent1 g_at_infinity(long N) {
  if (N < 12) throw std::invalid_argument("g_at_infinity: need at least order 12");
  var_id u = uvar();
  // tau_n = coefficient of u^{n-2}; bookkeeping series A = sum tau_n x^n,
  // B = sum (n-2)/2 tau_n x^n represent u^2 G and u^3 G'/2.
  std::vector<sparse_poly> tau(static_cast<std::size_t>(N) + 3);
  tau[0] = sparse_poly(1);
  tau[4] = L4().scale(frac(-1, 5));
  tau[6] = L6().scale(frac(-1, 7));
  tau[8] = (L4() * L4()).scale(frac(1, 75)) - L8().scale(frac(1, 9));
  tau[10] = (L4() * L6()).scale(frac(3, 385)) - L10().scale(frac(1, 11));
  long taumax = N + 2;
  for (long n = 12; n <= taumax; ++n) {
    // A and B carry only indices < n, matching the all-below-n constraint of
    // the recurrence sums; the slot at n itself reads as zero.
    laurent1 A(u, 0, n), B(u, 0, n);
    for (long i = 0; i <= n - 1; ++i) {
      if (!tau[i].is_zero()) {
        A.set_coeff(i, tau[i]);
        B.set_coeff(i, tau[i].scale(frac(i - 2, 2)));
      }
    }
    laurent1 A2 = (A * A).truncated(n);
    laurent1 A3 = (A2 * A).truncated(n);
    laurent1 A5 = (A3 * A2).truncated(n);
    laurent1 B2 = (B * B).truncated(n);
    sparse_poly val = (A2 * B2).truncated(n).coeff(n);
    val -= A5.coeff(n);
    if (n - 4 >= 0) val -= L4() * A3.coeff(n - 4);
    if (n - 6 >= 0) val -= L6() * A2.coeff(n - 6);
    if (n - 8 >= 0) val -= L8() * tau[n - 8];
    tau[n] = val.scale(frac(1, n + 1));
  }
  laurent1 G(u, -2, N);
  G.set_coeff(-2, sparse_poly(1));
  for (long n = 2; n <= taumax; ++n)
    if (!tau[n].is_zero()) G.set_coeff(n - 2, tau[n]);
  return G;
}

laurent1 g_at_infinity_by_matching(long N) {
  var_id u = uvar();
  laurent1 G(u, -2, N);
  G.set_coeff(-2, sparse_poly(1));
  for (long n = 0; n <= N; ++n) {
    // With coefficients at orders >= n still zero, the residual at output
    // order n-8 is linear in the u^n coefficient with slope -(n+3).
    laurent1 r = g_ode1_residual(G);
    sparse_poly num = r.coeff(n - 8);
    if (!num.is_zero()) G.set_coeff(n, num.scale(frac(1, n + 3)));
  }
  return G;
}

xy_pair xy_from_g(const laurent1& g) {
  laurent1 x = g;
  laurent1 y = (g * g.derive()).scale(frac(-1, 2));
  laurent1 y2 = (x * x).derive().scale(frac(-1, 4));
  if (!(y.truncated(y2.known_to()) == y2.truncated(y.known_to())))
    throw std::logic_error("xy_from_g: the two y formulas disagree");
  return {x, y};
}

laurent1 weierstrass_p(long N) {
  var_id u = uvar();
  laurent1 P(u, -2, N);
  P.set_coeff(-2, sparse_poly(1));
  for (long m = 0; m <= N; ++m) {
    // slope of the residual at order m-4 in the u^m coefficient is -(4m+12)
    laurent1 r = p_ode_residual(P);
    sparse_poly num = r.coeff(m - 4);
    if (!num.is_zero()) P.set_coeff(m, num.scale(frac(1, 4 * m + 12)));
  }
  return P;
}

namespace {

using reducer = sparse_poly (*)(const sparse_poly&);

// Multiplication with on-the-fly curve reduction keeps the odd seed linear
// in every intermediate, which the unreduced powers would not.
laurent1 rmul(const laurent1& a, const laurent1& b, reducer red) {
  return (a * b).map_coeffs(red);
}

laurent1 rpow(const laurent1& a, int k, reducer red) {
  laurent1 r(a.var(), 0, a.known_to() - a.lead());
  r.set_coeff(0, sparse_poly(1));
  for (int i = 0; i < k; ++i) r = rmul(r, a, red);
  return r;
}

laurent1 reduced_quintic_residual(const laurent1& lhs_sq, const laurent1& X, reducer red) {
  laurent1 r = lhs_sq - rmul(rpow(X, 4, red), X, red) - rpow(X, 3, red).scale(L4()) -
               rpow(X, 2, red).scale(L6()) - X.scale(L8());
  return add_const(r, -L10()).map_coeffs(red);
}

}  // namespace

laurent1 f_ode1_residual(const laurent1& F) {
  laurent1 half = F.derive().scale(frac(1, 2));
  return reduced_quintic_residual(rmul(half, half, reduce_f_coeff), F, reduce_f_coeff);
}

laurent1 f_ode2_residual(const laurent1& F) {
  laurent1 rhs = rpow(F, 4, reduce_f_coeff).scale(rational(10)) +
                 rpow(F, 2, reduce_f_coeff).scale(L4().scale(6)) + F.scale(L6().scale(4));
  rhs = add_const(rhs, L8().scale(2));
  laurent1 r = F.derive().derive() - rhs;
  return r.map_coeffs(reduce_f_coeff);
}

laurent1 g_ode1_residual(const laurent1& G) {
  laurent1 half = rmul(G, G.derive(), reduce_g_coeff).scale(frac(1, 2));
  return reduced_quintic_residual(rmul(half, half, reduce_g_coeff), G, reduce_g_coeff);
}

laurent1 g_ode2_residual(const laurent1& G) {
  laurent1 gp = G.derive();
  laurent1 ggp = rmul(G, gp, reduce_g_coeff);
  laurent1 inner = gp.derive().derive() - ggp.scale(rational(12));
  laurent1 r = rmul(rpow(G, 4, reduce_g_coeff), inner, reduce_g_coeff) -
               ggp.scale(L8().scale(4)) - gp.scale(L10().scale(12));
  return r.map_coeffs(reduce_g_coeff);
}

laurent1 p_ode_residual(const laurent1& P) {
  laurent1 pp = P.derive();
  laurent1 rhs = (P.pow(3) + P.scale(L4())).scale(rational(4));
  rhs = add_const(rhs, L6().scale(4));
  return pp * pp - rhs;
}

degeneration_report weierstrass_degeneration(long N) {
  laurent1 g = g_at_infinity(std::max(N, 12L));
  std::map<var_id, sparse_poly> zero8_10{{vars::l8(), sparse_poly()}, {vars::l10(), sparse_poly()}};
  laurent1 gd = g.map_coeffs([&](const sparse_poly& p) { return p.substitute(zero8_10); });
  laurent1 wp = weierstrass_p(gd.known_to());
  bool equal = gd == wp;
  laurent1 resid = p_ode_residual(gd);
  return {gd, wp, equal, resid.is_zero()};
}

}  // namespace sigmaforge
