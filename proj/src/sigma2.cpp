#include "sigmaforge/sigma2.hpp"

#include <sstream>
#include <stdexcept>

namespace sigmaforge {

namespace {

sparse_poly L4() { return sparse_poly::var(vars::l4()); }
sparse_poly L6() { return sparse_poly::var(vars::l6()); }
sparse_poly L8() { return sparse_poly::var(vars::l8()); }
sparse_poly L10() { return sparse_poly::var(vars::l10()); }

hw1 dlam(const hw1& s, int j) {
  var_id v = vars::lambda(j);
  return s.map_coeffs([v](const sparse_poly& p) { return p.partial(v); });
}

rational rat(long n, long d = 1) { return frac(n, d); }

// Second relation of the u3-slice hierarchy, right-hand side at level k:
//   -1/2 xi_k'' + (4k/5) l4 xi_{k-1}' + 3/10 l4 u1^2 xi_k
//   - k(k-1)/10 (15 l8 - 4 l4^2) xi_{k-2}
//   + 6 l6 xi_{k,l4} + (8 l8 - 12/5 l4^2) xi_{k,l6}
//   + (10 l10 - 8/5 l4 l6) xi_{k,l8} - 4/5 l4 l8 xi_{k,l10}
hw1 xi_rel2_rhs(const std::vector<hw1>& xi, long k) {
  const hw1& xk = xi[k];
  hw1 r = xk.derive().derive().scale(rat(-1, 2));
  if (k >= 1) r = r + xi[k - 1].derive().scale(L4().scale(rat(4 * k, 5)));
  r = r + xk.shift_up(2).scale(L4().scale(rat(3, 10)));
  if (k >= 2)
    r = r + xi[k - 2].scale((L8().scale(15) - (L4() * L4()).scale(4))
                                .scale(rat(-k * (k - 1), 10)));
  r = r + dlam(xk, 0).scale(L6().scale(6));
  r = r + dlam(xk, 1).scale(L8().scale(8) - (L4() * L4()).scale(rat(12, 5)));
  r = r + dlam(xk, 2).scale(L10().scale(10) - (L4() * L6()).scale(rat(8, 5)));
  r = r + dlam(xk, 3).scale((L4() * L8()).scale(rat(-4, 5)));
  return r;
}

// Third relation, right-hand side at level k (equals xi_{k+1}').
hw1 xi_rel3_rhs(const std::vector<hw1>& xi, long k) {
  const hw1& xk = xi[k];
  hw1 r = xk.scale(L4().scale(rat(1 - k)));  // -k l4 xi_k + l4 xi_k
  if (k >= 1) {
    r = r + xi[k - 1].derive().scale(L6().scale(rat(6 * k, 5)));
    r = r + xi[k - 1].shift_up(1).scale(L8().scale(rat(-k)));
  }
  r = r + xk.shift_up(2).scale(L6().scale(rat(1, 5)));
  if (k >= 2)
    r = r + xi[k - 2].scale((L10().scale(30) - (L4() * L6()).scale(6))
                                .scale(rat(-k * (k - 1), 10)));
  r = r + dlam(xk, 0).scale(L8().scale(8));
  r = r + dlam(xk, 1).scale(L10().scale(10) - (L4() * L6()).scale(rat(8, 5)));
  r = r + dlam(xk, 2).scale((L4() * L8()).scale(4) - (L6() * L6()).scale(rat(12, 5)));
  r = r + dlam(xk, 3).scale((L4() * L10()).scale(6) - (L6() * L8()).scale(rat(6, 5)));
  return r;
}

// Fourth relation, right-hand side at level k (equals xi_{k+2}).
hw1 xi_rel4_rhs(const std::vector<hw1>& xi, long k) {
  const hw1& xk = xi[k];
  hw1 r = xk.scale(L6());
  if (k >= 1) {
    r = r + xi[k - 1].derive().scale(L8().scale(rat(6 * k, 5)));
    r = r + xi[k - 1].shift_up(1).scale(L10().scale(rat(-4 * k)));
  }
  r = r + xk.shift_up(2).scale(L8().scale(rat(1, 5)));
  if (k >= 2) r = r + xi[k - 2].scale((L8() * L4()).scale(rat(3 * k * (k - 1), 5)));
  r = r + dlam(xk, 0).scale(L10().scale(20));
  r = r + dlam(xk, 1).scale((L4() * L8()).scale(rat(-8, 5)));
  r = r + dlam(xk, 2).scale((L4() * L10()).scale(12) - (L6() * L8()).scale(rat(12, 5)));
  r = r + dlam(xk, 3).scale((L6() * L10()).scale(8) - (L8() * L8()).scale(rat(16, 5)));
  return r;
}

// Euler relation residual: u1 xi_k' + 3(k-1) xi_k - sum_j T_0j xi_{k,l_j}.
hw1 xi_rel1_residual(const hw1& xk, long k) {
  hw1 r = xk.derive().shift_up(1) + xk.scale(rat(3 * (k - 1)));
  r = r - dlam(xk, 0).scale(L4().scale(4)) - dlam(xk, 1).scale(L6().scale(6)) -
      dlam(xk, 2).scale(L8().scale(8)) - dlam(xk, 3).scale(L10().scale(10));
  return r;
}

// u1-slice relations. Second relation RHS (equals mu_{k+2}).
hw1 mu_rel2_rhs(const std::vector<hw1>& mu, long k) {
  const hw1& mk = mu[k];
  hw1 r = mu[k + 1].shift_up(1).scale(L4().scale(rat(8, 5)));
  if (k >= 1) r = r + mu[k - 1].derive().scale(rat(-2 * k));
  if (k >= 2) r = r + mu[k - 2].scale(L4().scale(rat(3 * k * (k - 1), 5)));
  r = r + mk.shift_up(2).scale((L8().scale(15) - (L4() * L4()).scale(4)).scale(rat(-1, 5)));
  r = r + dlam(mk, 0).scale(L6().scale(12));
  r = r + dlam(mk, 1).scale(L8().scale(16) - (L4() * L4()).scale(rat(24, 5)));
  r = r + dlam(mk, 2).scale(L10().scale(20) - (L4() * L6()).scale(rat(16, 5)));
  r = r + dlam(mk, 3).scale((L4() * L8()).scale(rat(-8, 5)));
  return r;
}

// Third relation: mu_{k+1}' - 6/5 l6 u3 mu_{k+1} = rhs.
hw1 mu_rel3_rhs(const std::vector<hw1>& mu, long k) {
  const hw1& mk = mu[k];
  hw1 r = mk.derive().shift_up(1).scale(-L4());
  if (k >= 2) r = r + mu[k - 2].scale(L6().scale(rat(k * (k - 1), 5)));
  if (k >= 1) r = r + mu[k - 1].shift_up(1).scale(L8().scale(rat(-k)));
  r = r + mk.shift_up(2).scale((L10().scale(3) - (L4() * L6()).scale(rat(3, 5))).scale(rat(-1)));
  r = r + mk.scale(L4());
  r = r + dlam(mk, 0).scale(L8().scale(8));
  r = r + dlam(mk, 1).scale(L10().scale(10) - (L4() * L6()).scale(rat(8, 5)));
  r = r + dlam(mk, 2).scale((L4() * L8()).scale(4) - (L6() * L6()).scale(rat(12, 5)));
  r = r + dlam(mk, 3).scale((L4() * L10()).scale(6) - (L6() * L8()).scale(rat(6, 5)));
  return r;
}

// Fourth relation: l8 u3 mu_{k+1} = rhs.
hw1 mu_rel4_rhs(const std::vector<hw1>& mu, long k) {
  const hw1& mk = mu[k];
  hw1 r = mk.derive().derive().scale(rat(5, 6));
  if (k >= 2) r = r + mu[k - 2].scale(L8().scale(rat(-k * (k - 1), 6)));
  if (k >= 1) r = r + mu[k - 1].shift_up(1).scale(L10().scale(rat(10 * k, 3)));
  r = r + mk.shift_up(2).scale((L4() * L8()).scale(rat(-1, 2)));
  r = r + mk.scale(L6().scale(rat(-5, 6)));
  r = r + dlam(mk, 0).scale(L10().scale(rat(-50, 3)));
  r = r + dlam(mk, 1).scale((L4() * L8()).scale(rat(4, 3)));
  r = r + dlam(mk, 2).scale(((L4() * L10()).scale(10) - (L6() * L8()).scale(2)).scale(rat(-1)));
  r = r + dlam(mk, 3).scale(((L6() * L10()).scale(rat(20, 3)) - (L8() * L8()).scale(rat(8, 3)))
                                .scale(rat(-1)));
  return r;
}

hw1 mu_rel1_residual(const hw1& mk, long k) {
  hw1 r = mk.scale(rat(k - 3)) + mk.derive().shift_up(1).scale(rat(3));
  r = r - dlam(mk, 0).scale(L4().scale(4)) - dlam(mk, 1).scale(L6().scale(6)) -
      dlam(mk, 2).scale(L8().scale(8)) - dlam(mk, 3).scale(L10().scale(10));
  return r;
}

void report_nonzero(std::vector<std::string>& out, const hw1& resid, const std::string& what) {
  if (resid.is_zero()) return;
  std::ostringstream os;
  os << what << ": nonzero residual, first at order " << resid.coeffs().begin()->first << ": "
     << resid.coeffs().begin()->second.str();
  out.push_back(os.str());
}

}  // namespace

hw1 xi0_series(long N) {
  if (N < 3) throw std::invalid_argument("xi0_series: order must be >= 3");
  std::vector<sparse_poly> p(static_cast<std::size_t>(N) + 1);
  p[3] = sparse_poly(2);
  auto at = [&](long i) { return i >= 0 && i <= N ? p[i] : sparse_poly(); };
  for (long l = 2; l + 2 <= N; ++l) {
    sparse_poly next = L4().scale(rat(l * (3 * l - 13), 5)) * at(l - 2);
    next -= L6().scale(rat(2 * l * (l - 2) * (l - 3), 5)) * at(l - 4);
    next -= L8().scale(rat(16 * l)) * at(l - 2).partial(vars::l4());
    next -= (L10().scale(20) - (L4() * L6()).scale(rat(16, 5))).scale(rat(l)) *
            at(l - 2).partial(vars::l6());
    next -= ((L4() * L8()).scale(8) - (L6() * L6()).scale(rat(24, 5))).scale(rat(l)) *
            at(l - 2).partial(vars::l8());
    next -= ((L4() * L10()).scale(12) - (L6() * L8()).scale(rat(12, 5))).scale(rat(l)) *
            at(l - 2).partial(vars::l10());
    next += L6().scale(12) * at(l).partial(vars::l4());
    next += (L8().scale(16) - (L4() * L4()).scale(rat(24, 5))) * at(l).partial(vars::l6());
    next += (L10().scale(20) - (L4() * L6()).scale(rat(16, 5))) * at(l).partial(vars::l8());
    next -= (L4() * L8()).scale(rat(8, 5)) * at(l).partial(vars::l10());
    p[l + 2] = std::move(next);
  }
  hw1 s(vars::u1(), N);
  for (long l = 0; l <= N; ++l) s.set_coeff(l, p[l]);
  return s;
}

hw1 mu0_series(long N) {
  if (N < 1) throw std::invalid_argument("mu0_series: order must be >= 1");
  std::vector<sparse_poly> q(static_cast<std::size_t>(N) + 1);
  q[1] = sparse_poly(-1);
  if (N >= 3) q[3] = -L6();
  auto at = [&](long i) { return i >= 0 && i <= N ? q[i] : sparse_poly(); };
  for (long l = 2; l + 2 <= N; ++l) {
    sparse_poly next = L6().scale(rat(6 * l + 5, 5)) * at(l);
    next += (L4() * L8()).scale(rat(l * (15 - 3 * l), 5)) * at(l - 2);
    next -= (L6() * L6()).scale(rat(6 * l, 5)) * at(l - 2);
    next -= (L8() * L10()).scale(rat(18 * l * (l - 2) * (l - 3), 5)) * at(l - 4);
    next += L10().scale(20) * at(l).partial(vars::l4());
    next -= (L4() * L8()).scale(rat(8, 5)) * at(l).partial(vars::l6());
    next += ((L4() * L10()).scale(12) - (L6() * L8()).scale(rat(12, 5))) * at(l).partial(vars::l8());
    next += ((L6() * L10()).scale(8) - (L8() * L8()).scale(rat(16, 5))) * at(l).partial(vars::l10());
    next += ((L8() * L8()).scale(rat(48, 5)) - (L6() * L10()).scale(24)).scale(rat(l)) *
            at(l - 2).partial(vars::l4());
    next += (L8() * L10()).scale(rat(12 * l)) * at(l - 2).partial(vars::l6());
    next += ((L4() * L8() * L8()).scale(rat(24, 5)) - (L4() * L6() * L10()).scale(rat(72, 5)))
                .scale(rat(l)) *
            at(l - 2).partial(vars::l8());
    next += ((L4() * L8() * L10()).scale(rat(36, 5)) - (L6() * L6() * L10()).scale(rat(48, 5)) +
             (L6() * L8() * L8()).scale(rat(12, 5)))
                .scale(rat(l)) *
            at(l - 2).partial(vars::l10());
    q[l + 2] = std::move(next);
  }
  hw1 s(vars::u3(), N);
  for (long l = 0; l <= N; ++l) s.set_coeff(l, q[l]);
  return s;
}

xi_hierarchy build_xi_hierarchy(int K, long N) {
  if (K < 1) throw std::invalid_argument("build_xi_hierarchy: need K >= 1");
  long order0 = N + K + 4;
  xi_hierarchy h;
  h.xi.push_back(xi0_series(order0));
  // xi_1: the k=0 slot of the second relation reads u1 xi_1 = rhs.
  hw1 rhs1 = xi_rel2_rhs(h.xi, 0);
  if (!rhs1.coeff(0).is_zero())
    throw std::domain_error("build_xi_hierarchy: u1-division blocked by nonzero constant term");
  h.xi.push_back(rhs1.divide_by_var());
  for (long k = 0; static_cast<int>(h.xi.size()) <= K; ++k) h.xi.push_back(xi_rel4_rhs(h.xi, k));
  for (auto& x : h.xi) {
    if (x.trunc() < N) throw std::logic_error("build_xi_hierarchy: order shortfall");
    x = x.truncated(N);
  }
  return h;
}

mu_hierarchy build_mu_hierarchy(int K, long N) {
  if (K < 1) throw std::invalid_argument("build_mu_hierarchy: need K >= 1");
  long order0 = N + K + 4;
  mu_hierarchy h;
  h.mu.push_back(mu0_series(order0));
  // mu_1 from the k=0 slot of the third relation, solved term by term; the
  // constant term is forced to 0 by homogeneity (its degree would be -2).
  {
    hw1 rhs = mu_rel3_rhs(h.mu, 0);
    long ord = rhs.trunc();
    hw1 m1(vars::u3(), ord);
    sparse_poly c66 = L6().scale(rat(6, 5));
    for (long l = 0; l + 1 <= ord; ++l) {
      sparse_poly b = rhs.coeff(l);
      if (l >= 1) b += c66.scale(rat(l)) * m1.coeff(l - 1);
      m1.set_coeff(l + 1, std::move(b));
    }
    h.mu.push_back(std::move(m1));
  }
  for (long k = 0; static_cast<int>(h.mu.size()) <= K; ++k) h.mu.push_back(mu_rel2_rhs(h.mu, k));
  for (auto& m : h.mu) {
    if (m.trunc() < N) throw std::logic_error("build_mu_hierarchy: order shortfall");
    m = m.truncated(N);
  }
  return h;
}

std::vector<std::string> verify_xi_hierarchy(const xi_hierarchy& h) {
  std::vector<std::string> out;
  long K = static_cast<long>(h.xi.size()) - 1;
  for (long k = 0; k <= K; ++k)
    report_nonzero(out, xi_rel1_residual(h.xi[k], k), "xi relation 1 at k=" + std::to_string(k));
  for (long k = 0; k + 1 <= K; ++k) {
    hw1 lhs = h.xi[k + 1].shift_up(1);
    hw1 r = lhs - xi_rel2_rhs(h.xi, k).truncated(lhs.trunc());
    report_nonzero(out, r, "xi relation 2 at k=" + std::to_string(k));
  }
  for (long k = 0; k + 1 <= K; ++k) {
    hw1 r = h.xi[k + 1].derive() - xi_rel3_rhs(h.xi, k);
    report_nonzero(out, r, "xi relation 3 at k=" + std::to_string(k));
  }
  for (long k = 0; k + 2 <= K; ++k) {
    hw1 r = h.xi[k + 2] - xi_rel4_rhs(h.xi, k);
    report_nonzero(out, r, "xi relation 4 at k=" + std::to_string(k));
  }
  return out;
}

std::vector<std::string> verify_mu_hierarchy(const mu_hierarchy& h) {
  std::vector<std::string> out;
  long K = static_cast<long>(h.mu.size()) - 1;
  for (long k = 0; k <= K; ++k)
    report_nonzero(out, mu_rel1_residual(h.mu[k], k), "mu relation 1 at k=" + std::to_string(k));
  for (long k = 0; k + 2 <= K; ++k) {
    hw1 r = h.mu[k + 2] - mu_rel2_rhs(h.mu, k);
    report_nonzero(out, r, "mu relation 2 at k=" + std::to_string(k));
  }
  for (long k = 0; k + 1 <= K; ++k) {
    hw1 lhs = h.mu[k + 1].derive() - h.mu[k + 1].shift_up(1).scale(L6().scale(rat(6, 5)));
    hw1 r = lhs - mu_rel3_rhs(h.mu, k).truncated(lhs.trunc());
    report_nonzero(out, r, "mu relation 3 at k=" + std::to_string(k));
  }
  for (long k = 0; k + 1 <= K; ++k) {
    hw1 lhs = h.mu[k + 1].shift_up(1).scale(L8());
    hw1 r = lhs - mu_rel4_rhs(h.mu, k).truncated(lhs.trunc());
    report_nonzero(out, r, "mu relation 4 at k=" + std::to_string(k));
  }
  return out;
}

sigma_series assemble_sigma(const xi_hierarchy& h, long N) {
  long K = static_cast<long>(h.xi.size()) - 1;
  if (3 * K + 3 <= N) throw std::invalid_argument("assemble_sigma: xi hierarchy too shallow");
  hw2 s(N);
  for (long k = 0; k <= K && 3 * k <= N; ++k) {
    for (const auto& [m, c] : h.xi[k].coeffs())
      if (m + 3 * k <= N) s.set_coeff(m, k, c);
  }
  return {std::move(s), sigma_route::xi};
}

sigma_series assemble_sigma(const mu_hierarchy& h, long N) {
  long K = static_cast<long>(h.mu.size()) - 1;
  if (K < N) throw std::invalid_argument("assemble_sigma: mu hierarchy too shallow");
  hw2 s(N);
  for (long k = 0; k <= K && k <= N; ++k) {
    for (const auto& [n, c] : h.mu[k].coeffs())
      if (k + 3 * n <= N) s.set_coeff(k, n, c);
  }
  return {std::move(s), sigma_route::mu};
}

sigma_series sigma_xi_route(long N) {
  return assemble_sigma(build_xi_hierarchy(static_cast<int>(N / 3) + 1, N), N);
}

sigma_series sigma_mu_route(long N) {
  return assemble_sigma(build_mu_hierarchy(static_cast<int>(N), N), N);
}

hw1 genus1_sigma(long N) {
  if (N < 1) throw std::invalid_argument("genus1_sigma: order must be >= 1");
  var_id u = vars::intern("u", -1);
  std::vector<sparse_poly> c(static_cast<std::size_t>(N) + 1);
  c[1] = sparse_poly(1);
  auto at = [&](long i) { return i >= 0 && i <= N ? c[i] : sparse_poly(); };
  for (long n = 0; n + 2 <= N; ++n) {
    sparse_poly next = L6().scale(12) * at(n).partial(vars::l4());
    next -= (L4() * L4()).scale(rat(8, 3)) * at(n).partial(vars::l6());
    next += L4().scale(rat(n * (n - 1), 3)) * at(n - 2);
    c[n + 2] = std::move(next);
  }
  hw1 s(u, N);
  for (long n = 0; n <= N; ++n) s.set_coeff(n, c[n]);
  return s;
}

integrality_report check_integrality(const hw2& s, const subring_spec& spec) {
  integrality_report rep;
  rep.checked_weight = s.trunc();
  for (const auto& [k, c] : s.coeffs()) {
    ++rep.coefficients_checked;
    if (auto fail = c.subring_violation(spec)) rep.failures.push_back({k.first, k.second, *fail});
  }
  return rep;
}

integrality_report check_integrality(const hw1& s, const subring_spec& spec) {
  integrality_report rep;
  rep.checked_weight = s.trunc();
  for (const auto& [n, c] : s.coeffs()) {
    ++rep.coefficients_checked;
    if (auto fail = c.subring_violation(spec)) rep.failures.push_back({n, 0, *fail});
  }
  return rep;
}

}  // namespace sigmaforge
