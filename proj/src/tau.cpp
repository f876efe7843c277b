#include "sigmaforge/tau.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sigmaforge {

namespace {

var_id tvar() { return vars::intern("t", -1); }

sparse_poly L4() { return sparse_poly::var(vars::l4()); }
sparse_poly L6() { return sparse_poly::var(vars::l6()); }
sparse_poly L8() { return sparse_poly::var(vars::l8()); }
sparse_poly L10() { return sparse_poly::var(vars::l10()); }

}  // namespace

long partition::weight() const {
  long w = 0;
  for (int p : parts) w += p;
  return w;
}

partition partition::conjugate() const {
  partition c;
  if (parts.empty()) return c;
  for (int i = 1; i <= parts.front(); ++i) {
    int cnt = 0;
    for (int p : parts)
      if (p >= i) ++cnt;
    c.parts.push_back(cnt);
  }
  return c;
}

std::string partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

std::vector<partition> partitions_up_to(long wmax) {
  std::vector<partition> out;
  out.push_back({});
  std::vector<int> cur;
  std::function<void(long, int)> recw = [&](long rem, int maxpart) {
    if (rem == 0) {
      out.push_back({cur});
      return;
    }
    for (int p = static_cast<int>(std::min<long>(maxpart, rem)); p >= 1; --p) {
      cur.push_back(p);
      recw(rem - p, p);
      cur.pop_back();
    }
  };
  for (long w = 1; w <= wmax; ++w) recw(w, static_cast<int>(w));
  return out;
}

int local_frame::pole_order(int j) const {
  auto [a, b] = phi.at(static_cast<std::size_t>(j - 1));
  return 2 * a + (2 * genus + 1) * b;
}

sparse_poly local_frame::xi_entry(long i, int j) const {
  const laurent1& c = col.at(static_cast<std::size_t>(j - 1));
  long k = i + 1;
  if (k < c.lead()) return sparse_poly();
  if (k > c.known_to()) throw std::out_of_range("xi_entry: beyond computed order");
  return c.coeff(k);
}

local_frame local_expansion(int genus, long torder, int ncols) {
  if (genus != 1 && genus != 2) throw std::invalid_argument("local_expansion: genus must be 1 or 2");
  var_id t = tvar();

  // s = t^2 f with f = 1 + sum_{i>=4} (gamma or beta)_i t^i solving
  //   f = 1 + l4 t^4 f^2 + l6 t^6 f^3 [+ l8 t^8 f^4 + l10 t^10 f^5].
  laurent1 f(t, 0, torder);
  f.set_coeff(0, sparse_poly(1));
  for (long pass = 0; pass <= torder / 4 + 1; ++pass) {
    laurent1 f2 = (f * f).truncated(torder - 4);
    laurent1 nf(t, 0, torder);
    nf.set_coeff(0, sparse_poly(1));
    nf = nf + f2.shift_exponent(4).scale(L4());
    laurent1 f3 = (f2 * f).truncated(torder - 6);
    nf = nf + f3.shift_exponent(6).scale(L6());
    if (genus == 2) {
      laurent1 f4 = (f3 * f).truncated(torder - 8);
      nf = nf + f4.shift_exponent(8).scale(L8());
      laurent1 f5 = (f4 * f).truncated(torder - 10);
      nf = nf + f5.shift_exponent(10).scale(L10());
    }
    if (nf == f) break;
    f = nf;
  }

  laurent1 finv = f.inverse();
  laurent1 x = finv.shift_exponent(-2);
  laurent1 y = (genus == 2) ? (finv * finv).shift_exponent(-5) : finv.shift_exponent(-3);

  // du_{2i-1}/dt = -x^{g-i} x'/(2y)
  laurent1 xp = x.derive();
  laurent1 y_inv = y.inverse();
  std::vector<laurent1> du_dt;
  if (genus == 2) {
    du_dt.push_back((x * xp * y_inv).scale(frac(-1, 2)));  // du1/dt
    du_dt.push_back((xp * y_inv).scale(frac(-1, 2)));      // du3/dt
  } else {
    du_dt.push_back((xp * y_inv).scale(frac(-1, 2)));  // du/dt
  }

  // phi basis ordered by pole order 2a + (2g+1)b, b <= 1.
  std::vector<std::pair<int, std::pair<int, int>>> pool;
  for (int b = 0; b <= 1; ++b)
    for (int a = 0; 2 * a + (2 * genus + 1) * b <= 2 * (ncols + 3); ++a)
      pool.push_back({2 * a + (2 * genus + 1) * b, {a, b}});
  std::sort(pool.begin(), pool.end());
  std::vector<std::pair<int, int>> phi;
  for (int j = 0; j < ncols && j < static_cast<int>(pool.size()); ++j)
    phi.push_back(pool[j].second);

  // col_j = t^g x^a y^b = t^{g-2a-(2g+1)b} f^{-a-g*b}
  std::vector<laurent1> col;
  for (auto [a, b] : phi) {
    long expo = genus - 2 * a - (2 * genus + 1) * b;
    long fpow = -(a + genus * b);
    col.push_back(f.pow(fpow).shift_exponent(expo).truncated(torder));
  }
  return local_frame{genus,        torder, std::move(f),   std::move(x), std::move(y),
                     std::move(du_dt), std::move(phi), std::move(col)};
}

hw2 schur_s(const partition& mu, long trunc) {
  partition use = mu;
  if (!mu.parts.empty() && mu.conjugate().length() < mu.length()) use = mu.conjugate();
  int d = use.length();
  hw2 one(trunc);
  one.set_coeff(0, 0, sparse_poly(1));
  if (d == 0) return one;

  auto p_n = [&](long n) {
    hw2 p(trunc);
    if (n == 0) {
      p.set_coeff(0, 0, sparse_poly(1));
      return p;
    }
    if (n < 0) return p;
    for (long j = 0; 3 * j <= n; ++j)
      if ((n - 3 * j) + 3 * j <= trunc) p.set_coeff(n - 3 * j, j, sparse_poly(1));
    return p;
  };

  // det over column subsets: D[S] = det of rows 1..|S| against columns S.
  std::vector<hw2> D(static_cast<std::size_t>(1) << d, hw2(trunc));
  D[0] = one;
  for (unsigned s = 1; s < (1u << d); ++s) {
    int rows = __builtin_popcount(s);
    hw2 acc(trunc);
    int idx = 0;
    for (int c = 0; c < d; ++c) {
      if (!(s & (1u << c))) continue;
      ++idx;  // 1-based position of column c within s
      long n = use.parts[rows - 1] - rows + (c + 1);
      hw2 minor = D[s & ~(1u << c)];
      hw2 term = p_n(n) * minor;
      if ((rows - idx) % 2 == 1) term = term.scale(rational(-1));
      acc = acc + term;
    }
    D[s] = acc;
  }
  return D[(1u << d) - 1];
}

hw1 schur_s1(const partition& mu, var_id u, long trunc) {
  partition use = mu;
  if (!mu.parts.empty() && mu.conjugate().length() < mu.length()) use = mu.conjugate();
  int d = use.length();
  hw1 one(u, trunc);
  one.set_coeff(0, sparse_poly(1));
  if (d == 0) return one;
  auto p_n = [&](long n) {
    hw1 p(u, trunc);
    if (n >= 0 && n <= trunc) p.set_coeff(n, sparse_poly(1));
    return p;
  };
  std::vector<hw1> D(static_cast<std::size_t>(1) << d, hw1(u, trunc));
  D[0] = one;
  for (unsigned s = 1; s < (1u << d); ++s) {
    int rows = __builtin_popcount(s);
    hw1 acc(u, trunc);
    int idx = 0;
    for (int c = 0; c < d; ++c) {
      if (!(s & (1u << c))) continue;
      ++idx;
      long n = use.parts[rows - 1] - rows + (c + 1);
      hw1 term = p_n(n) * D[s & ~(1u << c)];
      if ((rows - idx) % 2 == 1) term = term.scale(rational(-1));
      acc = acc + term;
    }
    D[s] = acc;
  }
  return D[(1u << d) - 1];
}

sparse_poly poly_determinant(std::vector<std::vector<sparse_poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return sparse_poly(1);
  int sign = 1;
  sparse_poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // full pivot: prefer the structurally cheapest nonzero entry
    std::size_t pr = n, pc = n;
    std::size_t best = SIZE_MAX;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        if (m[i][j].is_zero()) continue;
        std::size_t cost = m[i][j].term_count();
        if (m[i][j].is_constant()) cost = 0;
        if (cost < best) {
          best = cost;
          pr = i;
          pc = j;
        }
      }
    if (pr == n) return sparse_poly();  // remaining block vanishes
    if (pr != k) {
      std::swap(m[pr], m[k]);
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(m[i][pc], m[i][k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        sparse_poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? num : num.divide_exact(prev);
      }
      m[i][k] = sparse_poly();
    }
    prev = m[k][k];
  }
  sparse_poly det = m[n - 1][n - 1];
  return sign == 1 ? det : -det;
}

sparse_poly xi_mu(const partition& mu, const local_frame& fr, int L) {
  if (L < mu.length()) throw std::invalid_argument("xi_mu: corner smaller than the partition");
  std::vector<std::vector<sparse_poly>> m(L, std::vector<sparse_poly>(L));
  for (int i = 1; i <= L; ++i) {
    long mi = (i <= mu.length() ? mu.parts[i - 1] : 0L) - i;
    for (int j = 1; j <= L; ++j) m[i - 1][j - 1] = fr.xi_entry(mi, j);
  }
  return poly_determinant(std::move(m));
}

sparse_poly xi_mu_stable(const partition& mu, const local_frame& fr) {
  int L0 = std::max(mu.length(), 2);
  sparse_poly d0 = xi_mu(mu, fr, L0);
  sparse_poly d1 = xi_mu(mu, fr, L0 + 1);
  sparse_poly d2 = xi_mu(mu, fr, L0 + 2);
  if (!(d0 == d1) || !(d1 == d2))
    throw std::runtime_error("xi_mu_stable: determinant not stabilized for " + mu.str());
  return d0;
}

namespace {

// lambda-degrees realizable by monomials in l4..l10 (or l4, l6 for genus 1):
// 0 and every even degree >= 4.
bool degree_realizable(long d) { return d == 0 || (d >= 4 && d % 2 == 0); }

}  // namespace

hw2 tau_series(const local_frame& fr, long N) {
  hw2 tau(N);
  for (const auto& mu : partitions_up_to(N + 3)) {
    long w = mu.weight();
    if (w > N) continue;  // s_mu is isobaric of u-weight |mu|
    if (!degree_realizable(w - 3)) continue;
    sparse_poly x = xi_mu_stable(mu, fr);
    if (x.is_zero()) continue;
    tau = tau + schur_s(mu, N).scale(x);
  }
  return tau;
}

hw1 tau_series1(const local_frame& fr, long N) {
  var_id u = vars::intern("u", -1);
  hw1 tau(u, N);
  for (const auto& mu : partitions_up_to(N + 1)) {
    long w = mu.weight();
    if (w > N) continue;
    if (!degree_realizable(w - 1)) continue;
    sparse_poly x = xi_mu_stable(mu, fr);
    if (x.is_zero()) continue;
    tau = tau + schur_s1(mu, u, N).scale(x);
  }
  return tau;
}

namespace {

// Truncated bivariate power series in t1, t2 with polynomial coefficients,
// kept for total degree <= trunc.
struct biser {
  long trunc;
  std::map<std::pair<long, long>, sparse_poly> c;

  static biser zero(long t) { return {t, {}}; }
  static biser constant(long t, const sparse_poly& p) {
    biser b{t, {}};
    if (!p.is_zero()) b.c[{0, 0}] = p;
    return b;
  }
  void add_to(long a, long d, const sparse_poly& p) {
    if (a + d > trunc || p.is_zero()) return;
    auto [it, ins] = c.emplace(std::make_pair(a, d), p);
    if (!ins) {
      it->second += p;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  biser operator+(const biser& o) const {
    biser r{std::min(trunc, o.trunc), c};
    for (auto it = r.c.begin(); it != r.c.end();) {
      if (it->first.first + it->first.second > r.trunc)
        it = r.c.erase(it);
      else
        ++it;
    }
    for (const auto& [k, p] : o.c) r.add_to(k.first, k.second, p);
    return r;
  }
  biser operator-(const biser& o) const { return *this + o.scale(sparse_poly(-1)); }
  biser operator*(const biser& o) const {
    biser r = zero(std::min(trunc, o.trunc));
    for (const auto& [ka, pa] : c)
      for (const auto& [kb, pb] : o.c) {
        long a = ka.first + kb.first, d = ka.second + kb.second;
        if (a + d > r.trunc) continue;
        r.add_to(a, d, pa * pb);
      }
    return r;
  }
  biser scale(const sparse_poly& p) const {
    biser r = zero(trunc);
    for (const auto& [k, q] : c) r.add_to(k.first, k.second, q * p);
    return r;
  }
  const sparse_poly& at(long a, long d) const {
    static const sparse_poly z;
    auto it = c.find({a, d});
    return it == c.end() ? z : it->second;
  }
};

biser lift(const laurent1& g, int which, long trunc) {
  biser b = biser::zero(trunc);
  for (const auto& [k, p] : g.coeffs()) {
    if (k < 0) throw std::domain_error("lift: negative exponent");
    if (which == 1)
      b.add_to(k, 0, p);
    else
      b.add_to(0, k, p);
  }
  return b;
}

}  // namespace

const sparse_poly& norm_constants::q_at(int i, int j) const {
  static const sparse_poly z;
  auto it = q.find({i, j});
  return it == q.end() ? z : it->second;
}

norm_constants normalization_constants(const local_frame& fr) {
  norm_constants nc;
  nc.genus = fr.genus;

  // b-matrix from du_i/dt = sum_j b_{ij} t^{j-1}
  if (fr.genus == 2) {
    nc.b11 = fr.du_dt[0].coeff(0);
    nc.b13 = fr.du_dt[0].coeff(2);
    nc.b31 = fr.du_dt[1].coeff(0);
    nc.b33 = fr.du_dt[1].coeff(2);
  } else {
    nc.b11 = fr.du_dt[0].coeff(0);
  }

  // c from sqrt(du_last/dt) = t^{g-1} exp(sum c_i t^i / i)
  {
    const laurent1& dl = fr.du_dt.back();
    long shift = fr.genus == 2 ? 2 : 0;
    laurent1 unit = dl.shift_exponent(-shift);
    laurent1 half_log = unit.log1().scale(frac(1, 2));
    nc.c1 = half_log.coeff(1);
    if (fr.genus == 2) nc.c3 = half_log.coeff(3).scale(rational(3));
    // c_i = i * [t^i] (1/2) log; c1 has factor 1
  }

  // q_{ij} from the cleared identity P1 - P2 = q * P3 with
  //   P3 = 4 (t2^2 f2 - t1^2 f1)^2 (t1 - t2)^2.
  const long Dq = 6;           // solve q up to total degree 6 (i + j <= 8)
  const long bt = Dq + 6 + 2;  // bivariate working order

  biser f1 = lift(fr.f.truncated(bt), 1, bt);
  biser f2 = lift(fr.f.truncated(bt), 2, bt);
  auto mono = [&](long a, long d) {
    biser b = biser::zero(bt);
    b.add_to(a, d, sparse_poly(1));
    return b;
  };
  biser t1 = mono(1, 0), t2 = mono(0, 1);

  // 2f + t f'
  laurent1 fp = fr.f.derive();
  laurent1 w1 = fr.f.scale(rational(2)) + fp.shift_exponent(1);
  biser w1b = lift(w1.truncated(bt), 1, bt);
  biser w2b = lift(w1.truncated(bt), 2, bt);

  laurent1 finv = fr.f.inverse().truncated(bt);
  biser f1inv = lift(finv, 1, bt);
  biser f2inv = lift(finv, 2, bt);

  biser ncl = biser::zero(bt);
  if (fr.genus == 2) {
    // N t1^6 t2^6 f1^2 f2^2 for
    // N = x1^2 x2^2 (x1+x2) + l4 x1 x2 (x1+x2) + 2 l6 x1 x2 + l8 (x1+x2)
    //     + 2 y1 y2 + 2 l10
    ncl = ncl + f1inv * mono(0, 2) + f2inv * mono(2, 0);
    ncl = ncl + (mono(2, 4) * f2 + mono(4, 2) * f1).scale(L4());
    ncl = ncl + (mono(4, 4) * f1 * f2).scale(L6().scale(2));
    ncl = ncl + (mono(4, 6) * f1 * f2 * f2 + mono(6, 4) * f1 * f1 * f2).scale(L8());
    ncl = ncl + mono(1, 1).scale(sparse_poly(2));
    ncl = ncl + (mono(6, 6) * f1 * f1 * f2 * f2).scale(L10().scale(2));
  } else {
    // N t1^4 t2^4 f1 f2 for N = x1 x2 (x1+x2) + l4 (x1+x2) + 2 y1 y2 + 2 l6
    ncl = ncl + f1inv * mono(0, 2) + f2inv * mono(2, 0);
    ncl = ncl + (mono(2, 4) * f2 + mono(4, 2) * f1).scale(L4());
    ncl = ncl + mono(1, 1).scale(sparse_poly(2));
    ncl = ncl + (mono(4, 4) * f1 * f2).scale(L6().scale(2));
  }

  biser dt = t1 - t2;
  biser dt2 = dt * dt;
  biser p1 = ncl * w1b * w2b * dt2;
  biser sdiff = mono(0, 2) * f2 - mono(2, 0) * f1;
  biser p2 = (sdiff * sdiff).scale(sparse_poly(4));
  biser p3 = p2 * dt2;
  biser lhs = p1 - p2;

  // Solve degree by degree. At degree d the unknown at bidegree (r, d - r)
  // enters the equation indexed (a + 6, d - a) through the degree-6 leading
  // form 4 (t1-t2)^4 (t1+t2)^2 of p3, which needs r >= a; the system is
  // upper triangular with diagonal 4, so solve downward from r = d.
  biser qser = biser::zero(bt);
  for (long d = 0; d <= Dq; ++d) {
    biser resid = lhs - qser * p3;
    for (long a = d; a >= 0; --a) {
      sparse_poly rhs = resid.at(a + 6, d - a);
      for (long r = a + 1; r <= d; ++r) rhs -= p3.at(a + 6 - r, r - a) * qser.at(r, d - r);
      qser.add_to(a, d - a, rhs.scale(frac(1, 4)));
    }
  }
  // consistency: the identity must hold over the whole computed box
  biser check = lhs - qser * p3;
  for (const auto& [k, p] : check.c) {
    if (k.first + k.second <= Dq + 6 && !p.is_zero())
      throw std::runtime_error("normalization_constants: inconsistent bilinear identity");
  }
  for (const auto& [k, p] : qser.c)
    nc.q[{static_cast<int>(k.first) + 1, static_cast<int>(k.second) + 1}] = p;
  return nc;
}

hw2 sigma_from_tau(const hw2& tau, const norm_constants& nc) {
  if (!(nc.b11 == sparse_poly(1)) || !nc.b13.is_zero() || !nc.b31.is_zero() ||
      !(nc.b33 == sparse_poly(1)))
    throw std::domain_error("sigma_from_tau: b-matrix is not the identity");
  hw2 e(tau.trunc());
  e.set_coeff(1, 0, nc.c1);
  e.set_coeff(0, 1, nc.c3);
  e.set_coeff(2, 0, -nc.q_at(1, 1));
  e.set_coeff(1, 1, -nc.q_at(1, 3));
  e.set_coeff(0, 2, -nc.q_at(3, 3));
  return e.exp() * tau;
}

hw1 sigma_from_tau1(const hw1& tau, const norm_constants& nc) {
  if (!(nc.b11 == sparse_poly(1)))
    throw std::domain_error("sigma_from_tau1: b is not 1");
  hw1 e(tau.var(), tau.trunc());
  e.set_coeff(1, nc.c1);
  e.set_coeff(2, -nc.q_at(1, 1));
  return e.exp() * tau;
}

sigma_series sigma_tau_route(long N) {
  local_frame fr = local_expansion(2, N + 8, static_cast<int>(N) + 8);
  hw2 tau = tau_series(fr, N);
  norm_constants nc = normalization_constants(fr);
  return {sigma_from_tau(tau, nc), sigma_route::tau};
}

hw1 sigma1_tau_route(long N) {
  local_frame fr = local_expansion(1, N + 8, static_cast<int>(N) + 8);
  hw1 tau = tau_series1(fr, N);
  norm_constants nc = normalization_constants(fr);
  return sigma_from_tau1(tau, nc);
}

}  // namespace sigmaforge
