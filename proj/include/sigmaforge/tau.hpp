#pragma once

#include <map>
#include <string>
#include <vector>

#include "sigmaforge/sigma2.hpp"

namespace sigmaforge {

struct partition {
  std::vector<int> parts;  // weakly decreasing, positive
  long weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  partition conjugate() const;
  std::string str() const;
};

// All partitions of weight <= wmax (including the empty one), ordered by
// weight and then lexicographically. Deterministic.
std::vector<partition> partitions_up_to(long wmax);

// Local data of the curve at infinity in the parameter t (genus 2: t = x^2/y,
// genus 1: t = x/y), with s = 1/x = t^2 f(t):
//   x = t^-2 f^-1,  y = t^-(2g+1) f^-g.
// phi lists the monomials x^a y^b (b <= 1) by increasing pole order, and
// col[j] carries the expansion of t^g phi_{j+1}.
struct local_frame {
  int genus;
  long torder;  // expansions exact through t^torder
  laurent1 f;
  laurent1 x, y;
  std::vector<laurent1> du_dt;  // genus 2: du1/dt, du3/dt; genus 1: du/dt
  std::vector<std::pair<int, int>> phi;
  std::vector<laurent1> col;

  int pole_order(int j) const;              // of phi_j (1-based)
  sparse_poly xi_entry(long i, int j) const;  // coefficient of t^{i+1} in t^g phi_j
};

local_frame local_expansion(int genus, long torder, int ncols);

// Schur polynomial det(p_{mu_i - i + j}) in the Hurwitz presentation; the
// p_n here are self-dual under partition conjugation, so the smaller of the
// two Jacobi-Trudi shapes is used.
hw2 schur_s(const partition& mu, long trunc);
hw1 schur_s1(const partition& mu, var_id u, long trunc);

// Corner evaluation of the frame determinant for rows m_i = mu_i - i.
sparse_poly xi_mu(const partition& mu, const local_frame& fr, int L);
// Evaluates at three consecutive corner sizes and requires agreement.
sparse_poly xi_mu_stable(const partition& mu, const local_frame& fr);

// tau = sum over partitions of xi_mu * s_mu, truncated at weight N.
hw2 tau_series(const local_frame& fr, long N);
hw1 tau_series1(const local_frame& fr, long N);

struct norm_constants {
  int genus = 2;
  sparse_poly b11, b13, b31, b33;  // genus 1: b11 is the single b_1
  sparse_poly c1, c3;              // genus 1: c1 only
  std::map<std::pair<int, int>, sparse_poly> q;  // q_{ij}, i + j <= 8

  const sparse_poly& q_at(int i, int j) const;
};

// b from the du_i expansions, c from the square root of du_3/dt, q by
// solving the cleared coefficient identity of the bilinear form; throws on
// an inconsistent system.
norm_constants normalization_constants(const local_frame& fr);

// sigma = exp(c1 u1 + c3 u3 - q11 u1^2/2 - q33 u3^2/2 - q13 u1 u3) tau,
// after checking that the b-matrix is the identity.
hw2 sigma_from_tau(const hw2& tau, const norm_constants& nc);
hw1 sigma_from_tau1(const hw1& tau, const norm_constants& nc);

// Full pipelines on the generic curve.
sigma_series sigma_tau_route(long N);
hw1 sigma1_tau_route(long N);

// Fraction-free determinant with full pivoting (exposed for tests).
sparse_poly poly_determinant(std::vector<std::vector<sparse_poly>> m);

}  // namespace sigmaforge
