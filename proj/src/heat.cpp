#include "sigmaforge/heat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sigmaforge {

namespace {

auto term_key(const heat_term& t) {
  return std::tie(t.u1_pow, t.u3_pow, t.du1, t.du3, t.dlambda);
}

const long k_lambda_weight[4] = {4, 6, 8, 10};

sparse_poly lambda_partial(const sparse_poly& p, const std::array<int, 4>& e) {
  sparse_poly r = p;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < e[i]; ++k) r = r.partial(vars::lambda(i));
  return r;
}

}  // namespace

long heat_term::shift() const {
  grading g = coeff.grade();
  if (g.k == grading::mixed) throw std::domain_error("heat_term::shift: non-homogeneous coefficient");
  long s = (g.k == grading::homogeneous ? g.degree : 0);
  s += -u1_pow - 3 * u3_pow + du1 + 3 * du3;
  for (int i = 0; i < 4; ++i) s -= dlambda[i] * k_lambda_weight[i];
  return s;
}

heat_operator::heat_operator(std::vector<heat_term> terms) : t_(std::move(terms)) {
  std::sort(t_.begin(), t_.end(),
            [](const heat_term& a, const heat_term& b) { return term_key(a) < term_key(b); });
  std::vector<heat_term> merged;
  for (auto& t : t_) {
    if (!merged.empty() && term_key(merged.back()) == term_key(t)) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else if (!t.coeff.is_zero()) {
      merged.push_back(std::move(t));
    }
  }
  t_ = std::move(merged);
}

bool heat_operator::operator==(const heat_operator& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (term_key(t_[i]) != term_key(o.t_[i]) || !(t_[i].coeff == o.t_[i].coeff)) return false;
  return true;
}

heat_operator heat_operator::operator+(const heat_operator& o) const {
  std::vector<heat_term> all = t_;
  all.insert(all.end(), o.t_.begin(), o.t_.end());
  return heat_operator(std::move(all));
}

heat_operator heat_operator::operator-(const heat_operator& o) const {
  return *this + o.scale(rational(-1));
}

heat_operator heat_operator::scale(const sparse_poly& p) const {
  std::vector<heat_term> all = t_;
  for (auto& t : all) t.coeff = t.coeff * p;
  return heat_operator(std::move(all));
}

heat_operator heat_operator::scale(const rational& c) const { return scale(sparse_poly(c)); }

long heat_operator::shift() const {
  if (t_.empty()) throw std::domain_error("heat_operator::shift: zero operator");
  long s = t_.front().shift();
  for (const auto& t : t_)
    if (t.shift() != s) throw std::domain_error("heat_operator::shift: mixed grading shifts");
  return s;
}

long heat_operator::valid_weight(long arg_trunc) const {
  long v = arg_trunc;
  for (const auto& t : t_)
    v = std::min(v, arg_trunc - t.du1 - 3 * t.du3 + t.u1_pow + 3 * t.u3_pow);
  return v;
}

hw2 heat_operator::apply(const hw2& s) const {
  hw2 out(valid_weight(s.trunc()));
  for (const auto& t : t_) {
    for (const auto& [k, c] : s.coeffs()) {
      long m = k.first - t.du1;
      long n = k.second - t.du3;
      if (m < 0 || n < 0) continue;
      long m2 = m + t.u1_pow;
      long n2 = n + t.u3_pow;
      if (m2 + 3 * n2 > out.trunc()) continue;
      sparse_poly v = lambda_partial(c, t.dlambda);
      if (v.is_zero()) continue;
      v = (v * t.coeff).scale(
          rational(falling_factorial(m2, t.u1_pow) * falling_factorial(n2, t.u3_pow)));
      if (v.is_zero()) continue;
      sparse_poly acc = out.coeff(m2, n2) + v;
      out.set_coeff(m2, n2, std::move(acc));
    }
  }
  return out;
}

hw1 heat_operator::apply1(const hw1& s) const {
  long valid = s.trunc();
  for (const auto& t : t_) {
    if (t.u3_pow != 0 || t.du3 != 0 || t.dlambda[2] != 0 || t.dlambda[3] != 0)
      throw std::domain_error("apply1: operator is not univariate");
    valid = std::min(valid, s.trunc() - t.du1 + t.u1_pow);
  }
  hw1 out(s.var(), valid);
  for (const auto& t : t_) {
    for (const auto& [k, c] : s.coeffs()) {
      long m = k - t.du1;
      if (m < 0) continue;
      long m2 = m + t.u1_pow;
      if (m2 > out.trunc()) continue;
      sparse_poly v = lambda_partial(c, t.dlambda);
      if (v.is_zero()) continue;
      v = (v * t.coeff).scale(rational(falling_factorial(m2, t.u1_pow)));
      if (v.is_zero()) continue;
      sparse_poly acc = out.coeff(m2) + v;
      out.set_coeff(m2, std::move(acc));
    }
  }
  return out;
}

std::string heat_operator::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    if (!first) os << "\n";
    first = false;
    os << "(" << t.coeff.str() << ")";
    if (t.u1_pow) os << " u1^" << t.u1_pow;
    if (t.u3_pow) os << " u3^" << t.u3_pow;
    if (t.du1) os << " d_u1^" << t.du1;
    if (t.du3) os << " d_u3^" << t.du3;
    for (int i = 0; i < 4; ++i)
      if (t.dlambda[i]) os << " d_l" << k_lambda_weight[i] << "^" << t.dlambda[i];
  }
  return os.str();
}

heat_operator compose(const heat_operator& a, const heat_operator& b) {
  std::vector<heat_term> out;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      // Push ta's lambda-derivatives across tb's coefficient (Leibniz), then
      // ta's u-derivatives across tb's u-monomial.
      std::array<int, 4> h{};
      // Iterate h over the box 0 <= h <= ta.dlambda.
      for (h[0] = 0; h[0] <= ta.dlambda[0]; ++h[0])
        for (h[1] = 0; h[1] <= ta.dlambda[1]; ++h[1])
          for (h[2] = 0; h[2] <= ta.dlambda[2]; ++h[2])
            for (h[3] = 0; h[3] <= ta.dlambda[3]; ++h[3]) {
              sparse_poly cb = lambda_partial(tb.coeff, h);
              if (cb.is_zero()) continue;
              integer lam_mult(1);
              for (int i = 0; i < 4; ++i) lam_mult *= binomial(ta.dlambda[i], h[i]);
              for (int k1 = 0; k1 <= std::min(ta.du1, tb.u1_pow); ++k1) {
                for (int k3 = 0; k3 <= std::min(ta.du3, tb.u3_pow); ++k3) {
                  integer u_mult = binomial(ta.du1, k1) * falling_factorial(tb.u1_pow, k1) *
                                   binomial(ta.du3, k3) * falling_factorial(tb.u3_pow, k3);
                  heat_term t;
                  t.coeff = (ta.coeff * cb).scale(rational(lam_mult * u_mult));
                  t.u1_pow = ta.u1_pow + tb.u1_pow - k1;
                  t.u3_pow = ta.u3_pow + tb.u3_pow - k3;
                  t.du1 = ta.du1 + tb.du1 - k1;
                  t.du3 = ta.du3 + tb.du3 - k3;
                  for (int i = 0; i < 4; ++i) t.dlambda[i] = ta.dlambda[i] - h[i] + tb.dlambda[i];
                  out.push_back(std::move(t));
                }
              }
            }
    }
  }
  return heat_operator(std::move(out));
}

heat_operator bracket(const heat_operator& a, const heat_operator& b) {
  return compose(a, b) - compose(b, a);
}

std::array<std::array<sparse_poly, 4>, 4> heat_matrix_T() {
  auto L4 = sparse_poly::var(vars::l4());
  auto L6 = sparse_poly::var(vars::l6());
  auto L8 = sparse_poly::var(vars::l8());
  auto L10 = sparse_poly::var(vars::l10());

  std::array<std::array<sparse_poly, 4>, 4> T;
  T[0] = {L4.scale(4), L6.scale(6), L8.scale(8), L10.scale(10)};
  T[1] = {L6.scale(6), L8.scale(8) - (L4 * L4).scale(rational(12) / 5),
          L10.scale(10) - (L4 * L6).scale(rational(8) / 5), (L4 * L8).scale(rational(-4) / 5)};
  T[2] = {L8.scale(8), L10.scale(10) - (L4 * L6).scale(rational(8) / 5),
          (L4 * L8).scale(4) - (L6 * L6).scale(rational(12) / 5),
          (L4 * L10).scale(6) - (L6 * L8).scale(rational(6) / 5)};
  T[3] = {L10.scale(10), (L4 * L8).scale(rational(-4) / 5),
          (L4 * L10).scale(6) - (L6 * L8).scale(rational(6) / 5),
          (L6 * L10).scale(4) - (L8 * L8).scale(rational(8) / 5)};
  return T;
}

namespace {

heat_term c_term(sparse_poly c) {
  heat_term t;
  t.coeff = std::move(c);
  return t;
}

heat_term u_term(sparse_poly c, int a1, int a3) {
  heat_term t;
  t.coeff = std::move(c);
  t.u1_pow = a1;
  t.u3_pow = a3;
  return t;
}

heat_term du_term(sparse_poly c, int d1, int d3, int a1 = 0, int a3 = 0) {
  heat_term t;
  t.coeff = std::move(c);
  t.du1 = d1;
  t.du3 = d3;
  t.u1_pow = a1;
  t.u3_pow = a3;
  return t;
}

heat_term dl_term(sparse_poly c, int j) {
  heat_term t;
  t.coeff = std::move(c);
  t.dlambda[j] = 1;
  return t;
}

}  // namespace

std::vector<heat_operator> build_heat_system(int genus) {
  auto L4 = sparse_poly::var(vars::l4());
  auto L6 = sparse_poly::var(vars::l6());
  auto L8 = sparse_poly::var(vars::l8());
  auto L10 = sparse_poly::var(vars::l10());

  if (genus == 1) {
    // 4 l4 s_l4 + 6 l6 s_l6 - u s_u + s = 0
    heat_operator euler({dl_term(L4.scale(4), 0), dl_term(L6.scale(6), 1),
                         du_term(sparse_poly(-1), 1, 0, 1, 0), c_term(sparse_poly(1))});
    // 6 l6 s_l4 - 4/3 l4^2 s_l6 - 1/2 s_uu + 1/6 l4 u^2 s = 0
    heat_operator heat({dl_term(L6.scale(6), 0), dl_term((L4 * L4).scale(rational(-4) / 3), 1),
                        du_term(sparse_poly(rational(-1) / 2), 2, 0),
                        u_term(L4.scale(rational(1) / 6), 2, 0)});
    return {euler, heat};
  }
  if (genus != 2) throw std::invalid_argument("build_heat_system: genus must be 1 or 2");

  auto T = heat_matrix_T();
  std::vector<heat_operator> qs;
  const rational half = rational(1) / 2;

  std::array<std::vector<heat_term>, 4> H;
  // H0 = u1 d_u1 + 3 u3 d_u3 - 3
  H[0] = {du_term(sparse_poly(1), 1, 0, 1, 0), du_term(sparse_poly(3), 0, 1, 0, 1),
          c_term(sparse_poly(-3))};
  // H2 = 1/2 d_u1^2 - 4/5 l4 u3 d_u1 + u1 d_u3 - 3/10 l4 u1^2 + 1/10 (15 l8 - 4 l4^2) u3^2
  H[1] = {du_term(sparse_poly(half), 2, 0), du_term(L4.scale(rational(-4) / 5), 1, 0, 0, 1),
          du_term(sparse_poly(1), 0, 1, 1, 0), u_term(L4.scale(rational(-3) / 10), 2, 0),
          u_term((L8.scale(15) - (L4 * L4).scale(4)).scale(rational(1) / 10), 0, 2)};
  // H4 = d_u1 d_u3 - 6/5 l6 u3 d_u1 + l4 u3 d_u3 - 1/5 l6 u1^2 + l8 u1 u3
  //      + 1/10 (30 l10 - 6 l4 l6) u3^2 - l4
  H[2] = {du_term(sparse_poly(1), 1, 1), du_term(L6.scale(rational(-6) / 5), 1, 0, 0, 1),
          du_term(L4, 0, 1, 0, 1), u_term(L6.scale(rational(-1) / 5), 2, 0), u_term(L8, 1, 1),
          u_term((L10.scale(30) - (L4 * L6).scale(6)).scale(rational(1) / 10), 0, 2),
          c_term(-L4)};
  // H6 = 1/2 d_u3^2 - 3/5 l8 u3 d_u1 - 1/10 l8 u1^2 + 2 l10 u1 u3 - 3/10 l8 l4 u3^2 - 1/2 l6
  H[3] = {du_term(sparse_poly(half), 0, 2), du_term(L8.scale(rational(-3) / 5), 1, 0, 0, 1),
          u_term(L8.scale(rational(-1) / 10), 2, 0), u_term(L10.scale(2), 1, 1),
          u_term((L8 * L4).scale(rational(-3) / 10), 0, 2), c_term(L6.scale(-half))};

  for (int i = 0; i < 4; ++i) {
    std::vector<heat_term> terms;
    for (int j = 0; j < 4; ++j)
      if (!T[i][j].is_zero()) terms.push_back(dl_term(T[i][j], j));
    for (auto& t : H[i]) {
      t.coeff = -t.coeff;
      terms.push_back(t);
    }
    qs.push_back(heat_operator(std::move(terms)));
  }
  return qs;
}

bool annihilation_report::all_zero() const {
  for (const auto& o : ops)
    if (!o.residuals.empty()) return false;
  return true;
}

annihilation_report verify_annihilation(const std::vector<heat_operator>& ops,
                                        const std::vector<std::string>& names, const hw2& s,
                                        long weight) {
  annihilation_report rep;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    long valid = ops[i].valid_weight(s.trunc());
    if (valid < weight) {
      std::ostringstream os;
      os << "verify_annihilation: operator " << (i < names.size() ? names[i] : std::to_string(i))
         << " checkable only to weight " << valid << ", requested " << weight
         << " (argument truncation short by " << (weight - valid) << ")";
      throw std::invalid_argument(os.str());
    }
    hw2 r = ops[i].apply(s);
    annihilation_report::per_op entry;
    entry.name = i < names.size() ? names[i] : std::to_string(i);
    entry.checked_to = weight;
    for (const auto& [k, p] : r.coeffs())
      if (k.first + 3 * k.second <= weight) entry.residuals.push_back({k.first, k.second, p});
    rep.ops.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace sigmaforge
