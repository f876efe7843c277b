#include "sigmaforge/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace sigmaforge {

monomial monomial::var(var_id v, int exp) {
  monomial m;
  if (exp != 0) {
    m.e_.push_back({v, exp});
    m.w_ = vars::info(v).weight * exp;
  }
  return m;
}

int monomial::exponent(var_id v) const {
  for (const auto& [w, e] : e_)
    if (w == v) return e;
  return 0;
}

monomial monomial::times(const monomial& o) const {
  monomial r;
  r.w_ = w_ + o.w_;
  r.e_.reserve(e_.size() + o.e_.size());
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && vars::less(a->first, b->first))) {
      r.e_.push_back(*a++);
    } else if (a == e_.end() || vars::less(b->first, a->first)) {
      r.e_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.e_.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  return r;
}

monomial monomial::divide(const monomial& o) const {
  monomial inv;
  inv.e_ = o.e_;
  inv.w_ = -o.w_;
  for (auto& [v, e] : inv.e_) e = -e;
  return times(inv);
}

bool monomial::operator<(const monomial& o) const {
  long wa = weight(), wb = o.weight();
  if (wa != wb) return wa < wb;
  // Lexicographic tie-break over the canonical variable order, treating a
  // missing slot as exponent zero; the larger exponent on the earliest
  // differing variable sorts first.
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    int ea = 0, eb = 0;
    if (b == o.e_.end() || (a != e_.end() && vars::less(a->first, b->first))) {
      ea = (a++)->second;
    } else if (a == e_.end() || vars::less(b->first, a->first)) {
      eb = (b++)->second;
    } else {
      ea = (a++)->second;
      eb = (b++)->second;
    }
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::string monomial::str() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : e_) {
    if (!first) os << "*";
    first = false;
    os << vars::info(v).name;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

subring_spec subring_spec::with_scale(var_id v, integer s) const {
  subring_spec r = *this;
  r.scales[v] = std::move(s);
  return r;
}

sparse_poly::sparse_poly(const rational& c) {
  rational v = c;
  v.canonicalize();
  if (v != 0) t_.emplace(monomial(), v);
}

sparse_poly::sparse_poly(long c) {
  if (c != 0) t_.emplace(monomial(), rational(c));
}

sparse_poly sparse_poly::var(var_id v, int exp) {
  sparse_poly p;
  p.t_.emplace(monomial::var(v, exp), rational(1));
  return p;
}

sparse_poly sparse_poly::term(const rational& c, const monomial& m) {
  sparse_poly p;
  rational v = c;
  v.canonicalize();
  if (v != 0) p.t_.emplace(m, v);
  return p;
}

bool sparse_poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

rational sparse_poly::constant_value() const {
  if (t_.empty()) return rational(0);
  if (!is_constant()) throw std::domain_error("constant_value: polynomial is not constant");
  return t_.begin()->second;
}

rational sparse_poly::coeff(const monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? rational(0) : it->second;
}

void sparse_poly::add_term(const monomial& m, const rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

sparse_poly sparse_poly::operator+(const sparse_poly& o) const {
  sparse_poly r = *this;
  r += o;
  return r;
}

sparse_poly& sparse_poly::operator+=(const sparse_poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

sparse_poly sparse_poly::operator-(const sparse_poly& o) const {
  sparse_poly r = *this;
  r -= o;
  return r;
}

sparse_poly& sparse_poly::operator-=(const sparse_poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

sparse_poly sparse_poly::operator-() const {
  sparse_poly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

sparse_poly sparse_poly::operator*(const sparse_poly& o) const {
  sparse_poly r;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

sparse_poly operator*(const rational& c, const sparse_poly& p) {
  return p.scale(c);
}

sparse_poly sparse_poly::scale(const rational& c) const {
  sparse_poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : t_) r.t_.emplace(m, c * k);
  return r;
}

sparse_poly sparse_poly::pow(unsigned int k) const {
  sparse_poly r(1);
  for (unsigned int i = 0; i < k; ++i) r = r * *this;
  return r;
}

sparse_poly sparse_poly::partial(var_id v) const {
  sparse_poly r;
  for (const auto& [m, c] : t_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.divide(monomial::var(v)), c * e);
  }
  return r;
}

grading sparse_poly::grade() const {
  grading g;
  if (t_.empty()) return g;
  g.k = grading::homogeneous;
  g.degree = t_.begin()->first.weight();
  for (const auto& [m, c] : t_) {
    if (m.weight() != g.degree) {
      g.k = grading::mixed;
      return g;
    }
  }
  return g;
}

long sparse_poly::ord_p(unsigned long p) const {
  if (!is_prime(p)) throw std::domain_error("ord_p: modulus is not prime");
  long best = ord_infinity;
  for (const auto& [m, c] : t_) {
    long o = sigmaforge::ord_p(c, p);
    if (o < best) best = o;
  }
  return best;
}

std::optional<membership_failure> sparse_poly::subring_violation(const subring_spec& spec) const {
  for (const auto& [m, c] : t_) {
    rational v = c;
    for (const auto& [var, e] : m.entries()) {
      auto it = spec.scales.find(var);
      if (it == spec.scales.end() || it->second == 1) continue;
      if (e < 0) throw std::domain_error("subring_violation: negative exponent on scaled variable");
      for (int i = 0; i < e; ++i) v /= it->second;
    }
    integer den = v.get_den();
    for (unsigned long p : spec.allowed_primes) {
      integer rest, pp(p);
      mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
      den = rest;
    }
    if (den != 1) return membership_failure{m, c};
  }
  return std::nullopt;
}

sparse_poly sparse_poly::substitute(var_id v, const sparse_poly& value) const {
  std::map<var_id, sparse_poly> m;
  m.emplace(v, value);
  return substitute(m);
}

sparse_poly sparse_poly::substitute(const std::map<var_id, sparse_poly>& values) const {
  sparse_poly r;
  for (const auto& [m, c] : t_) {
    sparse_poly acc = sparse_poly(c);
    monomial rest;
    for (const auto& [var, e] : m.entries()) {
      auto it = values.find(var);
      if (it == values.end()) {
        rest = rest.times(monomial::var(var, e));
      } else {
        if (e < 0) throw std::domain_error("substitute: negative exponent");
        acc = acc * it->second.pow(static_cast<unsigned int>(e));
      }
    }
    r += acc * sparse_poly::term(rational(1), rest);
  }
  return r;
}

sparse_poly sparse_poly::divide_exact(const sparse_poly& d) const {
  if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (d.is_constant()) return scale(rational(1) / d.constant_value());
  sparse_poly rem = *this;
  sparse_poly quot;
  const auto& lead = *d.t_.rbegin();
  while (!rem.is_zero()) {
    const auto& top = *rem.t_.rbegin();
    monomial qm = top.first.divide(lead.first);
    for (const auto& [v, e] : qm.entries())
      if (e < 0) throw std::domain_error("divide_exact: not divisible");
    rational qc = top.second / lead.second;
    sparse_poly qt = sparse_poly::term(qc, qm);
    quot += qt;
    rem -= qt * d;
  }
  return quot;
}

std::string sparse_poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.empty()) {
      os << to_string(a);
    } else if (a == 1) {
      os << m.str();
    } else {
      os << to_string(a) << "*" << m.str();
    }
  }
  return os.str();
}

}  // namespace sigmaforge
