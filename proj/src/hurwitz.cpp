#include "sigmaforge/hurwitz.hpp"

#include <stdexcept>

namespace sigmaforge {

namespace {
const sparse_poly k_zero_poly;

void check_same_var(var_id a, var_id b) {
  if (a != b) throw std::invalid_argument("series variables differ");
}
}  // namespace

hw1::hw1(var_id v, long trunc) : var_(v), trunc_(trunc) {}

const sparse_poly& hw1::coeff(long n) const {
  if (n < 0) return k_zero_poly;
  if (n > trunc_) throw std::out_of_range("hw1::coeff beyond truncation");
  auto it = c_.find(n);
  return it == c_.end() ? k_zero_poly : it->second;
}

void hw1::set_coeff(long n, sparse_poly p) {
  if (n < 0 || n > trunc_) throw std::out_of_range("hw1::set_coeff beyond truncation");
  if (p.is_zero())
    c_.erase(n);
  else
    c_[n] = std::move(p);
}

hw1 hw1::operator+(const hw1& o) const {
  check_same_var(var_, o.var_);
  hw1 r(var_, std::min(trunc_, o.trunc_));
  for (const auto& [n, p] : c_)
    if (n <= r.trunc_) r.c_[n] = p;
  for (const auto& [n, p] : o.c_) {
    if (n > r.trunc_) continue;
    auto [it, ins] = r.c_.emplace(n, p);
    if (!ins) {
      it->second += p;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

hw1 hw1::operator-(const hw1& o) const { return *this + o.scale(rational(-1)); }

hw1 hw1::operator*(const hw1& o) const {
  check_same_var(var_, o.var_);
  hw1 r(var_, std::min(trunc_, o.trunc_));
  for (const auto& [i, a] : c_) {
    for (const auto& [j, b] : o.c_) {
      long n = i + j;
      if (n > r.trunc_) continue;
      sparse_poly t = (a * b).scale(rational(binomial(n, i)));
      auto [it, ins] = r.c_.emplace(n, t);
      if (!ins) {
        it->second += t;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  }
  return r;
}

hw1 hw1::scale(const sparse_poly& p) const {
  hw1 r(var_, trunc_);
  if (p.is_zero()) return r;
  for (const auto& [n, c] : c_) {
    sparse_poly t = c * p;
    if (!t.is_zero()) r.c_[n] = std::move(t);
  }
  return r;
}

hw1 hw1::scale(const rational& c) const { return scale(sparse_poly(c)); }

hw1 hw1::derive() const {
  hw1 r(var_, trunc_ - 1);
  for (const auto& [n, p] : c_)
    if (n >= 1 && n - 1 <= r.trunc_) r.c_[n - 1] = p;
  return r;
}

hw1 hw1::integrate_zero_constant() const {
  hw1 r(var_, trunc_ + 1);
  for (const auto& [n, p] : c_) r.c_[n + 1] = p;
  return r;
}

hw1 hw1::shift_up(long k) const {
  hw1 r(var_, trunc_);  // exact: input coefficients at n feed slot n+k only
  for (const auto& [n, p] : c_) {
    long m = n + k;
    if (m > trunc_) continue;
    r.c_[m] = p.scale(rational(falling_factorial(m, k)));
  }
  return r;
}

hw1 hw1::divide_by_var() const {
  if (!coeff(0).is_zero()) throw std::domain_error("divide_by_var: nonzero constant term");
  hw1 r(var_, trunc_ - 1);
  for (const auto& [n, p] : c_) {
    if (n == 0) continue;
    r.c_[n - 1] = p.scale(rational(1) / rational(n));
  }
  return r;
}

hw1 hw1::map_coeffs(const std::function<sparse_poly(const sparse_poly&)>& f) const {
  hw1 r(var_, trunc_);
  for (const auto& [n, p] : c_) {
    sparse_poly t = f(p);
    if (!t.is_zero()) r.c_[n] = std::move(t);
  }
  return r;
}

hw1 hw1::truncated(long t) const {
  hw1 r(var_, std::min(t, trunc_));
  for (const auto& [n, p] : c_)
    if (n <= r.trunc_) r.c_[n] = p;
  return r;
}

hw1 hw1::exp() const {
  if (!coeff(0).is_zero()) throw std::domain_error("hw1::exp: nonzero constant term");
  hw1 r(var_, trunc_);
  r.set_coeff(0, sparse_poly(1));
  hw1 pw(var_, trunc_);
  pw.set_coeff(0, sparse_poly(1));
  for (long k = 1; k <= trunc_; ++k) {
    pw = pw * *this;
    if (pw.is_zero()) break;
    r = r + pw.scale(rational(1) / rational(factorial(k)));
  }
  return r;
}

laurent1 hw1::to_plain() const {
  laurent1 r(var_, 0, trunc_);
  for (const auto& [n, p] : c_) r.set_coeff(n, p.scale(rational(1) / rational(factorial(n))));
  return r;
}

hw2::hw2(long trunc) : trunc_(trunc) {}

const sparse_poly& hw2::coeff(long m, long n) const {
  if (m < 0 || n < 0) return k_zero_poly;
  if (m + 3 * n > trunc_) throw std::out_of_range("hw2::coeff beyond truncation");
  auto it = c_.find({m, n});
  return it == c_.end() ? k_zero_poly : it->second;
}

void hw2::set_coeff(long m, long n, sparse_poly p) {
  if (m < 0 || n < 0 || m + 3 * n > trunc_) throw std::out_of_range("hw2::set_coeff beyond truncation");
  if (p.is_zero())
    c_.erase({m, n});
  else
    c_[{m, n}] = std::move(p);
}

hw2 hw2::operator+(const hw2& o) const {
  hw2 r(std::min(trunc_, o.trunc_));
  for (const auto& [k, p] : c_)
    if (k.first + 3 * k.second <= r.trunc_) r.c_[k] = p;
  for (const auto& [k, p] : o.c_) {
    if (k.first + 3 * k.second > r.trunc_) continue;
    auto [it, ins] = r.c_.emplace(k, p);
    if (!ins) {
      it->second += p;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

hw2 hw2::operator-(const hw2& o) const { return *this + o.scale(rational(-1)); }

hw2 hw2::operator*(const hw2& o) const {
  hw2 r(std::min(trunc_, o.trunc_));
  for (const auto& [ka, a] : c_) {
    for (const auto& [kb, b] : o.c_) {
      long m = ka.first + kb.first;
      long n = ka.second + kb.second;
      if (m + 3 * n > r.trunc_) continue;
      sparse_poly t = (a * b).scale(rational(binomial(m, ka.first) * binomial(n, ka.second)));
      auto [it, ins] = r.c_.emplace(std::make_pair(m, n), t);
      if (!ins) {
        it->second += t;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  }
  return r;
}

hw2 hw2::scale(const sparse_poly& p) const {
  hw2 r(trunc_);
  if (p.is_zero()) return r;
  for (const auto& [k, c] : c_) {
    sparse_poly t = c * p;
    if (!t.is_zero()) r.c_[k] = std::move(t);
  }
  return r;
}

hw2 hw2::scale(const rational& c) const { return scale(sparse_poly(c)); }

hw2 hw2::derive_u1() const {
  hw2 r(trunc_ - 1);
  for (const auto& [k, p] : c_)
    if (k.first >= 1 && (k.first - 1) + 3 * k.second <= r.trunc_) r.c_[{k.first - 1, k.second}] = p;
  return r;
}

hw2 hw2::derive_u3() const {
  hw2 r(trunc_ - 3);
  for (const auto& [k, p] : c_)
    if (k.second >= 1 && k.first + 3 * (k.second - 1) <= r.trunc_) r.c_[{k.first, k.second - 1}] = p;
  return r;
}

hw2 hw2::shift_up(long a, long b) const {
  hw2 r(trunc_);
  for (const auto& [k, p] : c_) {
    long m = k.first + a;
    long n = k.second + b;
    if (m + 3 * n > trunc_) continue;
    r.c_[{m, n}] = p.scale(rational(falling_factorial(m, a) * falling_factorial(n, b)));
  }
  return r;
}

hw2 hw2::map_coeffs(const std::function<sparse_poly(const sparse_poly&)>& f) const {
  hw2 r(trunc_);
  for (const auto& [k, p] : c_) {
    sparse_poly t = f(p);
    if (!t.is_zero()) r.c_[k] = std::move(t);
  }
  return r;
}

hw2 hw2::truncated(long t) const {
  hw2 r(std::min(t, trunc_));
  for (const auto& [k, p] : c_)
    if (k.first + 3 * k.second <= r.trunc_) r.c_[k] = p;
  return r;
}

hw2 hw2::exp() const {
  auto it = c_.find({0, 0});
  if (it != c_.end()) throw std::domain_error("hw2::exp: nonzero constant term");
  hw2 r(trunc_);
  r.set_coeff(0, 0, sparse_poly(1));
  hw2 pw(trunc_);
  pw.set_coeff(0, 0, sparse_poly(1));
  for (long k = 1; k <= trunc_; ++k) {
    pw = pw * *this;
    if (pw.is_zero()) break;
    r = r + pw.scale(rational(1) / rational(factorial(k)));
  }
  return r;
}

laurent1::laurent1(var_id v, long lead, long known_to) : var_(v), lead_(lead), known_to_(known_to) {
  if (known_to < lead) throw std::invalid_argument("laurent1: empty coefficient range");
}

const sparse_poly& laurent1::coeff(long k) const {
  if (k < lead_) return k_zero_poly;
  if (k > known_to_) throw std::out_of_range("laurent1::coeff beyond truncation");
  auto it = a_.find(k);
  return it == a_.end() ? k_zero_poly : it->second;
}

void laurent1::set_coeff(long k, sparse_poly p) {
  if (k < lead_ || k > known_to_) throw std::out_of_range("laurent1::set_coeff out of range");
  if (p.is_zero())
    a_.erase(k);
  else
    a_[k] = std::move(p);
}

laurent1 laurent1::operator+(const laurent1& o) const {
  check_same_var(var_, o.var_);
  laurent1 r(var_, std::min(lead_, o.lead_), std::min(known_to_, o.known_to_));
  for (const auto& [k, p] : a_)
    if (k <= r.known_to_) r.a_[k] = p;
  for (const auto& [k, p] : o.a_) {
    if (k > r.known_to_) continue;
    auto [it, ins] = r.a_.emplace(k, p);
    if (!ins) {
      it->second += p;
      if (it->second.is_zero()) r.a_.erase(it);
    }
  }
  return r;
}

laurent1 laurent1::operator-(const laurent1& o) const { return *this + o.scale(rational(-1)); }

laurent1 laurent1::operator*(const laurent1& o) const {
  check_same_var(var_, o.var_);
  laurent1 r(var_, lead_ + o.lead_, std::min(known_to_ + o.lead_, o.known_to_ + lead_));
  for (const auto& [i, a] : a_) {
    for (const auto& [j, b] : o.a_) {
      long k = i + j;
      if (k > r.known_to_) continue;
      sparse_poly t = a * b;
      auto [it, ins] = r.a_.emplace(k, t);
      if (!ins) {
        it->second += t;
        if (it->second.is_zero()) r.a_.erase(it);
      }
    }
  }
  return r;
}

laurent1 laurent1::scale(const sparse_poly& p) const {
  laurent1 r(var_, lead_, known_to_);
  if (p.is_zero()) return r;
  for (const auto& [k, c] : a_) {
    sparse_poly t = c * p;
    if (!t.is_zero()) r.a_[k] = std::move(t);
  }
  return r;
}

laurent1 laurent1::scale(const rational& c) const { return scale(sparse_poly(c)); }

laurent1 laurent1::derive() const {
  laurent1 r(var_, lead_ - 1, known_to_ - 1);
  for (const auto& [k, p] : a_) {
    if (k == 0) continue;
    if (k - 1 <= r.known_to_) r.a_[k - 1] = p.scale(rational(k));
  }
  return r;
}

laurent1 laurent1::inverse() const {
  auto lt = a_.find(lead_);
  if (lt == a_.end() || !lt->second.is_constant())
    throw std::domain_error("laurent1::inverse: leading coefficient is not a unit rational");
  rational a0 = lt->second.constant_value();
  long rel = known_to_ - lead_;
  if (rel == 0) {
    laurent1 r(var_, -lead_, -lead_);
    r.set_coeff(-lead_, sparse_poly(rational(1) / a0));
    return r;
  }
  // 1/(a0 x^L (1+B)) = x^{-L} a0^{-1} sum (-B)^j.
  laurent1 negb(var_, 1, rel);
  for (const auto& [k, p] : a_) {
    if (k == lead_) continue;
    negb.set_coeff(k - lead_, p.scale(rational(-1) / a0));
  }
  laurent1 acc(var_, 0, rel);
  acc.set_coeff(0, sparse_poly(1));
  laurent1 pw = acc;
  for (long j = 1; j <= rel; ++j) {
    pw = pw * negb;
    if (pw.is_zero()) break;
    acc = acc + pw;
  }
  laurent1 r(var_, -lead_, -lead_ + rel);
  for (const auto& [k, p] : acc.coeffs()) r.a_[k - lead_] = p.scale(rational(1) / a0);
  return r;
}

laurent1 laurent1::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  laurent1 r(var_, 0, known_to_ - lead_);
  r.set_coeff(0, sparse_poly(1));
  for (long i = 0; i < k; ++i) r = r * *this;
  return r;
}

laurent1 laurent1::shift_exponent(long k) const {
  laurent1 r(var_, lead_ + k, known_to_ + k);
  for (const auto& [i, p] : a_) r.a_[i + k] = p;
  return r;
}

laurent1 laurent1::map_coeffs(const std::function<sparse_poly(const sparse_poly&)>& f) const {
  laurent1 r(var_, lead_, known_to_);
  for (const auto& [k, p] : a_) {
    sparse_poly t = f(p);
    if (!t.is_zero()) r.a_[k] = std::move(t);
  }
  return r;
}

laurent1 laurent1::truncated(long k) const {
  laurent1 r(var_, lead_, std::min(k, known_to_));
  for (const auto& [i, p] : a_)
    if (i <= r.known_to_) r.a_[i] = p;
  return r;
}

laurent1 laurent1::log1() const {
  if (lead_ > 0 || !(coeff(0) == sparse_poly(1)))
    throw std::domain_error("laurent1::log1: constant term is not 1");
  laurent1 h = *this;
  h.set_coeff(0, sparse_poly());
  laurent1 r(var_, 1, known_to_);
  laurent1 pw(var_, 0, known_to_);
  pw.set_coeff(0, sparse_poly(1));
  for (long j = 1; j <= known_to_; ++j) {
    pw = pw * h;
    pw = pw.truncated(known_to_);
    if (pw.is_zero()) break;
    rational c = rational(j % 2 == 1 ? 1 : -1) / rational(j);
    r = r + pw.scale(c);
  }
  return r;
}

laurent1 laurent1::exp_positive() const {
  if (lead_ < 1) {
    for (const auto& [k, p] : a_)
      if (k < 1 && !p.is_zero()) throw std::domain_error("laurent1::exp_positive: support below 1");
  }
  laurent1 r(var_, 0, known_to_);
  r.set_coeff(0, sparse_poly(1));
  laurent1 pw = r;
  for (long j = 1; j <= known_to_; ++j) {
    pw = pw * *this;
    pw = pw.truncated(known_to_);
    if (pw.is_zero()) break;
    r = r + pw.scale(rational(1) / rational(factorial(j)));
  }
  return r;
}

hw1 laurent1::to_hurwitz() const {
  if (lead_ < 0)
    for (const auto& [k, p] : a_)
      if (k < 0 && !p.is_zero()) throw std::domain_error("to_hurwitz: negative exponents present");
  hw1 r(var_, known_to_);
  for (const auto& [k, p] : a_)
    if (k >= 0) r.set_coeff(k, p.scale(rational(factorial(k))));
  return r;
}

namespace {

// a(b) truncated at exponent bound; a has lead >= 0 support.
laurent1 compose_trunc(const laurent1& a, const laurent1& b, long bound) {
  laurent1 acc(b.var(), 0, bound);
  if (a.lead() <= 0 && a.known_to() >= 0 && !a.coeff(0).is_zero()) acc.set_coeff(0, a.coeff(0));
  laurent1 pw(b.var(), 0, bound);
  pw.set_coeff(0, sparse_poly(1));
  for (long k = 1; k <= std::min(a.known_to(), bound); ++k) {
    pw = (pw * b).truncated(bound);
    if (pw.is_zero()) break;
    const sparse_poly& ak = a.coeff(k);
    if (!ak.is_zero()) acc = acc + pw.scale(ak);
  }
  return acc;
}

}  // namespace

laurent1 comp_inverse(const laurent1& a) {
  if (a.lead() < 1)
    for (const auto& [k, p] : a.coeffs())
      if (k < 1 && !p.is_zero()) throw std::domain_error("comp_inverse: support below degree 1");
  if (!(a.coeff(1) == sparse_poly(1)))
    throw std::domain_error("comp_inverse: series is not x + O(x^2)");
  long n = a.known_to();
  laurent1 b(a.var(), 1, n);
  b.set_coeff(1, sparse_poly(1));
  for (long m = 2; m <= n; ++m) {
    laurent1 comp = compose_trunc(a, b, m);
    sparse_poly e = comp.coeff(m);
    if (!e.is_zero()) b.set_coeff(m, -e);
  }
  return b;
}

hw1 comp_inverse(const hw1& a) {
  return comp_inverse(a.to_plain()).to_hurwitz();
}

}  // namespace sigmaforge
