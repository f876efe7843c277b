#pragma once

#include <functional>
#include <map>
#include <utility>

#include "sigmaforge/poly.hpp"

namespace sigmaforge {

class laurent1;

// Truncated Hurwitz series sum_n c_n x^n/n! in one variable with polynomial
// coefficients. Coefficients are exact for n <= trunc(); asking beyond the
// truncation throws.
class hw1 {
 public:
  hw1(var_id v, long trunc);

  var_id var() const { return var_; }
  long trunc() const { return trunc_; }
  const std::map<long, sparse_poly>& coeffs() const { return c_; }

  const sparse_poly& coeff(long n) const;
  void set_coeff(long n, sparse_poly p);

  hw1 operator+(const hw1& o) const;
  hw1 operator-(const hw1& o) const;
  hw1 operator*(const hw1& o) const;  // binomial convolution
  bool operator==(const hw1& o) const { return var_ == o.var_ && trunc_ == o.trunc_ && c_ == o.c_; }

  hw1 scale(const sparse_poly& p) const;
  hw1 scale(const rational& c) const;
  hw1 derive() const;
  hw1 integrate_zero_constant() const;
  // Multiply by x^k (Hurwitz shift with factorial bookkeeping).
  hw1 shift_up(long k) const;
  // Exact division by x: constant term must vanish.
  hw1 divide_by_var() const;
  hw1 map_coeffs(const std::function<sparse_poly(const sparse_poly&)>& f) const;
  hw1 truncated(long t) const;
  hw1 exp() const;  // requires zero constant term

  bool is_zero() const { return c_.empty(); }

  laurent1 to_plain() const;  // a_n = c_n/n!

 private:
  var_id var_;
  long trunc_;
  std::map<long, sparse_poly> c_;
};

// Truncated Hurwitz series sum c_{m,n} u1^m u3^n/(m! n!) with weight
// truncation: coefficients kept and exact for m + 3n <= trunc().
class hw2 {
 public:
  explicit hw2(long trunc);

  long trunc() const { return trunc_; }
  const std::map<std::pair<long, long>, sparse_poly>& coeffs() const { return c_; }

  const sparse_poly& coeff(long m, long n) const;
  void set_coeff(long m, long n, sparse_poly p);

  hw2 operator+(const hw2& o) const;
  hw2 operator-(const hw2& o) const;
  hw2 operator*(const hw2& o) const;
  bool operator==(const hw2& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

  hw2 scale(const sparse_poly& p) const;
  hw2 scale(const rational& c) const;
  hw2 derive_u1() const;
  hw2 derive_u3() const;
  // Multiply by u1^a u3^b.
  hw2 shift_up(long a, long b) const;
  hw2 map_coeffs(const std::function<sparse_poly(const sparse_poly&)>& f) const;
  hw2 truncated(long t) const;
  hw2 exp() const;  // requires zero constant term

  bool is_zero() const { return c_.empty(); }

 private:
  long trunc_;
  std::map<std::pair<long, long>, sparse_poly> c_;
};

// Truncated Laurent series sum_k a_k x^k with plain polynomial coefficients.
// lead() is a guaranteed lower bound for the support; coefficients are exact
// for exponents <= known_to().
class laurent1 {
 public:
  laurent1(var_id v, long lead, long known_to);

  var_id var() const { return var_; }
  long lead() const { return lead_; }
  long known_to() const { return known_to_; }
  const std::map<long, sparse_poly>& coeffs() const { return a_; }

  const sparse_poly& coeff(long k) const;
  void set_coeff(long k, sparse_poly p);

  laurent1 operator+(const laurent1& o) const;
  laurent1 operator-(const laurent1& o) const;
  laurent1 operator*(const laurent1& o) const;
  bool operator==(const laurent1& o) const {
    return var_ == o.var_ && lead_ == o.lead_ && known_to_ == o.known_to_ && a_ == o.a_;
  }

  laurent1 scale(const sparse_poly& p) const;
  laurent1 scale(const rational& c) const;
  laurent1 derive() const;
  // Integer powers; negative powers require an invertible (nonzero rational
  // constant) coefficient at lead().
  laurent1 pow(long k) const;
  laurent1 inverse() const;
  laurent1 shift_exponent(long k) const;  // multiply by x^k
  laurent1 map_coeffs(const std::function<sparse_poly(const sparse_poly&)>& f) const;
  laurent1 truncated(long k) const;

  // log of a series with constant term 1 and lead 0.
  laurent1 log1() const;
  // exp of a series supported in strictly positive exponents.
  laurent1 exp_positive() const;

  bool is_zero() const { return a_.empty(); }

  hw1 to_hurwitz() const;  // requires lead >= 0; c_n = a_n * n!

 private:
  var_id var_;
  long lead_;
  long known_to_;
  std::map<long, sparse_poly> a_;
};

// Unique formal compositional inverse b with a(b(x)) = x for a = x + O(x^2)
// (plain coefficients; a.lead() >= 1, a(1) = 1). Result carries the same
// truncation.
laurent1 comp_inverse(const laurent1& a);

// Hurwitz wrapper for the same operation.
hw1 comp_inverse(const hw1& a);

}  // namespace sigmaforge
