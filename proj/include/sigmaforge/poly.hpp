#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmaforge/numeric.hpp"
#include "sigmaforge/variables.hpp"

namespace sigmaforge {

// Power product. Entries are sorted by the canonical variable order and carry
// nonzero exponents; exponents may be negative for localized variables.
class monomial {
 public:
  monomial() = default;
  static monomial var(var_id v, int exp = 1);

  long weight() const { return w_; }
  int exponent(var_id v) const;
  bool empty() const { return e_.empty(); }
  const std::vector<std::pair<var_id, int>>& entries() const { return e_; }

  monomial times(const monomial& o) const;
  // Exact quotient; nullopt if any exponent of *this - o would turn negative
  // on a non-localized slot. Localization is the caller's concern, so this
  // simply allows any integer exponents and never fails; divide() exists for
  // clarity at call sites that expect exactness checks on exponents >= 0.
  monomial divide(const monomial& o) const;

  // Graded order: total weight first, ties broken lexicographically with the
  // canonically earliest variable dominating (larger exponent sorts first).
  bool operator<(const monomial& o) const;
  bool operator==(const monomial& o) const { return e_ == o.e_; }

  std::string str() const;  // "l4^2*l6", "1" for the empty product

 private:
  std::vector<std::pair<var_id, int>> e_;
  long w_ = 0;  // cached total weight
};

// Result of grading a polynomial: zero is compatible with any degree.
struct grading {
  enum kind { zero_any, homogeneous, mixed };
  kind k = zero_any;
  long degree = 0;  // meaningful only when k == homogeneous

  bool compatible_with(long d) const { return k == zero_any || (k == homogeneous && degree == d); }
};

// Membership spec for subrings Z[1/p...; s_v * v, ...]: a polynomial belongs
// iff every coefficient of prod v^{e_v} is an integer multiple of
// prod s_v^{e_v} up to denominators built from the allowed primes.
struct subring_spec {
  std::vector<unsigned long> allowed_primes;
  std::map<var_id, integer> scales;

  subring_spec with_scale(var_id v, integer s) const;
};

struct membership_failure {
  monomial mono;
  rational coeff;
};

// Sparse multivariate polynomial over the rationals with a graded variable
// universe. Always canonical: no zero coefficients are stored, so equal
// polynomials compare equal structurally.
class sparse_poly {
 public:
  sparse_poly() = default;
  explicit sparse_poly(const rational& c);
  explicit sparse_poly(long c);
  static sparse_poly var(var_id v, int exp = 1);
  static sparse_poly term(const rational& c, const monomial& m);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  // The constant value; throws if non-constant terms are present.
  rational constant_value() const;
  std::size_t term_count() const { return t_.size(); }
  const std::map<monomial, rational>& terms() const { return t_; }
  rational coeff(const monomial& m) const;

  sparse_poly operator+(const sparse_poly& o) const;
  sparse_poly operator-(const sparse_poly& o) const;
  sparse_poly operator-() const;
  sparse_poly operator*(const sparse_poly& o) const;
  sparse_poly& operator+=(const sparse_poly& o);
  sparse_poly& operator-=(const sparse_poly& o);
  bool operator==(const sparse_poly& o) const { return t_ == o.t_; }

  sparse_poly scale(const rational& c) const;
  sparse_poly pow(unsigned int k) const;

  // Formal partial derivative.
  sparse_poly partial(var_id v) const;

  grading grade() const;

  // Minimum p-adic valuation over all coefficients; ord_infinity for zero.
  long ord_p(unsigned long p) const;

  // First failing term in monomial order, or nullopt when the polynomial
  // lies in the subring.
  std::optional<membership_failure> subring_violation(const subring_spec& spec) const;
  bool in_subring(const subring_spec& spec) const { return !subring_violation(spec).has_value(); }

  sparse_poly substitute(var_id v, const sparse_poly& value) const;
  sparse_poly substitute(const std::map<var_id, sparse_poly>& values) const;

  // Exact polynomial division; throws std::domain_error when not divisible.
  sparse_poly divide_exact(const sparse_poly& d) const;

  std::string str() const;

 private:
  void add_term(const monomial& m, const rational& c);
  std::map<monomial, rational> t_;

  friend sparse_poly operator*(const rational& c, const sparse_poly& p);
};

sparse_poly operator*(const rational& c, const sparse_poly& p);

}  // namespace sigmaforge
