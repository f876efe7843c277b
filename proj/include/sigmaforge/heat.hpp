#pragma once

#include <array>
#include <string>
#include <vector>

#include "sigmaforge/hurwitz.hpp"

namespace sigmaforge {

// One summand of a differential operator in u1, u3 and the curve parameters:
//   coeff(lambda) * u1^a1 u3^a3 * d^d1/du1 d^d3/du3 * d^e/dlambda.
// Derivatives in lambda commute with everything else inside a term.
struct heat_term {
  sparse_poly coeff;
  int u1_pow = 0, u3_pow = 0;
  int du1 = 0, du3 = 0;
  std::array<int, 4> dlambda{0, 0, 0, 0};  // orders in l4, l6, l8, l10

  // Grading shift of the term under deg u1=-1, deg u3=-3, deg l_{2j}=2j.
  long shift() const;
};

// A formal operator stored fully expanded and canonicalized: terms merged by
// their (u-powers, derivative orders) signature, zero coefficients dropped,
// sorted. Equality is syntactic equality of the canonical form.
class heat_operator {
 public:
  heat_operator() = default;
  explicit heat_operator(std::vector<heat_term> terms);

  const std::vector<heat_term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const heat_operator& o) const;

  heat_operator operator+(const heat_operator& o) const;
  heat_operator operator-(const heat_operator& o) const;
  heat_operator scale(const sparse_poly& p) const;
  heat_operator scale(const rational& c) const;

  // Uniform grading shift of all terms; throws if terms disagree.
  long shift() const;

  // Largest weight w such that every coefficient of the image at weights
  // <= w is exact given the argument's truncation.
  long valid_weight(long arg_trunc) const;

  hw2 apply(const hw2& s) const;
  // Genus-1 action: u3 slots must be unused and only l4/l6 derivatives occur.
  hw1 apply1(const hw1& s) const;

  std::string str() const;  // audit printer, one line per term

 private:
  std::vector<heat_term> t_;
};

heat_operator compose(const heat_operator& a, const heat_operator& b);
heat_operator bracket(const heat_operator& a, const heat_operator& b);

// The annihilating systems: genus 2 returns [Q0, Q2, Q4, Q6]; genus 1 the
// Euler operator and the heat operator in that order.
std::vector<heat_operator> build_heat_system(int genus);

// The symmetric matrix T with rows generating l_0, l_2, l_4, l_6.
std::array<std::array<sparse_poly, 4>, 4> heat_matrix_T();

struct residual_entry {
  long m, n;
  sparse_poly value;
};

struct annihilation_report {
  struct per_op {
    std::string name;
    long checked_to;                     // residual verified for weights <= checked_to
    std::vector<residual_entry> residuals;  // nonzero residual coefficients
  };
  std::vector<per_op> ops;
  bool all_zero() const;
};

// Applies each operator to s and reports every nonzero residual coefficient
// of weight <= weight. Throws if some operator cannot be checked through the
// requested weight, reporting the missing truncation.
annihilation_report verify_annihilation(const std::vector<heat_operator>& ops,
                                        const std::vector<std::string>& names, const hw2& s,
                                        long weight);

}  // namespace sigmaforge
