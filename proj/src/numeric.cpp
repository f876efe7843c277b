#include "sigmaforge/numeric.hpp"

#include <stdexcept>

namespace sigmaforge {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long ord_p(const integer& n, unsigned long p) {
  if (!is_prime(p)) throw std::domain_error("ord_p: modulus is not prime");
  if (n == 0) return ord_infinity;
  integer rest, pp(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

long ord_p(const rational& r, unsigned long p) {
  if (!is_prime(p)) throw std::domain_error("ord_p: modulus is not prime");
  if (r == 0) return ord_infinity;
  return ord_p(integer(r.get_num()), p) - ord_p(integer(r.get_den()), p);
}

integer factorial(unsigned long n) {
  integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

integer binomial(unsigned long n, unsigned long k) {
  integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

integer falling_factorial(unsigned long n, unsigned long k) {
  integer r(1);
  for (unsigned long i = 0; i < k; ++i) r *= integer(n - i);
  return r;
}

rational frac(long num, long den) {
  rational r(num, den);
  r.canonicalize();
  return r;
}

rational frac(const integer& num, const integer& den) {
  rational r(num, den);
  r.canonicalize();
  return r;
}

rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const rational& r) {
  return r.get_str();
}

integer inverse_mod(const integer& a, const integer& m) {
  integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not invertible");
  return r;
}

}  // namespace sigmaforge
