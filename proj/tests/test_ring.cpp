#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sigmaforge/poly.hpp"

using namespace sigmaforge;

namespace {

sparse_poly L(int idx) { return sparse_poly::var(vars::lambda(idx)); }

// Trial-division valuation, used as an oracle against ord_p.
long naive_ord(long n, long p) {
  long o = 0;
  while (n % p == 0) {
    n /= p;
    ++o;
  }
  return o;
}

sparse_poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(0, 2), num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  sparse_poly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    monomial m;
    for (int j = 0; j < 4; ++j) m = m.times(monomial::var(vars::lambda(j), expo(rng)));
    p += sparse_poly::term(frac(num(rng), den(rng)), m);
  }
  return p;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(parse_rational("2/4") == frac(1, 2));
  CHECK(parse_rational("-3") == rational(-3));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(to_string(frac(-1, 2)) == "-1/2");
  CHECK(to_string(rational(7)) == "7");
}

TEST_CASE("ord_p on rationals") {
  CHECK(naive_ord(40320, 2) == 7);  // 40320 = 2^7 * 3^2 * 5 * 7
  CHECK(ord_p(frac(40320, 11), 2) == 7);
  CHECK(ord_p(frac(40320, 11), 3) == 2);
  CHECK(ord_p(frac(40320, 11), 11) == -1);
  CHECK(ord_p(rational(0), 5) == ord_infinity);
  CHECK_THROWS(ord_p(rational(3), 4));
}

TEST_CASE("poly arithmetic examples") {
  // mul(l4, l4 + l6) = l4^2 + l4 l6
  sparse_poly expect =
      sparse_poly::term(rational(1), monomial::var(vars::l4(), 2)) +
      sparse_poly::term(rational(1), monomial::var(vars::l4()).times(monomial::var(vars::l6())));
  CHECK(L(0) * (L(0) + L(1)) == expect);
  // mul(1, P) = P
  sparse_poly p = L(0).scale(3) + L(2);
  CHECK(sparse_poly(1) * p == p);
  // add(P, -P) = 0
  CHECK((p + (-p)).is_zero());
}

TEST_CASE("poly partial derivatives") {
  // d/dl4 (l4^2 l6) = 2 l4 l6
  sparse_poly p =
      sparse_poly::term(rational(1), monomial::var(vars::l4(), 2).times(monomial::var(vars::l6())));
  sparse_poly d = p.partial(vars::l4());
  CHECK(d == sparse_poly::term(rational(2),
                               monomial::var(vars::l4()).times(monomial::var(vars::l6()))));
  // d/dl10 (l4) = 0
  CHECK(L(0).partial(vars::l10()).is_zero());
  // gamma_8 = 2 l4^2 + l8 has no l6 dependence
  sparse_poly g8 = sparse_poly::term(rational(2), monomial::var(vars::l4(), 2)) + L(2);
  CHECK(g8.partial(vars::l6()).is_zero());
}

TEST_CASE("grading") {
  sparse_poly p = L(0) * L(1);  // l4 l6, degree 10
  CHECK(p.grade().k == grading::homogeneous);
  CHECK(p.grade().degree == 10);
  CHECK(L(1).scale(3).grade().degree == 6);  // q33 = 3 l6 sits in degree 6
  CHECK((L(0) + L(1)).grade().k == grading::mixed);
  CHECK(sparse_poly().grade().k == grading::zero_any);
  CHECK(sparse_poly().grade().compatible_with(123));
}

TEST_CASE("ord_p on polynomials") {
  sparse_poly p = L(3).scale(frac(40320, 11));
  CHECK(p.ord_p(2) == 7);
  sparse_poly q = L(0) + L(1).scale(frac(1, 3));
  CHECK(q.ord_p(3) == -1);
  CHECK(sparse_poly().ord_p(7) == ord_infinity);
  CHECK_THROWS(p.ord_p(6));
}

TEST_CASE("subring membership") {
  subring_spec zl210;  // Z[l4, l6, l8, 2*l10]
  zl210.scales[vars::l10()] = 2;
  CHECK(L(3).scale(4).in_subring(zl210));
  CHECK_FALSE(L(3).in_subring(zl210));
  auto fail = L(3).subring_violation(zl210);
  REQUIRE(fail.has_value());
  CHECK(fail->coeff == rational(1));
  CHECK(fail->mono == monomial::var(vars::l10()));

  subring_spec zl;  // plain Z[lambda]
  CHECK(L(0).scale(4).in_subring(zl));
  CHECK_FALSE(L(0).scale(frac(1, 5)).in_subring(zl));

  subring_spec z5;  // Z[1/5, lambda]
  z5.allowed_primes = {5};
  CHECK(L(0).scale(frac(1, 5)).in_subring(z5));
  CHECK_FALSE(L(0).scale(frac(1, 10)).in_subring(z5));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int it = 0; it < 200; ++it) {
    sparse_poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("grade additive, ord_p superadditive under mul") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> expo(0, 3), num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int it = 0; it < 200; ++it) {
    monomial m1, m2;
    for (int j = 0; j < 4; ++j) {
      m1 = m1.times(monomial::var(vars::lambda(j), expo(rng)));
      m2 = m2.times(monomial::var(vars::lambda(j), expo(rng)));
    }
    rational c1 = frac(num(rng), den(rng)), c2 = frac(num(rng), den(rng));
    sparse_poly a = sparse_poly::term(c1, m1), b = sparse_poly::term(c2, m2);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).grade().degree == a.grade().degree + b.grade().degree);
    // equality for single terms
    for (unsigned long p : {2ul, 3ul, 5ul}) CHECK((a * b).ord_p(p) == a.ord_p(p) + b.ord_p(p));
  }
  std::mt19937 rng2(8);
  for (int it = 0; it < 100; ++it) {
    sparse_poly a = random_poly(rng2), b = random_poly(rng2);
    sparse_poly ab = a * b;
    if (a.is_zero() || b.is_zero()) continue;
    for (unsigned long p : {2ul, 3ul}) CHECK(ab.ord_p(p) >= a.ord_p(p) + b.ord_p(p));
  }
}

TEST_CASE("canonical form idempotent and deterministic") {
  std::mt19937 rng(99);
  for (int it = 0; it < 50; ++it) {
    sparse_poly a = random_poly(rng), b = random_poly(rng);
    sparse_poly s1 = a * b + a;
    sparse_poly s2 = a + b * a;  // same value, different op order
    CHECK(s1 == s2);
    CHECK(s1.str() == s2.str());
  }
}

TEST_CASE("substitution and exact division") {
  sparse_poly p = L(0) * L(0) + L(1).scale(2);
  sparse_poly at = p.substitute(vars::l4(), sparse_poly(3));
  CHECK(at == sparse_poly(9) + L(1).scale(2));
  sparse_poly prod = (L(0) + L(1)) * (L(0) - L(1));
  CHECK(prod.divide_exact(L(0) + L(1)) == L(0) - L(1));
  CHECK_THROWS(L(0).divide_exact(L(1)));
}

TEST_CASE("canonical text form") {
  sparse_poly p = L(3).scale(frac(-1, 2)) + L(0) * L(0);
  CHECK(p.str() == "l4^2 - 1/2*l10");
  CHECK(sparse_poly().str() == "0");
}
