#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "expansion_tables.hpp"
#include "sigmaforge/heat.hpp"
#include "sigmaforge/sigma2.hpp"

using namespace sigmaforge;
using testdata::lt;

namespace {

hw2 random_hw2(std::mt19937& rng, long trunc) {
  std::uniform_int_distribution<int> num(-4, 4), pick(0, 2);
  hw2 s(trunc);
  for (long m = 0; m <= trunc; ++m)
    for (long n = 0; m + 3 * n <= trunc; ++n) {
      sparse_poly c(num(rng));
      if (pick(rng) == 0) c = c * sparse_poly::var(vars::l4());
      if (pick(rng) == 1) c = c + sparse_poly::var(vars::l6()).scale(num(rng));
      s.set_coeff(m, n, c);
    }
  return s;
}

}  // namespace

TEST_CASE("T matrix is symmetric") {
  auto T = heat_matrix_T();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(T[i][j] == T[j][i]);
}

TEST_CASE("printed operator terms") {
  auto Q = build_heat_system(2);
  REQUIRE(Q.size() == 4);
  // H0 = u1 d1 + 3 u3 d3 - 3, so Q0 contains -u1 d1, -3 u3 d3, +3.
  bool found_const = false, found_u3d3 = false;
  for (const auto& t : Q[0].terms()) {
    if (t.u1_pow == 0 && t.u3_pow == 0 && t.du1 == 0 && t.du3 == 0 &&
        t.dlambda == std::array<int, 4>{0, 0, 0, 0}) {
      found_const = true;
      CHECK(t.coeff == sparse_poly(3));
    }
    if (t.u3_pow == 1 && t.du3 == 1) {
      found_u3d3 = true;
      CHECK(t.coeff == sparse_poly(-3));
    }
  }
  CHECK(found_const);
  CHECK(found_u3d3);

  // H2 contains +(1/10)(15 l8 - 4 l4^2) u3^2, so Q2 carries the negative.
  bool found_u3sq = false;
  for (const auto& t : Q[1].terms()) {
    if (t.u3_pow == 2 && t.du1 == 0 && t.du3 == 0 && t.dlambda == std::array<int, 4>{0, 0, 0, 0}) {
      found_u3sq = true;
      sparse_poly expect =
          (lt(15, 0, 0, 1, 0) + lt(-4, 2, 0, 0, 0)).scale(frac(-1, 10));
      CHECK(t.coeff == expect);
    }
  }
  CHECK(found_u3sq);
}

TEST_CASE("each Q_i is weight homogeneous") {
  auto Q = build_heat_system(2);
  // Uniform term shift +i under deg u1 = -1, deg u3 = -3, deg l_{2j} = 2j.
  for (int i = 0; i < 4; ++i) CHECK(Q[i].shift() == 2 * i);
}

TEST_CASE("apply: elementary actions") {
  auto Q = build_heat_system(2);
  // H0 on u1^3: (3 - 3) u1^3 = 0, and l-part of Q0 kills constants.
  hw2 s(6);
  s.set_coeff(3, 0, sparse_poly(6));  // u1^3 = 6 * u1^3/3!
  heat_operator H0({{sparse_poly(1), 1, 0, 1, 0, {0, 0, 0, 0}},
                    {sparse_poly(3), 0, 1, 0, 1, {0, 0, 0, 0}},
                    {sparse_poly(-3), 0, 0, 0, 0, {0, 0, 0, 0}}});
  CHECK(H0.apply(s).is_zero());

  // the d/dl4 part of l_0 applied to l4 u1 gives 4 l4 u1
  heat_operator ell0_l4({{lt(4, 1, 0, 0, 0), 0, 0, 0, 0, {1, 0, 0, 0}}});
  hw2 t(4);
  t.set_coeff(1, 0, lt(1, 1, 0, 0, 0));
  hw2 r = ell0_l4.apply(t);
  CHECK(r.coeff(1, 0) == lt(4, 1, 0, 0, 0));
}

TEST_CASE("bracket identities") {
  auto Q = build_heat_system(2);
  const auto &Q0 = Q[0], &Q2 = Q[1], &Q4 = Q[2], &Q6 = Q[3];
  auto L4 = sparse_poly::var(vars::l4());
  auto L6 = sparse_poly::var(vars::l6());
  auto L8 = sparse_poly::var(vars::l8());
  auto L10 = sparse_poly::var(vars::l10());

  CHECK(bracket(Q0, Q0).is_zero());

  // 10 Q6 = 5 [Q2, Q4] - 8 l6 Q0 + 8 l4 Q2
  heat_operator lhs1 = Q6.scale(rational(10));
  heat_operator rhs1 = bracket(Q2, Q4).scale(rational(5)) - Q0.scale(L6.scale(8)) + Q2.scale(L4.scale(8));
  CHECK(lhs1 == rhs1);
  CHECK((lhs1 - rhs1).is_zero());

  // 6 l8 Q2 = 5 [Q4, Q6] + 10 l10 Q0 + 6 l6 Q4 - 10 l4 Q6
  heat_operator lhs2 = Q2.scale(L8.scale(6));
  heat_operator rhs2 = bracket(Q4, Q6).scale(rational(5)) + Q0.scale(L10.scale(10)) +
                       Q4.scale(L6.scale(6)) - Q6.scale(L4.scale(10));
  CHECK(lhs2 == rhs2);
}

TEST_CASE("apply is compatible with composition and bracket") {
  auto Q = build_heat_system(2);
  std::mt19937 rng(2718);
  hw2 s = random_hw2(rng, 12);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      hw2 via_op = bracket(Q[a], Q[b]).apply(s);
      hw2 direct = Q[a].apply(Q[b].apply(s)) - Q[b].apply(Q[a].apply(s));
      CHECK(via_op.truncated(direct.trunc()) == direct.truncated(via_op.trunc()));
    }
}

TEST_CASE("annihilation of the heat-route sigma") {
  long N = 12;
  sigma_series s = sigma_xi_route(N + 6);
  auto Q = build_heat_system(2);
  auto rep = verify_annihilation(Q, {"Q0", "Q2", "Q4", "Q6"}, s.s, N);
  CHECK(rep.all_zero());

  // soundness probe: a u1^5 perturbation must be detected in the right layer
  hw2 bad = s.s;
  bad.set_coeff(5, 0, bad.coeff(5, 0) + sparse_poly(120));
  auto rep2 = verify_annihilation(Q, {"Q0", "Q2", "Q4", "Q6"}, bad, N);
  CHECK_FALSE(rep2.all_zero());
  bool hit_layer = false;
  for (const auto& e : rep2.ops)
    for (const auto& r : e.residuals)
      if (e.name == "Q0" && r.m == 5 && r.n == 0) hit_layer = true;
  CHECK(hit_layer);

  // insufficient truncation is reported, not silently accepted
  CHECK_THROWS(verify_annihilation(Q, {"Q0", "Q2", "Q4", "Q6"}, s.s, N + 6));
}

TEST_CASE("genus-1 system annihilates genus-1 sigma") {
  auto sys = build_heat_system(1);
  hw1 s = genus1_sigma(16);
  for (const auto& op : sys) {
    hw1 r = op.apply1(s);
    CHECK(r.is_zero());
  }
  // soundness: sigma plus u^4 fails
  hw1 bad = s;
  bad.set_coeff(4, sparse_poly(24));
  bool any = false;
  for (const auto& op : sys)
    if (!op.apply1(bad).is_zero()) any = true;
  CHECK(any);
}

TEST_CASE("operator printer is deterministic") {
  auto Q = build_heat_system(2);
  CHECK(Q[0].str() == build_heat_system(2)[0].str());
  CHECK(!Q[3].str().empty());
}
