// Frozen reference expansions for the genus-2 sigma slices and related
// series. Shared by the unit tests and the acceptance suite.
#pragma once

#include <utility>
#include <vector>

#include "sigmaforge/poly.hpp"

namespace sigmaforge::testdata {

// Single lambda-term c * l4^a l6^b l8^c l10^d.
inline sparse_poly lt(long coeff, int e4, int e6, int e8, int e10) {
  monomial m = monomial::var(vars::l4(), e4)
                   .times(monomial::var(vars::l6(), e6))
                   .times(monomial::var(vars::l8(), e8))
                   .times(monomial::var(vars::l10(), e10));
  return sparse_poly::term(rational(coeff), m);
}

using series_table = std::vector<std::pair<long, sparse_poly>>;

// Initial terms of xi_0..xi_4 (Hurwitz coefficients by u1-order).
inline std::vector<series_table> xi_tables() {
  std::vector<series_table> t(5);
  t[0] = {{3, lt(2, 0, 0, 0, 0)},
          {7, lt(4, 1, 0, 0, 0)},
          {9, lt(-64, 0, 1, 0, 0)},
          {11, lt(408, 2, 0, 0, 0) + lt(-1600, 0, 0, 1, 0)},
          {13, lt(8576, 1, 1, 0, 0) + lt(-17920, 0, 0, 0, 1)}};
  t[1] = {{0, lt(-1, 0, 0, 0, 0)},
          {4, lt(2, 1, 0, 0, 0)},
          {6, lt(8, 0, 1, 0, 0)},
          {8, lt(4, 2, 0, 0, 0) + lt(32, 0, 0, 1, 0)},
          {10, lt(96, 1, 1, 0, 0) + lt(-640, 0, 0, 0, 1)},
          {12, lt(2432, 0, 2, 0, 0) + lt(408, 3, 0, 0, 0) + lt(-1472, 1, 0, 1, 0)},
          {14, lt(40192, 0, 1, 1, 0) + lt(7584, 2, 1, 0, 0) + lt(-39680, 1, 0, 0, 1)}};
  t[2] = {{3, lt(2, 0, 1, 0, 0)},
          {5, lt(8, 0, 0, 1, 0)},
          {7, lt(80, 0, 0, 0, 1) + lt(4, 1, 1, 0, 0)},
          {9, lt(160, 1, 0, 1, 0) + lt(-64, 0, 2, 0, 0)},
          {11, lt(408, 2, 1, 0, 0) + lt(832, 0, 1, 1, 0) + lt(-2880, 1, 0, 0, 1)},
          {13, lt(7424, 0, 0, 2, 0) + lt(-992, 2, 0, 1, 0) + lt(8576, 1, 2, 0, 0) +
                   lt(10240, 0, 1, 0, 1)}};
  t[3] = {{0, lt(-1, 0, 1, 0, 0)},
          {2, lt(2, 0, 0, 1, 0)},
          {4, lt(2, 1, 1, 0, 0) + lt(8, 0, 0, 0, 1)},
          {6, lt(4, 1, 0, 1, 0) + lt(8, 0, 2, 0, 0)},
          {8, lt(4, 2, 1, 0, 0) + lt(416, 1, 0, 0, 1) + lt(-32, 0, 1, 1, 0)},
          {10, lt(704, 0, 0, 2, 0) + lt(408, 2, 0, 1, 0) + lt(96, 1, 2, 0, 0) +
                   lt(-1280, 0, 1, 0, 1)},
          {12, lt(7104, 1, 1, 1, 0) + lt(8960, 0, 0, 1, 1) + lt(2432, 0, 3, 0, 0) +
                   lt(408, 3, 1, 0, 0) + lt(-12768, 2, 0, 0, 1)}};
  t[4] = {{1, lt(8, 0, 0, 0, 1)},
          {3, lt(2, 0, 2, 0, 0) + lt(4, 1, 0, 1, 0)},
          {5, lt(16, 0, 1, 1, 0) + lt(16, 1, 0, 0, 1)},
          {7, lt(8, 2, 0, 1, 0) + lt(4, 1, 2, 0, 0) + lt(352, 0, 1, 0, 1) + lt(-112, 0, 0, 2, 0)},
          {9, lt(192, 1, 1, 1, 0) + lt(512, 0, 0, 1, 1) + lt(-64, 0, 3, 0, 0) +
                  lt(1632, 2, 0, 0, 1)},
          {11, lt(5952, 1, 0, 2, 0) + lt(3264, 0, 2, 1, 0) + lt(816, 3, 0, 1, 0) +
                   lt(408, 2, 2, 0, 0) + lt(-8064, 1, 1, 0, 1) + lt(-1280, 0, 0, 0, 2)},
          {13, lt(61440, 0, 1, 2, 0) + lt(15168, 2, 1, 1, 0) + lt(68608, 1, 0, 1, 1) +
                   lt(8576, 1, 3, 0, 0) + lt(10752, 0, 2, 0, 1) + lt(-54336, 3, 0, 0, 1)}};
  return t;
}

// Initial terms of mu_0..mu_3 (Hurwitz coefficients by u3-order).
inline std::vector<series_table> mu_tables() {
  std::vector<series_table> t(4);
  t[0] = {{1, lt(-1, 0, 0, 0, 0)},
          {3, lt(-1, 0, 1, 0, 0)},
          {5, lt(-1, 0, 2, 0, 0) + lt(-2, 1, 0, 1, 0)},
          {7, lt(8, 0, 0, 1, 1) + lt(-6, 1, 1, 1, 0) + lt(-1, 0, 3, 0, 0) + lt(-24, 2, 0, 0, 1)}};
  t[1] = {{4, lt(8, 0, 0, 0, 1)},
          {6, lt(88, 0, 1, 0, 1) + lt(-16, 0, 0, 2, 0)},
          {8, lt(816, 0, 2, 0, 1) + lt(-192, 0, 1, 2, 0) + lt(-160, 1, 0, 1, 1)}};
  t[2] = {{3, lt(2, 0, 0, 1, 0)},
          {5, lt(24, 1, 0, 0, 1) + lt(4, 0, 1, 1, 0)},
          {7, lt(160, 0, 0, 0, 2) + lt(264, 1, 1, 0, 1) + lt(6, 0, 2, 1, 0) + lt(-36, 1, 0, 2, 0)}};
  t[3] = {{0, lt(2, 0, 0, 0, 0)},
          {2, lt(2, 0, 1, 0, 0)},
          {4, lt(2, 0, 2, 0, 0) + lt(4, 1, 0, 1, 0)},
          {6, lt(12, 1, 1, 1, 0) + lt(32, 0, 0, 1, 1) + lt(2, 0, 3, 0, 0) + lt(48, 2, 0, 0, 1)}};
  return t;
}

// First generalized Bernoulli-Hurwitz values: C_n/n for n = 4, 6, 8, 10 and
// D_n/n for n = 6, 8, 10.
inline series_table cn_over_n_table() {
  return {{4, lt(-2, 1, 0, 0, 0).scale(frac(1, 5))},
          {6, lt(-24, 0, 1, 0, 0).scale(frac(1, 7))},
          {8, lt(48, 2, 0, 0, 0).scale(frac(1, 5)) + lt(-80, 0, 0, 1, 0)},
          {10, lt(3456, 1, 1, 0, 0).scale(frac(1, 11)) + lt(-40320, 0, 0, 0, 1).scale(frac(1, 11))}};
}

inline series_table dn_over_n_table() {
  return {{6, lt(1, 0, 1, 0, 0).scale(frac(1, 7))},
          {8, lt(4, 0, 0, 1, 0).scale(frac(1, 3)) + lt(-2, 2, 0, 0, 0).scale(frac(1, 5))},
          {10, lt(360, 0, 0, 0, 1).scale(frac(1, 11)) + lt(-144, 1, 1, 0, 0).scale(frac(1, 11))}};
}

}  // namespace sigmaforge::testdata
